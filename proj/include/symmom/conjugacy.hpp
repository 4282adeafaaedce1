#ifndef SYMMOM_CONJUGACY_HPP
#define SYMMOM_CONJUGACY_HPP

#include <cmath>

#include "symmom/errors.hpp"

namespace symmom {

// A conjugacy class of SU(2): the diagonal matrix with eigenvalues
// exp(+-i*theta), theta in [0, pi].
struct ConjugacyClass {
  double theta = 0.0;

  ConjugacyClass() = default;
  explicit ConjugacyClass(double t) : theta(t) {
    if (!(t >= 0.0 && t <= M_PI)) throw domain_error("ConjugacyClass: theta must lie in [0, pi]");
  }

  // Class with trace lambda = 2 cos(theta), |lambda| <= 2.
  static ConjugacyClass from_trace(double lambda) {
    if (!(lambda >= -2.0 && lambda <= 2.0)) throw domain_error("ConjugacyClass: trace must lie in [-2, 2]");
    return ConjugacyClass(std::acos(lambda / 2.0));
  }
};

// Character of the m-th symmetric power, sin((m+1)theta)/sin(theta), with the
// removable singularities at theta = 0 and theta = pi filled by their limit
// values (m+1) and (-1)^m (m+1).
double character(int m, const ConjugacyClass& c);

// Chebyshev polynomial of the second kind on [-2, 2]: X_m(2 cos t) = character(m, t).
double chebyshev_x(int m, double x);

// Max residual over a grid of |X_m(x)^2 - sum_{j=0..m} X_{2j}(x)|; for m = 4
// additionally folds in |X_4 - (X_2^2 - X_2 - 1)|.
double chebyshev_identity_check(int m, double x);

}  // namespace symmom

#endif  // SYMMOM_CONJUGACY_HPP
