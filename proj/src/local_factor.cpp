#include "symmom/local_factor.hpp"

#include <cmath>

namespace symmom {

// det(1 - x Sym^m g)^{-1} as a product of real quadratic factors
// (1 - 2x cos(k theta) + x^2) over the conjugate eigenvalue pairs,
// and a linear factor (1 - x) when m is even.
double log_local_factor(double x, int m, const ConjugacyClass& c) {
  if (m < 0) throw domain_error("local_factor: m must be >= 0");
  if (!(std::abs(x) < 1.0)) throw domain_error("local_factor: |x| must be < 1");
  double log_inv = 0.0;
  for (int k = m; k >= 1; k -= 2) {
    log_inv += std::log1p(x * (x - 2.0 * std::cos(k * c.theta)));
  }
  if (m % 2 == 0) log_inv += std::log1p(-x);
  return -log_inv;
}

double local_factor(double x, int m, const ConjugacyClass& c) {
  return std::exp(log_local_factor(x, m, c));
}

}  // namespace symmom
