#include "symmom/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace symmom {

double character(int m, const ConjugacyClass& c) {
  if (m < 0) throw domain_error("character: m must be >= 0");
  const double t = c.theta;
  if (t == 0.0) return m + 1;
  if (t == M_PI) return (m % 2 == 0) ? (m + 1) : -(m + 1);
  const double s = std::sin(t);
  if (s == 0.0) {
    // theta numerically indistinguishable from an endpoint
    return (t < M_PI / 2) ? (m + 1) : ((m % 2 == 0) ? (m + 1) : -(m + 1));
  }
  return std::sin((m + 1) * t) / s;
}

double chebyshev_x(int m, double x) {
  if (m < 0) throw domain_error("chebyshev_x: m must be >= 0");
  // three-term recurrence X_{k+1} = x X_k - X_{k-1}
  double prev = 1.0, cur = x;
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_identity_check(int m, double x) {
  if (m < 1) throw domain_error("chebyshev_identity_check: m must be >= 1");
  double worst = 0.0;
  auto probe = [&](double u) {
    double lhs = chebyshev_x(m, u) * chebyshev_x(m, u);
    double rhs = 0.0;
    for (int j = 0; j <= m; ++j) rhs += chebyshev_x(2 * j, u);
    worst = std::max(worst, std::abs(lhs - rhs));
    if (m == 4) {
      double x2 = chebyshev_x(2, u);
      worst = std::max(worst, std::abs(chebyshev_x(4, u) - (x2 * x2 - x2 - 1.0)));
    }
  };
  probe(x);
  for (int i = 0; i <= 64; ++i) probe(-2.0 + 4.0 * i / 64.0);
  return worst;
}

}  // namespace symmom
