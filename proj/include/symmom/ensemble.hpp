#ifndef SYMMOM_ENSEMBLE_HPP
#define SYMMOM_ENSEMBLE_HPP

#include <vector>

#include "symmom/euler_products.hpp"
#include "symmom/newform.hpp"

namespace symmom {

struct TraceCheckResult {
  double residual_plain = 0.0;   // sum omega* lambda(m) lambda(n) - delta(m,n)
  double residual_signed = 0.0;  // sum omega* (1 + eps) lambda(m) lambda(n) - delta(m,n)
  double sum_weights = 0.0;
};

// Empirical check of the harmonic trace formulas over a form ensemble.
// Hypotheses (m, N) = 1 and (n, N^2) | N are enforced.
TraceCheckResult trace_check(const std::vector<Newform>& forms, std::int64_t m, std::int64_t n, double x);

struct EnsembleReport {
  std::int64_t level = 0;
  int forms = 0;
  int m = 0;
  std::complex<double> z;
  double x = 0.0;
  double sum_weights = 0.0;   // sum omega*
  double mean_central = 0.0;  // sum omega* L(1/2, f)
  std::complex<double> empirical_half;  // sum omega* L(1/2,f) omega^z_{Sym^m f}(x)
  MomentConstant predicted_half;
  double residual_half = 0.0;
  std::complex<double> empirical_one;  // sum omega* omega^{1,z}(x)
  MomentConstant predicted_one;        // includes the phi(N)/N trace-formula factor
  double residual_one = 0.0;
  double corollary_ratio = 0.0;  // half / (one / zeta(2)); meaningful for even m
};

EnsembleReport ensemble_report(const std::vector<Newform>& forms, int m, std::complex<double> z, double x,
                               const TruncationPolicy& policy);

}  // namespace symmom

#endif  // SYMMOM_ENSEMBLE_HPP
