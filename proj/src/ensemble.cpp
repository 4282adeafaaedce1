#include "symmom/ensemble.hpp"

#include <cmath>
#include <string>

#include "symmom/errors.hpp"
#include "symmom/factorization.hpp"

namespace symmom {

TraceCheckResult trace_check(const std::vector<Newform>& forms, std::int64_t m, std::int64_t n, double x) {
  if (forms.empty()) throw domain_error("trace_check: empty ensemble");
  const std::int64_t N = forms.front().level;
  if (std::gcd(m, N) != 1) throw domain_error("trace_check: hypothesis (m, N) = 1 violated");
  if (!factorize(n).part_dividing(N).is_squarefree()) {
    throw domain_error("trace_check: hypothesis (n, N^2) | N violated");
  }
  TraceCheckResult out;
  double plain = 0.0, signed_sum = 0.0;
  for (const Newform& f : forms) {
    const double w = harmonic_weight(f, x);
    const double lam = eigenvalue_at(f, m) * eigenvalue_at(f, n);
    plain += w * lam;
    signed_sum += w * (1 + sign(f)) * lam;
    out.sum_weights += w;
  }
  const double delta = (m == n) ? 1.0 : 0.0;
  out.residual_plain = plain - delta;
  out.residual_signed = signed_sum - delta;
  return out;
}

EnsembleReport ensemble_report(const std::vector<Newform>& forms, int m, std::complex<double> z, double x,
                               const TruncationPolicy& policy) {
  if (forms.empty()) throw domain_error("ensemble_report: empty ensemble");
  EnsembleReport rep;
  rep.level = forms.front().level;
  rep.forms = static_cast<int>(forms.size());
  rep.m = m;
  rep.z = z;
  rep.x = x;
  for (const Newform& f : forms) {
    if (f.level != rep.level) throw domain_error("ensemble_report: mixed levels in ensemble");
    const double w = harmonic_weight(f, x);
    rep.sum_weights += w;
    const double central = central_value(f);
    rep.mean_central += w * central;
    rep.empirical_half += w * central * smoothed_sym_L(f, m, z, x);
    rep.empirical_one += w * smoothed_product_L(f, m, z, x);
  }
  rep.predicted_half = moment_constant(rep.level, m, z, MomentKind::half, policy);
  rep.predicted_one = moment_constant(rep.level, m, z, MomentKind::one, policy);
  // the Sym^2-twist trace formula carries a phi(N)/N factor in front of the
  // main term at the omega-sum level
  const double phi_ratio = double(euler_phi(rep.level)) / double(rep.level);
  rep.predicted_one.value *= phi_ratio;
  rep.predicted_one.tail_bound *= phi_ratio;
  rep.residual_half = std::abs(rep.empirical_half - rep.predicted_half.value);
  rep.residual_one = std::abs(rep.empirical_one - rep.predicted_one.value);
  const double zeta2 = M_PI * M_PI / 6.0;
  if (std::abs(rep.empirical_one) > 0.0) {
    rep.corollary_ratio = std::abs(rep.empirical_half / (rep.empirical_one / zeta2));
  }
  return rep;
}

}  // namespace symmom
