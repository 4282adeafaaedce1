#include "symmom/newform.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "symmom/conjugacy.hpp"
#include "symmom/errors.hpp"
#include "symmom/factorization.hpp"
#include "symmom/primes.hpp"

namespace symmom {

double Newform::lambda_at_prime(std::int64_t p) const {
  auto it = lambda.find(p);
  if (it == lambda.end()) {
    throw coverage_error("newform " + label + ": no eigenvalue at p = " + std::to_string(p) +
                         " (coverage p_max = " + std::to_string(p_max) + ")");
  }
  return it->second;
}

LocalEigenData Newform::local(std::int64_t p) const {
  const double l = lambda_at_prime(p);
  return level % p == 0 ? LocalEigenData::ramified_at(p, l) : LocalEigenData::unramified(p, l);
}

double eigenvalue_at(const Newform& f, std::int64_t n) {
  if (n < 1) throw domain_error("eigenvalue_at: n must be >= 1");
  double acc = 1.0;
  for (const auto& [p, e] : factorize(n).factors) acc *= f.local(p).eigen_power(e);
  return acc;
}

int sign(const Newform& f) {
  const Factorization N = factorize(f.level);
  double lam_N = 1.0;
  for (const auto& [p, e] : N.factors) {
    (void)e;
    lam_N *= f.lambda_at_prime(p);
  }
  const double eps = -N.moebius() * std::sqrt(double(f.level)) * lam_N;
  if (std::abs(std::abs(eps) - 1.0) > 1e-9) {
    throw domain_error("sign: functional-equation sign is not +-1 (corrupted data?) for " + f.label);
  }
  return eps > 0 ? 1 : -1;
}

double central_value(const Newform& f, std::int64_t Q) {
  const double sqN = std::sqrt(double(f.level));
  if (Q <= 0) Q = static_cast<std::int64_t>(std::ceil(5.0 * sqN * std::log(10.0 * double(f.level))));
  const int eps = sign(f);
  if (eps == -1) return 0.0;
  double acc = 0.0;
  for (std::int64_t q = 1; q <= Q; ++q) {
    acc += eigenvalue_at(f, q) / std::sqrt(double(q)) * std::exp(-2.0 * M_PI * double(q) / sqN);
  }
  const double value = (1 + eps) * acc;
  if (value < -1e-6) throw domain_error("central_value: negative value violates positivity for " + f.label);
  return value;
}

namespace {

// sum_{n <= x log^2 x} coef(n) / n * exp(-n/x), with coef multiplicative
// assembled from memoised prime-power values.
std::complex<double> smoothed_sum(const Newform& f, double x,
                                  const std::function<std::complex<double>(const LocalEigenData&, int)>& coef) {
  if (x < 1.0) throw domain_error("smoothed sum: x must be >= 1");
  const double lg = std::log(std::max(x, M_E));
  const std::int64_t n_max = static_cast<std::int64_t>(std::ceil(x * lg * lg));
  if (n_max > f.p_max) {
    throw coverage_error("newform " + f.label + ": smoothing scale x = " + std::to_string(x) +
                         " needs coefficients to n = " + std::to_string(n_max) + " > p_max = " +
                         std::to_string(f.p_max));
  }
  const auto spf = spf_table(static_cast<std::int32_t>(n_max));
  std::map<std::pair<std::int64_t, int>, std::complex<double>> memo;
  auto local_coef = [&](std::int64_t p, int e) {
    auto key = std::make_pair(p, e);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, coef(f.local(p), e)).first;
    return it->second;
  };
  std::complex<double> acc = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::complex<double> c = 1.0;
    std::int64_t rest = n;
    while (rest > 1) {
      const std::int64_t p = spf[static_cast<std::size_t>(rest)];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      c *= local_coef(p, e);
      if (c == std::complex<double>(0.0, 0.0)) break;
    }
    acc += c / double(n) * std::exp(-double(n) / x);
  }
  return acc;
}

}  // namespace

std::complex<double> smoothed_sym_L(const Newform& f, int m, std::complex<double> z, double x) {
  return smoothed_sum(f, x, [&](const LocalEigenData& local, int e) { return sym_power_coeff(local, m, z, e); });
}

std::complex<double> smoothed_product_L(const Newform& f, int m, std::complex<double> z, double x) {
  return smoothed_sum(f, x, [&](const LocalEigenData& local, int e) { return product_coeff(local, m, z, e); });
}

double harmonic_weight(const Newform& f, double x) {
  const double l_sym2 = smoothed_sym_L(f, 2, 1.0, x).real();
  if (!(l_sym2 > 0.0)) throw domain_error("harmonic_weight: nonpositive Sym^2 value for " + f.label);
  return 2.0 * M_PI * M_PI / (double(euler_phi(f.level)) * l_sym2);
}

PrimeSumDiagnostics prime_sum_diagnostics(const Newform& f, int m, double C, double xi, double x) {
  if (m < 0) throw domain_error("prime_sum_diagnostics: m must be >= 0");
  PrimeSumDiagnostics out;
  const double N = double(f.level);
  out.prime_cutoff = std::log(2.0 * N);
  const double log3 = std::log(std::log(std::log(20.0 * N)));
  if (xi <= 0.0) xi = log3;
  const double near_max_floor = (m + 1) - xi / log3;
  const double small_ceiling = std::sqrt(std::max(0.0, xi / log3));
  for (std::int64_t p : primes_up_to(static_cast<std::int64_t>(out.prime_cutoff))) {
    const double lam_pm = f.local(p).eigen_power(m);
    const double lam_p = f.lambda_at_prime(p);
    out.sum_sym += lam_pm / double(p);
    out.sum_cafe += lam_p * lam_p / double(p);
    out.mass_total += 1.0 / double(p);
    if (lam_pm >= near_max_floor) out.mass_near_max += 1.0 / double(p);
    if (std::abs(lam_p) <= small_ceiling) out.mass_small += 1.0 / double(p);
  }
  const double l_est = smoothed_sym_L(f, m, 1.0, x).real();
  out.log_smoothed = std::log(std::max(l_est, 1e-300));
  const double log2_3n = std::log(std::log(3.0 * N));
  out.in_high_class = l_est >= C * std::pow(log2_3n, m + 1);
  // max of -chi_m over the classes, by the same optimisation used elsewhere
  double sym_minus = 0.0;
  for (int i = 0; i <= 4096; ++i) {
    sym_minus = std::max(sym_minus, -character(m, ConjugacyClass(M_PI * i / 4096)));
  }
  out.in_low_class = l_est <= C * std::pow(log2_3n, -sym_minus);
  return out;
}

}  // namespace symmom
