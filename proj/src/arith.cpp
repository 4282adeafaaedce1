#include "symmom/arith.hpp"

#include <cmath>
#include <string>

#include "symmom/errors.hpp"

namespace symmom {

namespace {

std::complex<double> binom_z(std::complex<double> z, int e) {
  std::complex<double> acc = 1.0;
  for (int j = 0; j < e; ++j) acc *= (z + double(j)) / double(j + 1);
  return acc;
}

}  // namespace

std::complex<double> tau_z(std::complex<double> z, const Factorization& n) {
  std::complex<double> acc = 1.0;
  for (const auto& [p, e] : n.factors) {
    (void)p;
    acc *= binom_z(z, e);
  }
  return acc;
}

Rational tau_z_exact(std::int64_t z, const Factorization& n) {
  Rational acc = 1;
  for (const auto& [p, e] : n.factors) {
    (void)p;
    acc *= binomial_exact(Rational(z) + e - 1, e);
  }
  return acc;
}

LocalEigenData LocalEigenData::unramified(std::int64_t p, double lambda) {
  if (!(std::abs(lambda) <= 2.0)) {
    throw domain_error("LocalEigenData: unramified |lambda_f(p)| must be <= 2 at p = " + std::to_string(p));
  }
  LocalEigenData out;
  out.p = p;
  out.ramified = false;
  out.lambda_p = lambda;
  out.theta = ConjugacyClass::from_trace(lambda);
  return out;
}

LocalEigenData LocalEigenData::ramified_at(std::int64_t p, double lambda) {
  if (std::abs(std::abs(lambda) * std::sqrt(double(p)) - 1.0) > 1e-6) {
    throw domain_error("LocalEigenData: ramified lambda_f(p) must be +-1/sqrt(p) at p = " + std::to_string(p));
  }
  LocalEigenData out;
  out.p = p;
  out.ramified = true;
  out.lambda_p = lambda;
  return out;
}

double LocalEigenData::eigen_power(int k) const {
  if (k < 0) throw domain_error("eigen_power: exponent must be >= 0");
  if (ramified) return std::pow(lambda_p, k);
  return character(k, theta);
}

std::complex<double> sym_power_coeff(const LocalEigenData& local, int m, std::complex<double> z, int nu,
                                     std::int64_t budget) {
  if (nu < 0) throw domain_error("sym_power_coeff: nu must be >= 0");
  if (local.ramified) {
    Factorization pnu;
    pnu.n = 1;
    if (nu > 0) pnu.factors.emplace_back(local.p, nu);
    return tau_z(z, pnu) * std::pow(local.lambda_p, static_cast<double>(m) * nu);
  }
  HarmonicsF mu = harmonics(m, z, nu, budget);
  std::complex<double> acc = 0.0;
  for (const auto& [mp, coef] : mu.coeffs) acc += coef * character(mp, local.theta);
  return acc;
}

std::complex<double> product_coeff(const LocalEigenData& local, int m, std::complex<double> z, int nu,
                                   std::int64_t budget) {
  if (nu < 0) throw domain_error("product_coeff: nu must be >= 0");
  if (local.ramified) {
    std::complex<double> acc = 0.0;
    for (int nup = 0; nup <= nu; ++nup) {
      Factorization pn;
      pn.n = 1;
      if (nup > 0) pn.factors.emplace_back(local.p, nup);
      acc += tau_z(z, pn) * std::pow(local.lambda_p, static_cast<double>(m) * nup) *
             std::pow(double(local.p), double(nup - nu));
    }
    return acc;
  }
  HarmonicsF mu = product_harmonics(m, z, nu, budget);
  std::complex<double> acc = 0.0;
  for (const auto& [mp, coef] : mu.coeffs) acc += coef * character(mp, local.theta);
  return acc;
}

std::complex<double> trace_main_term(int m, std::complex<double> z, const Factorization& n,
                                     const Factorization& q, std::int64_t N, std::int64_t budget) {
  if (!is_squarefree(N)) throw domain_error("trace_main_term: level must be squarefree");
  const Factorization qN = q.part_dividing(N);
  if (!qN.is_squarefree()) {
    throw domain_error("trace_main_term: hypothesis (q, N^2) | N violated at q = " + std::to_string(q.n));
  }
  const Factorization nN = n.part_dividing(N);
  const Factorization nC = n.part_coprime(N);
  const Factorization qC = q.part_coprime(N);

  // square indicator of n_N^m q_N and its square root
  Factorization s;
  s.n = 1;
  for (const auto& [p, e] : nN.factors) s.factors.emplace_back(p, e * m);
  for (const auto& [p, e] : qN.factors) {
    bool merged = false;
    for (auto& [sp, se] : s.factors) {
      if (sp == p) {
        se += e;
        merged = true;
        break;
      }
    }
    if (!merged) s.factors.emplace_back(p, e);
  }
  double inv_sqrt = 1.0;
  for (const auto& [p, e] : s.factors) {
    if (e % 2 != 0) return 0.0;  // square indicator vanishes
    inv_sqrt /= std::pow(double(p), e / 2.0);
  }

  // q^(N) must be an admissible exponent pattern over the primes of n^(N)
  std::complex<double> mu_prod = 1.0;
  for (const auto& [p, e] : qC.factors) {
    if (nC.v_p(p) == 0) return 0.0;
    (void)e;
  }
  for (const auto& [p, e] : nC.factors) {
    const int target = qC.v_p(p);
    if (target > m * e) return 0.0;
    mu_prod *= harmonics(m, z, e, budget).at(target);
  }
  return tau_z(z, nN) * inv_sqrt * mu_prod;
}

std::pair<std::complex<double>, double> siegfried_weights(int m, std::complex<double> z, std::int64_t N,
                                                          std::int64_t p, int nu, std::int64_t budget) {
  if (!is_squarefree(N)) throw domain_error("siegfried_weights: level must be squarefree");
  if (nu < 0) throw domain_error("siegfried_weights: nu must be >= 0");
  if (N % p == 0) {
    std::complex<double> w = 0.0;
    double r = 0.0;
    for (int nup = 0; nup <= nu; ++nup) {
      Factorization pn;
      pn.n = 1;
      if (nup > 0) pn.factors.emplace_back(p, nup);
      const double scale = std::pow(double(p), -(nu - nup) - m * nup / 2.0);
      if ((static_cast<std::int64_t>(m) * nup) % 2 == 0) w += tau_z(z, pn) * scale;
      r += std::abs(tau_z(std::abs(z), pn)) * scale;
    }
    return {w, r};
  }
  std::complex<double> w = product_harmonics(m, z, nu, budget).at(0);
  double r = product_coefficient_bound(m, std::abs(z), nu);
  return {w, r};
}

}  // namespace symmom
