#include "symmom/euler_products.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symmom/errors.hpp"
#include "symmom/factorization.hpp"
#include "symmom/local_factor.hpp"
#include "symmom/primes.hpp"
#include "symmom/quadrature.hpp"

namespace symmom {

namespace {

std::complex<double> pow_positive(double base_log, std::complex<double> z) { return std::exp(z * base_log); }

// quadrature route for int D(x, Sym^m, g)^z T(g) dg
std::complex<double> quad_factor(double x, int m, std::complex<double> z, double y, TwistKind twist, int nodes) {
  const QuadratureRule& rule = haar_rule(nodes);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    ConjugacyClass c(rule.nodes[i]);
    const double twist_val =
        twist == TwistKind::standard ? local_factor(y, 1, c) : local_factor(y, 2, c);
    acc += rule.weights[i] * pow_positive(log_local_factor(x, m, c), z) * twist_val;
  }
  return acc;
}

double log_quad_factor(double x, int m, double z, double y, TwistKind twist, int nodes) {
  const QuadratureRule& rule = haar_rule(nodes);
  std::vector<double> logs(rule.nodes.size());
  double peak = -1e300;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    ConjugacyClass c(rule.nodes[i]);
    const double twist_log =
        twist == TwistKind::standard ? log_local_factor(y, 1, c) : log_local_factor(y, 2, c);
    logs[i] = std::log(rule.weights[i]) + twist_log + z * log_local_factor(x, m, c);
    peak = std::max(peak, logs[i]);
  }
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - peak);
  return peak + std::log(acc);
}

// series route: sum_nu x^nu sum_m' mu^{z,nu}_{m,m'} c_{m'}(y), where c is the
// character projection of the twist factor.  Returns the sum and an estimate
// of the truncated tail.
struct SeriesResult {
  std::complex<double> value;
  double tail;
};

SeriesResult series_factor(std::int64_t p, int m, std::complex<double> z, double s, double rho, TwistKind twist,
                           const TruncationPolicy& policy, HarmonicTableCache* cache,
                           HarmonicTableCache& fallback) {
  HarmonicTableCache& tables = cache ? *cache : fallback;
  const double x = std::pow(double(p), -s);
  const double y = std::pow(double(p), -rho);
  const double abs_z = std::abs(z);
  const double twist_cap = twist == TwistKind::standard ? 1.0 : 1.0 / (1.0 - y * y);

  std::complex<double> acc = 0.0;
  double term_bound = 0.0;
  int nu = 0;
  for (; nu <= policy.series_depth; ++nu) {
    const HarmonicsF& mu = tables.get(m, z, nu, policy.series_budget);
    std::complex<double> inner = 0.0;
    for (const auto& [mp, coef] : mu.coeffs) {
      if (twist == TwistKind::standard) {
        inner += coef * std::pow(y, mp);
      } else if (mp % 2 == 0) {
        inner += coef * std::pow(y, mp / 2) / (1.0 - y * y);
      }
    }
    acc += std::pow(x, nu) * inner;
    term_bound = coefficient_bound(m, abs_z, nu) * std::pow(x, nu) * twist_cap;
    if (nu > (m + 1) * abs_z && term_bound < 1e-17 * std::max(1.0, std::abs(acc))) break;
  }
  // geometric-style tail estimate from the last bound term
  const double ratio = x * ((m + 1) * abs_z + nu + 1) / (nu + 2);
  double tail = term_bound;
  if (ratio < 1.0) tail = term_bound * ratio / (1.0 - ratio);
  return {acc, tail};
}

}  // namespace

const HarmonicsF& HarmonicTableCache::get(int m, std::complex<double> z, int nu, std::int64_t budget) {
  auto key = std::make_tuple(m, z.real(), z.imag(), nu);
  auto it = table_.find(key);
  if (it == table_.end()) it = table_.emplace(key, harmonics(m, z, nu, budget)).first;
  return it->second;
}

std::complex<double> local_moment_factor(std::int64_t p, int m, std::complex<double> z, double s, double rho,
                                         const TruncationPolicy& policy, TwistKind twist,
                                         HarmonicTableCache* cache) {
  if (p < 2 || m < 0) throw domain_error("local_moment_factor: need prime p and m >= 0");
  if (!(s > 0.5 && s + rho > 1.0)) {
    throw domain_error("local_moment_factor: convergence requires s > 1/2 and s + rho > 1");
  }
  const double x = std::pow(double(p), -s);
  const double y = std::pow(double(p), -rho);

  if (z.imag() == 0.0 && std::abs(z.real()) > 30.0) {
    // log-domain evaluation; the series route is numerically meaningless here
    return std::exp(log_quad_factor(x, m, z.real(), y, twist, policy.quadrature_nodes));
  }

  const std::complex<double> quad = quad_factor(x, m, z, y, twist, policy.quadrature_nodes);
  HarmonicTableCache fallback;
  const SeriesResult series = series_factor(p, m, z, s, rho, twist, policy, cache, fallback);
  const double allowed = policy.route_tolerance * std::max(1.0, std::abs(quad)) + series.tail;
  if (std::abs(quad - series.value) > allowed) {
    throw route_disagreement_error(
        "local_moment_factor: quadrature and harmonic-series routes disagree at p = " + std::to_string(p) +
        ", m = " + std::to_string(m) + " (|diff| = " + std::to_string(std::abs(quad - series.value)) + ")");
  }
  return quad;
}

double even_power_identity_gap(std::int64_t p, int m, std::complex<double> z, const TruncationPolicy& policy) {
  if (p < 2 || m < 1) throw domain_error("even_power_identity_gap: need prime p and m >= 1");
  const double x = 1.0 / double(p);
  const std::complex<double> lhs =
      quad_factor(x, m, z, std::pow(double(p), -0.5), TwistKind::standard, policy.quadrature_nodes);
  const std::complex<double> rhs =
      (1.0 - x * x) * quad_factor(x, m, z, x, TwistKind::sym_square, policy.quadrature_nodes);
  return std::abs(lhs - rhs);
}

double zeta_N_2(std::int64_t N) {
  double acc = 1.0;
  for (const auto& [p, e] : factorize(N).factors) {
    (void)e;
    acc /= 1.0 - 1.0 / (double(p) * double(p));
  }
  return acc;
}

std::complex<double> finite_part(std::int64_t N, int m, std::complex<double> z, MomentKind kind) {
  if (N < 1 || !is_squarefree(N)) throw domain_error("finite_part: level must be a squarefree positive integer");
  if (m < 1) throw domain_error("finite_part: m must be >= 1");
  std::complex<double> acc = 1.0;
  for (const auto& [p, e] : factorize(N).factors) {
    (void)e;
    const double pd = double(p);
    std::complex<double> local = 0.0;
    std::complex<double> binom = 1.0;  // tau_z(p^nu), updated incrementally
    for (int nu = 0; nu < 400; ++nu) {
      if (nu > 0) binom *= (z + double(nu - 1)) / double(nu);
      const bool m_nu_odd = (static_cast<std::int64_t>(m) * nu) % 2 != 0;
      std::complex<double> term = binom * std::pow(pd, -nu * (m / 2.0 + 1.0));
      if (kind == MomentKind::half) {
        if (m_nu_odd) term /= pd;  // the q-sum over odd powers of p
        local += term;
      } else {
        if (!m_nu_odd) local += term;  // square indicator of p^{m nu}
      }
      if (nu > std::abs(z) + 2 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(local))) break;
    }
    acc *= local / (1.0 - 1.0 / (pd * pd));
  }
  return acc;
}

MomentConstant moment_constant(std::int64_t N, int m, std::complex<double> z, MomentKind kind,
                               const TruncationPolicy& policy) {
  policy.validate();
  if (N < 1 || !is_squarefree(N)) throw domain_error("moment_constant: level must be squarefree");
  const double s = 1.0;
  const double rho = kind == MomentKind::half ? 0.5 : 1.0;
  const TwistKind twist = kind == MomentKind::half ? TwistKind::standard : TwistKind::sym_square;

  HarmonicTableCache cache;
  std::complex<double> value = finite_part(N, m, z, kind);
  if (kind == MomentKind::one) {
    // pull the exact zeta(2) through: the local factors below are the
    // normalised psi~ = (1 - p^-2) psi, which tend to 1 quickly
    value *= (M_PI * M_PI / 6.0) / zeta_N_2(N);
  }

  const auto primes = primes_up_to(policy.prime_cutoff);
  double calib = 0.0;  // sup of |psi~ - 1| p^{1+m/2} / (|z|+1) over the top window
  const std::int64_t window = policy.prime_cutoff / 2;
  for (std::int64_t p : primes) {
    if (N % p == 0) continue;
    std::complex<double> factor = local_moment_factor(p, m, z, s, rho, policy, twist, &cache);
    if (kind == MomentKind::one) factor *= 1.0 - std::pow(double(p), -2.0);
    value *= factor;
    if (p > window) {
      const double dev = std::abs(factor - 1.0) * std::pow(double(p), 1.0 + m / 2.0) / (std::abs(z) + 1.0);
      calib = std::max(calib, dev);
    }
  }

  MomentConstant out;
  out.value = value;
  out.policy = policy;
  if (policy.tail_mode == TailMode::bounded) {
    const double C = 2.0 * calib;
    const double P = double(policy.prime_cutoff);
    const double tail_log = C * (std::abs(z) + 1.0) * (2.0 / m) * std::pow(P, -m / 2.0);
    out.tail_bound = std::abs(value) * std::expm1(tail_log);
  }
  return out;
}

std::vector<std::pair<double, double>> growth_curve(int m, int sign, const std::vector<double>& r_grid,
                                                    const TruncationPolicy& policy) {
  if (sign != 1 && sign != -1) throw domain_error("growth_curve: sign must be +1 or -1");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (r_grid[i] < 0 || (i > 0 && r_grid[i] <= r_grid[i - 1])) {
      throw domain_error("growth_curve: r grid must be non-negative and ascending");
    }
  }
  std::vector<std::pair<double, double>> out;
  for (double r : r_grid) {
    if (r == 0.0) {
      out.emplace_back(0.0, 0.0);
      continue;
    }
    const std::int64_t cutoff =
        std::max<std::int64_t>(policy.prime_cutoff, static_cast<std::int64_t>(4.0 * ((m + 1) * r + 3.0)));
    const int nodes = std::max(policy.quadrature_nodes,
                               32 * static_cast<int>(std::ceil(std::sqrt((m + 1) * r + 1.0))));
    double acc = 0.0;
    for (std::int64_t p : primes_up_to(cutoff)) {
      acc += log_quad_factor(1.0 / double(p), m, sign * r, std::pow(double(p), -0.5), TwistKind::standard,
                             nodes);
    }
    out.emplace_back(r, acc);
  }
  return out;
}

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points) {
  // least squares on y = a * r log log r + b * r
  double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0;
  for (const auto& [r, y] : points) {
    if (r <= M_E) throw domain_error("fit_growth: needs r > e for log log r");
    const double f1 = r * std::log(std::log(r));
    const double f2 = r;
    s11 += f1 * f1;
    s12 += f1 * f2;
    s22 += f2 * f2;
    t1 += f1 * y;
    t2 += f2 * y;
  }
  const double det = s11 * s22 - s12 * s12;
  if (det == 0.0) throw domain_error("fit_growth: singular normal equations");
  return {(t1 * s22 - t2 * s12) / det, (s11 * t2 - s12 * t1) / det};
}

}  // namespace symmom
