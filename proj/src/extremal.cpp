#include "symmom/extremal.hpp"

#include <cmath>
#include <functional>

#include "symmom/conjugacy.hpp"
#include "symmom/errors.hpp"
#include "symmom/local_factor.hpp"
#include "symmom/primes.hpp"

namespace symmom {

namespace {

// Maximise f over [0, pi]: coarse grid seed, then golden-section refinement
// around the best node.  Ties break toward smaller theta.
struct Optimum {
  double theta;
  double value;
};

Optimum maximize(const std::function<double(double)>& f, int grid, double lo, double hi) {
  double best_t = lo, best_v = f(lo);
  for (int i = 1; i <= grid; ++i) {
    const double t = lo + (hi - lo) * i / grid;
    const double v = f(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double a = std::max(lo, best_t - (hi - lo) / grid);
  double b = std::min(hi, best_t + (hi - lo) / grid);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-13) {
    if (f1 >= f2) {  // keep the left interval on ties
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double mid = 0.5 * (a + b);
  const double vm = f(mid);
  if (vm > best_v) return {mid, vm};
  return {best_t, best_v};
}

}  // namespace

double gamma_star(std::int64_t prime_cutoff) {
  double acc = kEulerGamma;
  for (std::int64_t p : primes_up_to(prime_cutoff)) {
    acc += std::log1p(-1.0 / double(p)) + 1.0 / double(p);
  }
  // remaining terms are ~ -1/(2p^2); integral estimate of the prime tail
  const double P = double(prime_cutoff);
  acc -= 1.0 / (2.0 * P * std::log(P));
  return acc;
}

ExtremalConstants extremal_constants(int m, const TruncationPolicy& policy) {
  if (m < 1) throw domain_error("extremal_constants: m must be >= 1");
  policy.validate();
  ExtremalConstants out;
  out.gamma_star = gamma_star(policy.prime_cutoff);

  auto chi = [m](double t) { return character(m, ConjugacyClass(t)); };
  out.sym_plus = maximize([&](double t) { return chi(t); }, 1024, 0.0, M_PI).value;
  out.sym_minus = maximize([&](double t) { return -chi(t); }, 1024, 0.0, M_PI).value;

  // sym1_{+-} = gamma* sym_{+-} + sum_p { +-log(+-max +-D(1/p)) - sym_{+-}/p },
  // the per-prime optimum warm-started from the previous prime.
  const auto primes = primes_up_to(policy.prime_cutoff);
  for (int dir = 0; dir < 2; ++dir) {
    const double sym = dir == 0 ? out.sym_plus : out.sym_minus;
    double acc = out.gamma_star * sym;
    double warm = dir == 0 ? 0.0 : M_PI / 2;
    double last_scaled = 0.0;
    for (std::int64_t p : primes) {
      const double x = 1.0 / double(p);
      auto obj = [&](double t) {
        const double ld = log_local_factor(x, m, ConjugacyClass(t));
        return dir == 0 ? ld : -ld;
      };
      Optimum opt;
      if (p < 1000) {
        opt = maximize(obj, 1024, 0.0, M_PI);
      } else {
        const double lo = std::max(0.0, warm - 0.02);
        const double hi = std::min(M_PI, warm + 0.02);
        opt = maximize(obj, 64, lo, hi);
      }
      warm = opt.theta;
      const double term = opt.value - sym / double(p);
      acc += term;
      last_scaled = term * double(p) * double(p);
    }
    // tail extrapolation: term_p ~ c / p^2
    const double P = double(policy.prime_cutoff);
    acc += last_scaled / (P * std::log(P));
    if (dir == 0) {
      out.sym1_plus = acc;
    } else {
      out.sym1_minus = acc;
    }
  }
  return out;
}

}  // namespace symmom
