#include "symmom/riordan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "symmom/errors.hpp"

namespace symmom {

Rational LaurentPoly::eval(const Rational& p) const {
  Rational acc = 0;
  for (const auto& [e, c] : coeffs) acc += c * pow_rational(p, e);
  return acc;
}

namespace {

BigInt catalan(int j) { return binomial_int(2 * j, j) / (j + 1); }

// Height-indexed DP for admissible paths.  From height h <= 0 all three steps
// are allowed; from height 1 (reached only by an up-step) the next step must
// come straight down.
std::vector<std::vector<BigInt>> path_counts(int steps) {
  const int offset = steps;  // height h stored at index h + offset, h in [-steps, 1]
  std::vector<std::vector<BigInt>> dp(static_cast<std::size_t>(steps) + 1,
                                      std::vector<BigInt>(static_cast<std::size_t>(steps) + 2, BigInt(0)));
  dp[0][static_cast<std::size_t>(offset)] = 1;
  for (int i = 0; i < steps; ++i) {
    for (int h = -i; h <= 1; ++h) {
      const BigInt& cnt = dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(h + offset)];
      if (cnt == 0) continue;
      if (h == 1) {
        dp[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(h - 1 + offset)] += cnt;
      } else {
        for (int d = -1; d <= 1; ++d) {
          dp[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(h + d + offset)] += cnt;
        }
      }
    }
  }
  return dp;
}

}  // namespace

LaurentPoly r_k_polynomial(int k) {
  if (k < 0) throw domain_error("r_k_polynomial: k must be >= 0");
  LaurentPoly out;
  if (k == 0) {
    out.add(1, 1);
    return out;
  }
  const int steps = k - 1;
  auto dp = path_counts(steps);
  for (int q = -steps; q <= 1; ++q) {
    const BigInt& cnt = dp[static_cast<std::size_t>(steps)][static_cast<std::size_t>(q + steps)];
    if (cnt != 0) out.add(q, Rational(cnt));
  }
  return out;
}

BigInt partial_riordan(int k, int q) {
  if (k < 1) throw domain_error("partial_riordan: k must be >= 1");
  if (q > 1 || q < -(k - 1)) return 0;
  LaurentPoly poly = r_k_polynomial(k);
  Rational c = poly.at(q);
  return numerator(c);
}

BigInt riordan_number(int k) {
  if (k < 0) throw domain_error("riordan_number: k must be >= 0");
  // Wallis-moment route: (4/pi) int_0^{pi/2} (4 sin^2 t - 1)^k cos^2 t dt
  // expands into the alternating Catalan transform.
  BigInt wallis = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial_int(k, j) * catalan(j);
    if ((k - j) % 2 != 0) term = -term;
    wallis += term;
  }
  // Path-enumeration route with the small-k boundary.
  BigInt paths;
  if (k == 0) {
    paths = 1;
  } else if (k == 1) {
    paths = 0;
  } else {
    paths = partial_riordan(k - 1, 0);
  }
  if (paths != wallis) {
    throw route_disagreement_error("riordan_number: path route " + paths.str() + " != moment route " +
                                   wallis.str() + " at k = " + std::to_string(k));
  }
  return wallis;
}

Rational ell_n(int n, const Rational& x) {
  if (n < 0) throw domain_error("ell_n: n must be >= 0");
  Rational acc = 0;
  for (int k = 0; k <= n; ++k) {
    Rational term = Rational(binomial_int(n, k) * riordan_number(k)) * pow_rational(x, k);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

Rational ell_n_integral(int n, const Rational& x) {
  if (n < 0) throw domain_error("ell_n: n must be >= 0");
  // [1 + x(1 - 4 sin^2 t)]^n = sum_j binom(n,j) (1+x)^{n-j} (-4x sin^2 t)^j,
  // and (4/pi) int sin^{2j} cos^2 = catalan(j) / 4^j.
  Rational acc = 0;
  for (int j = 0; j <= n; ++j) {
    Rational term = Rational(binomial_int(n, j) * catalan(j)) * pow_rational(1 + x, n - j) * pow_rational(-x, j);
    acc += term;
  }
  return acc;
}

bool bruit_check(int n, const Rational& p) {
  if (n < 0) throw domain_error("bruit_check: n must be >= 0");
  if (!(p > 1)) throw domain_error("bruit_check: requires p > 1");
  const Rational x = p / (p * p + p + 1);
  Rational lhs = 0;
  for (int k = 0; k <= n + 1; ++k) {
    Rational term = Rational(binomial_int(n + 1, k)) * r_k_polynomial(k).eval(p) * pow_rational(x, k);
    lhs += (k % 2 == 0) ? term : -term;
  }
  const Rational rhs = p * p * (p + 1) / (p * p + p + 1) * ell_n(n, x);
  return lhs == rhs;
}

namespace {

struct SlotType {
  int degree;   // exponent of p consumed in a b^2 c^3
  int ab_exp;   // exponent of p in (a*b)_i
  int sign;     // mu(a b c) mu(b)
};

// admissible (a,b,c) shapes at one slot of a prime-power argument: all of
// a,b,c are powers of p and a*b*c must stay squarefree.
constexpr SlotType kSlotTypes[] = {
    {0, 0, +1},  // (1,1,1)
    {1, 1, -1},  // (p,1,1)
    {2, 1, +1},  // (1,p,1): mu(p) mu(p) = +1
    {3, 0, -1},  // (1,1,p)
};

// sum over d vectors in E_n for prime-power data: g[i] is the p-exponent of
// (ab)_i; returns sum of p^(sum delta - sum g).
Rational d_sum_prime_power(const std::vector<int>& g, std::int64_t p, std::int64_t& budget) {
  const int n = static_cast<int>(g.size());
  Rational total = 0;
  std::function<void(int, int, int)> rec = [&](int i, int consumed, int delta_sum) {
    if (--budget < 0) throw resource_error("w_minus_n: tuple budget exhausted");
    if (i == n - 1) {
      int excess = delta_sum;
      for (int j = 0; j < n; ++j) excess -= g[static_cast<std::size_t>(j)];
      total += pow_rational(Rational(p), excess);
      return;
    }
    const int avail = [&] {
      int s = 0;
      for (int j = 0; j <= i; ++j) s += g[static_cast<std::size_t>(j)];
      return s - consumed;
    }();
    // d_i ranges over divisors of gcd(x_i, (ab)_{i+1})^2; the running
    // quotient stays integral automatically.
    const int cap = 2 * std::min(avail, g[static_cast<std::size_t>(i + 1)]);
    for (int d = 0; d <= cap; ++d) {
      rec(i + 1, consumed + d, delta_sum + d);
    }
  };
  if (n == 0) return 1;
  rec(0, 0, 0);
  return total;
}

}  // namespace

std::vector<Rational> w_minus_n_local(int n, std::int64_t p, int nu_max, std::int64_t tuple_budget) {
  if (n < 1) throw domain_error("w_minus_n_local: n must be >= 1");
  if (nu_max < 0) throw domain_error("w_minus_n_local: nu_max must be >= 0");
  std::int64_t budget = tuple_budget;
  std::vector<Rational> out(static_cast<std::size_t>(nu_max) + 1, Rational(0));
  std::vector<int> types(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int slot, int degree) {
    if (--budget < 0) throw resource_error("w_minus_n_local: tuple budget exhausted");
    if (slot == n) {
      int sign = 1;
      std::vector<int> g(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const SlotType& t = kSlotTypes[types[static_cast<std::size_t>(i)]];
        sign *= t.sign;
        g[static_cast<std::size_t>(i)] = t.ab_exp;
      }
      Rational v = d_sum_prime_power(g, p, budget) * sign;
      out[static_cast<std::size_t>(degree)] += v;
      return;
    }
    for (int t = 0; t < 4; ++t) {
      const int d2 = degree + kSlotTypes[t].degree;
      if (d2 > nu_max) continue;
      types[static_cast<std::size_t>(slot)] = t;
      rec(slot + 1, d2);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

std::vector<std::int64_t> divisors_of(std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= r; ++d) {
    if (r % d == 0) {
      out.push_back(d);
      if (d != r / d) out.push_back(r / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool squarefree_small(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

int mu_small(std::int64_t n) {
  if (!squarefree_small(n)) return 0;
  int cnt = 0;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d == 0) {
      ++cnt;
      while (n % d == 0) n /= d;
    }
  }
  return cnt % 2 == 0 ? 1 : -1;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// sum over d in E_n(ab) of |d| / |ab| for general integer data.
Rational d_sum_general(const std::vector<std::int64_t>& ab, std::int64_t& budget) {
  const int n = static_cast<int>(ab.size());
  Rational total = 0;
  std::int64_t ab_prod = 1;
  for (std::int64_t v : ab) ab_prod *= v;
  std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int i, std::int64_t running, std::int64_t d_prod) {
    if (--budget < 0) throw resource_error("w_minus_n: tuple budget exhausted");
    if (i == n - 1) {
      total += Rational(d_prod) / ab_prod;
      return;
    }
    const std::int64_t g = gcd64(running, ab[static_cast<std::size_t>(i + 1)]);
    for (std::int64_t d : divisors_of(g * g)) {
      // d | gcd(x_i, b_{i+1})^2 keeps x_{i+1} = x_i b_{i+1} / d integral
      rec(i + 1, running * ab[static_cast<std::size_t>(i + 1)] / d, d_prod * d);
    }
  };
  if (n == 0) return 1;
  rec(0, ab[0], 1);
  return total;
}

}  // namespace

Rational w_minus_n(int n, std::int64_t r, std::int64_t tuple_budget) {
  if (n < 1) throw domain_error("w_minus_n: n must be >= 1");
  if (r < 1) throw domain_error("w_minus_n: r must be >= 1");
  std::int64_t budget = tuple_budget;
  Rational total = 0;
  std::vector<std::int64_t> ab(static_cast<std::size_t>(n), 1);
  std::function<void(int, std::int64_t, int)> rec = [&](int slot, std::int64_t rem, int sign) {
    if (--budget < 0) throw resource_error("w_minus_n: tuple budget exhausted");
    if (slot == n) {
      if (rem == 1) total += d_sum_general(ab, budget) * sign;
      return;
    }
    for (std::int64_t a : divisors_of(rem)) {
      std::int64_t rem_a = rem / a;
      for (std::int64_t b : divisors_of(rem_a)) {
        if (rem_a % (b * b) != 0) continue;
        std::int64_t rem_b = rem_a / (b * b);
        for (std::int64_t c : divisors_of(rem_b)) {
          if (rem_b % (c * c * c) != 0) continue;
          const int m1 = mu_small(a * b * c);
          if (m1 == 0) continue;
          const int m2 = mu_small(b);
          if (m2 == 0) continue;
          ab[static_cast<std::size_t>(slot)] = a * b;
          rec(slot + 1, rem_b / (c * c * c), sign * m1 * m2);
        }
      }
    }
  };
  rec(0, r, 1);
  return total;
}

}  // namespace symmom
