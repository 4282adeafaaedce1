#ifndef SYMMOM_RIORDAN_HPP
#define SYMMOM_RIORDAN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "symmom/rational.hpp"

namespace symmom {

// Laurent polynomial over Q, finite support.
struct LaurentPoly {
  std::map<int, Rational> coeffs;  // exponent -> coefficient

  Rational at(int e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add(int e, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = coeffs.emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  Rational eval(const Rational& p) const;
  int min_exp() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
  int max_exp() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
};

// k-th Riordan number, computed both by lattice-path enumeration and by the
// Wallis-moment (inverse binomial transform of Catalan) route; the two must
// agree.
BigInt riordan_number(int k);

// Number of admissible step vectors delta in {-1,0,1}^(k-1) with
// delta_1 + ... + delta_i <= max(0, delta_i) for all i and trace q.
// Out-of-range q yields 0.
BigInt partial_riordan(int k, int q);

// The Laurent polynomial R_k(p): p for k = 0, 1 for k = 1, and the weighted
// path count sum p^(tr delta) for k >= 2.
LaurentPoly r_k_polynomial(int k);

// ell_n(x) = sum_k (-1)^k binom(n,k) R_k x^k, exact.
Rational ell_n(int n, const Rational& x);
// The same value through the Wallis-moment expansion of the integral form.
Rational ell_n_integral(int n, const Rational& x);

// Exact verification of the binomial/Riordan-path identity behind the
// negative-moment recursion, at a rational p > 1.
bool bruit_check(int n, const Rational& p);

// w_{-n}(p^nu) for nu = 0..nu_max by brute-force enumeration of the
// squarefree decomposition tuples.
std::vector<Rational> w_minus_n_local(int n, std::int64_t p, int nu_max,
                                      std::int64_t tuple_budget = 10'000'000);

// w_{-n}(r) for a general positive integer r (used by the multiplicativity
// probe at small arguments).
Rational w_minus_n(int n, std::int64_t r, std::int64_t tuple_budget = 10'000'000);

}  // namespace symmom

#endif  // SYMMOM_RIORDAN_HPP
