#ifndef SYMMOM_HARMONICS_HPP
#define SYMMOM_HARMONICS_HPP

#include <complex>
#include <cstdint>
#include <map>

#include "symmom/conjugacy.hpp"
#include "symmom/rational.hpp"

namespace symmom {

inline constexpr std::int64_t kDefaultSeriesBudget = 50'000'000;

// A central function on SU(2) written in the character basis: a finite map
// order m' -> coefficient of chi_{Sym^m'}.
template <class Scalar>
struct HarmonicExpansion {
  std::map<int, Scalar> coeffs;

  Scalar at(int mp) const {
    auto it = coeffs.find(mp);
    return it == coeffs.end() ? Scalar(0) : it->second;
  }
  void add(int mp, const Scalar& v) {
    auto it = coeffs.find(mp);
    if (it == coeffs.end()) {
      if (!(v == Scalar(0))) coeffs.emplace(mp, v);
    } else {
      it->second += v;
      if (it->second == Scalar(0)) coeffs.erase(it);
    }
  }
  int max_order() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
};

using HarmonicsF = HarmonicExpansion<std::complex<double>>;
using HarmonicsQ = HarmonicExpansion<Rational>;

std::complex<double> eval_expansion(const HarmonicsF& h, const ConjugacyClass& c);

// Character-projection selector: the value of
// (4/pi) int_0^pi cos(ell t) sin((m'+1)t) sin(t) dt for integers ell, m' >= 0.
// The defining clauses are mutually incompatible; if more than one ever fires
// the discrepancy is reported by throwing.
int delta_selector(std::int64_t ell, int mp);

// nu-th Taylor coefficient of D(X, Sym^m, g)^z at X = 0, evaluated at the
// class angle of c: the composition sum of products of generalised binomials
// times cos(ell(m, nu_vec) theta), enumerated lexicographically with
// compensated accumulation.
std::complex<double> series_coefficient(int m, std::complex<double> z, int nu, const ConjugacyClass& c,
                                        std::int64_t budget = kDefaultSeriesBudget);

// Character-basis coefficients of the nu-th series coefficient of D^z.
// Support is contained in [0, m*nu]; the parity rules hold exactly by
// construction (forbidden orders are never touched).
HarmonicsF harmonics(int m, std::complex<double> z, int nu, std::int64_t budget = kDefaultSeriesBudget);
HarmonicsQ harmonics_exact(int m, std::int64_t z, int nu, std::int64_t budget = kDefaultSeriesBudget);

// Same for the nu-th coefficient of D(X, Sym^2, g) * D(X, Sym^m, g)^z,
// assembled through the Clebsch-Gordan relation from the plain harmonics.
HarmonicsF product_harmonics(int m, std::complex<double> z, int nu, std::int64_t budget = kDefaultSeriesBudget);
HarmonicsQ product_harmonics_exact(int m, std::int64_t z, int nu, std::int64_t budget = kDefaultSeriesBudget);

// Independent route for the product harmonics: the double composition sum
// with the two-block exponent selector.
HarmonicsF product_harmonics_delta(int m, std::complex<double> z, int nu,
                                   std::int64_t budget = kDefaultSeriesBudget);
HarmonicsQ product_harmonics_delta_exact(int m, std::int64_t z, int nu,
                                         std::int64_t budget = kDefaultSeriesBudget);

// binom((m+1)|z| + nu - 1, nu): bound on |lambda^{z,nu}| and on sum |mu|.
double coefficient_bound(int m, double abs_z, int nu);
// binom((m+1)|z| + nu + 2, nu): the product-coefficient analogue.
double product_coefficient_bound(int m, double abs_z, int nu);

}  // namespace symmom

#endif  // SYMMOM_HARMONICS_HPP
