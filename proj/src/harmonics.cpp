#include "symmom/harmonics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "symmom/errors.hpp"

namespace symmom {

namespace {

// Compositions of nu into `parts` non-negative slots, lexicographic in
// (slot_0, slot_1, ...).  The visitor receives the running product of
// per-slot binomials and ell = sum_j weight_j * slot_j.
template <class Scalar, class Visit>
void walk(int slot, int parts, int remaining, const std::vector<Scalar>& binom_tab,
          const std::vector<int>& weights, Scalar prod, std::int64_t ell, Visit&& visit) {
  if (slot == parts - 1) {
    visit(Scalar(prod * binom_tab[static_cast<std::size_t>(remaining)]),
          ell + static_cast<std::int64_t>(weights[static_cast<std::size_t>(slot)]) * remaining);
    return;
  }
  for (int take = 0; take <= remaining; ++take) {
    walk(slot + 1, parts, remaining - take, binom_tab, weights,
         Scalar(prod * binom_tab[static_cast<std::size_t>(take)]),
         ell + static_cast<std::int64_t>(weights[static_cast<std::size_t>(slot)]) * take, visit);
  }
}

template <class Scalar, class Visit>
void for_each_composition(int parts, int nu, const std::vector<Scalar>& binom_tab,
                          const std::vector<int>& weights, Visit&& visit) {
  walk<Scalar>(0, parts, nu, binom_tab, weights, Scalar(1), 0, visit);
}

std::int64_t composition_count(int nu, int parts) {
  // binom(nu + parts - 1, parts - 1), saturating
  long double acc = 1.0L;
  for (int j = 1; j <= parts - 1; ++j) acc = acc * (nu + j) / j;
  return acc > 4e18L ? INT64_MAX : static_cast<std::int64_t>(acc);
}

void check_budget(std::int64_t count, std::int64_t budget, const char* where) {
  if (count > budget) {
    throw resource_error(std::string(where) + ": composition count " + std::to_string(count) +
                         " exceeds series budget " + std::to_string(budget));
  }
}

std::vector<int> sym_weights(int m) {
  // slot j carries exponent weight m - 2j, so ell(m, nu_vec) accumulates
  // m*nu - 2*sum(j*nu_j)
  std::vector<int> w(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) w[static_cast<std::size_t>(j)] = m - 2 * j;
  return w;
}

std::vector<std::complex<double>> binom_table_f(std::complex<double> z, int nu) {
  std::vector<std::complex<double>> tab(static_cast<std::size_t>(nu) + 1);
  tab[0] = 1.0;
  for (int c = 1; c <= nu; ++c) tab[static_cast<std::size_t>(c)] = tab[static_cast<std::size_t>(c - 1)] * (z + double(c - 1)) / double(c);
  return tab;
}

std::vector<Rational> binom_table_q(std::int64_t z, int nu) {
  std::vector<Rational> tab(static_cast<std::size_t>(nu) + 1);
  tab[0] = 1;
  for (int c = 1; c <= nu; ++c) tab[static_cast<std::size_t>(c)] = tab[static_cast<std::size_t>(c - 1)] * Rational(z + c - 1) / c;
  return tab;
}

struct KahanComplex {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> carry{0.0, 0.0};
  void add(std::complex<double> v) {
    std::complex<double> y = v - carry;
    std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Accumulate one composition's contribution into the expansion through the
// selector.  Only m' = |ell| and m' = |ell| - 2 can receive anything.
template <class Expansion, class Scalar>
void scatter(Expansion& out, const Scalar& prod, std::int64_t ell) {
  const std::int64_t a = ell >= 0 ? ell : -ell;
  {
    int d = delta_selector(ell, static_cast<int>(a));
    if (d != 0) out.add(static_cast<int>(a), Scalar(prod * Scalar(d) / Scalar(2)));
  }
  if (a >= 2) {
    int d = delta_selector(ell, static_cast<int>(a - 2));
    if (d != 0) out.add(static_cast<int>(a - 2), Scalar(prod * Scalar(d) / Scalar(2)));
  }
}

}  // namespace

int delta_selector(std::int64_t ell, int mp) {
  int fired = 0;
  int value = 0;
  if (ell == 0 && mp == 0) {
    ++fired;
    value += 2;
  }
  if (mp != 0 && (ell + mp == 0 || ell - mp == 0)) {
    ++fired;
    value += 1;
  }
  if (ell + mp == -2 || ell - mp == 2) {
    ++fired;
    value += -1;
  }
  if (fired > 1) {
    throw route_disagreement_error("delta_selector: incompatible clauses fired together at ell=" +
                                   std::to_string(ell) + " m'=" + std::to_string(mp));
  }
  return value;
}

std::complex<double> eval_expansion(const HarmonicsF& h, const ConjugacyClass& c) {
  KahanComplex acc;
  for (const auto& [mp, coef] : h.coeffs) acc.add(coef * character(mp, c));
  return acc.sum;
}

std::complex<double> series_coefficient(int m, std::complex<double> z, int nu, const ConjugacyClass& c,
                                        std::int64_t budget) {
  if (m < 0 || nu < 0) throw domain_error("series_coefficient: need m >= 0, nu >= 0");
  check_budget(composition_count(nu, m + 1), budget, "series_coefficient");
  const auto tab = binom_table_f(z, nu);
  const auto weights = sym_weights(m);
  KahanComplex acc;
  const double theta = c.theta;
  for_each_composition<std::complex<double>>(m + 1, nu, tab, weights,
                                             [&](std::complex<double> prod, std::int64_t ell) {
                                               acc.add(prod * std::cos(double(ell) * theta));
                                             });
  return acc.sum;
}

namespace {

template <class Scalar>
HarmonicExpansion<Scalar> harmonics_impl(int m, const std::vector<Scalar>& tab, int nu, std::int64_t budget) {
  if (m < 0 || nu < 0) throw domain_error("harmonics: need m >= 0, nu >= 0");
  check_budget(composition_count(nu, m + 1), budget, "harmonics");
  const auto weights = sym_weights(m);
  HarmonicExpansion<Scalar> out;
  for_each_composition<Scalar>(m + 1, nu, tab, weights,
                               [&](const Scalar& prod, std::int64_t ell) { scatter(out, prod, ell); });
  return out;
}

// Clebsch-Gordan assembly of chi_a * chi_b into the target expansion.
template <class Scalar>
void cg_accumulate(HarmonicExpansion<Scalar>& out, int a, int b, const Scalar& coef) {
  for (int mp = std::abs(a - b); mp <= a + b; mp += 2) out.add(mp, coef);
}

template <class Scalar>
HarmonicExpansion<Scalar> product_harmonics_cg(const std::vector<HarmonicExpansion<Scalar>>& sym2,
                                               const std::vector<HarmonicExpansion<Scalar>>& symm, int nu) {
  HarmonicExpansion<Scalar> out;
  for (int nu1 = 0; nu1 <= nu; ++nu1) {
    const auto& h1 = sym2[static_cast<std::size_t>(nu1)];
    const auto& h2 = symm[static_cast<std::size_t>(nu - nu1)];
    for (const auto& [m1, c1] : h1.coeffs) {
      for (const auto& [m2, c2] : h2.coeffs) {
        cg_accumulate(out, m1, m2, Scalar(c1 * c2));
      }
    }
  }
  return out;
}

template <class Scalar>
HarmonicExpansion<Scalar> product_delta_impl(int m, const std::vector<Scalar>& tab, int nu, std::int64_t budget) {
  if (m < 0 || nu < 0) throw domain_error("product_harmonics: need m >= 0, nu >= 0");
  check_budget(composition_count(nu, m + 4), budget, "product_harmonics");
  const auto w2 = sym_weights(2);
  const auto wm = sym_weights(m);
  const std::vector<Scalar> ones(static_cast<std::size_t>(nu) + 1, Scalar(1));
  HarmonicExpansion<Scalar> out;
  for (int nu1 = 0; nu1 <= nu; ++nu1) {
    const int nu2 = nu - nu1;
    for_each_composition<Scalar>(3, nu1, ones, w2, [&](const Scalar& p1, std::int64_t ell1) {
      for_each_composition<Scalar>(m + 1, nu2, tab, wm, [&](const Scalar& p2, std::int64_t ell2) {
        scatter(out, Scalar(p1 * p2), ell1 + ell2);
      });
    });
  }
  return out;
}

}  // namespace

HarmonicsF harmonics(int m, std::complex<double> z, int nu, std::int64_t budget) {
  return harmonics_impl<std::complex<double>>(m, binom_table_f(z, nu), nu, budget);
}

HarmonicsQ harmonics_exact(int m, std::int64_t z, int nu, std::int64_t budget) {
  return harmonics_impl<Rational>(m, binom_table_q(z, nu), nu, budget);
}

HarmonicsF product_harmonics(int m, std::complex<double> z, int nu, std::int64_t budget) {
  std::vector<HarmonicsF> sym2, symm;
  for (int k = 0; k <= nu; ++k) {
    sym2.push_back(harmonics(2, 1.0, k, budget));
    symm.push_back(harmonics(m, z, k, budget));
  }
  return product_harmonics_cg<std::complex<double>>(sym2, symm, nu);
}

HarmonicsQ product_harmonics_exact(int m, std::int64_t z, int nu, std::int64_t budget) {
  std::vector<HarmonicsQ> sym2, symm;
  for (int k = 0; k <= nu; ++k) {
    sym2.push_back(harmonics_exact(2, 1, k, budget));
    symm.push_back(harmonics_exact(m, z, k, budget));
  }
  return product_harmonics_cg<Rational>(sym2, symm, nu);
}

HarmonicsF product_harmonics_delta(int m, std::complex<double> z, int nu, std::int64_t budget) {
  return product_delta_impl<std::complex<double>>(m, binom_table_f(z, nu), nu, budget);
}

HarmonicsQ product_harmonics_delta_exact(int m, std::int64_t z, int nu, std::int64_t budget) {
  return product_delta_impl<Rational>(m, binom_table_q(z, nu), nu, budget);
}

double coefficient_bound(int m, double abs_z, int nu) {
  double acc = 1.0;
  const double a = (m + 1) * abs_z;
  for (int c = 1; c <= nu; ++c) acc *= (a + c - 1) / c;
  return acc;
}

double product_coefficient_bound(int m, double abs_z, int nu) {
  double acc = 1.0;
  const double a = (m + 1) * abs_z + 3.0;
  for (int c = 1; c <= nu; ++c) acc *= (a + c - 1) / c;
  return acc;
}

}  // namespace symmom
