#ifndef SYMMOM_ARITH_HPP
#define SYMMOM_ARITH_HPP

#include <complex>
#include <utility>

#include "symmom/conjugacy.hpp"
#include "symmom/factorization.hpp"
#include "symmom/harmonics.hpp"

namespace symmom {

// tau_z(n): the multiplicative function with Dirichlet series zeta(s)^z,
// tau_z(p^e) = binom(z + e - 1, e).
std::complex<double> tau_z(std::complex<double> z, const Factorization& n);
Rational tau_z_exact(std::int64_t z, const Factorization& n);

// Local Hecke data at a prime: lambda_p = lambda_f(p) and, when p is
// unramified (p coprime to the level), the Satake angle with
// lambda_p = 2 cos(theta).
struct LocalEigenData {
  std::int64_t p = 2;
  bool ramified = false;
  double lambda_p = 0.0;
  ConjugacyClass theta;

  static LocalEigenData unramified(std::int64_t p, double lambda);
  static LocalEigenData ramified_at(std::int64_t p, double lambda);

  // lambda_f(p^k): Chebyshev in the unramified case, lambda^k in the
  // ramified (strongly multiplicative) case.
  double eigen_power(int k) const;
};

// lambda^z_{Sym^m f}(p^nu): the nu-th Dirichlet coefficient of the local
// factor of L(s, Sym^m f)^z.
std::complex<double> sym_power_coeff(const LocalEigenData& local, int m, std::complex<double> z, int nu,
                                     std::int64_t budget = kDefaultSeriesBudget);

// lambda^{1,z}_{Sym^2 f, Sym^m f}(p^nu) for L(s,Sym^2 f) L(s,Sym^m f)^z.
std::complex<double> product_coeff(const LocalEigenData& local, int m, std::complex<double> z, int nu,
                                   std::int64_t budget = kDefaultSeriesBudget);

// Main-term weight w^z_m(n, q) of the twisted trace formula.  Requires N
// squarefree and (q, N^2) | N; returns 0 whenever the square indicator kills
// the term.
std::complex<double> trace_main_term(int m, std::complex<double> z, const Factorization& n,
                                     const Factorization& q, std::int64_t N,
                                     std::int64_t budget = kDefaultSeriesBudget);

// (w^{1,z}_{2,m}(p^nu), r^{1,z}_{2,m}(p^nu)) from the Sym^2-twist trace formula.
std::pair<std::complex<double>, double> siegfried_weights(int m, std::complex<double> z, std::int64_t N,
                                                          std::int64_t p, int nu,
                                                          std::int64_t budget = kDefaultSeriesBudget);

}  // namespace symmom

#endif  // SYMMOM_ARITH_HPP
