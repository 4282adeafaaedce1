#ifndef SYMMOM_NEWFORM_HPP
#define SYMMOM_NEWFORM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "symmom/arith.hpp"

namespace symmom {

// One embedded weight-2 newform of squarefree level: the real eigenvalue
// system lambda_f(p) = a_p / sqrt(p) for primes p <= p_max.
struct Newform {
  std::int64_t level = 1;
  std::string label;
  std::map<std::int64_t, double> lambda;  // p -> lambda_f(p)
  std::int64_t p_max = 0;
  std::optional<double> lpoint_half;  // independently sourced L(1/2, f), when recorded

  double lambda_at_prime(std::int64_t p) const;
  LocalEigenData local(std::int64_t p) const;
};

// lambda_f(n) by multiplicativity: Chebyshev at unramified prime powers,
// strong multiplicativity at ramified ones.
double eigenvalue_at(const Newform& f, std::int64_t n);

// Sign of the functional equation, -mu(N) sqrt(N) lambda_f(N), asserted to be
// +-1 within 1e-9 and rounded.
int sign(const Newform& f);

// L(1/2, f) = [1 + eps_f] sum_q lambda_f(q) q^{-1/2} exp(-2 pi q / sqrt(N)),
// truncated at Q (default 5 sqrt(N) log(10 N), making the tail < 1e-9).
double central_value(const Newform& f, std::int64_t Q = 0);

// omega^z_{Sym^m f}(x) = sum_n lambda^z_{Sym^m f}(n) n^{-1} e^{-n/x},
// truncated at n <= x log^2 x.
std::complex<double> smoothed_sym_L(const Newform& f, int m, std::complex<double> z, double x);

// The Sym^2-product variant omega^{1,z}_{Sym^2 f, Sym^m f}(x).
std::complex<double> smoothed_product_L(const Newform& f, int m, std::complex<double> z, double x);

// Harmonic weight omega^*(f) expressed through L(1, Sym^2 f), approximated by
// the smoothed sum at scale x.  The Rankin-Selberg normalisation for weight 2
// and squarefree level is (f,f) = N L(1,Sym^2 f) / (8 pi^3), giving
// omega^* = 2 pi^2 / (phi(N) L(1, Sym^2 f)).
double harmonic_weight(const Newform& f, double x);

// Prime-sum diagnostics behind the eigenvalue-concentration statements.
struct PrimeSumDiagnostics {
  double prime_cutoff = 0.0;   // log(2N)
  double sum_sym = 0.0;        // sum lambda_f(p^m)/p over p <= log(2N)
  double sum_cafe = 0.0;       // sum lambda_f(p)^2/p
  double mass_total = 0.0;     // sum 1/p over the range
  double mass_near_max = 0.0;  // restricted to lambda_f(p^m) >= sym^m_+ - xi/log_3(20N)
  double mass_small = 0.0;     // restricted to |lambda_f(p)| <= sqrt(xi/log_3(20N))
  double log_smoothed = 0.0;   // log of the smoothed L(1, Sym^m f) estimate
  bool in_high_class = false;  // L >= C [log_2(3N)]^{sym+}
  bool in_low_class = false;   // L <= C [log_2(3N)]^{-sym-}
};

PrimeSumDiagnostics prime_sum_diagnostics(const Newform& f, int m, double C = 1.0, double xi = 0.0,
                                          double x = 1000.0);

}  // namespace symmom

#endif  // SYMMOM_NEWFORM_HPP
