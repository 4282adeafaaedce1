#ifndef SYMMOM_EXTREMAL_HPP
#define SYMMOM_EXTREMAL_HPP

#include "symmom/policy.hpp"

namespace symmom {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Extremal growth constants of the symmetric-power moments.
struct ExtremalConstants {
  double sym_plus = 0.0;    // max of chi_{Sym^m}
  double sym_minus = 0.0;   // max of -chi_{Sym^m}
  double sym1_plus = 0.0;   // linear coefficient, + direction
  double sym1_minus = 0.0;  // linear coefficient, - direction
  double gamma_star = 0.0;  // Mertens constant of sum 1/p
};

// gamma + sum_p [log(1 - 1/p) + 1/p] over p <= prime_cutoff, plus an
// integral-estimate tail correction.
double gamma_star(std::int64_t prime_cutoff);

// All constants for a given m, primes truncated by policy.prime_cutoff.
ExtremalConstants extremal_constants(int m, const TruncationPolicy& policy);

}  // namespace symmom

#endif  // SYMMOM_EXTREMAL_HPP
