#ifndef SYMMOM_EULER_PRODUCTS_HPP
#define SYMMOM_EULER_PRODUCTS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "symmom/harmonics.hpp"
#include "symmom/policy.hpp"

namespace symmom {

// Which moment family: (s, rho) = (1, 1/2) with the standard-representation
// twist, or (1, 1) with the symmetric-square twist.
enum class MomentKind { half, one };

enum class TwistKind { standard, sym_square };

// Cache of harmonic tables mu^{z,nu}_{Sym^m, .} shared across primes.
class HarmonicTableCache {
 public:
  const HarmonicsF& get(int m, std::complex<double> z, int nu, std::int64_t budget);

 private:
  std::map<std::tuple<int, double, double, int>, HarmonicsF> table_;
};

// int_SU2 D(p^-s, Sym^m, g)^z D(p^-rho, twist, g) dg, computed BOTH by Weyl
// quadrature and by the harmonic Dirichlet series; the two routes must agree
// within policy.route_tolerance (plus the series truncation allowance) or a
// route_disagreement_error is thrown.  For real |z| > 30 the factor is
// evaluated in the log domain and the series check is skipped.
std::complex<double> local_moment_factor(std::int64_t p, int m, std::complex<double> z, double s, double rho,
                                         const TruncationPolicy& policy, TwistKind twist = TwistKind::standard,
                                         HarmonicTableCache* cache = nullptr);

// | int D(1/p)^z D(p^-1/2, St) - (1 - p^-2) int D(1/p)^z D(1/p, Sym^2) |.
// Vanishes (numerically) for even m; the odd-power failure is genuine.
double even_power_identity_gap(std::int64_t p, int m, std::complex<double> z, const TruncationPolicy& policy);

// Finite (ramified) part of the moment constants: X^z_m(N) for kind = half,
// X^{1,z}_{2,m}(N) for kind = one.  N must be squarefree.
std::complex<double> finite_part(std::int64_t N, int m, std::complex<double> z, MomentKind kind);

// zeta_N(2) = prod_{p | N} (1 - p^-2)^{-1}.
double zeta_N_2(std::int64_t N);

// The full moment constant: finite part times the Euler product over
// p <= policy.prime_cutoff, p coprime to N, with an explicit tail bound.
MomentConstant moment_constant(std::int64_t N, int m, std::complex<double> z, MomentKind kind,
                               const TruncationPolicy& policy);

// Points (r, log L^{1, sign*r}(1/2, 1; St, Sym^m)) with all local factors in
// the log domain.
std::vector<std::pair<double, double>> growth_curve(int m, int sign, const std::vector<double>& r_grid,
                                                    const TruncationPolicy& policy);

struct GrowthFit {
  double a = 0.0;  // coefficient of r log log r
  double b = 0.0;  // coefficient of r
};

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points);

}  // namespace symmom

#endif  // SYMMOM_EULER_PRODUCTS_HPP
