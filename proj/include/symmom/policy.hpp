#ifndef SYMMOM_POLICY_HPP
#define SYMMOM_POLICY_HPP

#include <complex>
#include <cstdint>

#include "symmom/errors.hpp"

namespace symmom {

enum class TailMode { bounded, ignored };

// Knobs governing every truncated infinite product/sum in the toolkit.
struct TruncationPolicy {
  std::int64_t prime_cutoff = 10000;   // Euler products run over p <= prime_cutoff
  int series_depth = 96;               // nu_max for local power series
  int quadrature_nodes = 256;          // Gauss-Legendre node count
  TailMode tail_mode = TailMode::bounded;
  std::int64_t series_budget = 50'000'000;  // max compositions per coefficient
  double route_tolerance = 1e-10;           // quadrature-vs-series agreement

  void validate() const {
    if (prime_cutoff < 2) throw domain_error("TruncationPolicy: prime_cutoff must be >= 2");
    if (series_depth < 1) throw domain_error("TruncationPolicy: series_depth must be >= 1");
    if (quadrature_nodes < 2) throw domain_error("TruncationPolicy: quadrature_nodes must be >= 2");
  }
};

// A truncated product/sum value together with an explicit bound on the
// discarded tail (tail_bound = 0 under TailMode::ignored).
struct MomentConstant {
  std::complex<double> value{0.0, 0.0};
  double tail_bound = 0.0;
  TruncationPolicy policy;
};

}  // namespace symmom

#endif  // SYMMOM_POLICY_HPP
