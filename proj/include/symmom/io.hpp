#ifndef SYMMOM_IO_HPP
#define SYMMOM_IO_HPP

#include <complex>
#include <string>

#include "symmom/ensemble.hpp"
#include "symmom/harmonics.hpp"
#include "symmom/policy.hpp"

namespace symmom {

// Shortest round-trip decimal rendering, '.' separator, no locale surprises.
std::string format_double(double v);

// Parse "a+bi" / "a-bi" / "a" / "bi" with decimal parts.
std::complex<double> parse_complex(const std::string& text);

// HarmonicExpansion as {"m'": [re, im]} with numerically ordered keys.
std::string harmonics_to_json(const HarmonicsF& h);
std::string harmonics_to_csv(const HarmonicsF& h);

// columns: N,m,z_re,z_im,kind,value_re,value_im,tail_bound,P,nodes
std::string moment_to_csv(std::int64_t N, int m, std::complex<double> z, const std::string& kind,
                          const MomentConstant& mc);
std::string moment_to_json(std::int64_t N, int m, std::complex<double> z, const std::string& kind,
                           const MomentConstant& mc);

// columns: level,forms,sum_weights,mean_central,m,z_re,z_im,empirical,predicted,tail,residual
std::string report_to_csv(const EnsembleReport& rep, const std::string& kind);
std::string report_to_json(const EnsembleReport& rep);

}  // namespace symmom

#endif  // SYMMOM_IO_HPP
