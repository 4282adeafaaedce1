#ifndef SYMMOM_QUADRATURE_HPP
#define SYMMOM_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace symmom {

struct QuadratureRule {
  std::vector<double> nodes;    // on [a, b]
  std::vector<double> weights;  // matching weights
};

// Gauss-Legendre rule with n nodes on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

// Weyl/Haar integration on SU(2): (2/pi) * int_0^pi f(theta) sin^2(theta) dtheta,
// approximated by Gauss-Legendre with `nodes` points.  f is sampled at class
// angles theta.
std::complex<double> haar_integrate(const std::function<std::complex<double>(double)>& f, int nodes);

// Cached rule on [0, pi] with the sin^2 Haar factor folded into the weights
// (the 2/pi normalisation included).  Reused by the Euler-product modules.
const QuadratureRule& haar_rule(int nodes);

}  // namespace symmom

#endif  // SYMMOM_QUADRATURE_HPP
