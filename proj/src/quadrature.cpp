#include "symmom/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "symmom/errors.hpp"

namespace symmom {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 2) throw domain_error("gauss_legendre: need at least 2 nodes");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n, symmetric roots; standard Chebyshev initial guess.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    double mid = 0.5 * (a + b), len = 0.5 * (b - a);
    rule.nodes[i] = mid - len * x;
    rule.nodes[n - 1 - i] = mid + len * x;
    rule.weights[i] = w * len;
    rule.weights[n - 1 - i] = w * len;
  }
  return rule;
}

const QuadratureRule& haar_rule(int nodes) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(nodes);
  if (it == cache.end()) {
    QuadratureRule rule = gauss_legendre(nodes, 0.0, M_PI);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double s = std::sin(rule.nodes[i]);
      rule.weights[i] *= (2.0 / M_PI) * s * s;
    }
    it = cache.emplace(nodes, std::move(rule)).first;
  }
  return it->second;
}

std::complex<double> haar_integrate(const std::function<std::complex<double>(double)>& f, int nodes) {
  const QuadratureRule& rule = haar_rule(nodes);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

}  // namespace symmom
