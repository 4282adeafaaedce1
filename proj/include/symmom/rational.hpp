#ifndef SYMMOM_RATIONAL_HPP
#define SYMMOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace symmom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// binom(n, k) for integer n (possibly negative), k >= 0, via the falling
// factorial n(n-1)...(n-k+1)/k!.
inline Rational binomial_exact(const Rational& n, std::int64_t k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    acc *= (n - j);
    acc /= (j + 1);
  }
  return acc;
}

inline BigInt binomial_int(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    acc *= (n - j);
    acc /= (j + 1);
  }
  return acc;
}

inline Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e >= 0) {
    Rational acc = 1;
    for (std::int64_t j = 0; j < e; ++j) acc *= base;
    return acc;
  }
  Rational inv = 1 / base;
  Rational acc = 1;
  for (std::int64_t j = 0; j < -e; ++j) acc *= inv;
  return acc;
}

}  // namespace symmom

#endif  // SYMMOM_RATIONAL_HPP
