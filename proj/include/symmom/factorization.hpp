#ifndef SYMMOM_FACTORIZATION_HPP
#define SYMMOM_FACTORIZATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace symmom {

// Prime factorisation of a positive integer, primes strictly increasing.
struct Factorization {
  std::int64_t n = 1;
  std::vector<std::pair<std::int64_t, int>> factors;  // (prime, exponent >= 1)

  int v_p(std::int64_t p) const;
  bool is_square() const;      // the square indicator
  bool is_squarefree() const;
  int moebius() const;         // 0 unless squarefree
  int omega() const { return static_cast<int>(factors.size()); }

  // n = n_N * n^(N): the part supported on primes dividing N, and the part
  // coprime to N.
  Factorization part_dividing(std::int64_t N) const;
  Factorization part_coprime(std::int64_t N) const;
};

// Trial division with a deterministic Miller-Rabin backstop; desk-scale inputs.
Factorization factorize(std::int64_t n);

int moebius(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t smallest_prime_divisor(std::int64_t n);  // P^-(n); n = 1 -> 0 (by convention +infinity)

// (square(n), square_N(n)): n a perfect square / a perfect square whose prime
// factors all divide N.  N must be squarefree.
std::pair<bool, bool> square_indicators(std::int64_t N, const Factorization& n);

}  // namespace symmom

#endif  // SYMMOM_FACTORIZATION_HPP
