#include "symmom/factorization.hpp"

#include <string>

#include "symmom/errors.hpp"
#include "symmom/primes.hpp"

namespace symmom {

int Factorization::v_p(std::int64_t p) const {
  for (const auto& [q, e] : factors) {
    if (q == p) return e;
  }
  return 0;
}

bool Factorization::is_square() const {
  for (const auto& [q, e] : factors) {
    (void)q;
    if (e % 2 != 0) return false;
  }
  return true;
}

bool Factorization::is_squarefree() const {
  for (const auto& [q, e] : factors) {
    (void)q;
    if (e > 1) return false;
  }
  return true;
}

int Factorization::moebius() const {
  if (!is_squarefree()) return 0;
  return factors.size() % 2 == 0 ? 1 : -1;
}

Factorization Factorization::part_dividing(std::int64_t N) const {
  Factorization out;
  for (const auto& [p, e] : factors) {
    if (N % p == 0) {
      out.factors.emplace_back(p, e);
      for (int i = 0; i < e; ++i) out.n *= p;
    }
  }
  return out;
}

Factorization Factorization::part_coprime(std::int64_t N) const {
  Factorization out;
  for (const auto& [p, e] : factors) {
    if (N % p != 0) {
      out.factors.emplace_back(p, e);
      for (int i = 0; i < e; ++i) out.n *= p;
    }
  }
  return out;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw domain_error("factorize: argument must be >= 1, got " + std::to_string(n));
  Factorization out;
  out.n = n;
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (is_prime(static_cast<std::uint64_t>(n))) break;
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

int moebius(std::int64_t n) { return factorize(n).moebius(); }

bool is_squarefree(std::int64_t n) { return factorize(n).is_squarefree(); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t out = n;
  for (const auto& [p, e] : factorize(n).factors) {
    (void)e;
    out -= out / p;
  }
  return out;
}

std::int64_t smallest_prime_divisor(std::int64_t n) {
  if (n <= 1) return 0;
  auto f = factorize(n);
  return f.factors.front().first;
}

std::pair<bool, bool> square_indicators(std::int64_t N, const Factorization& n) {
  if (!is_squarefree(N)) throw domain_error("square_indicators: level must be squarefree");
  bool sq = n.is_square();
  bool sqN = sq;
  if (sq) {
    for (const auto& [p, e] : n.factors) {
      (void)e;
      if (N % p != 0) {
        sqN = false;
        break;
      }
    }
  }
  return {sq, sqN};
}

}  // namespace symmom
