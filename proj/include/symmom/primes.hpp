#ifndef SYMMOM_PRIMES_HPP
#define SYMMOM_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace symmom {

// Primes up to and including `limit`, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

// Deterministic Miller-Rabin, valid for all n < 2^63.
bool is_prime(std::uint64_t n);

// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<std::int32_t> spf_table(std::int32_t limit);

}  // namespace symmom

#endif  // SYMMOM_PRIMES_HPP
