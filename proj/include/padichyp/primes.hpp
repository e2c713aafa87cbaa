#pragma once

#include <cstdint>
#include <vector>

namespace padichyp {

// Upper bound on primes accepted by the library unless a caller passes its own.
inline constexpr std::uint32_t kDefaultPrimeBound = 500;

bool is_prime(std::uint64_t n);

// Primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

// Throws std::invalid_argument unless p is an odd prime not above bound.
void require_odd_prime(std::uint64_t p, std::uint32_t bound = kDefaultPrimeBound);

// Smallest generator of (Z/pZ)^*.
std::uint32_t primitive_root(std::uint32_t p);

}  // namespace padichyp
