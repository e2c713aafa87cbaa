#include "padichyp/primes.hpp"

#include <stdexcept>
#include <string>

#include "padichyp/modular.hpp"

namespace padichyp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = lo; n <= hi && n >= lo; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

void require_odd_prime(std::uint64_t p, std::uint32_t bound) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  if (p > bound) {
    throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the configured bound " + std::to_string(bound));
  }
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace padichyp
