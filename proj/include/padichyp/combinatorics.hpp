#pragma once

// Harmonic sums, Apery numbers, power sums mod p, the rising-factorial
// derivative sums over j mod p, and two binomial / harmonic identities.

#include <cstdint>
#include <span>
#include <vector>

#include "padichyp/padic.hpp"
#include "padichyp/rational.hpp"

namespace padichyp {

/// H^(i)_n = sum_{j=1}^{n} 1/j^i, with H^(i)_0 = 0.
Rational harmonic(unsigned n, unsigned order);

/// Prefix table H^(i)_0 .. H^(i)_M for one order i.
class HarmonicCache {
 public:
  HarmonicCache(unsigned order, unsigned max_index);

  unsigned order() const { return order_; }
  unsigned max_index() const { return static_cast<unsigned>(prefix_.size()) - 1; }

  // Throws std::out_of_range beyond max_index().
  const Rational& operator()(unsigned n) const;

 private:
  unsigned order_;
  std::vector<Rational> prefix_;
};

/// A(n) = sum_{j=0}^{n} C(n+j, j)^2 C(n, j)^2.
Integer apery(unsigned n);

/// sum_{j=1}^{p-1} j^k mod p, as a value in [0, p).
std::uint32_t power_sum_mod(std::uint32_t p, unsigned k);

/// True iff the power sum is -1 mod p when (p-1) | k and 0 otherwise.
bool power_sum_check(std::uint32_t p, unsigned k);

/// sum_{j=0}^{p-1} [prod_i (j+1)_{a_i}] [1 + j sum_i (H_{a_i+j} - H_j)], mod p.
/// Expected 0 when T = sum a_i < 2(p-1) and 1 when T = 2(p-1).
PadicValue rising_sum_first(std::span<const unsigned> a, std::uint32_t p);

/// The second-derivative analogue; expected 0 below the boundary, -1 at it.
PadicValue rising_sum_second(std::span<const unsigned> a, std::uint32_t p);

/// LHS - RHS of the first binomial-harmonic identity (RHS = (-1)^(m+n)).
/// Requires m >= n >= 1; the result is exactly zero.
Rational bin_harmonic_id1(unsigned m, unsigned n);

/// LHS of the second identity for l > m >= n >= l/2 and constants c1, c2.
/// The identity states this is exactly zero.
Rational bin_harmonic_id2(unsigned l, unsigned m, unsigned n, const Rational& c1, const Rational& c2);

}  // namespace padichyp
