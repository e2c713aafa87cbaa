#pragma once

// Rising factorials and truncated classical hypergeometric series
// rFs[a; b | z]_m, summed exactly over Q and then read p-adically.

#include <cstdint>
#include <vector>

#include "padichyp/padic.hpp"
#include "padichyp/rational.hpp"

namespace padichyp {

/// (a)_0 = 1, (a)_n = a (a+1) ... (a+n-1).
Rational rising_factorial(const Rational& a, unsigned n);

struct HypParams {
  std::vector<Rational> top;
  std::vector<Rational> bottom;
  Rational z = 1;
  unsigned m = 0;

  // Rejects bottom parameters that are zero or negative integers.
  void validate() const;
};

// Convenience: tops over bottoms (1, ..., 1) at z = 1 truncated at m.
HypParams unit_bottom_params(std::vector<Rational> top, unsigned m);

/// sum_{k=0}^{m} prod (a_i)_k / prod (b_j)_k z^k / k!, exactly, built with the
/// term ratio t_k = t_{k-1} prod(a_i+k-1) z / (k prod(b_j+k-1)).
Rational truncated_hyp_exact(const HypParams& params);

/// The exact sum reduced mod p^N. Requires p-integral parameters and m <= p-1;
/// throws std::domain_error if the sum is not p-integral.
PadicValue truncated_hyp(const HypParams& params, std::uint32_t p, int precision);

}  // namespace padichyp
