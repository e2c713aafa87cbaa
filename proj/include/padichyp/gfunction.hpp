#pragma once

// The p-adic function {n+1}G(m_1/d_1, ..., m_{n+1}/d_{n+1})_p and the
// s(p) gamma products that appear beside it in the mod p^3 congruences.

#include <cstdint>
#include <vector>

#include "padichyp/gamma.hpp"
#include "padichyp/padic.hpp"
#include "padichyp/rational.hpp"

namespace padichyp {

/// Arguments of one G evaluation: n+1 >= 2 rationals strictly inside (0, 1)
/// with denominators prime to p. Order does not matter.
struct GArguments {
  std::uint32_t prime = 3;
  std::vector<Rational> args;
  int precision = 1;

  // Throws std::invalid_argument when an invariant fails.
  void validate() const;
};

/// -1/(p-1) sum_{j=0}^{p-2} ((-1)^j Gamma_p(j/(p-1)))^{n+1}
///   prod_i Gamma_p(<a_i - j/(p-1)>) / Gamma_p(a_i) (-p)^{-floor(a_i - j/(p-1))}
/// mod p^precision. Every Gamma_p value comes from one sweep.
PadicValue g_function(const GArguments& g, u64 sweep_bound = kDefaultSweepBound);

// Appends the sweep keys g needs, so several evaluations can share one table.
void g_function_queries(const GArguments& g, std::vector<u64>& out);

// Same value read from a prebuilt table of matching prime and precision.
PadicValue g_function(const GArguments& g, const GammaSweepTable& table);

/// p ≡ ±1 (mod d).
bool plus_minus_one_mod(std::uint32_t p, std::uint32_t d);

/// p ≡ ±1 (mod d), or p ≡ ±r (mod d) with r^2 ≡ ±1 (mod d).
bool quad_admissible(std::uint32_t p, std::uint32_t d, std::uint32_t r);

/// Gamma_p(1/d1) Gamma_p((d1-1)/d1) Gamma_p(1/d2) Gamma_p((d2-1)/d2), for p
/// ≡ ±1 modulo both d1 and d2.
PadicValue s_factor_pair(std::uint32_t d1, std::uint32_t d2, std::uint32_t p, int precision);

/// The closed form (-1)^(floor((p-1)/d1) + floor((p-1)/d2)) of s_factor_pair.
int s_factor_pair_sign(std::uint32_t d1, std::uint32_t d2, std::uint32_t p);

/// Gamma_p(1/d) Gamma_p(r/d) Gamma_p((d-r)/d) Gamma_p((d-1)/d), for
/// 2 <= r <= d-2, gcd(r, d) = 1 and p admissible in the quad_admissible sense.
PadicValue s_factor_quad(std::uint32_t d, std::uint32_t r, std::uint32_t p, int precision);

}  // namespace padichyp
