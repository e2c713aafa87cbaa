#pragma once

// Morita's p-adic gamma function on Z_p, its logarithmic derivatives, and the
// representative map rep_p.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "padichyp/padic.hpp"
#include "padichyp/rational.hpp"
#include "padichyp/report.hpp"

namespace padichyp {

// Default cap on p^N for a single gamma sweep.
inline constexpr u64 kDefaultSweepBound = u64{1} << 34;

/// rep_p(x): the representative of x mod p in {1, ..., p}. x must lie in Z_p.
int rep(const Rational& x, std::uint32_t p);
int rep(const PadicValue& x);

// Integer in [0, p^N) that a sweep table is keyed by for argument x.
u64 gamma_query(const PadicValue& x, int precision);
u64 gamma_query(const Rational& x, std::uint32_t p, int precision);

/// Gamma_p values mod p^N at a fixed set of integer arguments in [0, p^N).
/// Built by gamma_batch; immutable afterwards.
class GammaSweepTable {
 public:
  std::uint32_t prime() const { return prime_; }
  int precision() const { return precision_; }
  u64 modulus() const { return modulus_; }
  std::size_t size() const { return keys_.size(); }

  bool contains(u64 residue) const;

  // Unit residue of Gamma_p(residue) mod p^N; throws std::out_of_range if the
  // residue was not part of the batch.
  u64 raw(u64 residue) const;

  PadicValue at(u64 residue) const;
  PadicValue operator()(const PadicValue& x) const { return at(gamma_query(x, precision_)); }
  PadicValue operator()(const Rational& x) const { return at(gamma_query(x, prime_, precision_)); }

  std::span<const u64> keys() const { return keys_; }

 private:
  friend GammaSweepTable gamma_batch(std::vector<u64> queries, std::uint32_t p, int precision, u64 sweep_bound);

  std::uint32_t prime_ = 0;
  int precision_ = 0;
  u64 modulus_ = 0;
  std::vector<u64> keys_;    // sorted, unique
  std::vector<u64> values_;  // Gamma_p(keys_[i]) mod p^N
};

/// Evaluates Gamma_p at every query with one increasing sweep of the
/// recurrence Gamma_p(k+1) = -k Gamma_p(k) (p ∤ k), -Gamma_p(k) (p | k).
/// Memory is O(#queries); 0 and 1 are always included.
GammaSweepTable gamma_batch(std::vector<u64> queries, std::uint32_t p, int precision,
                            u64 sweep_bound = kDefaultSweepBound);

/// Gamma_p(x) mod p^N by running the recurrence directly. Meant for single
/// values and as the reference for gamma_batch.
PadicValue gamma_p(const PadicValue& x, int precision);
PadicValue gamma_p(const Rational& x, std::uint32_t p, int precision);

/// Gamma_p(x + j) for 0 <= j <= p from Gamma_p(x) and the rising factorial:
/// (-1)^j Gamma_p(x) (x)_j, with the factor x + p - rep(x) removed when
/// j > p - rep(x).
PadicValue gamma_shift(const PadicValue& gamma_x, const PadicValue& x, int j);
PadicValue gamma_shift(const Rational& x, std::uint32_t p, int j, int precision);

struct LogDerivatives {
  PadicValue g1;  // Gamma_p'(x) / Gamma_p(x)
  PadicValue g2;  // Gamma_p''(x) / Gamma_p(x)
};

/// Difference-quotient extraction of G1 and G2 with step h = p^step:
///   G1 ~ (Gamma_p(x+h)/Gamma_p(x) - 1) / h
///   G2 ~ (Gamma_p(x+h) - 2 Gamma_p(x) + Gamma_p(x-h)) / (h^2 Gamma_p(x))
/// Gamma_p is swept mod p^(precision + 2 step). Results are returned mod
/// p^precision, which needs step >= precision.
struct DerivativeScheme {
  int precision = 2;
  int step = 2;

  static DerivativeScheme certified(int precision) { return {precision, precision}; }
  int gamma_precision() const { return precision + 2 * step; }
};

// Requires p >= 7.
std::vector<LogDerivatives> log_derivatives(std::span<const Rational> xs, std::uint32_t p, DerivativeScheme scheme,
                                            u64 sweep_bound = kDefaultSweepBound);

PadicValue g1(const Rational& x, std::uint32_t p, int precision);
PadicValue g2(const Rational& x, std::uint32_t p, int precision);

/// x samples used by the gamma suite: a/b for 2 <= b <= 10, 0 < a < b,
/// gcd(a, b) = 1, p ∤ b, plus the integers 1, 2 and p.
std::vector<Rational> default_gamma_samples(std::uint32_t p);

// Exact right-hand sides of the paired-argument congruences for a chosen m1
// (m2 = 1 - m1) and 0 <= j < rep(m1): the gamma quotient (mod p^2) and the
// G1 sum (mod p^2). May carry p in the denominator.
Rational pair_binomial_rhs(const Rational& m1, std::uint32_t p, int j);
Rational pair_harmonic_rhs(const Rational& m1, std::uint32_t p, int j);

/// Runs the gamma / log-derivative congruences over every x in xs and every
/// j in each statement's range. One report per (statement, x, j).
std::vector<CongruenceReport> check_gamma_suite(std::uint32_t p, std::span<const Rational> xs,
                                                u64 sweep_bound = kDefaultSweepBound);

}  // namespace padichyp
