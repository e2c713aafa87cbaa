#pragma once

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "padichyp/modular.hpp"
#include "padichyp/rational.hpp"

namespace padichyp {

// Raised whenever a result cannot be certified at the requested precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Absolute precision of an exact zero.
inline constexpr int kExactPrecision = INT_MAX;

/// An element of Q_p known to finite precision.
///
/// A nonzero value is p^valuation * unit where unit is a residue modulo
/// p^rel_precision that is prime to p. Its absolute precision, the k for which
/// the value is known mod p^k, is valuation + rel_precision.
///
/// Zero carries only an absolute precision: "0 mod p^k", or kExactPrecision
/// for the exact zero. Additions whose leading units cancel to the available
/// precision produce such a zero, never a unit padded with invented digits.
///
/// Values are immutable; all arithmetic returns new values.
class PadicValue {
 public:
  // Exact zero for prime p.
  static PadicValue zero(std::uint32_t p, int abs_precision = kExactPrecision);

  // p^valuation * unit with unit taken modulo p^rel_precision. unit must be
  // prime to p.
  static PadicValue from_unit(std::uint32_t p, int valuation, u64 unit, int rel_precision);

  // The class of the integer r modulo p^abs_precision.
  static PadicValue from_residue(std::uint32_t p, u64 residue, int abs_precision);

  static PadicValue from_integer(std::int64_t n, std::uint32_t p, int rel_precision);
  static PadicValue from_integer(const Integer& n, std::uint32_t p, int rel_precision);

  // Embeds q with rel_precision digits of unit. p may divide either side of q.
  static PadicValue from_rational(const Rational& q, std::uint32_t p, int rel_precision);

  std::uint32_t prime() const { return prime_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_precision_ == kExactPrecision; }

  // Throws std::logic_error for zero; use valuation_bound() when zero is possible.
  int valuation() const;

  // valuation() for nonzero values, the absolute precision for zeros: the
  // largest k for which the value is certified to be 0 mod p^k.
  int valuation_bound() const { return zero_ ? abs_precision_ : valuation_; }

  u64 unit() const { return unit_; }
  int rel_precision() const { return zero_ ? 0 : rel_; }
  int abs_precision() const { return zero_ ? abs_precision_ : valuation_ + rel_; }

  // Same value known to fewer digits; k above the current precision is an error.
  PadicValue with_abs_precision(int k) const;

  // Representative in [0, p^k) of a p-integral value; requires abs_precision >= k.
  u64 residue(int k) const;

  PadicValue operator-() const;
  PadicValue inverse() const;
  PadicValue pow(long long e) const;

  friend PadicValue operator+(const PadicValue& a, const PadicValue& b);
  friend PadicValue operator-(const PadicValue& a, const PadicValue& b) { return a + (-b); }
  friend PadicValue operator*(const PadicValue& a, const PadicValue& b);
  friend PadicValue operator/(const PadicValue& a, const PadicValue& b) {
    return a * b.inverse();
  }

  // Representation equality (same digits and same precision), not congruence.
  friend bool operator==(const PadicValue& a, const PadicValue& b);

  // e.g. "7^-1 * 33 [abs 1]" or "0 [abs 4]".
  std::string to_string() const;

 private:
  PadicValue() = default;

  std::uint32_t prime_ = 0;
  bool zero_ = true;
  int valuation_ = 0;
  u64 unit_ = 0;
  int rel_ = 0;
  int abs_precision_ = kExactPrecision;  // meaningful for zero only
};

PadicValue padic_add(const PadicValue& a, const PadicValue& b);
PadicValue padic_mul(const PadicValue& a, const PadicValue& b);
PadicValue padic_inv(const PadicValue& a);
PadicValue padic_neg(const PadicValue& a);

PadicValue rational_to_padic(const Rational& q, std::uint32_t p, int precision);

/// True iff valuation(a - b) >= k. Both operands must be known to absolute
/// precision k; otherwise PrecisionError is thrown rather than guessing.
bool congruent_mod(const PadicValue& a, const PadicValue& b, int k);

/// Teichmuller lift of a: the (p-1)-th root of unity congruent to a mod p,
/// computed as a^(p^(N-1)) mod p^N.
PadicValue teichmuller(std::int64_t a, std::uint32_t p, int precision);

// Raw residue form of teichmuller() for table builders.
u64 teichmuller_residue(u64 a, std::uint32_t p, int precision);

}  // namespace padichyp
