#include "padichyp/padic.hpp"

#include <algorithm>
#include <sstream>

#include "padichyp/primes.hpp"

namespace padichyp {

namespace {

void require_same_prime(const PadicValue& a, const PadicValue& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("mixed primes " + std::to_string(a.prime()) + " and " + std::to_string(b.prime()));
  }
}

void require_usable_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

// Adds two absolute precisions, saturating at kExactPrecision.
int add_precision(int a, int b) {
  if (a == kExactPrecision || b == kExactPrecision) return kExactPrecision;
  return a + b;
}

// Unit residue of |n| / p^v modulo p^k with n's sign applied.
u64 unit_of(const Integer& n, std::uint32_t p, int& v, u64 modulus) {
  Integer m = abs(n);
  v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  u64 r = mpz_fdiv_ui(m.get_mpz_t(), modulus);
  return n < 0 ? neg_mod(r, modulus) : r;
}

}  // namespace

PadicValue PadicValue::zero(std::uint32_t p, int abs_precision) {
  require_usable_prime(p);
  PadicValue z;
  z.prime_ = p;
  z.zero_ = true;
  z.abs_precision_ = abs_precision;
  return z;
}

PadicValue PadicValue::from_unit(std::uint32_t p, int valuation, u64 unit, int rel_precision) {
  require_usable_prime(p);
  if (rel_precision < 1) throw PrecisionError("relative precision below 1");
  u64 modulus = checked_pow(p, rel_precision);
  unit %= modulus;
  if (unit % p == 0) throw std::invalid_argument("unit part divisible by p");
  PadicValue x;
  x.prime_ = p;
  x.zero_ = false;
  x.valuation_ = valuation;
  x.unit_ = unit;
  x.rel_ = rel_precision;
  return x;
}

PadicValue PadicValue::from_residue(std::uint32_t p, u64 residue, int abs_precision) {
  u64 modulus = checked_pow(p, abs_precision);
  residue %= modulus;
  if (residue == 0) return zero(p, abs_precision);
  int v = 0;
  while (residue % p == 0) {
    residue /= p;
    ++v;
  }
  return from_unit(p, v, residue, abs_precision - v);
}

PadicValue PadicValue::from_integer(std::int64_t n, std::uint32_t p, int rel_precision) {
  return from_integer(Integer(static_cast<long>(n)), p, rel_precision);
}

PadicValue PadicValue::from_integer(const Integer& n, std::uint32_t p, int rel_precision) {
  require_usable_prime(p);
  if (n == 0) return zero(p);
  int v = 0;
  u64 unit = unit_of(n, p, v, checked_pow(p, rel_precision));
  return from_unit(p, v, unit, rel_precision);
}

PadicValue PadicValue::from_rational(const Rational& q, std::uint32_t p, int rel_precision) {
  require_usable_prime(p);
  if (q == 0) return zero(p);
  u64 modulus = checked_pow(p, rel_precision);
  int vn = 0, vd = 0;
  u64 un = unit_of(q.get_num(), p, vn, modulus);
  u64 ud = unit_of(q.get_den(), p, vd, modulus);
  return from_unit(p, vn - vd, mul_mod(un, inv_mod(ud, modulus), modulus), rel_precision);
}

int PadicValue::valuation() const {
  if (zero_) throw std::logic_error("valuation of zero is infinite");
  return valuation_;
}

PadicValue PadicValue::with_abs_precision(int k) const {
  if (k > abs_precision()) {
    throw PrecisionError("cannot raise precision from " + std::to_string(abs_precision()) + " to " + std::to_string(k));
  }
  if (zero_ || k <= valuation_) return zero(prime_, k);
  return from_unit(prime_, valuation_, unit_, k - valuation_);
}

u64 PadicValue::residue(int k) const {
  if (abs_precision() < k) {
    throw PrecisionError("residue mod p^" + std::to_string(k) + " requested from a value known mod p^" +
                         std::to_string(abs_precision()));
  }
  if (zero_ || valuation_ >= k) return 0;
  if (valuation_ < 0) throw std::domain_error("residue of a value with negative valuation");
  u64 modulus = checked_pow(prime_, k);
  return mul_mod(checked_pow(prime_, valuation_), unit_, modulus);
}

PadicValue PadicValue::operator-() const {
  if (zero_) return *this;
  u64 modulus = checked_pow(prime_, rel_);
  return from_unit(prime_, valuation_, neg_mod(unit_, modulus), rel_);
}

PadicValue PadicValue::inverse() const {
  if (zero_) throw std::domain_error("inversion of zero");
  u64 modulus = checked_pow(prime_, rel_);
  return from_unit(prime_, -valuation_, inv_mod(unit_, modulus), rel_);
}

PadicValue PadicValue::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  PadicValue result = from_unit(prime_, 0, 1, zero_ ? 1 : rel_);
  PadicValue base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

PadicValue operator*(const PadicValue& a, const PadicValue& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicValue::zero(a.prime_);
  if (a.zero_ && b.zero_) return PadicValue::zero(a.prime_, add_precision(a.abs_precision_, b.abs_precision_));
  if (a.zero_) return PadicValue::zero(a.prime_, a.abs_precision_ + b.valuation_);
  if (b.zero_) return PadicValue::zero(a.prime_, b.abs_precision_ + a.valuation_);
  int rel = std::min(a.rel_, b.rel_);
  u64 modulus = checked_pow(a.prime_, rel);
  return PadicValue::from_unit(a.prime_, a.valuation_ + b.valuation_, mul_mod(a.unit_ % modulus, b.unit_ % modulus, modulus),
                               rel);
}

PadicValue operator+(const PadicValue& a, const PadicValue& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const int abs = std::min(a.abs_precision(), b.abs_precision());
  if (a.zero_ && b.zero_) return PadicValue::zero(a.prime_, abs);
  if (a.zero_) return b.with_abs_precision(abs);
  if (b.zero_) return a.with_abs_precision(abs);

  const std::uint32_t p = a.prime_;
  const int v = std::min(a.valuation_, b.valuation_);
  const int digits = abs - v;
  const u64 modulus = checked_pow(p, digits);
  auto shifted = [&](const PadicValue& x) -> u64 {
    int shift = x.valuation_ - v;
    if (shift >= digits) return 0;
    return mul_mod(checked_pow(p, shift), x.unit_ % modulus, modulus);
  };
  u64 s = add_mod(shifted(a), shifted(b), modulus);
  if (s == 0) return PadicValue::zero(p, abs);
  int t = 0;
  while (s % p == 0) {
    s /= p;
    ++t;
  }
  return PadicValue::from_unit(p, v + t, s, digits - t);
}

bool operator==(const PadicValue& a, const PadicValue& b) {
  if (a.prime_ != b.prime_ || a.zero_ != b.zero_) return false;
  if (a.zero_) return a.abs_precision_ == b.abs_precision_;
  return a.valuation_ == b.valuation_ && a.unit_ == b.unit_ && a.rel_ == b.rel_;
}

std::string PadicValue::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "0";
    if (abs_precision_ != kExactPrecision) os << " [abs " << abs_precision_ << "]";
    return os.str();
  }
  if (valuation_ != 0) os << prime_ << "^" << valuation_ << " * ";
  os << unit_ << " [abs " << abs_precision() << "]";
  return os.str();
}

PadicValue padic_add(const PadicValue& a, const PadicValue& b) { return a + b; }
PadicValue padic_mul(const PadicValue& a, const PadicValue& b) { return a * b; }
PadicValue padic_inv(const PadicValue& a) { return a.inverse(); }
PadicValue padic_neg(const PadicValue& a) { return -a; }

PadicValue rational_to_padic(const Rational& q, std::uint32_t p, int precision) {
  require_odd_prime(p);
  return PadicValue::from_rational(q, p, precision);
}

bool congruent_mod(const PadicValue& a, const PadicValue& b, int k) {
  require_same_prime(a, b);
  if (a.abs_precision() < k || b.abs_precision() < k) {
    throw PrecisionError("congruence mod p^" + std::to_string(k) + " needs both sides to that precision (have " +
                         std::to_string(a.abs_precision()) + " and " + std::to_string(b.abs_precision()) + ")");
  }
  return (a - b).valuation_bound() >= k;
}

u64 teichmuller_residue(u64 a, std::uint32_t p, int precision) {
  if (a % p == 0) throw std::invalid_argument("Teichmuller lift of a multiple of p");
  u64 modulus = checked_pow(p, precision);
  return pow_mod(a % modulus, checked_pow(p, precision - 1), modulus);
}

PadicValue teichmuller(std::int64_t a, std::uint32_t p, int precision) {
  require_odd_prime(p);
  u64 modulus = checked_pow(p, precision);
  return PadicValue::from_unit(p, 0, teichmuller_residue(reduce_signed(a, modulus), p, precision), precision);
}

}  // namespace padichyp
