#include "padichyp/characters.hpp"

#include <stdexcept>
#include <string>

#include "padichyp/primes.hpp"

namespace padichyp {

Character Character::of_order(std::uint32_t p, std::uint32_t d, std::uint32_t m) {
  if (d == 0 || (p - 1) % d != 0) {
    throw std::invalid_argument("no character of order " + std::to_string(d) + " mod " + std::to_string(p));
  }
  return {p, static_cast<std::uint32_t>((u64{m} * ((p - 1) / d)) % (p - 1))};
}

Character operator*(const Character& a, const Character& b) {
  if (a.prime != b.prime) throw std::invalid_argument("characters over different primes");
  return {a.prime, (a.exponent + b.exponent) % (a.prime - 1)};
}

CharacterTable::CharacterTable(std::uint32_t p, int precision)
    : p_(p), precision_(precision), modulus_(0), g_(0), dlog_(p, 0), powers_(p - 1) {
  require_odd_prime(p);
  if (precision < 1) throw PrecisionError("character table precision below 1");
  modulus_ = checked_pow(p, precision);
  g_ = primitive_root(p);
  const u64 w = teichmuller_residue(g_, p, precision);
  u64 acc = 1 % modulus_;
  u64 x = 1;
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    powers_[k] = acc;
    dlog_[x] = k;
    acc = mul_mod(acc, w, modulus_);
    x = x * g_ % p;
  }
}

std::uint32_t CharacterTable::dlog(std::int64_t x) const {
  const u64 r = reduce_signed(x, p_);
  if (r == 0) throw std::domain_error("discrete log of 0 mod " + std::to_string(p_));
  return dlog_[r];
}

u64 CharacterTable::root_power(std::int64_t k) const { return powers_[reduce_signed(k, p_ - 1)]; }

u64 CharacterTable::value_raw(const Character& chi, std::int64_t x) const {
  if (chi.prime != p_) throw std::invalid_argument("character and table over different primes");
  if (reduce_signed(x, p_) == 0) return 0;
  // omegabar^e(x) = omega(g)^(-e dlog x)
  return root_power(-static_cast<std::int64_t>(u64{chi.exponent} * dlog(x) % (p_ - 1)));
}

PadicValue char_value(const CharacterTable& table, const Character& chi, std::int64_t x) {
  const u64 v = table.value_raw(chi, x);
  if (v == 0) return PadicValue::zero(table.prime());
  return PadicValue::from_unit(table.prime(), 0, v, table.precision());
}

u64 char_binomial_scaled_raw(const CharacterTable& table, const Character& A, const Character& B) {
  const std::uint32_t p = table.prime();
  if (A.prime != p || B.prime != p) throw std::invalid_argument("characters over different primes");
  const u64 n = table.modulus();
  const std::int64_t q = p - 1;
  // A(x) Bbar(1-x) = omega(g)^(-a L(x) + b L(1-x)); x = 0, 1 drop out.
  u64 sum = 0;
  for (std::int64_t x = 2; x < p; ++x) {
    const std::int64_t e = (-static_cast<std::int64_t>(A.exponent) * table.dlog(x) +
                            static_cast<std::int64_t>(B.exponent) * table.dlog(1 - x)) % q;
    sum = add_mod(sum, table.root_power(e), n);
  }
  return (B.exponent % 2 == 0) ? sum : neg_mod(sum, n);  // B(-1) = (-1)^b
}

PadicValue char_binomial_scaled(const CharacterTable& table, const Character& A, const Character& B) {
  return PadicValue::from_residue(table.prime(), char_binomial_scaled_raw(table, A, B), table.precision());
}

BinomialTable::BinomialTable(const CharacterTable& table, const Character& A, const Character& B)
    : p_(table.prime()), precision_(table.precision()), values_(table.prime() - 1) {
  for (std::uint32_t e = 0; e + 1 < p_; ++e) {
    const Character chi{p_, e};
    values_[e] = char_binomial_scaled_raw(table, A * chi, B * chi);
  }
}

PadicValue BinomialTable::at(std::uint32_t chi_exponent) const {
  return PadicValue::from_residue(p_, raw(chi_exponent), precision_);
}

PadicValue greene_series_scaled(const CharacterTable& table, std::span<const Character> top,
                                std::span<const Character> bottom, std::int64_t x) {
  const std::uint32_t p = table.prime();
  if (top.size() < 2 || bottom.size() + 1 != top.size()) {
    throw std::invalid_argument("greene series needs n+1 top and n bottom characters, n >= 1");
  }
  const std::size_t n = bottom.size();
  if (reduce_signed(x, p) == 0) return PadicValue::zero(p);

  std::vector<BinomialTable> tables;
  tables.reserve(n + 1);
  tables.emplace_back(table, top[0], Character::trivial(p));
  for (std::size_t i = 0; i < n; ++i) tables.emplace_back(table, top[i + 1], bottom[i]);

  const u64 mod = table.modulus();
  u64 sum = 0;
  for (std::uint32_t e = 0; e + 1 < p; ++e) {
    u64 term = table.value_raw({p, e}, x);
    for (const BinomialTable& t : tables) term = mul_mod(term, t.raw(e), mod);
    sum = add_mod(sum, term, mod);
  }
  sum = mul_mod(sum, inv_mod((p - 1) % mod, mod), mod);
  if (n % 2 == 1) sum = neg_mod(sum, mod);
  return PadicValue::from_residue(p, sum, table.precision());
}

}  // namespace padichyp
