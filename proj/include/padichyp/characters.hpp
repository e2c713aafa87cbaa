#pragma once

// Multiplicative characters of F_p^* realised through the Teichmuller lift,
// Greene's binomial and the Gaussian hypergeometric series. Everything is
// carried in the scaled form that lives in Z_p: the binomial times p and the
// series times (-1)^n p^n.

#include <cstdint>
#include <span>
#include <vector>

#include "padichyp/padic.hpp"

namespace padichyp {

/// chi = omegabar^exponent, exponent taken mod p-1. exponent 0 is the trivial
/// character, (p-1)/2 the quadratic one.
struct Character {
  std::uint32_t prime = 3;
  std::uint32_t exponent = 0;

  static Character trivial(std::uint32_t p) { return {p, 0}; }
  static Character quadratic(std::uint32_t p) { return {p, (p - 1) / 2}; }
  // rho^m for rho = omegabar^((p-1)/d); requires d | p-1.
  static Character of_order(std::uint32_t p, std::uint32_t d, std::uint32_t m = 1);

  Character conj() const { return {prime, exponent == 0 ? 0 : prime - 1 - exponent}; }
  bool operator==(const Character&) const = default;
};

// Product of characters (exponents add mod p-1); throws on mixed primes.
Character operator*(const Character& a, const Character& b);

/// omega(g)^k mod p^N for a fixed generator g, with discrete logs of 1..p-1.
/// Shared by every character evaluation at one (p, N).
class CharacterTable {
 public:
  CharacterTable(std::uint32_t p, int precision);

  std::uint32_t prime() const { return p_; }
  int precision() const { return precision_; }
  u64 modulus() const { return modulus_; }
  std::uint32_t generator() const { return g_; }

  // Discrete log of x mod p in [0, p-2]; x must be prime to p.
  std::uint32_t dlog(std::int64_t x) const;

  // omega(g)^k mod p^N, k taken mod p-1.
  u64 root_power(std::int64_t k) const;

  // chi(x) mod p^N as a residue, 0 when p | x.
  u64 value_raw(const Character& chi, std::int64_t x) const;

 private:
  std::uint32_t p_;
  int precision_;
  u64 modulus_;
  std::uint32_t g_;
  std::vector<std::uint32_t> dlog_;  // indexed by x in [0, p)
  std::vector<u64> powers_;          // omega(g)^k, k in [0, p-1)
};

PadicValue char_value(const CharacterTable& table, const Character& chi, std::int64_t x);

/// beta(A, B) = p * binom(A, B) = B(-1) sum_x A(x) Bbar(1-x).
PadicValue char_binomial_scaled(const CharacterTable& table, const Character& A, const Character& B);
u64 char_binomial_scaled_raw(const CharacterTable& table, const Character& A, const Character& B);

/// beta(A chi, B chi) for every chi, indexed by chi's exponent.
class BinomialTable {
 public:
  BinomialTable(const CharacterTable& table, const Character& A, const Character& B);

  u64 raw(std::uint32_t chi_exponent) const { return values_.at(chi_exponent); }
  PadicValue at(std::uint32_t chi_exponent) const;

 private:
  std::uint32_t p_;
  int precision_;
  std::vector<u64> values_;
};

/// (-1)^n p^n  {n+1}F{n}(A_0, ..., A_n; B_1, ..., B_n | x)_p, evaluated as
/// (-1)^n / (p-1) sum_chi beta(A_0 chi, chi) prod_i beta(A_i chi, B_i chi) chi(x).
PadicValue greene_series_scaled(const CharacterTable& table, std::span<const Character> top,
                                std::span<const Character> bottom, std::int64_t x);

}  // namespace padichyp
