#pragma once

// Word-sized modular arithmetic for odd moduli below 2^62, plus a Montgomery
// context used by the gamma sweep kernel.

#include <cstdint>
#include <stdexcept>

namespace padichyp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Largest modulus any residue in this library may live under.
inline constexpr u64 kMaxModulus = u64{1} << 62;

inline u64 add_mod(u64 a, u64 b, u64 n) {
  u64 s = a + b;
  return s >= n ? s - n : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 n) { return a >= b ? a - b : a + (n - b); }

inline u64 neg_mod(u64 a, u64 n) { return a == 0 ? 0 : n - a; }

inline u64 mul_mod(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

u64 pow_mod(u64 base, u64 exp, u64 n);

// Inverse of a modulo n; throws std::domain_error when gcd(a, n) != 1.
u64 inv_mod(u64 a, u64 n);

// Reduces a signed integer into [0, n).
inline u64 reduce_signed(std::int64_t a, u64 n) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(n);
  if (r < 0) r += n;
  return static_cast<u64>(r);
}

// p^k, throwing std::overflow_error if it would reach kMaxModulus.
u64 checked_pow(u64 p, int k);

// Montgomery multiplication modulo an odd n < 2^63 with R = 2^64.
class Montgomery {
 public:
  explicit Montgomery(u64 n);

  u64 modulus() const { return n_; }
  u64 one() const { return r_mod_n_; }

  u64 to(u64 a) const { return mul(a % n_, r2_); }
  u64 from(u64 a) const { return redc(a); }

  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }

  u64 add(u64 a, u64 b) const { return add_mod(a, b, n_); }

 private:
  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * neg_inv_;
    u128 s = (t + static_cast<u128>(m) * n_) >> 64;
    u64 r = static_cast<u64>(s);
    return r >= n_ ? r - n_ : r;
  }

  u64 n_;
  u64 neg_inv_;   // -n^{-1} mod 2^64
  u64 r_mod_n_;   // 2^64 mod n
  u64 r2_;        // 2^128 mod n
};

}  // namespace padichyp
