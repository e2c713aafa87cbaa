#include "padichyp/modular.hpp"

#include <string>

namespace padichyp {

u64 pow_mod(u64 base, u64 exp, u64 n) {
  if (n == 1) return 0;
  u64 result = 1;
  base %= n;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 n) {
  i128 t = 0, new_t = 1;
  i128 r = n, new_r = a % n;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(n));
  if (t < 0) t += n;
  return static_cast<u64>(t);
}

u64 checked_pow(u64 p, int k) {
  if (k < 0) throw std::invalid_argument("checked_pow: negative exponent");
  u64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r >= kMaxModulus / p) {
      throw std::overflow_error(std::to_string(p) + "^" + std::to_string(k) + " exceeds the 2^62 word modulus");
    }
    r *= p;
  }
  return r;
}

Montgomery::Montgomery(u64 n) : n_(n) {
  if (n % 2 == 0 || n >= (u64{1} << 63)) throw std::invalid_argument("Montgomery: modulus must be odd and below 2^63");
  // Newton iteration doubles the number of correct low bits each step.
  u64 inv = n;
  for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
  neg_inv_ = ~inv + 1;
  r_mod_n_ = static_cast<u64>((static_cast<u128>(1) << 64) % n);
  r2_ = mul_mod(r_mod_n_, r_mod_n_, n);
}

}  // namespace padichyp
