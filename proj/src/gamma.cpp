#include "padichyp/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "padichyp/primes.hpp"

namespace padichyp {

int rep(const Rational& x, std::uint32_t p) {
  if (mpz_divisible_ui_p(x.get_den_mpz_t(), p)) {
    throw std::domain_error("rep: " + to_string(x) + " has negative valuation at " + std::to_string(p));
  }
  u64 num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  u64 den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  u64 r = mul_mod(num, inv_mod(den, p), p);
  return r == 0 ? static_cast<int>(p) : static_cast<int>(r);
}

int rep(const PadicValue& x) {
  if (!x.is_zero() && x.valuation() < 0) throw std::domain_error("rep: negative valuation");
  u64 r = x.residue(1);
  return r == 0 ? static_cast<int>(x.prime()) : static_cast<int>(r);
}

u64 gamma_query(const PadicValue& x, int precision) {
  if (!x.is_zero() && x.valuation() < 0) throw std::domain_error("Gamma_p argument has negative valuation");
  return x.residue(precision);
}

u64 gamma_query(const Rational& x, std::uint32_t p, int precision) {
  if (mpz_divisible_ui_p(x.get_den_mpz_t(), p)) {
    throw std::domain_error("Gamma_p argument " + to_string(x) + " is not in Z_" + std::to_string(p));
  }
  u64 modulus = checked_pow(p, precision);
  u64 num = mpz_fdiv_ui(x.get_num_mpz_t(), modulus);
  u64 den = mpz_fdiv_ui(x.get_den_mpz_t(), modulus);
  return mul_mod(num, inv_mod(den, modulus), modulus);
}

bool GammaSweepTable::contains(u64 residue) const { return std::binary_search(keys_.begin(), keys_.end(), residue); }

u64 GammaSweepTable::raw(u64 residue) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), residue);
  if (it == keys_.end() || *it != residue) {
    throw std::out_of_range("Gamma_p(" + std::to_string(residue) + ") was not part of the sweep");
  }
  return values_[static_cast<std::size_t>(it - keys_.begin())];
}

PadicValue GammaSweepTable::at(u64 residue) const { return PadicValue::from_unit(prime_, 0, raw(residue), precision_); }

GammaSweepTable gamma_batch(std::vector<u64> queries, std::uint32_t p, int precision, u64 sweep_bound) {
  require_odd_prime(p);
  if (precision < 1) throw PrecisionError("gamma sweep precision below 1");
  const u64 modulus = checked_pow(p, precision);
  if (modulus > sweep_bound) {
    throw std::length_error("gamma sweep over p^N = " + std::to_string(modulus) + " exceeds the sweep bound " +
                            std::to_string(sweep_bound));
  }
  queries.push_back(0);
  queries.push_back(1);
  std::sort(queries.begin(), queries.end());
  queries.erase(std::unique(queries.begin(), queries.end()), queries.end());
  if (queries.back() >= modulus) throw std::invalid_argument("gamma_batch: query outside [0, p^N)");

  GammaSweepTable table;
  table.prime_ = p;
  table.precision_ = precision;
  table.modulus_ = modulus;
  table.values_.reserve(queries.size());

  // prod holds prod_{0<j<n, p∤j} j in Montgomery form; Gamma_p(n) = (-1)^n prod.
  const Montgomery mont(modulus);
  const u64 one = mont.one();
  u64 prod = one;
  u64 n = 1;
  u64 jm = one;        // n in Montgomery form
  u64 n_mod_p = 1 % p;
  for (u64 k : queries) {
    if (k == 0) {
      table.values_.push_back(1);
      continue;
    }
    while (n < k) {
      // Run to the next multiple of p (or k) without testing divisibility.
      u64 run_end = std::min<u64>(k, n + (n_mod_p == 0 ? 0 : p - n_mod_p));
      if (n_mod_p == 0) {
        jm = mont.add(jm, one);
        ++n;
        n_mod_p = 1;
        continue;
      }
      for (; n < run_end; ++n) {
        prod = mont.mul(prod, jm);
        jm = mont.add(jm, one);
      }
      n_mod_p = n % p;
    }
    u64 v = mont.from(prod);
    table.values_.push_back((k & 1) ? neg_mod(v, modulus) : v);
  }
  table.keys_ = std::move(queries);
  return table;
}

namespace {

u64 gamma_reference(u64 n, std::uint32_t p, u64 modulus) {
  if (n == 0) return 1;
  u64 g = 1;
  for (u64 k = 1; k < n; ++k) {
    if (k % p != 0) g = mul_mod(g, k, modulus);
  }
  return (n & 1) ? neg_mod(g, modulus) : g;
}

PadicValue integer_at(std::int64_t n, std::uint32_t p, int precision) {
  return PadicValue::from_integer(n, p, std::max(precision, 1));
}

}  // namespace

PadicValue gamma_p(const PadicValue& x, int precision) {
  const std::uint32_t p = x.prime();
  require_odd_prime(p);
  const int k = std::min(precision, x.abs_precision());
  if (k < 1) throw PrecisionError("Gamma_p argument known to less than one digit");
  const u64 modulus = checked_pow(p, k);
  return PadicValue::from_unit(p, 0, gamma_reference(gamma_query(x, k), p, modulus), k);
}

PadicValue gamma_p(const Rational& x, std::uint32_t p, int precision) {
  require_odd_prime(p);
  const u64 modulus = checked_pow(p, precision);
  return PadicValue::from_unit(p, 0, gamma_reference(gamma_query(x, p, precision), p, modulus), precision);
}

PadicValue gamma_shift(const PadicValue& gamma_x, const PadicValue& x, int j) {
  const std::uint32_t p = x.prime();
  if (j < 0 || j > static_cast<int>(p)) throw std::invalid_argument("gamma_shift: j must lie in [0, p]");
  const int precision = std::min(gamma_x.abs_precision(), x.abs_precision());
  const int skipped = static_cast<int>(p) - rep(x);  // the k with x + k in pZ_p
  PadicValue result = (j % 2 == 0) ? gamma_x : -gamma_x;
  for (int k = 0; k < j; ++k) {
    // (x)_j (x + p - rep(x))^{-1}: the cancelled factor is never formed.
    if (k == skipped) continue;
    result = result * (x + integer_at(k, p, precision));
  }
  return result;
}

PadicValue gamma_shift(const Rational& x, std::uint32_t p, int j, int precision) {
  return gamma_shift(gamma_p(x, p, precision), PadicValue::from_rational(x, p, precision), j);
}

std::vector<LogDerivatives> log_derivatives(std::span<const Rational> xs, std::uint32_t p, DerivativeScheme scheme,
                                            u64 sweep_bound) {
  require_odd_prime(p);
  if (p < 7) throw std::invalid_argument("G1/G2 congruence properties need p >= 7");
  if (scheme.precision < 1 || scheme.step < scheme.precision) {
    throw PrecisionError("requested precision " + std::to_string(scheme.precision) +
                         " exceeds what the difference step p^" + std::to_string(scheme.step) + " certifies");
  }
  const int big = scheme.gamma_precision();
  u64 modulus = 0;
  try {
    modulus = checked_pow(p, big);
  } catch (const std::overflow_error&) {
    throw PrecisionError("derivative scheme needs Gamma_p mod p^" + std::to_string(big) + ", beyond word size");
  }
  const u64 h = checked_pow(p, scheme.step);
  const u64 h2 = checked_pow(p, 2 * scheme.step);
  const u64 out_modulus = checked_pow(p, scheme.precision);

  std::vector<u64> base;
  base.reserve(xs.size());
  std::vector<u64> queries;
  queries.reserve(3 * xs.size());
  for (const Rational& x : xs) {
    u64 r = gamma_query(x, p, big);
    base.push_back(r);
    queries.push_back(r);
    queries.push_back(add_mod(r, h, modulus));
    queries.push_back(sub_mod(r, h, modulus));
  }
  const GammaSweepTable table = gamma_batch(std::move(queries), p, big, sweep_bound);

  std::vector<LogDerivatives> out;
  out.reserve(xs.size());
  for (u64 r : base) {
    const u64 inv = inv_mod(table.raw(r), modulus);
    const u64 fp = mul_mod(table.raw(add_mod(r, h, modulus)), inv, modulus);
    const u64 fm = mul_mod(table.raw(sub_mod(r, h, modulus)), inv, modulus);
    const u64 d1 = sub_mod(fp, 1, modulus);
    const u64 d2 = sub_mod(add_mod(fp, fm, modulus), 2 % modulus, modulus);
    if (d1 % h != 0 || d2 % h2 != 0) throw std::logic_error("difference quotient not divisible by its step");
    out.push_back({PadicValue::from_residue(p, (d1 / h) % out_modulus, scheme.precision),
                   PadicValue::from_residue(p, (d2 / h2) % out_modulus, scheme.precision)});
  }
  return out;
}

PadicValue g1(const Rational& x, std::uint32_t p, int precision) {
  return log_derivatives(std::span(&x, 1), p, DerivativeScheme::certified(precision)).front().g1;
}

PadicValue g2(const Rational& x, std::uint32_t p, int precision) {
  return log_derivatives(std::span(&x, 1), p, DerivativeScheme::certified(precision)).front().g2;
}

std::vector<Rational> default_gamma_samples(std::uint32_t p) {
  std::vector<Rational> xs;
  for (unsigned b = 2; b <= 10; ++b) {
    if (b % p == 0) continue;
    for (unsigned a = 1; a < b; ++a) {
      if (std::gcd(a, b) == 1) xs.push_back(make_rational(a, b));
    }
  }
  xs.push_back(make_rational(1));
  xs.push_back(make_rational(2));
  xs.push_back(make_rational(p));
  return xs;
}

}  // namespace padichyp
