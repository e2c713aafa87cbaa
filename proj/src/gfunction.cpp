#include "padichyp/gfunction.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "padichyp/primes.hpp"

namespace padichyp {

void GArguments::validate() const {
  require_odd_prime(prime);
  if (precision < 1) throw PrecisionError("G precision below 1");
  if (args.size() < 2) throw std::invalid_argument("G needs at least two arguments");
  for (const Rational& a : args) {
    if (a <= 0 || a >= 1) throw std::invalid_argument("G argument " + to_string(a) + " is not in (0, 1)");
    if (mpz_divisible_ui_p(a.get_den_mpz_t(), prime)) {
      throw std::invalid_argument("G argument " + to_string(a) + " has denominator divisible by " +
                                  std::to_string(prime));
    }
  }
}

void g_function_queries(const GArguments& g, std::vector<u64>& out) {
  g.validate();
  const std::uint32_t p = g.prime;
  for (std::uint32_t j = 0; j + 1 < p; ++j) {
    const Rational t(j, p - 1);
    out.push_back(gamma_query(t, p, g.precision));
    for (const Rational& a : g.args) out.push_back(gamma_query(fractional_part(a - t), p, g.precision));
  }
  for (const Rational& a : g.args) out.push_back(gamma_query(a, p, g.precision));
}

PadicValue g_function(const GArguments& g, const GammaSweepTable& table) {
  g.validate();
  const std::uint32_t p = g.prime;
  const int N = g.precision;
  if (table.prime() != p || table.precision() != N) {
    throw std::invalid_argument("gamma table does not match the G evaluation's prime and precision");
  }
  const u64 mod = table.modulus();
  const std::size_t count = g.args.size();  // n + 1

  // p^c mod p^N for c = 0..count
  std::vector<u64> ppow(count + 1, 0);
  for (std::size_t c = 0; c <= count && static_cast<int>(c) < N; ++c) ppow[c] = checked_pow(p, static_cast<int>(c));

  u64 sum = 0;
  for (std::uint32_t j = 0; j + 1 < p; ++j) {
    const Rational t(j, p - 1);
    u64 base = table.raw(gamma_query(t, p, N));
    if (j % 2 == 1) base = neg_mod(base, mod);
    u64 term = 1 % mod;
    for (std::size_t i = 0; i < count; ++i) term = mul_mod(term, base, mod);
    std::size_t drops = 0;
    for (const Rational& a : g.args) {
      const Rational diff = a - t;
      const Integer fl = floor(diff);
      if (fl == -1) {
        ++drops;
      } else if (fl != 0) {
        throw std::logic_error("floor outside {-1, 0} in G");
      }
      term = mul_mod(term, table.raw(gamma_query(fractional_part(diff), p, N)), mod);
    }
    // (-p)^drops
    term = mul_mod(term, ppow[drops], mod);
    if (drops % 2 == 1) term = neg_mod(term, mod);
    sum = add_mod(sum, term, mod);
  }

  u64 denom = (p - 1) % mod;
  for (const Rational& a : g.args) denom = mul_mod(denom, table.raw(gamma_query(a, p, N)), mod);
  sum = neg_mod(mul_mod(sum, inv_mod(denom, mod), mod), mod);
  return PadicValue::from_residue(p, sum, N);
}

PadicValue g_function(const GArguments& g, u64 sweep_bound) {
  std::vector<u64> queries;
  g_function_queries(g, queries);
  const GammaSweepTable table = gamma_batch(std::move(queries), g.prime, g.precision, sweep_bound);
  return g_function(g, table);
}

bool plus_minus_one_mod(std::uint32_t p, std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("modulus d must be at least 2");
  const std::uint32_t a = p % d;
  return a == 1 || a == d - 1;
}

bool quad_admissible(std::uint32_t p, std::uint32_t d, std::uint32_t r) {
  if (p % d == 0) return false;
  if (plus_minus_one_mod(p, d)) return true;
  const std::uint32_t r2 = (r * r) % d;
  if (r2 != 1 && r2 != d - 1) return false;
  const std::uint32_t a = p % d;
  return a == r % d || a == (d - r % d) % d;
}

namespace {

void require_pm_one(std::uint32_t p, std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (p % d == 0 || !plus_minus_one_mod(p, d)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not ±1 mod " + std::to_string(d));
  }
}

}  // namespace

PadicValue s_factor_pair(std::uint32_t d1, std::uint32_t d2, std::uint32_t p, int precision) {
  require_odd_prime(p);
  require_pm_one(p, d1);
  require_pm_one(p, d2);
  const std::vector<Rational> xs{make_rational(1, d1), make_rational(d1 - 1, d1), make_rational(1, d2),
                                 make_rational(d2 - 1, d2)};
  std::vector<u64> queries;
  for (const Rational& x : xs) queries.push_back(gamma_query(x, p, precision));
  const GammaSweepTable table = gamma_batch(queries, p, precision);
  PadicValue out = table(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) out = out * table(xs[i]);
  return out;
}

int s_factor_pair_sign(std::uint32_t d1, std::uint32_t d2, std::uint32_t p) {
  return (((p - 1) / d1 + (p - 1) / d2) % 2 == 0) ? 1 : -1;
}

PadicValue s_factor_quad(std::uint32_t d, std::uint32_t r, std::uint32_t p, int precision) {
  require_odd_prime(p);
  if (r < 2 || r + 2 > d || std::gcd(r, d) != 1) {
    throw std::invalid_argument("need 2 <= r <= d-2 with gcd(r, d) = 1");
  }
  if (!quad_admissible(p, d, r)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is outside the admissible classes for d = " +
                                std::to_string(d) + ", r = " + std::to_string(r));
  }
  const std::vector<Rational> xs{make_rational(1, d), make_rational(r, d), make_rational(d - r, d),
                                 make_rational(d - 1, d)};
  std::vector<u64> queries;
  for (const Rational& x : xs) queries.push_back(gamma_query(x, p, precision));
  const GammaSweepTable table = gamma_batch(queries, p, precision);
  PadicValue out = table(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) out = out * table(xs[i]);
  return out;
}

}  // namespace padichyp
