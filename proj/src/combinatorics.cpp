#include "padichyp/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "padichyp/primes.hpp"

namespace padichyp {

Rational harmonic(unsigned n, unsigned order) {
  if (order == 0) throw std::invalid_argument("harmonic sums need order >= 1");
  Rational s = 0;
  for (unsigned j = 1; j <= n; ++j) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), j, order);
    s += Rational(1, d);
  }
  s.canonicalize();
  return s;
}

HarmonicCache::HarmonicCache(unsigned order, unsigned max_index) : order_(order) {
  if (order == 0) throw std::invalid_argument("harmonic sums need order >= 1");
  prefix_.reserve(max_index + 1);
  prefix_.emplace_back(0);
  for (unsigned j = 1; j <= max_index; ++j) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), j, order);
    Rational next = prefix_.back() + Rational(1, d);
    next.canonicalize();
    prefix_.push_back(std::move(next));
  }
}

const Rational& HarmonicCache::operator()(unsigned n) const {
  if (n >= prefix_.size()) throw std::out_of_range("harmonic cache index " + std::to_string(n));
  return prefix_[n];
}

Integer apery(unsigned n) {
  Integer sum = 0;
  for (unsigned j = 0; j <= n; ++j) {
    Integer t = binomial(n + j, j) * binomial(n, j);
    sum += t * t;
  }
  return sum;
}

std::uint32_t power_sum_mod(std::uint32_t p, unsigned k) {
  u64 s = 0;
  for (u64 j = 1; j < p; ++j) s = add_mod(s, pow_mod(j, k, p), p);
  return static_cast<std::uint32_t>(s);
}

bool power_sum_check(std::uint32_t p, unsigned k) {
  require_odd_prime(p);
  if (k == 0) throw std::invalid_argument("power sums need k >= 1");
  const std::uint32_t expected = (k % (p - 1) == 0) ? p - 1 : 0;
  return power_sum_mod(p, k) == expected;
}

namespace {

// Shared evaluation of the two rising-factorial sums; `second` selects Q.
PadicValue rising_factorial_sum(std::span<const unsigned> a, std::uint32_t p, bool second) {
  require_odd_prime(p);
  if (a.empty()) throw std::invalid_argument("empty exponent list");
  unsigned total = 0, largest = 0;
  for (unsigned ai : a) {
    if (ai == 0) throw std::invalid_argument("exponents must be positive");
    total += ai;
    largest = std::max(largest, ai);
  }
  if (total > 2 * (p - 1)) {
    throw std::invalid_argument("T = " + std::to_string(total) + " exceeds 2(p-1) = " + std::to_string(2 * (p - 1)));
  }
  const HarmonicCache h1(1, largest + p);
  const HarmonicCache h2(2, largest + p);

  Rational sum = 0;
  for (unsigned j = 0; j < p; ++j) {
    Integer prod = 1;
    Rational s1 = 0, s2 = 0;
    for (unsigned ai : a) {
      Integer rising;
      mpz_fac_ui(rising.get_mpz_t(), j + ai);
      prod *= rising / factorial(j);
      s1 += h1(ai + j) - h1(j);
      s2 += h2(ai + j) - h2(j);
    }
    const Rational jq(j);
    const Rational bracket = second ? Rational(jq * s1 + jq * jq / 2 * (s1 * s1 - s2)) : Rational(1 + jq * s1);
    sum += Rational(prod) * bracket;
  }
  sum.canonicalize();
  return PadicValue::from_rational(sum, p, 1).with_abs_precision(1);
}

}  // namespace

PadicValue rising_sum_first(std::span<const unsigned> a, std::uint32_t p) { return rising_factorial_sum(a, p, false); }

PadicValue rising_sum_second(std::span<const unsigned> a, std::uint32_t p) { return rising_factorial_sum(a, p, true); }

namespace {

Integer four_binomials(unsigned m, unsigned n, unsigned k) {
  return binomial(m + k, k) * binomial(m, k) * binomial(n + k, k) * binomial(n, k);
}

// (-1)^(k-n) C(m+k,k) C(m,k) C(n+k,k) / C(k-1,n) for n < k <= m.
Rational tail_term(unsigned m, unsigned n, unsigned k) {
  Rational t(binomial(m + k, k) * binomial(m, k) * binomial(n + k, k), binomial(k - 1, n));
  t.canonicalize();
  return ((k - n) % 2 == 0) ? t : Rational(-t);
}

Rational harmonic_bracket(unsigned m, unsigned n, unsigned k, const HarmonicCache& h) {
  return 1 + Rational(k) * (h(m + k) + h(m - k) + h(n + k) + h(n - k) - 4 * h(k));
}

}  // namespace

Rational bin_harmonic_id1(unsigned m, unsigned n) {
  if (n < 1 || m < n) throw std::invalid_argument("identity 1 needs m >= n >= 1");
  const HarmonicCache h(1, 2 * m);
  Rational lhs = 0;
  for (unsigned k = 0; k <= n; ++k) lhs += Rational(four_binomials(m, n, k)) * harmonic_bracket(m, n, k, h);
  for (unsigned k = n + 1; k <= m; ++k) lhs += tail_term(m, n, k);
  Rational rhs = ((m + n) % 2 == 0) ? 1 : -1;
  Rational diff = lhs - rhs;
  diff.canonicalize();
  return diff;
}

Rational bin_harmonic_id2(unsigned l, unsigned m, unsigned n, const Rational& c1, const Rational& c2) {
  if (!(l > m && m >= n && 2 * n >= l && n >= 1)) throw std::invalid_argument("identity 2 needs l > m >= n >= l/2");
  const HarmonicCache h1(1, 2 * m + l);
  const HarmonicCache h2(2, 2 * m + l);
  auto weight = [&](const HarmonicCache& h, unsigned k) -> Rational {
    return c1 * (h(k + n) - h(k + l - n - 1)) + c2 * (h(k + m) - h(k + l - m - 1));
  };
  Rational lhs = 0;
  for (unsigned k = 0; k <= n; ++k) {
    lhs += Rational(four_binomials(m, n, k)) *
           (harmonic_bracket(m, n, k, h1) * weight(h1, k) - Rational(k) * weight(h2, k));
  }
  for (unsigned k = n + 1; k <= m; ++k) lhs += tail_term(m, n, k) * weight(h1, k);
  lhs.canonicalize();
  return lhs;
}

}  // namespace padichyp
