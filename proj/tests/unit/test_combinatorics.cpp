#include <random>

#include "doctest.h"
#include "padichyp/combinatorics.hpp"
#include "padichyp/modular.hpp"

using namespace padichyp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Coefficients of prod_i (j+1)_{a_i} as a polynomial in j, lowest degree first.
std::vector<Integer> rising_product_poly(const std::vector<unsigned>& a) {
  std::vector<Integer> c{1};
  for (unsigned ai : a) {
    for (unsigned k = 1; k <= ai; ++k) {
      // multiply by (j + k)
      std::vector<Integer> next(c.size() + 1, 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i] += c[i] * k;
        next[i + 1] += c[i];
      }
      c = std::move(next);
    }
  }
  return c;
}

Integer eval(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<Integer> derivative(const std::vector<Integer>& c) {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  if (d.empty()) d.push_back(0);
  return d;
}

// With f(j) = prod (j+1)_{a_i}, the P summand is (j f)' and the Q summand is
// j (j f)'' / 2; both summed over j = 0..p-1 and reduced mod p.
std::pair<u64, u64> poly_oracle(const std::vector<unsigned>& a, std::uint32_t p) {
  std::vector<Integer> jf{0};
  for (const Integer& c : rising_product_poly(a)) jf.push_back(c);
  const auto d1 = derivative(jf);
  const auto d2 = derivative(d1);
  Integer s1 = 0, s2 = 0;
  for (std::uint32_t j = 0; j < p; ++j) {
    s1 += eval(d1, j);
    s2 += j * eval(d2, j) / 2;
  }
  Integer r1 = s1 % p, r2 = s2 % p;
  if (r1 < 0) r1 += p;
  if (r2 < 0) r2 += p;
  return {r1.get_ui(), r2.get_ui()};
}

}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(3, 1) == q(11, 6));
  CHECK(harmonic(2, 2) == q(5, 4));
  CHECK(harmonic(0, 3) == 0);
  const HarmonicCache h(2, 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(h(n) == harmonic(n, 2));
  CHECK_THROWS_AS(h(11), std::out_of_range);
}

TEST_CASE("Apery numbers") {
  CHECK(apery(0) == 1);
  CHECK(apery(1) == 5);
  CHECK(apery(2) == 73);
  CHECK(apery(3) == 1445);
  CHECK(apery(4) == 33001);
}

TEST_CASE("power sums mod p") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned k = 1; k <= 2 * (p - 1); ++k) {
      u64 s = 0;
      for (u64 j = 1; j < p; ++j) s = (s + pow_mod(j, k, p)) % p;
      CHECK(power_sum_mod(p, k) == s);
      CHECK(power_sum_check(p, k));
    }
  }
}

TEST_CASE("rising-factorial sums match the polynomial oracle") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int i = 0; i < 40; ++i) {
      std::vector<unsigned> a;
      unsigned T = 0;
      const unsigned n = 1 + rng() % 4;
      for (unsigned k = 0; k < n; ++k) {
        const unsigned ai = 1 + rng() % p;
        if (T + ai > 2 * (p - 1)) break;
        a.push_back(ai);
        T += ai;
      }
      if (a.empty()) continue;
      const auto [o1, o2] = poly_oracle(a, p);
      CHECK(rising_sum_first(a, p).residue(1) == o1);
      CHECK(rising_sum_second(a, p).residue(1) == o2);
      const bool boundary = T == 2 * (p - 1);
      CHECK(o1 == (boundary ? 1u : 0u));
      CHECK(o2 == (boundary ? p - 1 : 0u));
    }
  }
  const std::vector<unsigned> too_big{5, 5};
  CHECK_THROWS(rising_sum_first(too_big, 5));
}

TEST_CASE("binomial-harmonic identities vanish") {
  CHECK(bin_harmonic_id1(1, 1) == 0);
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned n = 1; n <= m; ++n) CHECK(bin_harmonic_id1(m, n) == 0);
  }
  CHECK(bin_harmonic_id2(5, 3, 3, 1, 0) == 0);
  for (unsigned l = 2; l <= 10; ++l) {
    for (unsigned m = (l + 1) / 2; m < l; ++m) {
      for (unsigned n = (l + 1) / 2; n <= m; ++n) {
        CHECK(bin_harmonic_id2(l, m, n, 1, 0) == 0);
        CHECK(bin_harmonic_id2(l, m, n, 0, 1) == 0);
        CHECK(bin_harmonic_id2(l, m, n, q(3, 7), q(-2, 5)) == 0);
      }
    }
  }
  CHECK_THROWS(bin_harmonic_id1(2, 3));
}
