#include <random>

#include "doctest.h"
#include "padichyp/modular.hpp"
#include "padichyp/padic.hpp"
#include "padichyp/primes.hpp"
#include "padichyp/rational.hpp"
#include "padichyp/report.hpp"

using namespace padichyp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Residue of a p-integral rational mod p^k by brute-force search.
u64 brute_residue(const Rational& x, std::uint32_t p, int k) {
  const u64 n = checked_pow(p, k);
  const Integer num = x.get_num(), den = x.get_den();
  for (u64 r = 0; r < n; ++r) {
    Integer t = den * Integer(static_cast<unsigned long>(r)) - num;
    if (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(n))) return r;
  }
  FAIL("no residue");
  return 0;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/-4") == q(-3, 2));
  CHECK(parse_rational(" 0/5 ").get_den() == 1);
  CHECK(parse_rational_list("1/2, 1/3,2/3").size() == 3);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(q(-1, 3)) == -1);
  CHECK(fractional_part(q(-1, 3)) == q(2, 3));
  CHECK(binomial(6, 3) == 20);
  CHECK(valuation(Integer(75), 5) == 2);
}

TEST_CASE("primes") {
  CHECK(primes_in_range(3, 20) == std::vector<std::uint32_t>{3, 5, 7, 11, 13, 17, 19});
  CHECK(primitive_root(7) == 3);
  CHECK_THROWS_AS(require_odd_prime(2), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_prime(9), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_prime(503), std::invalid_argument);
  CHECK_NOTHROW(require_odd_prime(503, 1000));
}

TEST_CASE("Montgomery multiplication agrees with 128-bit reduction") {
  std::mt19937_64 rng(7);
  for (u64 n : {u64{7} * 7 * 7, checked_pow(97, 4), checked_pow(13, 9), (u64{1} << 61) - 1}) {
    const Montgomery m(n);
    for (int i = 0; i < 500; ++i) {
      const u64 a = rng() % n, b = rng() % n;
      CHECK(m.from(m.mul(m.to(a), m.to(b))) == mul_mod(a, b, n));
    }
  }
  CHECK(inv_mod(3, 49) == 33);
  CHECK_THROWS_AS(inv_mod(7, 49), std::domain_error);
}

TEST_CASE("rational_to_padic examples") {
  const PadicValue a = rational_to_padic(q(1, 3), 7, 2);
  CHECK(a.valuation() == 0);
  CHECK(a.unit() == 33);
  CHECK(rational_to_padic(q(0), 7, 2).is_exact_zero());
  const PadicValue b = rational_to_padic(q(1, 7), 7, 2);
  CHECK(b.valuation() == -1);
  CHECK(b.unit() == 1);
  CHECK_THROWS(rational_to_padic(q(1, 3), 9, 2));
}

TEST_CASE("arithmetic examples") {
  const auto x = PadicValue::from_unit(5, 0, 3, 2);
  const auto y = PadicValue::from_unit(5, 1, 2, 2);
  const auto xy = x * y;
  CHECK(xy.valuation() == 1);
  CHECK(xy.unit() == 6);
  CHECK((x + (-x)).is_zero());
  const auto inv = padic_inv(PadicValue::from_unit(7, 0, 33, 2));
  CHECK(inv.unit() == 3);
  CHECK_THROWS(padic_inv(PadicValue::zero(7)));
  CHECK_THROWS(PadicValue::from_integer(1, 5, 2) + PadicValue::from_integer(1, 7, 2));
}

TEST_CASE("cancellation lowers the certified precision") {
  const auto a = PadicValue::from_rational(q(1, 3), 5, 3);
  const auto b = PadicValue::from_rational(q(1, 3) + 125, 5, 3);
  const auto d = a - b;
  CHECK(d.is_zero());
  CHECK(d.abs_precision() == 3);
  const auto c = PadicValue::from_rational(q(1, 3) + 25, 5, 3);
  const auto e = c - a;
  CHECK(e.valuation() == 2);
  CHECK(e.abs_precision() == 3);
}

TEST_CASE("congruent_mod") {
  const auto a = PadicValue::from_integer(8, 3, 2);
  const auto b = PadicValue::from_rational(q(89, 64), 3, 2);
  CHECK(congruent_mod(a, b, 2));
  CHECK(congruent_mod(a, a, 2));
  const auto p1 = PadicValue::from_unit(5, 1, 1, 3);
  CHECK(congruent_mod(p1, PadicValue::zero(5), 1));
  CHECK_FALSE(congruent_mod(p1, PadicValue::zero(5), 2));
  CHECK_THROWS_AS(congruent_mod(a, b, 3), PrecisionError);
}

TEST_CASE("Teichmuller lift") {
  CHECK(teichmuller(3, 7, 2).unit() == 31);
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    for (std::int64_t a = 1; a < p; ++a) {
      const auto w = teichmuller(a, p, 4);
      CHECK(w.pow(p - 1) == PadicValue::from_integer(1, p, 4));
      CHECK(w.residue(1) == static_cast<u64>(a));
    }
  }
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(11);
  auto draw = [&] {
    return make_rational(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 300));
  };
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    for (int i = 0; i < 200; ++i) {
      const Rational a = draw(), b = draw();
      const int N = 4;
      const auto pa = PadicValue::from_rational(a, p, N), pb = PadicValue::from_rational(b, p, N);
      const Rational s = a + b, m = a * b;
      if (s != 0) {
        const auto sum = pa + pb;
        const int k = sum.abs_precision();
        CHECK(congruent_mod(sum, PadicValue::from_rational(s, p, N + 8), k));
      }
      CHECK(congruent_mod(pa * pb, PadicValue::from_rational(m, p, N + 8), (pa * pb).abs_precision()));
      if (a != 0) CHECK(congruent_mod(pa * pa.inverse(), PadicValue::from_integer(1, p, N), N));
      if (a != 0 && valuation(Integer(a.get_den()), p) == 0 && valuation(Integer(a.get_num()), p) == 0) {
        CHECK(pa.residue(3) == brute_residue(a, p, 3));
      }
    }
  }
}

TEST_CASE("make_report") {
  const auto r = make_report("x", 7, {{"d", std::int64_t{3}}}, 2, PadicValue::from_integer(50, 7, 3),
                             PadicValue::from_integer(1, 7, 3));
  CHECK(r.pass);
  CHECK(r.diff_valuation == 2);
  const auto s = make_report("x", 7, {}, 2, PadicValue::from_integer(8, 7, 3), PadicValue::from_integer(1, 7, 3));
  CHECK_FALSE(s.pass);
  CHECK(s.diff_valuation == 1);
  CHECK_THROWS_AS(make_report("x", 7, {}, 3, PadicValue::from_integer(1, 7, 2), PadicValue::from_integer(1, 7, 3)),
                  PrecisionError);
}
