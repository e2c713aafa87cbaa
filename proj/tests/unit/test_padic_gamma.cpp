#include <random>

#include "doctest.h"
#include "padichyp/gamma.hpp"
#include "padichyp/modular.hpp"

using namespace padichyp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// (-1)^n prod_{0<j<n, p∤j} j mod p^k, straight from the definition.
u64 naive_gamma(u64 n, std::uint32_t p, int k) {
  const u64 mod = checked_pow(p, k);
  u64 acc = 1;
  for (u64 j = 1; j < n; ++j) {
    if (j % p) acc = mul_mod(acc, j, mod);
  }
  return n % 2 ? neg_mod(acc, mod) : acc;
}

u64 naive_query(const Rational& x, std::uint32_t p, int k) {
  const u64 mod = checked_pow(p, k);
  const u64 den = reduce_signed(x.get_den().get_si(), mod);
  const u64 num = reduce_signed(x.get_num().get_si(), mod);
  return mul_mod(num, inv_mod(den, mod), mod);
}

}  // namespace

TEST_CASE("rep examples") {
  CHECK(rep(q(1, 3), 7) == 5);
  CHECK(rep(q(2, 3), 7) == 3);
  CHECK(rep(q(7), 7) == 7);
  CHECK(rep(q(1), 7) == 1);
  CHECK_THROWS(rep(q(1, 7), 7));
}

TEST_CASE("gamma_p at integers matches the product definition") {
  CHECK(gamma_p(q(4), 7, 1).residue(1) == 6);
  CHECK(gamma_p(q(0), 7, 3).residue(3) == 1);
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (u64 n = 0; n < 3 * p; ++n) {
      CHECK(gamma_p(q(static_cast<long>(n)), p, 2).residue(2) == naive_gamma(n, p, 2));
    }
  }
}

TEST_CASE("gamma_p at rationals matches the definition at the residue") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    for (long b = 2; b <= 6; ++b) {
      for (long a = 1; a < b; ++a) {
        if (b % p == 0) continue;
        const Rational x = q(a, b);
        CHECK(gamma_p(x, p, 3).residue(3) == naive_gamma(naive_query(x, p, 3), p, 3));
      }
    }
  }
}

TEST_CASE("gamma_batch agrees with gamma_p") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const int N = 3;
    const u64 mod = checked_pow(p, N);
    std::vector<u64> queries;
    for (int i = 0; i < 60; ++i) queries.push_back(rng() % mod);
    const auto table = gamma_batch(queries, p, N);
    for (u64 k : queries) {
      CHECK(table.raw(k) == naive_gamma(k, p, N));
      CHECK(table.at(k) == gamma_p(PadicValue::from_residue(p, k, N), N));
    }
    CHECK_THROWS_AS(table.raw(mod - 1 == queries[0] ? 2 : mod - 1), std::out_of_range);
  }
  CHECK_THROWS(gamma_batch({1}, 13, 4, 1000));
}

TEST_CASE("reflection and functional equation") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (long b = 2; b <= 9; ++b) {
      if (b % p == 0) continue;
      for (long a = 1; a < b; ++a) {
        const Rational x = q(a, b);
        const auto lhs = gamma_p(x, p, 3) * gamma_p(1 - x, p, 3);
        const int sign = rep(x, p) % 2 ? -1 : 1;
        CHECK(congruent_mod(lhs, PadicValue::from_integer(sign, p, 3), 3));
        const auto shifted = gamma_p(x + 1, p, 3);
        const bool unit = a % static_cast<long>(p) != 0;
        const auto factor = unit ? PadicValue::from_rational(-x, p, 3) : PadicValue::from_integer(-1, p, 3);
        const auto expect = gamma_p(x, p, 3) * factor;
        CHECK(congruent_mod(shifted, expect, 3));
      }
    }
  }
}

TEST_CASE("gamma_shift matches direct evaluation") {
  const std::uint32_t p = 7;
  for (const Rational& x : {q(1, 3), q(2, 5), q(5, 6)}) {
    for (int j = 0; j <= static_cast<int>(p); ++j) {
      CHECK(congruent_mod(gamma_shift(x, p, j, 3), gamma_p(x + j, p, 3), 3));
    }
  }
}

TEST_CASE("log derivatives do not depend on the difference step") {
  const std::uint32_t p = 7;
  const std::vector<Rational> xs{q(1, 2), q(1, 3), q(3, 4), q(2)};
  const auto a = log_derivatives(xs, p, DerivativeScheme{2, 2});
  const auto b = log_derivatives(xs, p, DerivativeScheme{2, 3});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(congruent_mod(a[i].g1, b[i].g1, 2));
    CHECK(congruent_mod(a[i].g2, b[i].g2, 2));
  }
  CHECK_THROWS(log_derivatives(xs, 5, DerivativeScheme{2, 2}));
}

TEST_CASE("log derivative reflection G1(x) = G1(1-x)") {
  for (std::uint32_t p : {7u, 11u}) {
    for (const Rational& x : {q(1, 3), q(1, 4), q(2, 5)}) {
      CHECK(congruent_mod(g1(x, p, 2), g1(1 - x, p, 2), 2));
    }
  }
}

TEST_CASE("paired right-hand sides agree across the tie x = 1/2 mod p") {
  // 4 = 1/2 mod 7, so m1 = 4 and m1 = 1 - 4 have the same rep.
  const std::uint32_t p = 7;
  REQUIRE(rep(q(4), p) == rep(q(-3), p));
  for (int j = 0; j < rep(q(4), p); ++j) {
    CHECK(congruent_mod(PadicValue::from_rational(pair_binomial_rhs(q(4), p, j), p, 4),
                        PadicValue::from_rational(pair_binomial_rhs(q(-3), p, j), p, 4), 2));
    CHECK(congruent_mod(PadicValue::from_rational(pair_harmonic_rhs(q(4), p, j), p, 4),
                        PadicValue::from_rational(pair_harmonic_rhs(q(-3), p, j), p, 4), 2));
  }
  CHECK_THROWS(pair_binomial_rhs(q(4), p, 4));
}

TEST_CASE("gamma suite passes at p = 7") {
  const auto xs = default_gamma_samples(7);
  const auto reports = check_gamma_suite(7, xs);
  CHECK(reports.size() > 1000);
  int failures = 0;
  for (const auto& r : reports) {
    if (!r.pass) {
      ++failures;
      MESSAGE(r.claim);
    }
  }
  CHECK(failures == 0);
}
