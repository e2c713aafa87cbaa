#include "doctest.h"
#include "padichyp/characters.hpp"
#include "padichyp/gfunction.hpp"
#include "padichyp/hypergeometric.hpp"
#include "padichyp/modular.hpp"

using namespace padichyp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

u64 gval(std::uint32_t p, std::vector<Rational> args, int N) { return g_function(GArguments{p, std::move(args), N}).residue(N); }

PadicValue greene_of(std::uint32_t p, const std::vector<Rational>& args, int N) {
  std::vector<Character> top;
  for (const Rational& a : args) {
    top.push_back(Character::of_order(p, static_cast<std::uint32_t>(a.get_den().get_ui()),
                                      static_cast<std::uint32_t>(a.get_num().get_ui())));
  }
  const std::vector<Character> bottom(args.size() - 1, Character::trivial(p));
  return greene_series_scaled(CharacterTable(p, N), top, bottom, 1);
}

}  // namespace

TEST_CASE("argument validation") {
  CHECK_THROWS(GArguments{7, {q(1, 2)}, 2}.validate());
  CHECK_THROWS(GArguments{7, {q(1, 2), q(1)}, 2}.validate());
  CHECK_THROWS(GArguments{7, {q(1, 2), q(1, 7)}, 2}.validate());
  CHECK_THROWS(GArguments{7, {q(1, 2), q(1, 2)}, 0}.validate());
  CHECK_NOTHROW(GArguments{7, {q(1, 2), q(1, 3)}, 2}.validate());
}

TEST_CASE("frozen G values") {
  // Independently computed with a from-scratch reference implementation.
  CHECK(gval(3, {q(1, 2), q(1, 2)}, 3) == 26);
  CHECK(gval(7, {q(1, 3), q(2, 3)}, 4) == 1);
  CHECK(gval(7, {q(1, 2), q(1, 2)}, 4) == 2400);
  CHECK(gval(11, {q(1, 2), q(1, 2)}, 4) == 14640);
  CHECK(gval(13, {q(1, 2), q(1, 2)}, 4) == 1);
  CHECK(gval(7, {q(1, 3), q(1, 3)}, 4) == 741);
  CHECK(gval(7, {q(1, 2), q(1, 3), q(2, 3)}, 4) == 2);
  CHECK(gval(7, {q(1, 2), q(1, 2), q(1, 2), q(1, 2)}, 4) == 31);
  CHECK(gval(11, {q(1, 2), q(1, 2), q(1, 2), q(1, 2)}, 4) == 14608);
  CHECK(gval(11, {q(1, 5), q(2, 5), q(3, 5), q(4, 5)}, 4) == 14609);
  CHECK(gval(31, {q(1, 5), q(2, 5), q(3, 5), q(4, 5)}, 4) == 73);
}

TEST_CASE("G is symmetric in its arguments") {
  CHECK(gval(13, {q(1, 3), q(1, 4), q(1, 2)}, 3) == gval(13, {q(1, 2), q(1, 3), q(1, 4)}, 3));
  CHECK(gval(11, {q(2, 5), q(1, 2), q(1, 5)}, 3) == gval(11, {q(1, 5), q(2, 5), q(1, 2)}, 3));
}

TEST_CASE("G equals the Greene series when every denominator divides p-1") {
  for (std::uint32_t p : {7u, 13u, 19u}) {
    for (const auto& args : std::vector<std::vector<Rational>>{
             {q(1, 2), q(1, 2)}, {q(1, 3), q(2, 3)}, {q(1, 2), q(1, 3), q(1, 3)}, {q(1, 6), q(5, 6), q(1, 2)}}) {
      if ((p - 1) % 6 != 0) continue;
      CHECK(congruent_mod(g_function(GArguments{p, args, 4}), greene_of(p, args, 4), 4));
    }
  }
}

TEST_CASE("shared sweep gives the same value") {
  const std::uint32_t p = 13;
  const GArguments a{p, {q(1, 3), q(2, 3)}, 3}, b{p, {q(1, 4), q(1, 2), q(3, 4)}, 3};
  std::vector<u64> queries;
  g_function_queries(a, queries);
  g_function_queries(b, queries);
  const auto table = gamma_batch(queries, p, 3);
  CHECK(g_function(a, table) == g_function(a));
  CHECK(g_function(b, table) == g_function(b));
  CHECK_THROWS(g_function(GArguments{p, {q(1, 5), q(4, 5)}, 3}, table));
}

TEST_CASE("prime-class predicates") {
  CHECK(plus_minus_one_mod(11, 3));
  CHECK(plus_minus_one_mod(13, 3));
  CHECK_FALSE(plus_minus_one_mod(13, 5));
  CHECK(quad_admissible(7, 5, 2));   // 7 = 2 mod 5, 2^2 = -1
  CHECK(quad_admissible(11, 8, 3));  // 11 = 3 mod 8, 3^2 = 1
  CHECK(quad_admissible(13, 8, 3));  // 13 = -3 mod 8
  CHECK(quad_admissible(17, 12, 5));
  CHECK(quad_admissible(13, 7, 2));   // 13 = -1 mod 7
  CHECK_FALSE(quad_admissible(11, 7, 2));  // 2^2 = 4 is not ±1 mod 7
}

TEST_CASE("s(p) agrees with its sign formula") {
  for (std::uint32_t p : {7u, 11u, 13u, 19u, 29u, 31u, 41u}) {
    for (auto [d1, d2] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 4}, {2, 5}}) {
      if (!plus_minus_one_mod(p, d1) || !plus_minus_one_mod(p, d2)) continue;
      CHECK(congruent_mod(s_factor_pair(d1, d2, p, 3),
                          PadicValue::from_integer(s_factor_pair_sign(d1, d2, p), p, 3), 3));
    }
  }
  CHECK_THROWS(s_factor_pair(5, 2, 13, 3));
  CHECK_THROWS(s_factor_quad(7, 2, 11, 3));
  CHECK_THROWS(s_factor_quad(8, 2, 17, 3));
}

TEST_CASE("G is congruent to the truncated series mod p^2 for (1/d, 1-1/d)") {
  for (std::uint32_t d : {3u, 4u, 6u}) {
    for (std::uint32_t p : {7u, 11u, 13u, 23u, 29u}) {
      if (!plus_minus_one_mod(p, d)) continue;
      const std::vector<Rational> args{q(1, d), q(d - 1, d)};
      CHECK(congruent_mod(g_function(GArguments{p, args, 2}), truncated_hyp(unit_bottom_params(args, p - 1), p, 2), 2));
    }
  }
}
