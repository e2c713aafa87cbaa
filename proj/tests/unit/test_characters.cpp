#include "doctest.h"
#include "padichyp/characters.hpp"
#include "padichyp/modular.hpp"

using namespace padichyp;

namespace {

// chi(x) for chi = omegabar^e straight from the Teichmuller lift.
PadicValue chi_direct(std::uint32_t p, std::uint32_t e, std::int64_t x, int N) {
  const std::int64_t r = ((x % p) + p) % p;
  if (r == 0) return PadicValue::zero(p);
  return teichmuller(r, p, N).inverse().pow(e);
}

PadicValue one(std::uint32_t p, int N) { return PadicValue::from_integer(1, p, N); }

}  // namespace

TEST_CASE("character values") {
  const CharacterTable t5(5, 3), t7(7, 3);
  CHECK(char_value(t5, Character::quadratic(5), -1) == one(5, 3));
  CHECK(char_value(t7, Character::quadratic(7), -1) == -one(7, 3));
  CHECK(char_value(t7, Character::trivial(7), 14).is_zero());
  for (std::uint32_t e = 0; e < 6; ++e) {
    for (std::int64_t x = 1; x < 7; ++x) {
      CHECK(char_value(t7, Character{7, e}, x) == chi_direct(7, e, x, 3));
    }
  }
  CHECK(Character::of_order(13, 3, 2).exponent == 8);
  CHECK((Character::of_order(13, 4) * Character::of_order(13, 4).conj()) == Character::trivial(13));
  CHECK_THROWS(Character::of_order(13, 5));
}

TEST_CASE("scaled binomial examples") {
  const CharacterTable t(5, 3);
  const auto eps = Character::trivial(5), phi = Character::quadratic(5);
  CHECK(congruent_mod(char_binomial_scaled(t, eps, eps), PadicValue::from_integer(3, 5, 3), 3));
  CHECK(congruent_mod(char_binomial_scaled(t, phi, eps), PadicValue::from_integer(-1, 5, 3), 3));
  CHECK(congruent_mod(char_binomial_scaled(t, eps, phi), PadicValue::from_integer(-1, 5, 3), 3));
}

TEST_CASE("scaled binomial matches the defining character sum") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const int N = 3;
    const CharacterTable t(p, N);
    for (std::uint32_t a = 0; a < p - 1; a += 3) {
      for (std::uint32_t b = 0; b < p - 1; b += 2) {
        const Character A{p, a}, B{p, b};
        // B(-1) sum_x A(x) Bbar(1-x); every character vanishes at 0
        PadicValue s = PadicValue::zero(p, N);
        for (std::int64_t x = 0; x < p; ++x) s = s + chi_direct(p, a, x, N) * chi_direct(p, (p - 1 - b) % (p - 1), 1 - x, N);
        const PadicValue expect = chi_direct(p, b, -1, N) * s;
        CHECK(congruent_mod(char_binomial_scaled(t, A, B), expect, N));
        const BinomialTable bt(t, A, B);
        for (std::uint32_t e = 0; e < p - 1; ++e) {
          CHECK(bt.at(e) == char_binomial_scaled(t, A * Character{p, e}, B * Character{p, e}));
        }
      }
    }
  }
}

TEST_CASE("2F1 series matches the single character-sum form") {
  // -p 2F1(A, B; eps | x) = -eps(x) B(-1) sum_y B(y) Bbar(1-y) Abar(1-xy)
  for (std::uint32_t p : {7u, 11u}) {
    const int N = 3;
    const CharacterTable t(p, N);
    for (std::uint32_t a = 1; a < p - 1; a += 2) {
      for (std::uint32_t b = 1; b < p - 1; b += 3) {
        for (std::int64_t x = 1; x < p; x += 2) {
          const std::vector<Character> top{Character{p, a}, Character{p, b}};
          const std::vector<Character> bottom{Character::trivial(p)};
          PadicValue s = PadicValue::zero(p, N);
          for (std::int64_t y = 0; y < p; ++y) {
            s = s + chi_direct(p, b, y, N) * chi_direct(p, (p - 1 - b) % (p - 1), 1 - y, N) *
                        chi_direct(p, (p - 1 - a) % (p - 1), 1 - x * y, N);
          }
          const PadicValue expect = -(chi_direct(p, b, -1, N) * s);
          CHECK(congruent_mod(greene_series_scaled(t, top, bottom, x), expect, N));
        }
      }
    }
  }
}

TEST_CASE("Greene series frozen values") {
  // -p^3 4F3(phi,...,phi; eps,...|1) at p = 7 is 31 mod 7^4 (31 - 7 = gamma(7) = 24).
  const CharacterTable t(7, 4);
  const std::vector<Character> top(4, Character::quadratic(7));
  const std::vector<Character> bottom(3, Character::trivial(7));
  CHECK(greene_series_scaled(t, top, bottom, 1).residue(4) == 31);
  CHECK(greene_series_scaled(t, top, bottom, 7).is_exact_zero());
}
