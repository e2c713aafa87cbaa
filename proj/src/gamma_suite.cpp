#include <map>
#include <stdexcept>
#include <string>

#include "padichyp/combinatorics.hpp"
#include "padichyp/gamma.hpp"
#include "padichyp/primes.hpp"

namespace padichyp {

namespace {

constexpr int kGammaDigits = 3;  // Taylor law and the gamma-side checks go up to p^3
constexpr int kDerivDigits = 2;  // G1 / G2 are needed mod p^2
constexpr int kExactDigits = 8;  // embedding precision for exact right-hand sides

Rational pair_sign(long long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

PadicValue exact(const Rational& q, std::uint32_t p) { return PadicValue::from_rational(q, p, kExactDigits); }

}  // namespace

Rational pair_binomial_rhs(const Rational& m1, std::uint32_t p, int j) {
  const int r1 = rep(m1, p);
  const int r2 = static_cast<int>(p) + 1 - r1;
  if (j < 0 || j >= r1) throw std::invalid_argument("pair_binomial_rhs: j must lie in [0, rep(m1))");
  const bool upper = j >= r2;
  const Rational alpha = upper ? Rational(1, p) : Rational(1);
  const Rational beta = upper ? Rational(1, p) : Rational(0);
  const Rational hdiff = harmonic(r1 - 1 + j, 1) - harmonic(r2 - 1 + j, 1) - beta;
  Rational out = pair_sign(j) * Rational(binomial(r1 - 1 + j, j) * binomial(r1 - 1, j)) * alpha *
                 (1 - (Rational(r1) - m1) * hdiff);
  out.canonicalize();
  return out;
}

Rational pair_harmonic_rhs(const Rational& m1, std::uint32_t p, int j) {
  const int r1 = rep(m1, p);
  const int r2 = static_cast<int>(p) + 1 - r1;
  if (j < 0 || j >= r1) throw std::invalid_argument("pair_harmonic_rhs: j must lie in [0, rep(m1))");
  const bool upper = j >= r2;
  const Rational alpha = upper ? Rational(1, p) : Rational(0);
  const Rational beta = upper ? Rational(1, Integer(p) * p) : Rational(0);
  Rational out = harmonic(r1 - 1 + j, 1) + harmonic(r1 - 1 - j, 1) - 2 * harmonic(j, 1) - alpha +
                 (Rational(r1) - m1) * (harmonic(r1 - 1 + j, 2) - harmonic(r2 - 1 + j, 2) - beta);
  out.canonicalize();
  return out;
}

std::vector<CongruenceReport> check_gamma_suite(std::uint32_t p, std::span<const Rational> xs, u64 sweep_bound) {
  require_odd_prime(p);
  if (p < 7) throw std::invalid_argument("the gamma suite needs p >= 7");
  const int ip = static_cast<int>(p);
  const Rational P(p);
  const Rational P2 = P * P;

  // Every argument at which Gamma_p or G1/G2 is read.
  std::vector<u64> gamma_queries;
  std::map<Rational, std::size_t> deriv_index;
  std::vector<Rational> deriv_args;
  auto need_gamma = [&](const Rational& y) { gamma_queries.push_back(gamma_query(y, p, kGammaDigits)); };
  auto need_deriv = [&](const Rational& y) {
    if (deriv_index.emplace(y, deriv_args.size()).second) deriv_args.push_back(y);
  };
  for (const Rational& x : xs) {
    for (int j = 0; j <= ip; ++j) {
      need_gamma(x + j);
      need_gamma(1 - x + j);
      need_deriv(x + j);
      need_deriv(1 - x + j);
      need_deriv(Rational(1 + j));
    }
    need_gamma(x + P2);
  }
  const GammaSweepTable gamma = gamma_batch(std::move(gamma_queries), p, kGammaDigits, sweep_bound);
  const std::vector<LogDerivatives> derivs =
      log_derivatives(deriv_args, p, DerivativeScheme::certified(kDerivDigits), sweep_bound);
  auto G1 = [&](const Rational& y) { return derivs.at(deriv_index.at(y)).g1; };
  auto G2 = [&](const Rational& y) { return derivs.at(deriv_index.at(y)).g2; };
  auto is_unit = [&](const Rational& y) { return !mpz_divisible_ui_p(y.get_num_mpz_t(), p); };

  std::vector<CongruenceReport> out;
  auto add = [&](const char* claim, ParamList params, int k, const PadicValue& lhs, const PadicValue& rhs) {
    out.push_back(make_report(claim, p, std::move(params), k, lhs, rhs));
  };

  for (const Rational& x : xs) {
    const std::string xs_ = to_string(x);
    const int r = rep(x, p);
    const PadicValue px = PadicValue::from_rational(x, p, kGammaDigits);
    const PadicValue gx = gamma(x);
    const PadicValue g1x = G1(x), g2x = G2(x);

    add("rep-reflection", {{"x", xs_}}, 1, PadicValue::from_integer(rep(1 - x, p), p, kExactDigits),
        PadicValue::from_integer(ip + 1 - r, p, kExactDigits));

    add("gamma-reflection", {{"x", xs_}}, kGammaDigits, gx * gamma(1 - x),
        PadicValue::from_integer(r % 2 == 0 ? 1 : -1, p, kExactDigits));

    add("gamma-functional", {{"x", xs_}}, kGammaDigits, gamma(x + 1), is_unit(x) ? -(px * gx) : -gx);

    add("gamma-continuity", {{"x", xs_}, {"z", "p"}}, 1, gamma(x + P).with_abs_precision(1), gx.with_abs_precision(1));
    add("gamma-continuity", {{"x", xs_}, {"z", "p^2"}}, 2, gamma(x + P2).with_abs_precision(2),
        gx.with_abs_precision(2));

    // Taylor expansion at z = p: Gamma_p(x+p) vs Gamma_p(x)(1 + p G1 + p^2/2 G2).
    {
      const PadicValue z = PadicValue::from_integer(ip, p, kExactDigits);
      const PadicValue half = PadicValue::from_rational(Rational(1, 2), p, kExactDigits);
      const PadicValue one = PadicValue::from_integer(1, p, kExactDigits);
      add("gamma-taylor", {{"x", xs_}}, kGammaDigits, gamma(x + P), gx * (one + z * g1x + z * z * half * g2x));
    }

    {
      const Rational y = x + 1;
      const PadicValue step = is_unit(x) ? exact(1 / x, p) : PadicValue::zero(p);
      add("logderiv-step", {{"x", xs_}}, kDerivDigits, G1(y) - g1x, step);
      const PadicValue sq = is_unit(x) ? exact(1 / (x * x), p) : PadicValue::zero(p);
      add("logderiv-square-step", {{"x", xs_}}, kDerivDigits, G1(y) * G1(y) - G2(y) - g1x * g1x + g2x, sq);
    }

    add("logderiv-reflection", {{"x", xs_}}, kDerivDigits, g1x, G1(1 - x));
    add("logderiv-square-reflection", {{"x", xs_}}, kDerivDigits, g1x * g1x - g2x,
        G2(1 - x) - G1(1 - x) * G1(1 - x));

    {
      const Rational y = x + P;
      add("logderiv-stability", {{"x", xs_}, {"order", std::int64_t{1}}}, 1, G1(y).with_abs_precision(1),
          g1x.with_abs_precision(1));
      add("logderiv-stability", {{"x", xs_}, {"order", std::int64_t{2}}}, 1, G2(y).with_abs_precision(1),
          g2x.with_abs_precision(1));
      const PadicValue z = PadicValue::from_integer(ip, p, kExactDigits);
      add("logderiv-second-order", {{"x", xs_}}, kDerivDigits, g1x, G1(y) + z * (G1(y) * G1(y) - G2(y)));
    }

    for (int j = 0; j <= ip; ++j) {
      const Rational xj = x + j;
      ParamList params{{"x", xs_}, {"j", std::int64_t{j}}};

      add("gamma-shift", params, kGammaDigits, gamma_shift(gx, px, j), gamma(xj));

      Rational fact(factorial(r + j - 1));
      if (j > ip - r) fact /= P;
      add("gamma-factorial-mod-p", params, 1, gamma(xj).with_abs_precision(1),
          exact(pair_sign(r + j) * fact, p).with_abs_precision(1));

      if (j == ip) continue;
      const PadicValue d1 = G1(xj) - G1(Rational(1 + j));
      const Rational delta1 = (j > ip - r) ? Rational(1, p) : Rational(0);
      add("logderiv-harmonic", params, 1, d1.with_abs_precision(1),
          exact(harmonic(r - 1 + j, 1) - harmonic(j, 1) - delta1, p).with_abs_precision(1));

      const Rational one_j(1 + j);
      const PadicValue d2 = G1(xj) * G1(xj) - G2(xj) - G1(one_j) * G1(one_j) + G2(one_j);
      const Rational delta2 = (j > ip - r) ? 1 / P2 : Rational(0);
      add("logderiv-harmonic-square", params, 1, d2.with_abs_precision(1),
          exact(harmonic(r - 1 + j, 2) - harmonic(j, 2) - delta2, p).with_abs_precision(1));
    }

    // Paired arguments x, 1-x; on a tie (x ≡ 1/2 mod p) both choices of m1 agree.
    const Rational m1 = (r >= rep(1 - x, p)) ? x : Rational(1 - x);
    const PadicValue gpair = gx * gamma(1 - x);
    for (int j = 0; j < rep(m1, p); ++j) {
      ParamList params{{"x", xs_}, {"j", std::int64_t{j}}};
      const Rational jf(factorial(j) * factorial(j));
      const PadicValue lhs = gamma(x + j) * gamma(1 - x + j) / (gpair * exact(jf, p));
      add("gamma-pair-binomial", params, kDerivDigits, lhs, exact(pair_binomial_rhs(m1, p, j), p));

      const PadicValue gsum = G1(x + j) + G1(1 - x + j) - G1(Rational(1 + j)) - G1(Rational(1 + j));
      add("logderiv-pair-harmonic", params, kDerivDigits, gsum, exact(pair_harmonic_rhs(m1, p, j), p));
    }
  }

  // rep(a/d) and rep((d-a)/d) for a = p mod d.
  for (std::uint32_t d = 2; d <= 10; ++d) {
    const std::uint32_t a = p % d;
    if (a == 0) continue;
    const std::int64_t fl = (p - 1) / d;
    ParamList params{{"d", std::int64_t{d}}, {"a", std::int64_t{a}}};
    add("rep-fraction", params, 1, PadicValue::from_integer(rep(make_rational(a, d), p), p, kExactDigits),
        PadicValue::from_integer(static_cast<std::int64_t>(p) - fl, p, kExactDigits));
    add("rep-fraction", params, 1, PadicValue::from_integer(rep(make_rational(d - a, d), p), p, kExactDigits),
        PadicValue::from_integer(fl + 1, p, kExactDigits));
  }
  return out;
}

}  // namespace padichyp
