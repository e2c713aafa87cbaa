#include "padichyp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "padichyp/characters.hpp"
#include "padichyp/combinatorics.hpp"
#include "padichyp/gfunction.hpp"
#include "padichyp/hypergeometric.hpp"
#include "padichyp/primes.hpp"
#include "padichyp/qseries.hpp"

namespace padichyp {

bool RunResult::all_pass() const {
  if (!errors.empty()) return false;
  return std::all_of(reports.begin(), reports.end(), [](const CongruenceReport& r) { return r.pass; });
}

std::vector<std::string> RunResult::failing_claims() const {
  std::set<std::string> out;
  for (const auto& r : reports) {
    if (!r.pass) out.insert(r.claim);
  }
  for (const auto& e : errors) out.insert(e.claim);
  return {out.begin(), out.end()};
}

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

PadicValue integer_value(const Integer& n, std::uint32_t p, int k) { return PadicValue::from_integer(n, p, k); }

// Exact identities have no prime; both sides are compared as rationals.
CongruenceReport exact_report(std::string claim, ParamList params, const Rational& lhs, const Rational& rhs) {
  constexpr std::uint32_t kDisplayPrime = 3;
  CongruenceReport r;
  r.claim = std::move(claim);
  r.prime = 0;
  r.params = std::move(params);
  r.mod_power = kExactPrecision;
  r.lhs = PadicValue::from_rational(lhs, kDisplayPrime, 8);
  r.rhs = PadicValue::from_rational(rhs, kDisplayPrime, 8);
  r.pass = lhs == rhs;
  r.diff_valuation = r.pass ? kExactPrecision : PadicValue::from_rational(lhs - rhs, kDisplayPrime, 8).valuation();
  return r;
}

Integer lcm_of(const std::vector<Rational>& args) {
  Integer l = 1;
  for (const Rational& a : args) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  return l;
}

// All argument multisets m_i/d_i, m_i in [1, d_i - 1], sorted.
std::vector<std::vector<Rational>> numerator_multisets(const std::vector<std::uint32_t>& ds) {
  std::set<std::vector<Rational>> seen;
  std::vector<Rational> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ds.size()) {
      std::vector<Rational> sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      seen.insert(std::move(sorted));
      return;
    }
    for (std::uint32_t m = 1; m < ds[i]; ++m) {
      cur.push_back(make_rational(m, ds[i]));
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return {seen.begin(), seen.end()};
}

struct GreeneCase {
  std::string d_label;
  std::vector<Rational> args;
};

std::vector<CongruenceReport> greene_reports(const std::vector<GreeneCase>& cases, std::uint32_t p, int precision,
                                             u64 sweep_bound) {
  std::vector<u64> queries;
  for (const auto& c : cases) g_function_queries(GArguments{p, c.args, precision}, queries);
  const GammaSweepTable table = gamma_batch(std::move(queries), p, precision, sweep_bound);
  const CharacterTable chars(p, precision);

  std::vector<CongruenceReport> out;
  for (const auto& c : cases) {
    const Integer l = lcm_of(c.args);
    if (!mpz_divisible_ui_p(Integer(p - 1).get_mpz_t(), l.get_ui())) {
      throw std::invalid_argument("p = " + std::to_string(p) + " is not 1 mod every denominator of " + join(c.args));
    }
    std::vector<Character> top;
    for (const Rational& a : c.args) {
      top.push_back(Character::of_order(p, static_cast<std::uint32_t>(a.get_den().get_ui()),
                                        static_cast<std::uint32_t>(a.get_num().get_ui())));
    }
    const std::vector<Character> bottom(c.args.size() - 1, Character::trivial(p));
    const PadicValue lhs = g_function(GArguments{p, c.args, precision}, table);
    const PadicValue rhs = greene_series_scaled(chars, top, bottom, 1);
    ParamList params;
    if (!c.d_label.empty()) params.emplace_back("d", c.d_label);
    params.emplace_back("args", join(c.args));
    out.push_back(make_report("g-greene", p, std::move(params), precision, lhs, rhs));
  }
  return out;
}

PadicValue trunc_unit_bottom(const std::vector<Rational>& tops, std::uint32_t p, int precision) {
  return truncated_hyp(unit_bottom_params(tops, p - 1), p, precision);
}

}  // namespace

// ---- filters ----------------------------------------------------------------

std::optional<std::string> exclude_all_one_mod(std::uint32_t p, const std::vector<std::uint32_t>& ds) {
  for (std::uint32_t d : ds) {
    if ((p - 1) % d != 0) return "p mod " + std::to_string(d) + " = " + std::to_string(p % d) + ", need 1";
  }
  return std::nullopt;
}

std::optional<std::string> exclude_pm_one(std::uint32_t p, std::uint32_t d) {
  if (p % d == 0) return "p divides d = " + std::to_string(d);
  if (!plus_minus_one_mod(p, d)) return "p mod " + std::to_string(d) + " = " + std::to_string(p % d) + ", need ±1";
  return std::nullopt;
}

std::optional<std::string> exclude_pair(std::uint32_t p, std::uint32_t d1, std::uint32_t d2) {
  if (auto why = exclude_pm_one(p, d1)) return why;
  return exclude_pm_one(p, d2);
}

std::optional<std::string> exclude_quad(std::uint32_t p, std::uint32_t d, std::uint32_t r) {
  if (p % d == 0) return "p divides d = " + std::to_string(d);
  if (quad_admissible(p, d, r)) return std::nullopt;
  const std::uint32_t r2 = r * r % d;
  if (r2 != 1 && r2 != d - 1) {
    return "p mod " + std::to_string(d) + " = " + std::to_string(p % d) + ", need ±1 (r^2 is not ±1 mod d)";
  }
  return "p mod " + std::to_string(d) + " = " + std::to_string(p % d) + ", need ±1 or ±" + std::to_string(r);
}

// ---- single-prime checks ----------------------------------------------------

std::vector<CongruenceReport> check_g_greene(const std::vector<std::uint32_t>& ds, std::uint32_t p, int precision,
                                             u64 sweep_bound) {
  if (ds.size() < 2) throw std::invalid_argument("need at least two denominators");
  if (auto why = exclude_all_one_mod(p, ds)) throw std::invalid_argument(*why);
  std::vector<GreeneCase> cases;
  for (auto& args : numerator_multisets(ds)) cases.push_back({join(ds), std::move(args)});
  return greene_reports(cases, p, precision, sweep_bound);
}

CongruenceReport check_g_greene_args(const std::vector<Rational>& args, std::uint32_t p, int precision,
                                     u64 sweep_bound) {
  return greene_reports({{"", args}}, p, precision, sweep_bound).front();
}

CongruenceReport check_g_trunc(const std::vector<Rational>& args, std::uint32_t p, int precision, u64 sweep_bound) {
  const GArguments g{p, args, precision};
  g.validate();
  const Integer l = lcm_of(args);
  if (!mpz_divisible_ui_p(Integer(p - 1).get_mpz_t(), l.get_ui())) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not 1 mod every denominator");
  }
  const long n = static_cast<long>(args.size()) - 1;
  const Rational S = std::accumulate(args.begin(), args.end(), Rational(0));
  if (S < n - 1) throw std::invalid_argument("argument sum " + to_string(S) + " is below n-1");

  const PadicValue lhs = g_function(g, sweep_bound);
  PadicValue rhs = trunc_unit_bottom(args, p, precision);
  if (S == n - 1) {
    PadicValue delta = PadicValue::from_integer(1, p, precision);
    for (const Rational& a : args) delta = delta * gamma_p(Rational(1 - a), p, precision);
    rhs = rhs + PadicValue::from_integer(static_cast<std::int64_t>(p), p, precision) * delta;
  }
  return make_report("g-trunc", p, {{"args", join(args)}, {"delta", S == n - 1 ? "gamma" : "0"}}, 2, lhs, rhs);
}

CongruenceReport check_g2_trunc(std::uint32_t d, std::uint32_t p, int precision, u64 sweep_bound) {
  if (auto why = exclude_pm_one(p, d)) throw std::invalid_argument(*why);
  const std::vector<Rational> args{make_rational(1, d), make_rational(d - 1, d)};
  const PadicValue lhs = g_function(GArguments{p, args, precision}, sweep_bound);
  return make_report("g2-trunc", p, {{"d", std::int64_t{d}}}, 2, lhs, trunc_unit_bottom(args, p, precision));
}

CongruenceReport check_g3_trunc(std::uint32_t d, std::uint32_t p, int precision, u64 sweep_bound) {
  if (auto why = exclude_pm_one(p, d)) throw std::invalid_argument(*why);
  const std::vector<Rational> args{make_rational(1, 2), make_rational(1, d), make_rational(d - 1, d)};
  const PadicValue lhs = g_function(GArguments{p, args, precision}, sweep_bound);
  return make_report("g3-trunc", p, {{"d", std::int64_t{d}}}, 2, lhs, trunc_unit_bottom(args, p, precision));
}

std::vector<CongruenceReport> check_g4_pair(std::uint32_t d1, std::uint32_t d2, std::uint32_t p, int precision,
                                            u64 sweep_bound) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("d1, d2 must be at least 2");
  if (auto why = exclude_pair(p, d1, d2)) throw std::invalid_argument(*why);
  const std::vector<Rational> args{make_rational(1, d1), make_rational(d1 - 1, d1), make_rational(1, d2),
                                   make_rational(d2 - 1, d2)};
  const PadicValue lhs = g_function(GArguments{p, args, precision}, sweep_bound);
  const PadicValue s = s_factor_pair(d1, d2, p, precision);
  const PadicValue P = PadicValue::from_integer(static_cast<std::int64_t>(p), p, precision);
  const PadicValue rhs = trunc_unit_bottom(args, p, precision) + s * P;
  const ParamList params{{"d1", std::int64_t{d1}}, {"d2", std::int64_t{d2}}};
  return {make_report("g4-pair-trunc", p, params, 3, lhs, rhs),
          make_report("g4-pair-sign", p, params, precision, s,
                      PadicValue::from_integer(s_factor_pair_sign(d1, d2, p), p, precision))};
}

CongruenceReport check_g4_quad(std::uint32_t d, std::uint32_t r, std::uint32_t p, int precision, u64 sweep_bound,
                               const char* claim) {
  if (r < 2 || r + 2 > d || std::gcd(r, d) != 1) throw std::invalid_argument("need 2 <= r <= d-2, gcd(r, d) = 1");
  if (auto why = exclude_quad(p, d, r)) throw std::invalid_argument(*why);
  const std::vector<Rational> args{make_rational(1, d), make_rational(r, d), make_rational(d - r, d),
                                   make_rational(d - 1, d)};
  const PadicValue lhs = g_function(GArguments{p, args, precision}, sweep_bound);
  const PadicValue P = PadicValue::from_integer(static_cast<std::int64_t>(p), p, precision);
  const PadicValue rhs = trunc_unit_bottom(args, p, precision) + s_factor_quad(d, r, p, precision) * P;
  return make_report(claim, p, {{"d", std::int64_t{d}}, {"r", std::int64_t{r}}}, 3, lhs, rhs);
}

CongruenceReport check_apery_gamma(std::uint32_t p) {
  require_odd_prime(p);
  const QSeries g = gamma_coeffs(static_cast<int>(p));
  return make_report("apery-gamma", p, {}, 2, integer_value(apery((p - 1) / 2), p, 2),
                     PadicValue::from_integer(g.coefficient(static_cast<int>(p)), p, 2));
}

std::vector<CongruenceReport> check_halves(std::uint32_t p, int precision) {
  require_odd_prime(p);
  const CharacterTable chars(p, precision);
  const std::vector<Character> top(4, Character::quadratic(p));
  const std::vector<Character> bottom(3, Character::trivial(p));
  const PadicValue P = PadicValue::from_integer(static_cast<std::int64_t>(p), p, precision);
  const PadicValue greene = greene_series_scaled(chars, top, bottom, 1) - P;  // -p^3 4F3 - p

  const std::int64_t gp = gamma_coeffs(static_cast<int>(p)).coefficient(static_cast<int>(p));
  // Two integers bounded by 2p^{3/2} + p that agree mod p^4 are equal.
  const double bound = 2.0 * std::pow(static_cast<double>(p), 1.5) + p;
  if (!within_deligne_bound(gp, p) || 2.0 * bound >= std::pow(static_cast<double>(p), precision)) {
    throw std::logic_error("coefficient bound does not certify exact equality at p = " + std::to_string(p));
  }
  const std::vector<Rational> halves(4, make_rational(1, 2));
  return {make_report("halves-trunc", p, {}, 2, trunc_unit_bottom(halves, p, precision), greene),
          make_report("halves-greene", p, {}, precision, greene, PadicValue::from_integer(gp, p, precision))};
}

std::vector<CongruenceReport> check_level25(std::uint32_t p, int precision, u64 sweep_bound) {
  require_odd_prime(p);
  if (p == 5) throw std::invalid_argument("the level-25 congruence excludes p = 5");
  const std::vector<Rational> fifths{make_rational(1, 5), make_rational(2, 5), make_rational(3, 5),
                                     make_rational(4, 5)};
  const std::int64_t c = level25_coeffs(static_cast<int>(p)).coefficient(static_cast<int>(p));
  return {make_report("level25", p, {}, 3, trunc_unit_bottom(fifths, p, precision),
                      PadicValue::from_integer(c, p, precision)),
          check_g4_quad(5, 2, p, precision, sweep_bound, "level25-companion")};
}

std::vector<CongruenceReport> check_rising_sums(std::uint32_t p, std::uint64_t seed, int samples) {
  require_odd_prime(p);
  const unsigned top = 2 * (p - 1);
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * p));
  auto draw = [&](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };

  std::vector<std::vector<unsigned>> tuples;
  for (int i = 0; i < samples; ++i) {
    std::vector<unsigned> a;
    const unsigned n = draw(1, 5);
    unsigned left = top - 1;  // keep T < 2(p-1)
    for (unsigned k = 0; k < n && left > 0; ++k) {
      const unsigned ai = draw(1, std::min(left, p));
      a.push_back(ai);
      left -= ai;
    }
    tuples.push_back(std::move(a));
  }
  // Boundary T = 2(p-1): random compositions.
  tuples.push_back({p - 1, p - 1});
  for (int i = 0; i < std::max(samples / 5, 1); ++i) {
    const unsigned n = draw(1, std::min(5u, top));
    std::vector<unsigned> a(n, 1);
    for (unsigned rest = top - n; rest > 0; --rest) ++a[rng() % n];
    tuples.push_back(std::move(a));
  }

  std::vector<CongruenceReport> out;
  for (const auto& a : tuples) {
    const unsigned T = std::accumulate(a.begin(), a.end(), 0u);
    const bool boundary = T == top;
    ParamList params{{"a", join(a)}, {"T", std::int64_t{T}}};
    out.push_back(make_report("rising-sum-first", p, params, 1, rising_sum_first(a, p),
                                                                                 PadicValue::from_integer(boundary ? 1 : 0, p, 1)));
    out.push_back(make_report("rising-sum-second", p, params, 1, rising_sum_second(a, p),
                                                                                   PadicValue::from_integer(boundary ? -1 : 0, p, 1)));
  }
  return out;
}

std::vector<CongruenceReport> check_power_sums(std::uint32_t p) {
  require_odd_prime(p);
  std::vector<CongruenceReport> out;
  for (unsigned k = 1; k <= 2 * (p - 1); ++k) {
    const std::int64_t expected = (k % (p - 1) == 0) ? -1 : 0;
    out.push_back(make_report("power-sum", p, {{"k", std::int64_t{k}}}, 1,
                              PadicValue::from_integer(power_sum_mod(p, k), p, 1),
                              PadicValue::from_integer(expected, p, 1)));
  }
  return out;
}

std::vector<CongruenceReport> check_bin_harmonic(std::uint64_t seed) {
  std::vector<CongruenceReport> out;
  for (unsigned m = 1; m <= 30; ++m) {
    for (unsigned n = 1; n <= m; ++n) {
      out.push_back(exact_report("bin-harmonic-1", {{"m", std::int64_t{m}}, {"n", std::int64_t{n}}},
                                 bin_harmonic_id1(m, n), 0));
    }
  }
  std::mt19937_64 rng(seed);
  auto small = [&] { return static_cast<long>(rng() % 19) - 9; };
  std::vector<std::pair<Rational, Rational>> cs{{1, 0}, {0, 1}};
  for (int i = 0; i < 2; ++i) {
    cs.emplace_back(Rational(small(), 1 + rng() % 7), Rational(small(), 1 + rng() % 7));
    cs.back().first.canonicalize();
    cs.back().second.canonicalize();
  }
  for (unsigned l = 2; l <= 20; ++l) {
    for (unsigned m = (l + 1) / 2; m < l; ++m) {
      for (unsigned n = (l + 1) / 2; n <= m; ++n) {
        for (const auto& [c1, c2] : cs) {
          ParamList params{{"l", std::int64_t{l}}, {"m", std::int64_t{m}}, {"n", std::int64_t{n}},
                           {"c1", to_string(c1)}, {"c2", to_string(c2)}};
          out.push_back(exact_report("bin-harmonic-2", std::move(params), bin_harmonic_id2(l, m, n, c1, c2), 0));
        }
      }
    }
  }
  return out;
}

// ---- planning and running ---------------------------------------------------

namespace {

struct Task {
  std::string check;
  std::uint32_t prime;
  std::function<std::vector<CongruenceReport>()> run;
};

struct Plan {
  std::vector<Task> tasks;
  std::vector<Skipped> skipped;
};

struct CheckDef {
  std::string name;
  std::vector<std::string> claims;
  std::uint32_t lo = 0, hi = 0;  // lo = hi = 0: runs once, without a prime
  std::function<void(std::uint32_t, const RunConfig&, Plan&)> plan;
};

const std::vector<std::vector<std::uint32_t>> kGreeneGrid{{2, 2}, {3, 3}, {2, 3, 3}, {2, 2, 2, 2}, {5, 5, 5, 5}};
const std::vector<std::uint32_t> kDGrid{3, 4, 5, 6};
const std::vector<std::pair<std::uint32_t, std::uint32_t>> kPairGrid{{2, 2}, {2, 3}, {3, 4}, {2, 5}};
const std::vector<std::pair<std::uint32_t, std::uint32_t>> kQuadGrid{{5, 2}, {8, 3}, {12, 5}};

std::vector<std::vector<Rational>> default_trunc_args() {
  auto q = [](long a, long b) { return make_rational(a, b); };
  return {{q(1, 2), q(1, 2)},
          {q(1, 3), q(2, 3)},
          {q(1, 4), q(3, 4)},
          {q(1, 2), q(1, 2), q(1, 2)},
          {q(1, 2), q(1, 2), q(1, 2), q(1, 2)},
          {q(1, 4), q(3, 4), q(1, 2), q(1, 2)},
          {q(1, 5), q(2, 5), q(3, 5), q(4, 5)}};
}

int prec(const RunConfig& c, int fallback) { return c.precision.value_or(fallback); }

std::vector<std::uint32_t> d_grid(const RunConfig& c) { return c.d.empty() ? kDGrid : c.d; }

std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_grid(const RunConfig& c) {
  if (c.d.empty() && !c.d2) return kPairGrid;
  if (c.d.size() != 1 || !c.d2) throw std::invalid_argument("the pair check takes a single --d with --d2");
  return {{c.d.front(), *c.d2}};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> quad_grid(const RunConfig& c) {
  if (c.d.empty() && !c.r) return kQuadGrid;
  if (c.d.size() != 1 || !c.r) throw std::invalid_argument("the quad check takes a single --d with --r");
  return {{c.d.front(), *c.r}};
}

void skip(Plan& plan, const std::string& check, std::uint32_t p, ParamList params, std::string reason) {
  plan.skipped.push_back({check, p, std::move(params), std::move(reason)});
}

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;

    v.push_back({"g-greene", {"g-greene"}, 7, 61, [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   std::vector<GreeneCase> cases;
                   if (c.args) {
                     std::vector<std::uint32_t> ds;
                     for (const Rational& a : *c.args) ds.push_back(static_cast<std::uint32_t>(a.get_den().get_ui()));
                     if (auto why = exclude_all_one_mod(p, ds)) {
                       skip(plan, "g-greene", p, {{"args", join(*c.args)}}, *why);
                     } else {
                       cases.push_back({"", *c.args});
                     }
                   } else {
                     const auto grid = c.d.empty() ? kGreeneGrid : std::vector<std::vector<std::uint32_t>>{c.d};
                     for (const auto& ds : grid) {
                       if (c.n && ds.size() != static_cast<std::size_t>(*c.n) + 1) continue;
                       if (auto why = exclude_all_one_mod(p, ds)) {
                         skip(plan, "g-greene", p, {{"d", join(ds)}}, *why);
                         continue;
                       }
                       for (auto& args : numerator_multisets(ds)) cases.push_back({join(ds), std::move(args)});
                     }
                   }
                   if (cases.empty()) return;
                   const int N = prec(c, 4);
                   const u64 bound = c.sweep_bound;
                   plan.tasks.push_back({"g-greene", p, [cases, p, N, bound] {
                                           return greene_reports(cases, p, N, bound);
                                         }});
                 }});

    v.push_back({"g-trunc", {"g-trunc"}, 3, 97, [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   const auto sets = c.args ? std::vector<std::vector<Rational>>{*c.args} : default_trunc_args();
                   std::vector<std::vector<Rational>> todo;
                   for (const auto& args : sets) {
                     if (c.n && args.size() != static_cast<std::size_t>(*c.n) + 1) continue;
                     std::vector<std::uint32_t> ds;
                     for (const Rational& a : args) ds.push_back(static_cast<std::uint32_t>(a.get_den().get_ui()));
                     if (auto why = exclude_all_one_mod(p, ds)) {
                       skip(plan, "g-trunc", p, {{"args", join(args)}}, *why);
                     } else {
                       todo.push_back(args);
                     }
                   }
                   if (todo.empty()) return;
                   const int N = prec(c, 2);
                   const u64 bound = c.sweep_bound;
                   plan.tasks.push_back({"g-trunc", p, [todo, p, N, bound] {
                                           std::vector<CongruenceReport> out;
                                           for (const auto& args : todo) out.push_back(check_g_trunc(args, p, N, bound));
                                           return out;
                                         }});
                 }});

    auto single_d = [](const char* name, auto fn) {
      return [name, fn](std::uint32_t p, const RunConfig& c, Plan& plan) {
        std::vector<std::uint32_t> todo;
        for (std::uint32_t d : d_grid(c)) {
          if (d < 2) throw std::invalid_argument("d must be at least 2");
          if (auto why = exclude_pm_one(p, d)) {
            skip(plan, name, p, {{"d", std::int64_t{d}}}, *why);
          } else {
            todo.push_back(d);
          }
        }
        if (todo.empty()) return;
        const int N = prec(c, 2);
        const u64 bound = c.sweep_bound;
        plan.tasks.push_back({name, p, [todo, p, N, bound, fn] {
                                std::vector<CongruenceReport> out;
                                for (std::uint32_t d : todo) out.push_back(fn(d, p, N, bound));
                                return out;
                              }});
      };
    };
    v.push_back({"g2-trunc", {"g2-trunc"}, 7, 97,
                 single_d("g2-trunc", [](std::uint32_t d, std::uint32_t p, int N, u64 b) { return check_g2_trunc(d, p, N, b); })});
    v.push_back({"g3-trunc", {"g3-trunc"}, 7, 97,
                 single_d("g3-trunc", [](std::uint32_t d, std::uint32_t p, int N, u64 b) { return check_g3_trunc(d, p, N, b); })});

    v.push_back({"g4-pair", {"g4-pair-trunc", "g4-pair-sign"}, 3, 97,
                 [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   std::vector<std::pair<std::uint32_t, std::uint32_t>> todo;
                   for (auto [d1, d2] : pair_grid(c)) {
                     if (auto why = exclude_pair(p, d1, d2)) {
                       skip(plan, "g4-pair", p, {{"d1", std::int64_t{d1}}, {"d2", std::int64_t{d2}}}, *why);
                     } else {
                       todo.emplace_back(d1, d2);
                     }
                   }
                   if (todo.empty()) return;
                   const int N = prec(c, 3);
                   const u64 bound = c.sweep_bound;
                   plan.tasks.push_back({"g4-pair", p, [todo, p, N, bound] {
                                           std::vector<CongruenceReport> out;
                                           for (auto [d1, d2] : todo) {
                                             for (auto& r : check_g4_pair(d1, d2, p, N, bound)) out.push_back(std::move(r));
                                           }
                                           return out;
                                         }});
                 }});

    v.push_back({"g4-quad-trunc", {"g4-quad-trunc"}, 3, 97, [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   std::vector<std::pair<std::uint32_t, std::uint32_t>> todo;
                   for (auto [d, r] : quad_grid(c)) {
                     if (auto why = exclude_quad(p, d, r)) {
                       skip(plan, "g4-quad-trunc", p, {{"d", std::int64_t{d}}, {"r", std::int64_t{r}}}, *why);
                     } else {
                       todo.emplace_back(d, r);
                     }
                   }
                   if (todo.empty()) return;
                   const int N = prec(c, 3);
                   const u64 bound = c.sweep_bound;
                   plan.tasks.push_back({"g4-quad-trunc", p, [todo, p, N, bound] {
                                           std::vector<CongruenceReport> out;
                                           for (auto [d, r] : todo) out.push_back(check_g4_quad(d, r, p, N, bound));
                                           return out;
                                         }});
                 }});

    v.push_back({"apery-gamma", {"apery-gamma"}, 3, 97, [](std::uint32_t p, const RunConfig&, Plan& plan) {
                   plan.tasks.push_back({"apery-gamma", p, [p] { return std::vector{check_apery_gamma(p)}; }});
                 }});

    v.push_back({"halves", {"halves-trunc", "halves-greene"}, 7, 61, [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   const int N = prec(c, 4);
                   plan.tasks.push_back({"halves", p, [p, N] { return check_halves(p, N); }});
                 }});

    v.push_back({"level25", {"level25", "level25-companion"}, 3, 97,
                 [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   if (p == 5) {
                     skip(plan, "level25", p, {}, "p = 5 is excluded");
                     return;
                   }
                   const int N = prec(c, 3);
                   const u64 bound = c.sweep_bound;
                   plan.tasks.push_back({"level25", p, [p, N, bound] { return check_level25(p, N, bound); }});
                 }});

    v.push_back({"gamma-suite",
                 {"rep-reflection", "rep-fraction", "gamma-reflection", "gamma-functional", "gamma-continuity",
                  "gamma-taylor", "gamma-shift", "gamma-factorial-mod-p", "gamma-pair-binomial", "logderiv-step",
                  "logderiv-square-step", "logderiv-reflection", "logderiv-square-reflection", "logderiv-stability",
                  "logderiv-second-order", "logderiv-harmonic", "logderiv-harmonic-square", "logderiv-pair-harmonic"},
                 7, 13, [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   if (p < 7) {
                     skip(plan, "gamma-suite", p, {}, "derivative congruences need p >= 7");
                     return;
                   }
                   const u64 bound = c.sweep_bound;
                   plan.tasks.push_back({"gamma-suite", p, [p, bound] {
                                           const auto xs = default_gamma_samples(p);
                                           return check_gamma_suite(p, xs, bound);
                                         }});
                 }});

    v.push_back({"rising-sums", {"rising-sum-first", "rising-sum-second"}, 5, 13, [](std::uint32_t p, const RunConfig& c, Plan& plan) {
                   const std::uint64_t seed = c.seed;
                   plan.tasks.push_back({"rising-sums", p, [p, seed] { return check_rising_sums(p, seed); }});
                 }});

    v.push_back({"power-sum", {"power-sum"}, 3, 13, [](std::uint32_t p, const RunConfig&, Plan& plan) {
                   plan.tasks.push_back({"power-sum", p, [p] { return check_power_sums(p); }});
                 }});

    v.push_back({"bin-harmonic", {"bin-harmonic-1", "bin-harmonic-2"}, 0, 0,
                 [](std::uint32_t, const RunConfig& c, Plan& plan) {
                   const std::uint64_t seed = c.seed;
                   plan.tasks.push_back({"bin-harmonic", 0, [seed] { return check_bin_harmonic(seed); }});
                 }});
    return v;
  }();
  return defs;
}

const CheckDef& find_check(const std::string& name) {
  for (const auto& d : checks()) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

void plan_check(const CheckDef& def, const RunConfig& config, Plan& plan) {
  if (def.lo == 0) {
    def.plan(0, config, plan);
    return;
  }
  const std::uint32_t lo = std::max<std::uint32_t>(config.p_lo.value_or(def.lo), 3);
  const std::uint32_t hi = config.p_hi.value_or(def.hi);
  if (hi > config.prime_bound) {
    throw std::invalid_argument("prime range exceeds the configured bound " + std::to_string(config.prime_bound));
  }
  for (std::uint32_t p : primes_in_range(lo, hi)) def.plan(p, config, plan);
}

RunResult execute(Plan plan, const RunConfig& config) {
  const std::size_t count = plan.tasks.size();
  std::vector<std::vector<CongruenceReport>> results(count);
  std::vector<std::optional<std::string>> failures(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = plan.tasks[i].run();
      } catch (const std::exception& e) {
        failures[i] = e.what();
        continue;
      }
      if (config.timing) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : results[i]) r.ms = ms;
      }
    }
  };

  int jobs = config.jobs > 0 ? config.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunResult out;
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) out.errors.push_back({plan.tasks[i].check, plan.tasks[i].prime, *failures[i]});
    for (auto& r : results[i]) out.reports.push_back(std::move(r));
  }
  out.skipped = std::move(plan.skipped);
  auto key_less = [](const auto& a, const auto& b) {
    return std::tie(a.claim, a.prime) < std::tie(b.claim, b.prime);
  };
  std::stable_sort(out.reports.begin(), out.reports.end(), key_less);
  std::stable_sort(out.skipped.begin(), out.skipped.end(), key_less);
  std::stable_sort(out.errors.begin(), out.errors.end(), key_less);
  return out;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : checks()) v.push_back(d.name);
    return v;
  }();
  return names;
}

std::optional<std::string> check_for_claim(const std::string& claim) {
  for (const auto& d : checks()) {
    if (d.name == claim) return d.name;
    if (std::find(d.claims.begin(), d.claims.end(), claim) != d.claims.end()) return d.name;
  }
  return std::nullopt;
}

RunResult run_check(const std::string& name, const RunConfig& config) {
  const auto owner = check_for_claim(name);
  if (!owner) throw std::invalid_argument("unknown claim id '" + name + "'");
  Plan plan;
  plan_check(find_check(*owner), config, plan);
  RunResult result = execute(std::move(plan), config);
  if (*owner != name) {
    std::erase_if(result.reports, [&](const CongruenceReport& r) { return r.claim != name; });
  }
  return result;
}

RunResult run_all(const RunConfig& config) {
  Plan plan;
  for (const auto& def : checks()) plan_check(def, config, plan);
  return execute(std::move(plan), config);
}

}  // namespace padichyp
