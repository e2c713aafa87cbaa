// padichyp: evaluate p-adic gamma / G / Greene / truncated series values and
// run the named congruence checks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "padichyp/characters.hpp"
#include "padichyp/gfunction.hpp"
#include "padichyp/hypergeometric.hpp"
#include "padichyp/primes.hpp"
#include "padichyp/qseries.hpp"
#include "padichyp/report_io.hpp"
#include "padichyp/verify.hpp"

using namespace padichyp;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<std::uint32_t> p;
  std::string p_range;
  std::optional<int> precision;
  std::vector<std::uint32_t> d;
  std::optional<std::uint32_t> d2, r;
  std::optional<int> n;
  std::optional<unsigned> m;
  std::string args;
  std::string format = "human";
  std::string form = "gamma";
  int jobs = 1;
  std::uint64_t seed = RunConfig{}.seed;
  u64 sweep_bound = kDefaultSweepBound;
  bool timing = false;
  std::string out;
  std::string claim;
};

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--p-range expects A..B");
  const auto lo = std::stoul(text.substr(0, dots));
  const auto hi = std::stoul(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("--p-range is empty");
  return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

RunConfig make_config(const Options& o) {
  RunConfig c;
  if (!o.p_range.empty()) {
    std::tie(c.p_lo, c.p_hi) = parse_range(o.p_range);
  }
  if (o.p) c.p_lo = c.p_hi = *o.p;
  c.precision = o.precision;
  c.d = o.d;
  c.d2 = o.d2;
  c.r = o.r;
  c.n = o.n;
  if (!o.args.empty()) c.args = parse_rational_list(o.args);
  c.jobs = o.jobs;
  c.seed = o.seed;
  c.sweep_bound = o.sweep_bound;
  c.timing = o.timing;
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::uint32_t need_prime(const Options& o) {
  if (!o.p) throw std::invalid_argument("--p is required");
  require_odd_prime(*o.p);
  return *o.p;
}

std::vector<Rational> need_args(const Options& o) {
  if (o.args.empty()) throw std::invalid_argument("--args is required");
  return parse_rational_list(o.args);
}

// One value per input, in the selected format.
std::string render_values(const Options& o, const std::vector<std::pair<std::string, PadicValue>>& rows) {
  if (o.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& [input, v] : rows) doc.push_back({{"input", input}, {"value", padic_json(v)}});
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (o.format == "csv") {
    out << "input,val,unit,prec\n";
    for (const auto& [input, v] : rows) {
      const ordered_json j = padic_json(v);
      out << '"' << input << "\"," << (j["val"].is_null() ? "" : j["val"].dump()) << ',' << j["unit"].get<std::string>()
          << ',' << (j["prec"].is_string() ? j["prec"].get<std::string>() : j["prec"].dump()) << '\n';
    }
    return out.str();
  }
  for (const auto& [input, v] : rows) out << input << " = " << v.to_string() << '\n';
  return out.str();
}

int run_values(const Options& o, const std::string& command) {
  const std::uint32_t p = need_prime(o);
  const int N = o.precision.value_or(4);
  std::vector<std::pair<std::string, PadicValue>> rows;

  if (command == "gamma") {
    for (const Rational& x : need_args(o)) rows.emplace_back("Gamma_p(" + to_string(x) + ")", gamma_p(x, p, N));
  } else if (command == "gfun") {
    const auto args = need_args(o);
    std::string label;
    for (const Rational& a : args) label += (label.empty() ? "" : ",") + to_string(a);
    rows.emplace_back("G(" + label + ")", g_function(GArguments{p, args, N}, o.sweep_bound));
  } else if (command == "greene") {
    const auto args = need_args(o);
    std::vector<Character> top;
    std::string label;
    for (const Rational& a : args) {
      const auto den = static_cast<std::uint32_t>(a.get_den().get_ui());
      if (a <= 0 || a >= 1 || (p - 1) % den != 0) {
        throw std::invalid_argument("greene arguments must be m/d in (0, 1) with d | p-1");
      }
      top.push_back(Character::of_order(p, den, static_cast<std::uint32_t>(a.get_num().get_ui())));
      label += (label.empty() ? "" : ",") + to_string(a);
    }
    const std::vector<Character> bottom(top.size() - 1, Character::trivial(p));
    rows.emplace_back("scaled Greene(" + label + ")", greene_series_scaled(CharacterTable(p, N), top, bottom, 1));
  } else {
    const auto args = need_args(o);
    const unsigned m = o.m.value_or(p - 1);
    std::string label;
    for (const Rational& a : args) label += (label.empty() ? "" : ",") + to_string(a);
    rows.emplace_back("F(" + label + ")_" + std::to_string(m), truncated_hyp(unit_bottom_params(args, m), p, N));
  }
  emit(o, render_values(o, rows));
  return 0;
}

int run_qexp(const Options& o) {
  const int order = o.n.value_or(o.p ? static_cast<int>(*o.p) : 100);
  QSeries s = o.form == "level25" ? level25_coeffs(order) : gamma_coeffs(order);
  std::ostringstream out;
  write_csv(out, s);
  emit(o, out.str());
  return 0;
}

int run_checks(const Options& o, bool all) {
  const RunConfig cfg = make_config(o);
  const RunResult result = all ? run_all(cfg) : run_check(o.claim, cfg);
  if (o.format == "json") {
    emit(o, format_json(result));
  } else if (o.format == "csv") {
    emit(o, format_csv(result));
  } else {
    emit(o, format_human(result));
  }
  for (const auto& e : result.errors) std::cerr << "error: " << e.claim << " p=" << e.prime << ": " << e.message << '\n';
  const auto failing = result.failing_claims();
  if (!failing.empty()) {
    std::cerr << "failing claims:";
    for (const auto& c : failing) std::cerr << ' ' << c;
    std::cerr << '\n';
  }
  if (!result.errors.empty()) return kExitUsage;
  return failing.empty() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic hypergeometric functions and congruence checks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "odd prime");
    sub->add_option("--precision", o.precision, "p-adic precision (digits)");
    sub->add_option("--args", o.args, "comma-separated rationals, e.g. 1/2,1/3");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--sweep-bound", o.sweep_bound, "largest gamma sweep length");
    sub->add_option("--out", o.out, "write output to FILE");
  };

  auto* gamma = app.add_subcommand("gamma", "Gamma_p at each of --args");
  auto* gfun = app.add_subcommand("gfun", "G(--args)_p");
  auto* greene = app.add_subcommand("greene", "(-1)^n p^n times the Greene series with characters of --args");
  auto* trunc = app.add_subcommand("trunc", "truncated series with top parameters --args, bottoms 1, z = 1");
  for (auto* sub : {gamma, gfun, greene, trunc}) common(sub);
  trunc->add_option("--m", o.m, "truncation index (default p-1)");

  auto* qexp = app.add_subcommand("qexp", "q-expansion coefficients as CSV");
  qexp->add_option("--form", o.form)->check(CLI::IsMember({"gamma", "level25"}));
  qexp->add_option("--n", o.n, "order");
  qexp->add_option("--p", o.p, "order, when --n is not given");
  qexp->add_option("--out", o.out, "write output to FILE");

  auto* check = app.add_subcommand("check", "run one named check or claim id");
  check->add_option("claim", o.claim)->required();
  auto* check_all = app.add_subcommand("check-all", "run every check");
  for (auto* sub : {check, check_all}) {
    common(sub);
    sub->add_option("--p-range", o.p_range, "A..B");
    sub->add_option("--d", o.d, "denominator(s)")->delimiter(',');
    sub->add_option("--d2", o.d2);
    sub->add_option("--r", o.r);
    sub->add_option("--n", o.n, "keep only argument lists of length n+1");
    sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
    sub->add_option("--seed", o.seed, "seed for sampled grids");
    sub->add_flag("--timing", o.timing, "record per-task wall time");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*qexp) return run_qexp(o);
    if (*check) return run_checks(o, false);
    if (*check_all) return run_checks(o, true);
    for (auto* sub : {gamma, gfun, greene, trunc}) {
      if (*sub) return run_values(o, sub->get_name());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
