// End-to-end acceptance run: one PASS/FAIL line per criterion with its time
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "padichyp/report_io.hpp"
#include "padichyp/verify.hpp"

using namespace padichyp;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

RunConfig range(std::uint32_t lo, std::uint32_t hi) {
  RunConfig c;
  c.p_lo = lo;
  c.p_hi = hi;
  return c;
}

bool has_prime(const RunResult& r, const std::string& claim, std::uint32_t p) {
  for (const auto& x : r.reports) {
    if (x.claim == claim && x.prime == p && x.pass) return true;
  }
  return false;
}

Outcome summarize(const std::vector<RunResult>& runs) {
  std::size_t total = 0, failed = 0, errors = 0, skipped = 0;
  for (const auto& r : runs) {
    total += r.reports.size();
    skipped += r.skipped.size();
    errors += r.errors.size();
    for (const auto& x : r.reports) failed += !x.pass;
  }
  Outcome o;
  o.ok = total > 0 && failed == 0 && errors == 0;
  o.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " reports pass, " +
             std::to_string(errors) + " errors, " + std::to_string(skipped) + " skipped";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria{
      {1, "G equals the Greene series mod p^4, 7 <= p <= 61", 30,
       [] { return summarize({run_check("g-greene", range(7, 61))}); }},
      {2, "(1/d, 1-1/d) congruence mod p^2, d in 3..6, 7 <= p <= 97", 10,
       [] { return summarize({run_check("g2-trunc", range(7, 97))}); }},
      {3, "(1/2, 1/d, 1-1/d) congruence mod p^2, d in 3..6, 7 <= p <= 97", 10,
       [] { return summarize({run_check("g3-trunc", range(7, 97))}); }},
      {4, "paired congruence mod p^3 with s(p) sign agreement, p <= 97", 20,
       [] {
         const auto r = run_check("g4-pair", range(3, 97));
         Outcome o = summarize({r});
         bool sign = false;
         for (const auto& x : r.reports) sign |= x.claim == "g4-pair-sign";
         o.ok = o.ok && sign;
         return o;
       }},
      {5, "quad congruence mod p^3, (d, r) in {(5,2), (8,3), (12,5)}, p <= 97", 20,
       [] { return summarize({run_check("g4-quad-trunc", range(3, 97))}); }},
      {6, "Apery / gamma(p) congruence mod p^2, odd p <= 97", 5,
       [] {
         const auto r = run_check("apery-gamma", range(3, 97));
         Outcome o = summarize({r});
         o.ok = o.ok && has_prime(r, "apery-gamma", 3) && has_prime(r, "apery-gamma", 5);
         return o;
       }},
      {7, "scaled Greene 4F3 of quadratic characters minus p equals gamma(p), 7 <= p <= 61", 20,
       [] { return summarize({run_check("halves-greene", range(7, 61))}); }},
      {8, "level-25 truncated 4F3 mod p^3 and its G companion, p <= 97, p != 5", 30,
       [] {
         const auto r = run_check("level25", range(3, 97));
         Outcome o = summarize({r});
         o.ok = o.ok && has_prime(r, "level25", 3) && has_prime(r, "level25-companion", 97);
         return o;
       }},
      {9, "gamma, log-derivative, P/Q, power-sum and binomial-harmonic suites", 60,
       [] {
         return summarize({run_check("gamma-suite", range(7, 13)), run_check("rising-sums", range(7, 13)),
                           run_check("power-sum", range(7, 13)), run_check("bin-harmonic", RunConfig{})});
       }},
      {10, "criterion 8 JSON is byte-identical at 1 and 8 workers", 60,
       [] {
         RunConfig one = range(3, 97), eight = range(3, 97);
         eight.jobs = 8;
         const std::string a = format_json(run_check("level25", one));
         const std::string b = format_json(run_check("level25", eight));
         return Outcome{a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && secs <= c.limit_s;
    failures += !ok;
    std::printf("criterion %2d %s  %.2fs (limit %.0fs, tolerance: exact at the stated modulus)  %s; %s\n", c.id,
                ok ? "PASS" : "FAIL", secs, c.limit_s, c.what, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
