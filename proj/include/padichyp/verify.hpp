#pragma once

// Named congruence checks over prime ranges, the prime-class filters they
// use, and a deterministic parallel runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padichyp/gamma.hpp"
#include "padichyp/report.hpp"

namespace padichyp {

struct Skipped {
  std::string claim;
  std::uint32_t prime = 0;
  ParamList params;
  std::string reason;
};

struct TaskError {
  std::string claim;
  std::uint32_t prime = 0;
  std::string message;
};

struct RunResult {
  std::vector<CongruenceReport> reports;
  std::vector<Skipped> skipped;
  std::vector<TaskError> errors;

  bool all_pass() const;
  // Claim ids with at least one failing report, sorted and unique.
  std::vector<std::string> failing_claims() const;
};

struct RunConfig {
  std::optional<std::uint32_t> p_lo, p_hi;  // overrides the per-check default range
  std::optional<int> precision;             // overrides the G / gamma precision
  std::vector<std::uint32_t> d;             // overrides the d grid
  std::optional<std::uint32_t> d2, r;
  std::optional<int> n;                     // keeps only grid entries with n+1 arguments
  std::optional<std::vector<Rational>> args;
  int jobs = 1;
  std::uint64_t seed = 20260101;
  u64 sweep_bound = kDefaultSweepBound;
  std::uint32_t prime_bound = 500;
  bool timing = false;
};

/// Names accepted by run_check, in the order check-all runs them.
const std::vector<std::string>& check_names();

/// The check that emits a given report claim id (a check name maps to itself).
std::optional<std::string> check_for_claim(const std::string& claim);

/// Runs one check (or the check owning a report claim id, keeping only that
/// claim's reports). Throws std::invalid_argument for unknown names and bad
/// configurations.
RunResult run_check(const std::string& name, const RunConfig& config);
RunResult run_all(const RunConfig& config);

// ---- prime-class filters -------------------------------------------------
// Each returns std::nullopt when p is admissible, otherwise the reason.

std::optional<std::string> exclude_all_one_mod(std::uint32_t p, const std::vector<std::uint32_t>& ds);
std::optional<std::string> exclude_pm_one(std::uint32_t p, std::uint32_t d);
std::optional<std::string> exclude_pair(std::uint32_t p, std::uint32_t d1, std::uint32_t d2);
std::optional<std::string> exclude_quad(std::uint32_t p, std::uint32_t d, std::uint32_t r);

// ---- single-prime checks --------------------------------------------------

// G equals the scaled Greene series for every numerator choice m_i in
// [1, d_i - 1] (as a multiset), mod p^precision.
std::vector<CongruenceReport> check_g_greene(const std::vector<std::uint32_t>& ds, std::uint32_t p, int precision,
                                             u64 sweep_bound = kDefaultSweepBound);
// Same, for an explicit argument list.
CongruenceReport check_g_greene_args(const std::vector<Rational>& args, std::uint32_t p, int precision,
                                     u64 sweep_bound = kDefaultSweepBound);

// G ≡ truncated series + delta p (mod p^2). Throws std::invalid_argument when
// the argument sum is below n-1 or p is not 1 mod every denominator.
CongruenceReport check_g_trunc(const std::vector<Rational>& args, std::uint32_t p, int precision = 2,
                               u64 sweep_bound = kDefaultSweepBound);
CongruenceReport check_g2_trunc(std::uint32_t d, std::uint32_t p, int precision = 2,
                                u64 sweep_bound = kDefaultSweepBound);
CongruenceReport check_g3_trunc(std::uint32_t d, std::uint32_t p, int precision = 2,
                                u64 sweep_bound = kDefaultSweepBound);
// Two reports: the mod p^3 congruence and the agreement of the two s(p) forms.
std::vector<CongruenceReport> check_g4_pair(std::uint32_t d1, std::uint32_t d2, std::uint32_t p, int precision = 3,
                                            u64 sweep_bound = kDefaultSweepBound);
CongruenceReport check_g4_quad(std::uint32_t d, std::uint32_t r, std::uint32_t p, int precision = 3,
                               u64 sweep_bound = kDefaultSweepBound, const char* claim = "g4-quad-trunc");

CongruenceReport check_apery_gamma(std::uint32_t p);
// mod p^2 truncated-vs-Greene report and the exact Greene-vs-gamma(p) report.
std::vector<CongruenceReport> check_halves(std::uint32_t p, int precision = 4);
// The mod p^3 conjecture report and the G-side companion for d = 5, r = 2.
std::vector<CongruenceReport> check_level25(std::uint32_t p, int precision = 3, u64 sweep_bound = kDefaultSweepBound);

std::vector<CongruenceReport> check_rising_sums(std::uint32_t p, std::uint64_t seed, int samples = 100);
std::vector<CongruenceReport> check_power_sums(std::uint32_t p);
std::vector<CongruenceReport> check_bin_harmonic(std::uint64_t seed);

}  // namespace padichyp
