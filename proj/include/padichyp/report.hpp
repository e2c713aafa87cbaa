#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "padichyp/padic.hpp"

namespace padichyp {

using ParamValue = std::variant<std::int64_t, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

/// One checked congruence instance: lhs ≡ rhs (mod p^mod_power).
struct CongruenceReport {
  std::string claim;
  std::uint32_t prime = 0;
  ParamList params;
  int mod_power = 0;
  PadicValue lhs = PadicValue::zero(3);
  PadicValue rhs = PadicValue::zero(3);
  // Certified lower bound on valuation(lhs - rhs); kExactPrecision for an exact zero.
  int diff_valuation = 0;
  bool pass = false;
  std::optional<double> ms;
};

// Builds a report, throwing PrecisionError if either side is known to less
// than p^mod_power.
CongruenceReport make_report(std::string claim, std::uint32_t p, ParamList params, int mod_power, const PadicValue& lhs,
                             const PadicValue& rhs);

}  // namespace padichyp
