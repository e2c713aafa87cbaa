#pragma once

// JSON, CSV and human-readable renderings of a RunResult.

#include <string>

#include "padichyp/verify.hpp"
#include "json.hpp"

namespace padichyp {

inline constexpr int kReportSchema = 1;

/// {val, unit, prec}: val is null for zero, prec is "exact" for exact values.
nlohmann::ordered_json padic_json(const PadicValue& x);
nlohmann::ordered_json report_json(const CongruenceReport& r);

std::string format_json(const RunResult& result);
// Columns: schema,claim,p,params,mod_power,lhs_val,lhs_unit,lhs_prec,
// rhs_val,rhs_unit,rhs_prec,diff_valuation,pass,ms
std::string format_csv(const RunResult& result);
std::string format_human(const RunResult& result);

}  // namespace padichyp
