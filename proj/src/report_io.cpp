#include "padichyp/report_io.hpp"

#include <sstream>

namespace padichyp {

using nlohmann::ordered_json;

namespace {

ordered_json exponent_json(int k) { return k == kExactPrecision ? ordered_json("exact") : ordered_json(k); }

ordered_json prime_json(std::uint32_t p) { return p == 0 ? ordered_json(nullptr) : ordered_json(p); }

ordered_json params_json(const ParamList& params) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : params) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

std::string params_text(const ParamList& params) {
  std::string s;
  for (const auto& [key, value] : params) {
    if (!s.empty()) s += ';';
    s += key + '=';
    std::visit([&](const auto& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
        s += v;
      } else {
        s += std::to_string(v);
      }
    }, value);
  }
  return s;
}

std::string scalar_text(const ordered_json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

ordered_json padic_json(const PadicValue& x) {
  ordered_json j;
  if (x.is_zero()) {
    j["val"] = nullptr;
    j["unit"] = "0";
  } else {
    j["val"] = x.valuation();
    j["unit"] = std::to_string(x.unit());
  }
  j["prec"] = exponent_json(x.abs_precision());
  return j;
}

ordered_json report_json(const CongruenceReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["claim"] = r.claim;
  j["p"] = prime_json(r.prime);
  j["params"] = params_json(r.params);
  j["mod_power"] = exponent_json(r.mod_power);
  j["lhs"] = padic_json(r.lhs);
  j["rhs"] = padic_json(r.rhs);
  j["diff_valuation"] = exponent_json(r.diff_valuation);
  j["pass"] = r.pass;
  j["ms"] = r.ms ? ordered_json(*r.ms) : ordered_json(nullptr);
  return j;
}

std::string format_json(const RunResult& result) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["reports"] = ordered_json::array();
  for (const auto& r : result.reports) doc["reports"].push_back(report_json(r));
  doc["skipped"] = ordered_json::array();
  for (const auto& s : result.skipped) {
    doc["skipped"].push_back({{"claim", s.claim}, {"p", prime_json(s.prime)}, {"params", params_json(s.params)},
                              {"reason", s.reason}});
  }
  doc["errors"] = ordered_json::array();
  for (const auto& e : result.errors) {
    doc["errors"].push_back({{"claim", e.claim}, {"p", prime_json(e.prime)}, {"message", e.message}});
  }
  return doc.dump(2) + "\n";
}

std::string format_csv(const RunResult& result) {
  std::ostringstream out;
  out << "schema,claim,p,params,mod_power,lhs_val,lhs_unit,lhs_prec,rhs_val,rhs_unit,rhs_prec,diff_valuation,pass,ms\n";
  for (const auto& r : result.reports) {
    const ordered_json j = report_json(r);
    out << kReportSchema << ',' << csv_quote(r.claim) << ',' << scalar_text(j["p"]) << ','
        << csv_quote(params_text(r.params)) << ',' << scalar_text(j["mod_power"]);
    for (const char* side : {"lhs", "rhs"}) {
      out << ',' << scalar_text(j[side]["val"]) << ',' << scalar_text(j[side]["unit"]) << ','
          << scalar_text(j[side]["prec"]);
    }
    out << ',' << scalar_text(j["diff_valuation"]) << ',' << (r.pass ? "true" : "false") << ','
        << scalar_text(j["ms"]) << '\n';
  }
  return out.str();
}

std::string format_human(const RunResult& result) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : result.reports) {
    passed += r.pass;
    out << (r.pass ? "PASS " : "FAIL ") << r.claim;
    if (r.prime) out << " p=" << r.prime;
    const std::string params = params_text(r.params);
    if (!params.empty()) out << " [" << params << ']';
    if (r.mod_power == kExactPrecision) {
      out << " exact";
    } else {
      out << " mod p^" << r.mod_power;
    }
    out << "  lhs=" << r.lhs.to_string() << " rhs=" << r.rhs.to_string();
    if (r.ms) out << "  " << *r.ms << " ms";
    out << '\n';
  }
  for (const auto& s : result.skipped) {
    out << "SKIP " << s.claim << " p=" << s.prime;
    const std::string params = params_text(s.params);
    if (!params.empty()) out << " [" << params << ']';
    out << ": " << s.reason << '\n';
  }
  for (const auto& e : result.errors) out << "ERROR " << e.claim << " p=" << e.prime << ": " << e.message << '\n';
  out << passed << '/' << result.reports.size() << " passed, " << result.skipped.size() << " skipped, "
      << result.errors.size() << " errors\n";
  return out.str();
}

}  // namespace padichyp
