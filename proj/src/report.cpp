#include "padichyp/report.hpp"

namespace padichyp {

CongruenceReport make_report(std::string claim, std::uint32_t p, ParamList params, int mod_power, const PadicValue& lhs,
                             const PadicValue& rhs) {
  CongruenceReport r;
  r.claim = std::move(claim);
  r.prime = p;
  r.params = std::move(params);
  r.mod_power = mod_power;
  r.pass = congruent_mod(lhs, rhs, mod_power);
  r.lhs = lhs;
  r.rhs = rhs;
  r.diff_valuation = (lhs - rhs).valuation_bound();
  return r;
}

}  // namespace padichyp
