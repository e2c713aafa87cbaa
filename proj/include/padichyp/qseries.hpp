#pragma once

// Truncated integer q-expansions of eta products and the two weight-4 cusp
// forms used by the harness.

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace padichyp {

/// sum_{n=0}^{M} c_n q^n with exact coefficients. offset is the leading power
/// of q the series was built with (coefficients below it are zero).
class QSeries {
 public:
  QSeries(int order, int offset, std::vector<std::int64_t> coeffs);

  int order() const { return order_; }
  int offset() const { return offset_; }
  // Coefficient of q^n for 0 <= n <= order(); throws std::out_of_range otherwise.
  std::int64_t coefficient(int n) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  // Coefficientwise a + k b; offsets must agree on which terms are zero.
  QSeries plus_scaled(const QSeries& b, std::int64_t k) const;

 private:
  int order_;
  int offset_;
  std::vector<std::int64_t> coeffs_;
};

/// (scale, exponent): the factor eta(scale z)^exponent.
using EtaFactor = std::pair<int, int>;

/// prod eta(scale z)^exponent to order M. The combined leading exponent
/// sum(scale * exponent) / 24 must be an integer; exponents must be >= 0.
/// Throws std::overflow_error if a coefficient leaves int64.
QSeries eta_product(const std::vector<EtaFactor>& factors, int order);

/// q prod (1 - q^{2n})^4 (1 - q^{4n})^4 = eta(2z)^4 eta(4z)^4.
QSeries gamma_coeffs(int order);

/// f_1 + 5 f_2 + 20 f_3 + 25 f_4 + 25 f_5, f_i = eta(z)^{5-i} eta(5z)^4 eta(25z)^{i-1}.
QSeries level25_coeffs(int order);

/// c^2 <= 4 p^3, i.e. |c| <= 2 p^{3/2}.
bool within_deligne_bound(std::int64_t c, std::uint32_t p);

// Writes "n,coefficient" rows for n = 1..order().
void write_csv(std::ostream& out, const QSeries& s);

}  // namespace padichyp
