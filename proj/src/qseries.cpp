#include "padichyp/qseries.hpp"

#include <stdexcept>
#include <string>

namespace padichyp {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("q-series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("q-series coefficient overflow");
  return r;
}

}  // namespace

QSeries::QSeries(int order, int offset, std::vector<std::int64_t> coeffs)
    : order_(order), offset_(offset), coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("q-series needs exactly order + 1 coefficients");
  }
}

std::int64_t QSeries::coefficient(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("q^" + std::to_string(n) + " is beyond the truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::plus_scaled(const QSeries& b, std::int64_t k) const {
  if (b.order_ != order_) throw std::invalid_argument("q-series orders differ");
  std::vector<std::int64_t> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], checked_mul(k, b.coeffs_[i]));
  return QSeries(order_, std::min(offset_, b.offset_), std::move(out));
}

QSeries eta_product(const std::vector<EtaFactor>& factors, int order) {
  if (order < 1) throw std::invalid_argument("q-series order must be at least 1");
  long long lead = 0;
  for (const auto& [scale, exponent] : factors) {
    if (scale < 1) throw std::invalid_argument("eta scale must be positive");
    if (exponent < 0) throw std::invalid_argument("negative eta exponents are not supported");
    lead += static_cast<long long>(scale) * exponent;
  }
  if (lead % 24 != 0) throw std::invalid_argument("eta product has a non-integral leading exponent");
  const int offset = static_cast<int>(lead / 24);

  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
  if (offset > order) return QSeries(order, offset, std::move(c));
  const int width = order - offset;  // degree kept in the Euler product
  std::vector<std::int64_t> e(static_cast<std::size_t>(width) + 1, 0);
  e[0] = 1;
  for (const auto& [scale, exponent] : factors) {
    for (int rep = 0; rep < exponent; ++rep) {
      for (int k = scale; k <= width; k += scale) {
        // multiply by (1 - q^k) in place, top down
        for (int i = width; i >= k; --i) e[i] = checked_add(e[i], -e[i - k]);
      }
    }
  }
  for (int i = 0; i <= width; ++i) c[static_cast<std::size_t>(i + offset)] = e[static_cast<std::size_t>(i)];
  return QSeries(order, offset, std::move(c));
}

QSeries gamma_coeffs(int order) { return eta_product({{2, 4}, {4, 4}}, order); }

QSeries level25_coeffs(int order) {
  static constexpr std::int64_t kWeights[] = {1, 5, 20, 25, 25};
  QSeries f(order, 1, std::vector<std::int64_t>(static_cast<std::size_t>(order) + 1, 0));
  for (int i = 1; i <= 5; ++i) {
    const QSeries fi = eta_product({{1, 5 - i}, {5, 4}, {25, i - 1}}, order);
    f = f.plus_scaled(fi, kWeights[i - 1]);
  }
  return f;
}

bool within_deligne_bound(std::int64_t c, std::uint32_t p) {
  const __int128 lhs = static_cast<__int128>(c) * c;
  const __int128 rhs = static_cast<__int128>(4) * p * p * p;
  return lhs <= rhs;
}

void write_csv(std::ostream& out, const QSeries& s) {
  out << "n,coefficient\n";
  for (int n = 1; n <= s.order(); ++n) out << n << ',' << s.coefficient(n) << '\n';
}

}  // namespace padichyp
