#include "padichyp/hypergeometric.hpp"

#include <stdexcept>
#include <string>

#include "padichyp/primes.hpp"

namespace padichyp {

Rational rising_factorial(const Rational& a, unsigned n) {
  Rational out = 1;
  for (unsigned k = 0; k < n; ++k) out *= a + k;
  out.canonicalize();
  return out;
}

void HypParams::validate() const {
  for (const Rational& b : bottom) {
    if (b.get_den() == 1 && b <= 0) throw std::invalid_argument("bottom parameter " + to_string(b) + " is not allowed");
  }
}

HypParams unit_bottom_params(std::vector<Rational> top, unsigned m) {
  HypParams h;
  h.bottom.assign(top.empty() ? 0 : top.size() - 1, Rational(1));
  h.top = std::move(top);
  h.z = 1;
  h.m = m;
  return h;
}

Rational truncated_hyp_exact(const HypParams& params) {
  params.validate();
  Rational term = 1;
  Rational sum = 1;
  for (unsigned k = 1; k <= params.m; ++k) {
    for (const Rational& a : params.top) term *= a + (k - 1);
    Rational den = k;
    for (const Rational& b : params.bottom) den *= b + (k - 1);
    term *= params.z;
    term /= den;
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

PadicValue truncated_hyp(const HypParams& params, std::uint32_t p, int precision) {
  require_odd_prime(p);
  if (params.m > p - 1) throw std::invalid_argument("truncation above p-1 brings p into k!");
  auto integral = [p](const Rational& q) { return !mpz_divisible_ui_p(q.get_den_mpz_t(), p); };
  for (const Rational& a : params.top) {
    if (!integral(a)) throw std::invalid_argument("top parameter " + to_string(a) + " is not p-integral");
  }
  for (const Rational& b : params.bottom) {
    if (!integral(b)) throw std::invalid_argument("bottom parameter " + to_string(b) + " is not p-integral");
  }
  if (!integral(params.z)) throw std::invalid_argument("argument is not p-integral");

  const Rational sum = truncated_hyp_exact(params);
  if (!integral(sum)) throw std::domain_error("truncated series is not p-integral at p = " + std::to_string(p));
  return PadicValue::from_rational(sum, p, precision).with_abs_precision(precision);
}

}  // namespace padichyp
