#pragma once

// Exact integers and fractions. GMP keeps mpq_class canonical (positive
// denominator, reduced), which is the invariant every caller relies on.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace padichyp {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b"; throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals, e.g. "1/2, 1/3,2/3".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

Integer floor(const Rational& q);

// Fractional part q - floor(q), in [0, 1).
Rational fractional_part(const Rational& q);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

// Exponent of p in a nonzero integer.
int valuation(const Integer& n, std::uint32_t p);

}  // namespace padichyp
