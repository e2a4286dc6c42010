#pragma once

#include <gmpxx.h>

#include <string>

namespace tauq {

// Exact arbitrary-precision rational scalar.
using Rational = mpq_class;

// num/den in lowest terms, den > 0. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);

// base^exp with exp >= 0.
Rational rational_pow(const Rational& base, unsigned long exp);

// Deterministic conversion (mpq_get_d, round toward zero).
double to_double(const Rational& r);

// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

// Accepts "p", "p/q", optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace tauq
