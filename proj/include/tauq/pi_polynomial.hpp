#pragma once

#include <map>
#include <string>

#include "tauq/rational.hpp"

namespace tauq::fourier {

/// Exact scalar of the form Sum_j r_j * pi^j with rational r_j.
/// Canonical: no stored zero coefficients. Floating point enters only at
/// evaluate().
class PiPolynomial {
 public:
  PiPolynomial() = default;

  static PiPolynomial constant(const Rational& r);
  static PiPolynomial term(unsigned pi_power, const Rational& coeff);

  const std::map<unsigned, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(unsigned pi_power) const;

  void add_term(unsigned pi_power, const Rational& r);
  PiPolynomial& operator+=(const PiPolynomial& other);
  friend PiPolynomial operator*(const Rational& c, const PiPolynomial& p);
  bool operator==(const PiPolynomial& other) const = default;

  // Deterministic: terms in ascending pi power, each rational converted to
  // double then multiplied by the double power of pi.
  double evaluate() const;

  std::string str() const;  // e.g. "59 - 19/2*pi^2"

 private:
  std::map<unsigned, Rational> terms_;
};

}  // namespace tauq::fourier
