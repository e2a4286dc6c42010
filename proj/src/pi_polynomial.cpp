#include "tauq/pi_polynomial.hpp"

#include <numbers>

namespace tauq::fourier {

PiPolynomial PiPolynomial::constant(const Rational& r) { return term(0, r); }

PiPolynomial PiPolynomial::term(unsigned pi_power, const Rational& coeff) {
  PiPolynomial p;
  p.add_term(pi_power, coeff);
  return p;
}

Rational PiPolynomial::coeff(unsigned pi_power) const {
  auto it = terms_.find(pi_power);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PiPolynomial::add_term(unsigned pi_power, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(pi_power, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& other) {
  for (const auto& [j, r] : other.terms_) add_term(j, r);
  return *this;
}

PiPolynomial operator*(const Rational& c, const PiPolynomial& p) {
  PiPolynomial out;
  if (c == 0) return out;
  for (const auto& [j, r] : p.terms_) out.terms_.emplace(j, c * r);
  return out;
}

double PiPolynomial::evaluate() const {
  double sum = 0.0;
  unsigned reached = 0;
  double pi_pow = 1.0;
  for (const auto& [j, r] : terms_) {
    while (reached < j) {
      pi_pow *= std::numbers::pi;
      ++reached;
    }
    sum += to_double(r) * pi_pow;
  }
  return sum;
}

std::string PiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [j, r] : terms_) {
    const bool neg = r < 0;
    const Rational mag = neg ? Rational(-r) : r;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += to_string(mag);
    if (j == 1)
      out += "*pi";
    else if (j > 1)
      out += "*pi^" + std::to_string(j);
  }
  return out;
}

}  // namespace tauq::fourier
