#include "tauq/vassiliev.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tauq::vassiliev {

LaurentElement LaurentElement::zero() { return LaurentElement(); }

LaurentElement LaurentElement::delta(long exponent) {
  LaurentElement e;
  e.add_term(exponent, Rational(1));
  return e;
}

Rational LaurentElement::coeff(long exponent) const {
  auto it = support_.find(exponent);
  return it == support_.end() ? Rational(0) : it->second;
}

void LaurentElement::add_term(long exponent, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = support_.emplace(exponent, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) support_.erase(it);
  }
}

LaurentElement LaurentElement::operator+(const LaurentElement& other) const {
  LaurentElement out = *this;
  for (const auto& [e, r] : other.support_) out.add_term(e, r);
  return out;
}

LaurentElement LaurentElement::operator-(const LaurentElement& other) const {
  LaurentElement out = *this;
  for (const auto& [e, r] : other.support_) out.add_term(e, -r);
  return out;
}

LaurentElement LaurentElement::operator*(const LaurentElement& other) const {
  return convolve(*this, other);
}

LaurentElement convolve(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [i, ri] : a.support())
    for (const auto& [j, rj] : b.support()) out.add_term(i + j, ri * rj);
  return out;
}

Rational augmentation(const LaurentElement& e) {
  Rational sum(0);
  for (const auto& [exp, r] : e.support()) sum += r;
  return sum;
}

std::pair<LaurentElement, Rational> divide_by_q_minus_1(const LaurentElement& e) {
  if (e.is_zero()) return {LaurentElement::zero(), Rational(0)};
  const long lo = e.support().begin()->first;
  const long hi = e.support().rbegin()->first;
  // Synthetic division of the shifted polynomial Sum c_{lo+i} q^i by (q-1);
  // the unit q^lo does not affect divisibility.
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& [exp, r] : e.support()) c[static_cast<std::size_t>(exp - lo)] = r;
  LaurentElement quotient;
  Rational carry(0);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry += c[i];
    quotient.add_term(lo + static_cast<long>(i) - 1, carry);
  }
  return {quotient, carry + c[0]};
}

int vassiliev_degree(const LaurentElement& e, int max_check) {
  if (e.is_zero())
    throw std::invalid_argument("vassiliev_degree: zero element (degree is +infinity)");
  if (max_check < 1) throw std::invalid_argument("vassiliev_degree: max_check must be >= 1");
  LaurentElement current = e;
  int degree = 0;
  while (degree < max_check) {
    auto [quotient, remainder] = divide_by_q_minus_1(current);
    if (remainder != 0) break;
    current = std::move(quotient);
    ++degree;
    if (current.is_zero()) break;  // cannot happen for nonzero input; guard anyway
  }
  return degree;
}

LaurentElement density_witness(long n) {
  if (n < 1) throw std::invalid_argument("density_witness: n must be >= 1");
  LaurentElement e = LaurentElement::delta(0);
  const Rational w = make_rational(-1, n);
  for (long i = 1; i <= n; ++i) e.add_term(i, w);
  return e;
}

Rational l2_distance_sq(const LaurentElement& a, const LaurentElement& b) {
  const LaurentElement diff = a - b;
  Rational sum(0);
  for (const auto& [exp, r] : diff.support()) sum += r * r;
  return sum;
}

AbelSum abel_partial_sum(double x, long max_terms) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("abel_partial_sum: need 0 < x < 1");
  if (max_terms < 1) throw std::invalid_argument("abel_partial_sum: max_terms must be >= 1");
  // Long double accumulation: the 1e-12 closed-form agreement is out of reach
  // for plain double power iteration near x = 1.
  long double sum = 0.0L, comp = 0.0L;
  long double xn = 1.0L;
  const long double lx = static_cast<long double>(x);
  long used = 0;
  for (long n = 1; n <= max_terms; ++n) {
    xn *= lx;
    const long double term = (n % 2 != 0 ? 2.0L : -2.0L) * xn;
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    used = n;
    if (std::fabs(static_cast<double>(term)) < 1e-15) break;
  }
  // Alternating geometric remainder: |S_T - 2x/(1+x)| = 2 x^{T+1}/(1+x).
  const double trunc = 2.0 * static_cast<double>(xn) * x / (1.0 + x);
  // Power-iteration drift is at most 2u Sum n x^n = 2u x/(1-x)^2 at unit
  // roundoff u = 2^-64; the compensated-sum residue is of the same order.
  const double fl = 3e-19 * x / ((1.0 - x) * (1.0 - x));
  return {static_cast<double>(sum), used, trunc, fl};
}

CheckReport abel_twist_sum(double x, long max_terms) {
  const AbelSum s = abel_partial_sum(x, max_terms);
  // Abel defect: |2x/(1+x) - 1| = (1-x)/(1+x).
  const double bound = s.truncation_bound + s.float_bound + (1.0 - x) / (1.0 + x);
  return CheckReport::make("abel-twist-sum x=" + std::to_string(x), s.value, 1.0, bound);
}

}  // namespace tauq::vassiliev
