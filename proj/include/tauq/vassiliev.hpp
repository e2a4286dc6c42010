#pragma once

#include <map>

#include "tauq/check_report.hpp"
#include "tauq/rational.hpp"

namespace tauq::vassiliev {

/// Finitely supported exact-rational bilateral sequence: a group-ring element
/// Sum c_n q^n of the two-strand pure braid group. Canonical (no stored zero
/// coefficients).
class LaurentElement {
 public:
  LaurentElement() = default;

  static LaurentElement zero();
  static LaurentElement delta(long exponent);  // q^exponent

  const std::map<long, Rational>& support() const { return support_; }
  Rational coeff(long exponent) const;
  bool is_zero() const { return support_.empty(); }

  void add_term(long exponent, const Rational& r);

  LaurentElement operator+(const LaurentElement& other) const;
  LaurentElement operator-(const LaurentElement& other) const;
  LaurentElement operator*(const LaurentElement& other) const;  // convolution

 private:
  std::map<long, Rational> support_;
};

// Exact rational Cauchy product (same rule as the floating sequence module).
LaurentElement convolve(const LaurentElement& a, const LaurentElement& b);

// Sum of all coefficients; the value at q = 1. V_1 is its kernel.
Rational augmentation(const LaurentElement& e);

// Largest d <= max_check with (q-1)^d dividing e, by repeated exact synthetic
// division. e must be nonzero (the zero element has degree +infinity).
int vassiliev_degree(const LaurentElement& e, int max_check);

// Quotient and remainder of division by (q-1); remainder equals the
// augmentation, and the division is exact iff it is zero.
std::pair<LaurentElement, Rational> divide_by_q_minus_1(const LaurentElement& e);

// q^0 - (1/n) Sum_{i=1..n} q^i; augmentation 0, squared l2 distance to q^0
// exactly 1/n.
LaurentElement density_witness(long n);

// Exact Sum of squared coefficient differences.
Rational l2_distance_sq(const LaurentElement& a, const LaurentElement& b);

// Abel-regularized value of the divergent twist sum 2 - 2 + 2 - ...:
// Sum (-1)^{n+1} 2 x^n for 0 < x < 1, early-stopped below 1e-15; target 1.
// Bound combines the geometric-series truncation remainder with the analytic
// Abel defect (1-x)/(1+x) against the closed form 2x/(1+x).
CheckReport abel_twist_sum(double x, long max_terms);

// Partial sum and its distance bound to the closed form 2x/(1+x) (exposed so
// callers can report the closed-form cross-check separately).
struct AbelSum {
  double value;
  long terms_used;
  double truncation_bound;  // geometric remainder after terms_used terms
  double float_bound;       // worst-case accumulation error of the summation
};
AbelSum abel_partial_sum(double x, long max_terms);

}  // namespace tauq::vassiliev
