#pragma once

#include <cstddef>
#include <vector>

namespace tauq::biseq {

/// Truncated bilateral coefficient sequence: a finite window of real
/// coefficients at consecutive integer indices, plus a certified upper bound
/// on the mass discarded outside the window.
///
/// The element represented is Sum_n c_n q^n with q the generator of the
/// two-strand pure braid group; index n is the exponent of q. tail_bound = 0
/// means the element is exactly the finite sum. After convolutions the
/// tail_bound is the Cauchy-Schwarz propagated per-index error bound.
class BilateralSequence {
 public:
  // The designated zero sequence (lo = 0, single coefficient 0).
  BilateralSequence();

  // Throws std::invalid_argument on empty/non-finite coefficients or a
  // negative/NaN tail bound.
  BilateralSequence(long lo, std::vector<double> coefficients, double tail_bound = 0.0);

  static BilateralSequence zero();
  // Coefficient 1 at index n: the braid q^n.
  static BilateralSequence delta(long n);

  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coefficients_.size()) - 1; }
  std::size_t size() const { return coefficients_.size(); }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double tail_bound() const { return tail_bound_; }

  // Coefficient at index n (0 outside the window).
  double at(long n) const;
  // All represented coefficients exactly 0 and tail_bound 0.
  bool is_zero() const;

  BilateralSequence with_tail_bound(double tail_bound) const;

 private:
  long lo_;
  std::vector<double> coefficients_;
  double tail_bound_;
};

// Coefficientwise sum over the union window; tails add.
BilateralSequence add(const BilateralSequence& a, const BilateralSequence& b);

// Coefficientwise multiple; tail scales by |c|. Non-finite c rejected.
BilateralSequence scale(const BilateralSequence& a, double c);

// Exact Cauchy product over the represented supports, window
// [a.lo+b.lo, a.hi+b.hi]. Per output index the sum runs left-to-right in k
// over a's support (summation order is part of the contract). Propagated
// tail: ||a||2 * b.tail + ||b||2 * a.tail + a.tail * b.tail.
BilateralSequence convolve(const BilateralSequence& a, const BilateralSequence& b);

// l2 norm of the represented coefficients (compensated summation).
double l2_norm(const BilateralSequence& a);

// Keep indices |n| <= window; tail grows by the l2 norm of what was dropped.
// window must be >= 0.
BilateralSequence truncate(const BilateralSequence& a, long window);

// Same value at every index and same tail bound.
bool same_sequence(const BilateralSequence& a, const BilateralSequence& b);

}  // namespace tauq::biseq
