#include "tauq/biseq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tauq/numeric.hpp"

namespace tauq::biseq {

namespace {

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

// Collapse identically-zero windows to the designated zero representation
// (tail preserved).
BilateralSequence canonical(long lo, std::vector<double> coeffs, double tail) {
  if (all_zero(coeffs)) return BilateralSequence(0, {0.0}, tail);
  return BilateralSequence(lo, std::move(coeffs), tail);
}

}  // namespace

BilateralSequence::BilateralSequence() : lo_(0), coefficients_{0.0}, tail_bound_(0.0) {}

BilateralSequence::BilateralSequence(long lo, std::vector<double> coefficients, double tail_bound)
    : lo_(lo), coefficients_(std::move(coefficients)), tail_bound_(tail_bound) {
  if (coefficients_.empty())
    throw std::invalid_argument("BilateralSequence: empty coefficient window");
  for (double c : coefficients_)
    if (!std::isfinite(c))
      throw std::invalid_argument("BilateralSequence: non-finite coefficient");
  if (std::isnan(tail_bound_) || tail_bound_ < 0.0)
    throw std::invalid_argument("BilateralSequence: tail_bound must be >= 0");
}

BilateralSequence BilateralSequence::zero() { return BilateralSequence(); }

BilateralSequence BilateralSequence::delta(long n) { return BilateralSequence(n, {1.0}); }

double BilateralSequence::at(long n) const {
  if (n < lo_ || n > hi()) return 0.0;
  return coefficients_[static_cast<std::size_t>(n - lo_)];
}

bool BilateralSequence::is_zero() const {
  return tail_bound_ == 0.0 && all_zero(coefficients_);
}

BilateralSequence BilateralSequence::with_tail_bound(double tail_bound) const {
  return BilateralSequence(lo_, coefficients_, tail_bound);
}

BilateralSequence add(const BilateralSequence& a, const BilateralSequence& b) {
  const long lo = std::min(a.lo(), b.lo());
  const long hi = std::max(a.hi(), b.hi());
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n)
    out[static_cast<std::size_t>(n - lo)] = a.at(n) + b.at(n);
  return canonical(lo, std::move(out), a.tail_bound() + b.tail_bound());
}

BilateralSequence scale(const BilateralSequence& a, double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("scale: non-finite scalar");
  std::vector<double> out(a.coefficients());
  for (double& x : out) x *= c;
  return canonical(a.lo(), std::move(out), std::fabs(c) * a.tail_bound());
}

BilateralSequence convolve(const BilateralSequence& a, const BilateralSequence& b) {
  const long lo = a.lo() + b.lo();
  const std::size_t n_out = a.size() + b.size() - 1;
  std::vector<double> out(n_out, 0.0);
  const std::vector<double>& ac = a.coefficients();
  const std::vector<double>& bc = b.coefficients();
  const long a_hi = a.hi();
  const long b_hi = b.hi();
  for (std::size_t i = 0; i < n_out; ++i) {
    const long n = lo + static_cast<long>(i);
    const long k_lo = std::max(a.lo(), n - b_hi);
    const long k_hi = std::min(a_hi, n - b.lo());
    double sum = 0.0;
    const double* ap = ac.data() + (k_lo - a.lo());
    const double* bp = bc.data() + (n - k_lo - b.lo());
    for (long k = k_lo; k <= k_hi; ++k, ++ap, --bp) sum += *ap * *bp;
    out[i] = sum;
  }
  const double tail = l2_norm(a) * b.tail_bound() + l2_norm(b) * a.tail_bound() +
                      a.tail_bound() * b.tail_bound();
  return canonical(lo, std::move(out), tail);
}

double l2_norm(const BilateralSequence& a) {
  KahanSum s;
  for (double c : a.coefficients()) s.add(c * c);
  return std::sqrt(s.value());
}

BilateralSequence truncate(const BilateralSequence& a, long window) {
  if (window < 0) throw std::invalid_argument("truncate: window must be >= 0");
  const long lo = std::max(a.lo(), -window);
  const long hi = std::min(a.hi(), window);
  KahanSum dropped;
  for (long n = a.lo(); n <= a.hi(); ++n)
    if (n < lo || n > hi) {
      const double c = a.at(n);
      dropped.add(c * c);
    }
  const double tail = a.tail_bound() + std::sqrt(dropped.value());
  if (lo > hi) return BilateralSequence(0, {0.0}, tail);
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = a.at(n);
  return canonical(lo, std::move(out), tail);
}

bool same_sequence(const BilateralSequence& a, const BilateralSequence& b) {
  if (a.tail_bound() != b.tail_bound()) return false;
  const long lo = std::min(a.lo(), b.lo());
  const long hi = std::max(a.hi(), b.hi());
  for (long n = lo; n <= hi; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

}  // namespace tauq::biseq
