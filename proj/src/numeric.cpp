#include "tauq/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tauq {

double hurwitz_tail(int s, long a) {
  if (s < 2 || a < 1) throw std::invalid_argument("hurwitz_tail: need s >= 2, a >= 1");
  KahanSum head;
  long b = a;
  // Push the Euler-Maclaurin start point out so the truncated expansion is
  // accurate to ~b^{-s-5} absolute.
  const long em_start = 1000;
  for (; b < em_start; ++b) head.add(std::pow(static_cast<double>(b), -s));
  const double x = static_cast<double>(b);
  const double xs = std::pow(x, -s);  // b^{-s}
  // Sum_{n>=b} n^{-s} = b^{1-s}/(s-1) + b^{-s}/2 + s*b^{-s-1}/12
  //                     - s(s+1)(s+2)*b^{-s-3}/720 + O(b^{-s-5})
  double tail = xs * x / (s - 1) + xs / 2.0 + s * xs / (12.0 * x) -
                static_cast<double>(s) * (s + 1) * (s + 2) * xs / (720.0 * x * x * x);
  return head.value() + tail;
}

double exp_series_tail_majorant(double rho, int from_terms) {
  if (from_terms < 1) throw std::invalid_argument("exp_series_tail_majorant: need from_terms >= 1");
  if (rho < 0) throw std::invalid_argument("exp_series_tail_majorant: need rho >= 0");
  const int m = from_terms;
  if (rho >= m + 1) return std::numeric_limits<double>::infinity();
  double lead = 1.0;  // rho^m / m!
  for (int k = 1; k <= m; ++k) lead *= rho / k;
  return lead / (1.0 - rho / (m + 1));
}

}  // namespace tauq
