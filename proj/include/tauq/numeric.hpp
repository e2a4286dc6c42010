#pragma once

#include <cstdint>

namespace tauq {

// Kahan compensated accumulator; add order is the caller's contract.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Sum_{n >= a} n^{-s} for integer s >= 2, a >= 1. Direct summation up to
// n = 1000, Euler-Maclaurin beyond (error far below 1e-18 relative).
double hurwitz_tail(int s, long a);

// Majorant for the exponential-series remainder Sum_{m >= from_terms} rho^m/m!:
// rho^M/M! * 1/(1 - rho/(M+1)), +infinity when rho >= M+1.
double exp_series_tail_majorant(double rho, int from_terms);

}  // namespace tauq
