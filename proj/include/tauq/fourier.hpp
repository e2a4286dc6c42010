#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "tauq/biseq.hpp"
#include "tauq/check_report.hpp"
#include "tauq/pi_polynomial.hpp"

namespace tauq::fourier {

/// Exact n-th Fourier coefficient of (i*theta)^m on [-pi, pi]:
/// (1/2pi) Integral e^{-in theta} (i theta)^m d theta, via the
/// integration-by-parts recursion carried in exact rationals. Always real.
/// m >= 0 required.
PiPolynomial theta_power_coeff(int m, long n);

/// Coefficient window of the m-fold convolution power of tau, |n| <= window,
/// with tail_bound sqrt(pi^{2m}/(2m+1) - window mass) (total mass exact by
/// the norm identity for Fourier coefficients). m >= 1, window >= 1.
biseq::BilateralSequence tau_power(int m, long window);

struct ValueWithBound {
  double value;
  double bound;
};

/// Partial sum Sum_{m < terms} c_n(tau^m)/m!, evaluated once from the exact
/// rational accumulation; bound is the series-remainder majorant
/// pi^M/M! * 1/(1 - pi/(M+1)) (plus the explicit |c_n(tau^m)| <= pi^m/sqrt(2m+1)
/// terms when terms < 4).
ValueWithBound exp_tau_coeff(long n, int terms);

/// Uniform samples of a function on [-pi, pi], endpoints included.
struct SampledFunction {
  std::vector<std::complex<double>> values;
};

/// Sample f at theta_i = -pi + 2*pi*i/(count-1), i = 0..count-1.
template <typename F>
SampledFunction sample_function(std::size_t count, F&& f) {
  SampledFunction out;
  out.values.reserve(count);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = -std::numbers::pi + h * static_cast<double>(i);
    out.values.push_back(std::complex<double>(f(theta)));
  }
  return out;
}

SampledFunction sample_theta_power(std::size_t count, int m);  // theta^m
SampledFunction sample_exp_i(std::size_t count, long k);       // e^{ik theta}

/// Composite-Simpson approximation of (1/2pi) Integral e^{-in theta} f d theta.
/// Requires an odd sample count >= 3.
std::complex<double> quadrature_coeff(const SampledFunction& f, long n);

/// Sum_{|n| <= lhs_window} a_n b_n against (1/2pi) Integral A conj(B) by
/// quadrature. bound covers sequence tails (Cauchy-Schwarz) plus a Richardson
/// estimate of the quadrature error. Mismatched grids rejected.
CheckReport parseval_check(const biseq::BilateralSequence& a,
                           const biseq::BilateralSequence& b, long lhs_window,
                           const SampledFunction& A, const SampledFunction& B,
                           double tolerance = 0.0, const std::string& name = "parseval");

/// Analytic Sum_{|n| > window} c_n(tau^m)^2, from the closed-form coefficient
/// expansion and Euler-Maclaurin power-sum tails. Independent of the
/// pi^{2m}/(2m+1) norm identity it is used to test.
double tau_power_tail_sq(int m, long window);

/// Sum_{|n| <= window} c_n(tau^m)^2 for each m = 1..m_max (single pass).
std::vector<double> tau_power_window_norm_sq(int m_max, long window);

}  // namespace tauq::fourier
