#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "tauq/fourier.hpp"
#include "tauq/numeric.hpp"
#include "tauq/series.hpp"

using namespace tauq;
using fourier::PiPolynomial;
using fourier::quadrature_coeff;
using fourier::sample_exp_i;
using fourier::sample_function;
using fourier::sample_theta_power;
using fourier::theta_power_coeff;

namespace {
constexpr double kPi = std::numbers::pi;

fourier::SampledFunction sample_i_theta_power(std::size_t count, int m) {
  return sample_function(count, [m](double theta) {
    std::complex<double> p(1.0, 0.0);
    for (int i = 0; i < m; ++i) p *= std::complex<double>(0.0, theta);
    return p;
  });
}
}  // namespace

TEST_CASE("PiPolynomial canonical form and arithmetic") {
  PiPolynomial p;
  CHECK(p.is_zero());
  p.add_term(2, make_rational(1, 3));
  p.add_term(2, make_rational(-1, 3));
  CHECK(p.is_zero());  // no stored zeros

  PiPolynomial q = PiPolynomial::term(2, make_rational(-1, 3));
  CHECK(q.evaluate() == doctest::Approx(-kPi * kPi / 3.0).epsilon(1e-15));
  CHECK(q.str() == "-1/3*pi^2");
  CHECK((make_rational(-3) * q) == PiPolynomial::term(2, Rational(1)));
}

TEST_CASE("theta_power_coeff: pinned exact values") {
  // coefficient of q^5 in tau
  CHECK(theta_power_coeff(1, 5) == PiPolynomial::constant(make_rational(1, 5)));
  // tau^0 = q^0
  CHECK(theta_power_coeff(0, 0) == PiPolynomial::constant(Rational(1)));
  CHECK(theta_power_coeff(0, 3).is_zero());
  CHECK(theta_power_coeff(0, -7).is_zero());
  // (1/2pi) Int (i theta)^2 = -pi^2/3
  CHECK(theta_power_coeff(2, 0) == PiPolynomial::term(2, make_rational(-1, 3)));
  // cross-checked against convolve(tau_N, tau_N) in the series tests
  CHECK(theta_power_coeff(2, 1) == PiPolynomial::constant(Rational(2)));
  CHECK_THROWS_AS(theta_power_coeff(-1, 0), std::invalid_argument);
}

TEST_CASE("parity: c_{-n} = (-1)^m c_n exactly") {
  for (int m = 0; m <= 10; ++m)
    for (long n = 1; n <= 50; ++n) {
      const PiPolynomial plus = theta_power_coeff(m, n);
      const PiPolynomial minus = theta_power_coeff(m, -n);
      const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
      CHECK(minus == sign * plus);
    }
}

TEST_CASE("oracle vs quadrature: m <= 6, |n| <= 20") {
  // e^{-in theta} theta^m has fourth derivative ~ n^4 pi^m; 8193 samples keep
  // the composite-Simpson error near 1e-9 at the corner m = 6, |n| = 20.
  for (int m = 0; m <= 6; ++m) {
    const auto f = sample_i_theta_power(8193, m);
    for (long n = -20; n <= 20; ++n) {
      const std::complex<double> q = quadrature_coeff(f, n);
      CHECK(std::fabs(theta_power_coeff(m, n).evaluate() - q.real()) < 1e-8);
      CHECK(std::fabs(q.imag()) < 1e-9);  // realness
    }
  }
}

TEST_CASE("norm identity: window mass + analytic tail = pi^{2m}/(2m+1)") {
  const long window = 2000;
  const auto window_mass = fourier::tau_power_window_norm_sq(8, window);
  for (int m = 1; m <= 8; ++m) {
    const double total = window_mass[static_cast<std::size_t>(m)] +
                         fourier::tau_power_tail_sq(m, window);
    const double target = std::pow(kPi, 2 * m) / (2 * m + 1);
    CHECK(std::fabs(total - target) <= 1e-10 * target);
  }
}

TEST_CASE("bulk double path agrees with the exact recursion") {
  const long window = 40;
  const auto window_mass = fourier::tau_power_window_norm_sq(6, window);
  for (int m = 0; m <= 6; ++m) {
    KahanSum exact;
    for (long n = -window; n <= window; ++n) {
      const double c = theta_power_coeff(m, n).evaluate();
      exact.add(c * c);
    }
    CHECK(window_mass[static_cast<std::size_t>(m)] ==
          doctest::Approx(exact.value()).epsilon(1e-12));
  }
}

TEST_CASE("recursion consistency: c_n(tau^m) = Sum_k c_k(tau^{m-1}) c_{n-k}(tau)") {
  const long K = 10000;
  const double tau_norm = kPi / std::sqrt(3.0);
  for (int m : {2, 3}) {
    // window coefficients of tau^{m-1} via the exact recursion
    std::vector<double> lower(static_cast<std::size_t>(2 * K + 1));
    for (long k = -K; k <= K; ++k)
      lower[static_cast<std::size_t>(k + K)] = theta_power_coeff(m - 1, k).evaluate();
    // truncation of either factor, bounded by Cauchy-Schwarz with full norms
    const double lower_norm = std::pow(kPi, m - 1) / std::sqrt(2.0 * (m - 1) + 1.0);
    const double bound = std::sqrt(fourier::tau_power_tail_sq(m - 1, K)) * tau_norm +
                         std::sqrt(fourier::tau_power_tail_sq(1, K)) * lower_norm;
    for (long n = -10; n <= 10; ++n) {
      KahanSum rhs;
      for (long k = -K; k <= K; ++k) {
        const long j = n - k;
        if (j == 0) continue;
        const double tau_j = ((j % 2 + 2) % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(j);
        rhs.add(lower[static_cast<std::size_t>(k + K)] * tau_j);
      }
      const double lhs = theta_power_coeff(m, n).evaluate();
      CHECK(std::fabs(lhs - rhs.value()) <= bound + 1e-10);
    }
  }
}

TEST_CASE("tau_power windows") {
  // m = 1 reproduces tau's coefficients
  const auto t1 = fourier::tau_power(1, 64);
  for (long k = 1; k <= 64; ++k) {
    const double expect = (k % 2 != 0 ? 1.0 : -1.0) / static_cast<double>(k);
    CHECK(t1.at(k) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(t1.at(-k) == doctest::Approx(-expect).epsilon(1e-15));
  }
  CHECK(t1.at(0) == 0.0);

  // Parseval mass for m = 2 at window 1e4: ||tau^2||^2 = pi^4/5
  const auto t2 = fourier::tau_power(2, 10000);
  const double mass = biseq::l2_norm(t2) * biseq::l2_norm(t2) +
                      t2.tail_bound() * t2.tail_bound();
  CHECK(mass == doctest::Approx(std::pow(kPi, 4) / 5.0).epsilon(1e-10));

  CHECK_THROWS_AS(fourier::tau_power(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(fourier::tau_power(1, 0), std::invalid_argument);
}

TEST_CASE("exp_tau_coeff: c_n(exp tau) = [n == 1]") {
  for (long n = -16; n <= 16; ++n) {
    const auto [value, bound] = fourier::exp_tau_coeff(n, 60);
    const double target = (n == 1) ? 1.0 : 0.0;
    CHECK(std::fabs(value - target) < 1e-12);
    CHECK(bound < 1e-50);  // remainder majorant at M = 60
  }
  CHECK_THROWS_AS(fourier::exp_tau_coeff(0, 0), std::invalid_argument);

  // small-terms branch of the bound is still a sound majorant
  const auto [v1, b1] = fourier::exp_tau_coeff(1, 2);
  CHECK(std::fabs(v1 - 1.0) <= b1);
}

TEST_CASE("quadrature_coeff") {
  // orthonormality
  const auto e1 = sample_exp_i(4097, 1);
  const auto c = quadrature_coeff(e1, 1);
  CHECK(std::abs(c - std::complex<double>(1.0, 0.0)) < 1e-10);

  // c_3(theta) = i(-1)^3/3 = -i/3
  const auto th = sample_theta_power(4097, 1);
  const auto c3 = quadrature_coeff(th, 3);
  CHECK(std::fabs(c3.real()) < 1e-8);
  CHECK(c3.imag() == doctest::Approx(-1.0 / 3.0).epsilon(1e-8));

  // c_0(theta^2) = pi^2/3
  const auto th2 = sample_theta_power(4097, 2);
  CHECK(quadrature_coeff(th2, 0).real() == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-8));

  CHECK_THROWS_AS(quadrature_coeff(sample_theta_power(4096, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_coeff(sample_theta_power(1, 1), 0), std::invalid_argument);
}

TEST_CASE("parseval_check") {
  const auto theta = sample_theta_power(4097, 1);
  const auto one = sample_theta_power(4097, 0);
  const auto expi = sample_exp_i(4097, 1);

  // A = B = theta with a = b = tau: both sides near pi^2/3, gap within bound
  const auto t = series::tau(10000);
  const auto basel = fourier::parseval_check(t, t, 10000, theta, theta);
  CHECK(basel.passed);
  CHECK(basel.target == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-10));
  CHECK(std::fabs(basel.computed - basel.target) <= basel.bound);
  // tail-completed window sum reproduces the Basel value tightly
  CHECK(basel.computed + 2.0 * hurwitz_tail(2, 10001) ==
        doctest::Approx(kPi * kPi / 3.0).epsilon(1e-10));

  // A = theta, B = 1: only the n = 0 term survives and c_0(tau) = 0
  const auto zero_case = fourier::parseval_check(t, biseq::BilateralSequence::delta(0), 100,
                                                 theta, one);
  CHECK(zero_case.computed == 0.0);
  CHECK(std::fabs(zero_case.target) < 1e-12);
  CHECK(zero_case.passed);

  // A = B = e^{i theta}: both sides 1
  const auto d1 = biseq::BilateralSequence::delta(1);
  const auto unit = fourier::parseval_check(d1, d1, 4, expi, expi);
  CHECK(unit.computed == 1.0);
  CHECK(unit.target == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(unit.passed);

  // mismatched grids rejected
  const auto theta_small = sample_theta_power(257, 1);
  CHECK_THROWS_AS(fourier::parseval_check(t, t, 10, theta, theta_small),
                  std::invalid_argument);
}
