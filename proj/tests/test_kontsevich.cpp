#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tauq/kontsevich.hpp"

using namespace tauq;
using kontsevich::b_constant_slice;
using kontsevich::simplex_volume_exact;
using kontsevich::simplex_volume_mc;

TEST_CASE("exact simplex volumes") {
  CHECK(simplex_volume_exact(1) == 1);
  CHECK(simplex_volume_exact(3) == make_rational(1, 6));
  CHECK(simplex_volume_exact(6) == make_rational(1, 720));

  Rational fact(1);
  for (int n = 1; n <= 20; ++n) {
    fact *= n;
    CHECK(simplex_volume_exact(n) * fact == 1);
  }
  CHECK_THROWS_AS(simplex_volume_exact(0), std::invalid_argument);
  CHECK_THROWS_AS(simplex_volume_exact(21), std::invalid_argument);
}

TEST_CASE("constant-slice invariants") {
  CHECK(b_constant_slice(2, 1) == make_rational(1, 2));
  CHECK(b_constant_slice(2, 3) == make_rational(9, 2));
  CHECK(b_constant_slice(0, 7) == 1);
  CHECK(b_constant_slice(3, -2) == make_rational(-4, 3));
  CHECK_THROWS_AS(b_constant_slice(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(b_constant_slice(21, 1), std::invalid_argument);
}

TEST_CASE("constant integrand factors through the volume") {
  for (int m = 0; m <= 8; ++m)
    for (long k = -3; k <= 3; ++k) {
      const Rational vol = (m == 0) ? Rational(1) : simplex_volume_exact(m);
      CHECK(b_constant_slice(m, k) ==
            rational_pow(Rational(k), static_cast<unsigned long>(m)) * vol);
    }
}

TEST_CASE("product rule: Sum_{i+j=m} b(i,k) b(j,k') = (k+k')^m / m!") {
  for (int m = 0; m <= 8; ++m) {
    Rational fact(1);
    for (int i = 2; i <= m; ++i) fact *= i;
    for (long k = -3; k <= 3; ++k)
      for (long kp = -3; kp <= 3; ++kp) {
        Rational sum(0);
        for (int i = 0; i <= m; ++i) sum += b_constant_slice(i, k) * b_constant_slice(m - i, kp);
        CHECK(sum == rational_pow(Rational(k + kp), static_cast<unsigned long>(m)) / fact);
      }
  }
}

TEST_CASE("scalar shadow of the exponential: Sum_m k^m/m! = e^k") {
  for (long k = -3; k <= 3; ++k) {
    double sum = 0.0;
    for (int m = 0; m <= 20; ++m) sum += to_double(b_constant_slice(m, k));
    // remainder after m = 20 at |k| <= 3 is below 3^21/21! ~ 2e-10
    CHECK(std::fabs(sum - std::exp(static_cast<double>(k))) < 1e-9);
  }
}

TEST_CASE("monte carlo path") {
  const auto one = simplex_volume_mc(1, 1000, 42);
  CHECK(one.estimate == 1.0);
  CHECK(one.standard_error == 0.0);

  // bit-reproducibility
  const auto a = simplex_volume_mc(3, 100000, 7);
  const auto b = simplex_volume_mc(3, 100000, 7);
  CHECK(a.estimate == b.estimate);
  CHECK(a.hits == b.hits);
  const auto c = simplex_volume_mc(3, 100000, 8);
  CHECK(a.hits != c.hits);

  // 3-sigma coverage at a million samples, fixed seed
  const auto n3 = simplex_volume_mc(3, 1000000, 0);
  CHECK(std::fabs(n3.estimate - 1.0 / 6.0) <= 3.0 * n3.standard_error);
  const auto n8 = simplex_volume_mc(8, 1000000, 0);
  CHECK(std::fabs(n8.estimate - 1.0 / 40320.0) <= 3.0 * n8.standard_error);

  CHECK_THROWS_AS(simplex_volume_mc(3, 99, 0), std::invalid_argument);
  CHECK_THROWS_AS(simplex_volume_mc(0, 1000, 0), std::invalid_argument);
}
