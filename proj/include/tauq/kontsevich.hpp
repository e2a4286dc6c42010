#pragma once

#include <cstdint>

#include "tauq/rational.hpp"

namespace tauq::kontsevich {

/// Volume of the ordered simplex {1 >= h_1 > ... > h_n >= 0}, computed by
/// n-fold exact polynomial integration (not the closed form). 1 <= n <= 20.
Rational simplex_volume_exact(int n);

/// Iterated integral of the constant twist k^m over the ordered m-simplex:
/// the degree-m invariant of the braid q^k, equal to k^m/m!. 0 <= m <= 20.
Rational b_constant_slice(int m, long k);

struct McEstimate {
  double estimate;
  double standard_error;
  long hits;
  long samples;
};

/// Seeded Monte Carlo estimate of the ordered-simplex volume: fraction of
/// uniform points in [0,1]^n with h_1 > ... > h_n strictly (ties count as
/// unordered). Bit-reproducible for equal seeds. samples >= 100.
McEstimate simplex_volume_mc(int n, long samples, std::uint64_t seed);

}  // namespace tauq::kontsevich
