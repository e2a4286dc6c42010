#include "tauq/kontsevich.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace tauq::kontsevich {

namespace {

// Dense univariate polynomial with rational coefficients, ascending degree.
using Poly = std::vector<Rational>;

// Definite integral from 0: t^k -> t^{k+1}/(k+1).
Poly integrate(const Poly& p) {
  Poly out(p.size() + 1, Rational(0));
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k] / static_cast<long>(k + 1);
  return out;
}

}  // namespace

Rational simplex_volume_exact(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("simplex_volume_exact: need 1 <= n <= 20");
  Poly p{Rational(1)};
  for (int i = 0; i < n; ++i) p = integrate(p);
  // Volume is the value at the top limit t = 1.
  Rational volume(0);
  for (const Rational& c : p) volume += c;
  return volume;
}

Rational b_constant_slice(int m, long k) {
  if (m < 0 || m > 20) throw std::invalid_argument("b_constant_slice: need 0 <= m <= 20");
  Poly p{rational_pow(Rational(k), static_cast<unsigned long>(m))};
  for (int i = 0; i < m; ++i) p = integrate(p);
  return p[static_cast<std::size_t>(m)];  // coefficient of t^m, = k^m/m!
}

McEstimate simplex_volume_mc(int n, long samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simplex_volume_mc: n must be >= 1");
  if (samples < 100) throw std::invalid_argument("simplex_volume_mc: samples must be >= 100");
  std::mt19937_64 rng(seed);
  // 53-bit mapping to [0,1); std::uniform_real_distribution output is
  // implementation-defined and would break seed-for-seed reproducibility.
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  long hits = 0;
  for (long s = 0; s < samples; ++s) {
    double prev = uniform();
    bool ordered = true;
    for (int i = 1; i < n; ++i) {
      const double next = uniform();
      if (!(prev > next)) ordered = false;  // keep drawing: stream position fixed
      prev = next;
    }
    if (ordered) ++hits;
  }
  const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
  return {p_hat, se, hits, samples};
}

}  // namespace tauq::kontsevich
