#include "tauq/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tauq/fourier.hpp"
#include "tauq/numeric.hpp"

namespace tauq::series {

using biseq::BilateralSequence;

BilateralSequence tau(long window) {
  if (window < 1) throw std::invalid_argument("tau: window must be >= 1");
  std::vector<double> coeffs(static_cast<std::size_t>(2 * window + 1), 0.0);
  for (long k = 1; k <= window; ++k) {
    const double c = (k % 2 != 0 ? 1.0 : -1.0) / static_cast<double>(k);
    coeffs[static_cast<std::size_t>(window + k)] = c;
    coeffs[static_cast<std::size_t>(window - k)] = -c;
  }
  const double tail = std::sqrt(2.0 * hurwitz_tail(2, window + 1));
  return BilateralSequence(-window, std::move(coeffs), tail);
}

BilateralSequence tau_via_log_trick(long window, long series_terms) {
  if (window < 1) throw std::invalid_argument("tau_via_log_trick: window must be >= 1");
  if (series_terms < window)
    throw std::invalid_argument("tau_via_log_trick: series_terms must be >= window");
  BilateralSequence sum = BilateralSequence::zero();
  for (long n = 1; n <= series_terms; ++n) {
    const double c = (n % 2 != 0 ? 1.0 : -1.0) / static_cast<double>(n);
    sum = add(sum, scale(add(BilateralSequence::delta(n),
                             scale(BilateralSequence::delta(-n), -1.0)),
                         c));
  }
  BilateralSequence out = truncate(sum, window);
  // Window truncation is exact here; carry tau's analytic tail instead of
  // only the dropped-term mass so both constructors certify the same element.
  return out.with_tail_bound(std::sqrt(2.0 * hurwitz_tail(2, window + 1)));
}

BilateralSequence exp_direct(const BilateralSequence& a, int terms, long window) {
  if (terms < 1) throw std::invalid_argument("exp_direct: terms must be >= 1");
  if (window < 0) throw std::invalid_argument("exp_direct: window must be >= 0");
  BilateralSequence result = BilateralSequence::delta(0);
  BilateralSequence power = BilateralSequence::delta(0);
  double inv_fact = 1.0;
  for (int m = 1; m < terms; ++m) {
    power = truncate(convolve(power, a), window);
    inv_fact /= m;
    result = add(result, scale(power, inv_fact));
  }
  const double rho = l2_norm(a) + a.tail_bound();
  const double remainder = exp_series_tail_majorant(rho, terms);
  return result.with_tail_bound(result.tail_bound() + remainder);
}

std::vector<CheckReport> verify_exp_tau(long window, int terms, long probe_range,
                                        double oracle_tolerance) {
  if (probe_range < 0) throw std::invalid_argument("verify_exp_tau: probe_range must be >= 0");
  if (probe_range > window)
    throw std::invalid_argument("verify_exp_tau: probe_range must be <= window");
  const BilateralSequence direct = exp_direct(tau(window), terms, window);
  std::vector<CheckReport> reports;
  reports.reserve(2 * static_cast<std::size_t>(2 * probe_range + 1));
  for (long n = -probe_range; n <= probe_range; ++n) {
    const double target = (n == 1) ? 1.0 : 0.0;
    const auto [value, bound] = fourier::exp_tau_coeff(n, terms);
    reports.push_back(CheckReport::make("oracle c_" + std::to_string(n), value, target, bound,
                                        oracle_tolerance));
    reports.push_back(CheckReport::make("direct c_" + std::to_string(n), direct.at(n), target,
                                        direct.tail_bound()));
  }
  return reports;
}

}  // namespace tauq::series
