#include "tauq/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tauq/numeric.hpp"

namespace tauq::fourier {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_odd(long n) { return (n % 2) != 0; }

// Coefficient tower for c_n((i theta)^m), n != 0, over even powers of pi:
// value = Sum_t tower[t] * pi^{2t}. One step of the integration-by-parts
// recursion: I(k,n) = (k/n) I(k-1,n) + [k odd] (-1)^{(k+1)/2} (-1)^n pi^{k-1}/n.
void tower_step(std::vector<Rational>& tower, int k, long n) {
  const Rational step = make_rational(k, n);
  for (Rational& c : tower) c *= step;
  if (is_odd(k)) {
    const long sign = (((k + 1) / 2) % 2 != 0 ? -1 : 1) * (is_odd(n) ? -1 : 1);
    const std::size_t t = static_cast<std::size_t>((k - 1) / 2);
    if (tower.size() <= t) tower.resize(t + 1, Rational(0));
    tower[t] += make_rational(sign, n);
  }
}

// c_n((i theta)^m) at n = 0: (-1)^{m/2} pi^m / (m+1) for even m, 0 for odd m.
PiPolynomial theta_power_coeff_at_zero(int m) {
  if (is_odd(m)) return PiPolynomial();
  const long sign = ((m / 2) % 2 != 0) ? -1 : 1;
  return PiPolynomial::term(static_cast<unsigned>(m), make_rational(sign, m + 1));
}

double pi_power(int e) {
  double p = 1.0;
  for (int i = 0; i < e; ++i) p *= kPi;
  return p;
}

// Floating shadow of the tower recursion; agrees with the exact path to
// roundoff (asserted in tests). Used only for bulk window sums.
double theta_power_coeff_double(int m, long n, const std::vector<double>& pi_pows) {
  if (n == 0) {
    if (is_odd(m)) return 0.0;
    const double sign = ((m / 2) % 2 != 0) ? -1.0 : 1.0;
    return sign * pi_pows[static_cast<std::size_t>(m)] / (m + 1);
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  const double src_sign = is_odd(n) ? -1.0 : 1.0;
  double value = 0.0;
  for (int k = 1; k <= m; ++k) {
    value *= k * inv_n;
    if (is_odd(k)) {
      const double sign = (((k + 1) / 2) % 2 != 0 ? -1.0 : 1.0) * src_sign;
      value += sign * pi_pows[static_cast<std::size_t>(k - 1)] * inv_n;
    }
  }
  return value;
}

}  // namespace

PiPolynomial theta_power_coeff(int m, long n) {
  if (m < 0) throw std::invalid_argument("theta_power_coeff: m must be >= 0");
  if (n == 0) {
    if (m == 0) return PiPolynomial::constant(Rational(1));
    return theta_power_coeff_at_zero(m);
  }
  if (m == 0) return PiPolynomial();
  std::vector<Rational> tower;
  for (int k = 1; k <= m; ++k) tower_step(tower, k, n);
  PiPolynomial out;
  for (std::size_t t = 0; t < tower.size(); ++t)
    out.add_term(static_cast<unsigned>(2 * t), tower[t]);
  return out;
}

biseq::BilateralSequence tau_power(int m, long window) {
  if (m < 1) throw std::invalid_argument("tau_power: m must be >= 1 (use delta(0) for m = 0)");
  if (window < 1) throw std::invalid_argument("tau_power: window must be >= 1");
  std::vector<double> coeffs(static_cast<std::size_t>(2 * window + 1), 0.0);
  KahanSum mass;
  for (long n = -window; n <= window; ++n) {
    const double c = theta_power_coeff(m, n).evaluate();
    coeffs[static_cast<std::size_t>(n + window)] = c;
    mass.add(c * c);
  }
  const double total = pi_power(2 * m) / (2 * m + 1);
  const double tail_sq = total - mass.value();
  const double tail = tail_sq > 0.0 ? std::sqrt(tail_sq) : 0.0;
  return biseq::BilateralSequence(-window, std::move(coeffs), tail);
}

ValueWithBound exp_tau_coeff(long n, int terms) {
  if (terms < 1) throw std::invalid_argument("exp_tau_coeff: terms must be >= 1");
  PiPolynomial acc;
  Rational inv_fact(1);
  if (n == 0) {
    for (int m = 0; m < terms; ++m) {
      if (m > 0) inv_fact /= m;
      if (!is_odd(m)) acc += inv_fact * theta_power_coeff_at_zero(m);
    }
  } else {
    std::vector<Rational> tower;
    for (int m = 1; m < terms; ++m) {
      inv_fact /= m;
      tower_step(tower, m, n);
      for (std::size_t t = 0; t < tower.size(); ++t)
        if (tower[t] != 0) acc.add_term(static_cast<unsigned>(2 * t), inv_fact * tower[t]);
    }
  }
  // |c_n(tau^m)| <= ||tau^m||_2 = pi^m / sqrt(2m+1); majorize the remainder.
  double bound = 0.0;
  int from = terms;
  double fact = 1.0;
  for (int k = 1; k < from; ++k) fact *= k;
  while (from < 4) {
    bound += pi_power(from) / (fact * std::sqrt(2.0 * from + 1.0));
    fact *= from;
    ++from;
  }
  bound += exp_series_tail_majorant(kPi, from);
  return {acc.evaluate(), bound};
}

SampledFunction sample_theta_power(std::size_t count, int m) {
  return sample_function(count, [m](double theta) {
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= theta;
    return std::complex<double>(p, 0.0);
  });
}

SampledFunction sample_exp_i(std::size_t count, long k) {
  return sample_function(count, [k](double theta) {
    return std::polar(1.0, static_cast<double>(k) * theta);
  });
}

namespace {

std::complex<double> simpson_fourier(const std::vector<std::complex<double>>& values, long n) {
  const std::size_t count = values.size();
  const double h = 2.0 * kPi / static_cast<double>(count - 1);
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = -kPi + h * static_cast<double>(i);
    double w = (i == 0 || i == count - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * values[i] * std::polar(1.0, -static_cast<double>(n) * theta);
  }
  return sum * (h / 3.0) / (2.0 * kPi);
}

}  // namespace

std::complex<double> quadrature_coeff(const SampledFunction& f, long n) {
  const std::size_t count = f.values.size();
  if (count < 3 || count % 2 == 0)
    throw std::invalid_argument("quadrature_coeff: need an odd sample count >= 3");
  return simpson_fourier(f.values, n);
}

CheckReport parseval_check(const biseq::BilateralSequence& a,
                           const biseq::BilateralSequence& b, long lhs_window,
                           const SampledFunction& A, const SampledFunction& B,
                           double tolerance, const std::string& name) {
  if (A.values.size() != B.values.size())
    throw std::invalid_argument("parseval_check: mismatched sample grids");
  if (lhs_window < 0) throw std::invalid_argument("parseval_check: lhs_window must be >= 0");

  const biseq::BilateralSequence at = biseq::truncate(a, lhs_window);
  const biseq::BilateralSequence bt = biseq::truncate(b, lhs_window);
  KahanSum lhs;
  for (long n = -lhs_window; n <= lhs_window; ++n) lhs.add(at.at(n) * bt.at(n));

  std::vector<std::complex<double>> product(A.values.size());
  for (std::size_t i = 0; i < product.size(); ++i)
    product[i] = A.values[i] * std::conj(B.values[i]);
  const std::complex<double> rhs = quadrature_coeff(SampledFunction{product}, 0);

  // Richardson estimate from the half-resolution grid when it is Simpson-able.
  double quad_est = 0.0;
  const std::size_t half_count = (product.size() + 1) / 2;
  if (half_count >= 3 && half_count % 2 == 1) {
    std::vector<std::complex<double>> half(half_count);
    for (std::size_t i = 0; i < half_count; ++i) half[i] = product[2 * i];
    quad_est = std::abs(rhs - simpson_fourier(half, 0)) / 15.0;
  }

  const double bound = biseq::l2_norm(at) * bt.tail_bound() +
                       biseq::l2_norm(bt) * at.tail_bound() +
                       at.tail_bound() * bt.tail_bound() + quad_est + std::fabs(rhs.imag());
  return CheckReport::make(name, lhs.value(), rhs.real(), bound, tolerance);
}

double tau_power_tail_sq(int m, long window) {
  if (m < 0) throw std::invalid_argument("tau_power_tail_sq: m must be >= 0");
  if (window < 0) throw std::invalid_argument("tau_power_tail_sq: window must be >= 0");
  if (m == 0) return 0.0;
  // c_n(tau^m) = (-1)^n Sum_{j odd <= m} g_j pi^{j-1} n^{-(m+1-j)},
  // g_j = (-1)^{(j+1)/2} m!/j!; square and sum the power tails.
  std::vector<int> js;
  std::vector<double> g;
  for (int j = 1; j <= m; j += 2) {
    double fall = 1.0;  // m!/j!
    for (int i = j + 1; i <= m; ++i) fall *= i;
    js.push_back(j);
    g.push_back((((j + 1) / 2) % 2 != 0 ? -1.0 : 1.0) * fall);
  }
  double total = 0.0;
  for (std::size_t u = 0; u < js.size(); ++u)
    for (std::size_t v = 0; v < js.size(); ++v) {
      const int s = 2 * (m + 1) - js[u] - js[v];
      total += g[u] * g[v] * pi_power(js[u] + js[v] - 2) * hurwitz_tail(s, window + 1);
    }
  return 2.0 * total;
}

std::vector<double> tau_power_window_norm_sq(int m_max, long window) {
  if (m_max < 0) throw std::invalid_argument("tau_power_window_norm_sq: m_max must be >= 0");
  if (window < 0) throw std::invalid_argument("tau_power_window_norm_sq: window must be >= 0");
  std::vector<double> pi_pows(static_cast<std::size_t>(m_max) + 1);
  for (int e = 0; e <= m_max; ++e) pi_pows[static_cast<std::size_t>(e)] = pi_power(e);
  std::vector<KahanSum> sums(static_cast<std::size_t>(m_max) + 1);
  for (long n = -window; n <= window; ++n)
    for (int m = 0; m <= m_max; ++m) {
      const double c = theta_power_coeff_double(m, n, pi_pows);
      sums[static_cast<std::size_t>(m)].add(c * c);
    }
  std::vector<double> out(sums.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sums[i].value();
  return out;
}

}  // namespace tauq::fourier
