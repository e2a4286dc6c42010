#include "tauq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tauq/biseq.hpp"
#include "tauq/check_report.hpp"
#include "tauq/fourier.hpp"
#include "tauq/group_algebra.hpp"
#include "tauq/kontsevich.hpp"
#include "tauq/numeric.hpp"
#include "tauq/rational.hpp"
#include "tauq/series.hpp"
#include "tauq/vassiliev.hpp"

namespace tauq::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Shortest round-trip rendering; byte-stable for identical inputs.
std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general);
  return std::string(buf, p);
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_double(double v) {
  if (!std::isfinite(v)) return json_quote(fmt_double(v));
  return fmt_double(v);
}

struct RunOutput {
  // (key, already-rendered JSON value) in emission order
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> notes;
  std::vector<CheckReport> reports;
};

void emit_json(const RunOutput& r, std::ostream& out) {
  out << "{\n  \"run_config\": {";
  bool first = true;
  for (const auto& [k, v] : r.config) {
    out << (first ? "" : ", ") << json_quote(k) << ": " << v;
    first = false;
  }
  out << "}";
  if (!r.notes.empty()) {
    out << ",\n  \"notes\": [";
    for (std::size_t i = 0; i < r.notes.size(); ++i)
      out << (i ? ", " : "") << json_quote(r.notes[i]);
    out << "]";
  }
  out << ",\n  \"reports\": [\n";
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    const CheckReport& c = r.reports[i];
    out << "    {\"name\": " << json_quote(c.name) << ", \"computed\": " << json_double(c.computed);
    if (c.informational) {
      out << ", \"target\": null, \"bound\": null, \"passed\": null";
    } else {
      out << ", \"target\": " << json_double(c.target) << ", \"bound\": " << json_double(c.bound)
          << ", \"passed\": " << (c.passed ? "true" : "false");
    }
    if (!c.exact.empty()) out << ", \"exact\": " << json_quote(c.exact);
    out << "}" << (i + 1 < r.reports.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
}

void emit_csv(const RunOutput& r, std::ostream& out) {
  out << "name,computed,target,bound,passed,exact\n";
  for (const CheckReport& c : r.reports) {
    out << c.name << "," << fmt_double(c.computed) << ",";
    if (c.informational)
      out << ",,n/a";
    else
      out << fmt_double(c.target) << "," << fmt_double(c.bound) << ","
          << (c.passed ? "true" : "false");
    out << "," << c.exact << "\n";
  }
}

int finish(const RunOutput& r, const std::string& format, std::ostream& out) {
  if (format == "csv")
    emit_csv(r, out);
  else
    emit_json(r, out);
  for (const CheckReport& c : r.reports)
    if (!c.informational && !c.passed) return 1;
  return 0;
}

struct SharedOpts {
  std::string format = "json";
  std::int64_t seed = 0;
  std::optional<double> tolerance;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--seed", seed, "PRNG seed (Monte Carlo paths only)")->capture_default_str();
    cmd->add_option("--tolerance", tolerance,
                    "Override the per-check default tolerance (used where a check "
                    "has no analytic bound)");
  }
  double tol_or(double fallback) const { return tolerance.value_or(fallback); }
  void record(RunOutput& r, const std::string& subcommand) const {
    r.config.emplace_back("subcommand", json_quote(subcommand));
    r.config.emplace_back("format", json_quote(format));
    r.config.emplace_back("seed", std::to_string(seed));
    r.config.emplace_back("tolerance",
                          tolerance ? fmt_double(*tolerance) : std::string("null"));
  }
};

void config_int(RunOutput& r, const std::string& key, std::int64_t v) {
  r.config.emplace_back(key, std::to_string(v));
}
void config_double(RunOutput& r, const std::string& key, double v) {
  r.config.emplace_back(key, json_double(v));
}
void config_str(RunOutput& r, const std::string& key, const std::string& v) {
  r.config.emplace_back(key, json_quote(v));
}

// --- subcommand bodies ---

RunOutput run_tau(const SharedOpts& shared, long window) {
  RunOutput r;
  shared.record(r, "tau");
  config_int(r, "window", window);

  const auto t = series::tau(window);
  const auto lt = series::tau_via_log_trick(window, window);
  double sup_diff = 0.0;
  double sup_antisym = 0.0;
  for (long n = -window; n <= window; ++n) {
    sup_diff = std::fmax(sup_diff, std::fabs(t.at(n) - lt.at(n)));
    if (n > 0) sup_antisym = std::fmax(sup_antisym, std::fabs(t.at(-n) + t.at(n)));
  }
  r.reports.push_back(CheckReport::make("tau log-trick agreement sup-diff", sup_diff, 0.0, 0.0));
  r.reports.push_back(CheckReport::make("tau antisymmetry sup", sup_antisym, 0.0, 0.0));
  r.reports.push_back(CheckReport::make("tau c_1", t.at(1), 1.0, 0.0));
  r.reports.push_back(CheckReport::make("tau c_-2", t.at(-2), 0.5, 0.0));
  r.reports.push_back(CheckReport::make("tau c_0", t.at(0), 0.0, 0.0));
  const double norm = biseq::l2_norm(t);
  const double total = norm * norm + t.tail_bound() * t.tail_bound();
  r.reports.push_back(CheckReport::make("tau norm-sq plus tail-sq vs pi^2/3", total,
                                        kPi * kPi / 3.0, 0.0, shared.tol_or(1e-12)));
  return r;
}

RunOutput run_exp_check(const SharedOpts& shared, long window, int terms, long probe) {
  RunOutput r;
  shared.record(r, "exp-check");
  config_int(r, "window", window);
  config_int(r, "terms", terms);
  config_int(r, "probe", probe);
  r.notes.push_back(
      "oracle bound: series remainder majorant pi^M/M! * 1/(1 - pi/(M+1)) at M = terms "
      "(|c_n| of each neglected power is at most its l2 norm pi^m/sqrt(2m+1))");
  r.notes.push_back(
      "direct bound: accumulated Cauchy-Schwarz convolution/truncation tail of exp_direct "
      "plus the same series remainder with rho = ||tau||_2 + tail");
  r.reports = series::verify_exp_tau(window, terms, probe, shared.tol_or(1e-12));
  return r;
}

RunOutput run_parseval(const SharedOpts& shared, std::size_t grid, long window) {
  RunOutput r;
  shared.record(r, "parseval");
  config_int(r, "grid", static_cast<std::int64_t>(grid));
  config_int(r, "window", window);

  const auto tau_w = series::tau(window);
  const auto theta = fourier::sample_theta_power(grid, 1);
  const auto one = fourier::sample_theta_power(grid, 0);
  const auto expi = fourier::sample_exp_i(grid, 1);
  const auto d0 = biseq::BilateralSequence::delta(0);
  const auto d1 = biseq::BilateralSequence::delta(1);

  CheckReport basel = fourier::parseval_check(tau_w, tau_w, window, theta, theta,
                                              shared.tol_or(0.0), "parseval theta theta");
  r.reports.push_back(basel);
  // a == b == tau: the discarded mass is exactly the Basel tail, so the
  // window sum can be completed analytically and held to a tight tolerance.
  const double completed = basel.computed + 2.0 * hurwitz_tail(2, window + 1);
  r.reports.push_back(CheckReport::make("parseval theta theta tail-completed", completed,
                                        basel.target, 0.0, shared.tol_or(1e-6)));
  r.reports.push_back(fourier::parseval_check(tau_w, d0, window, theta, one,
                                              shared.tol_or(0.0), "parseval theta const1"));
  r.reports.push_back(fourier::parseval_check(d1, d1, window, expi, expi, shared.tol_or(0.0),
                                              "parseval expi expi"));
  return r;
}

RunOutput run_tau_power(const SharedOpts& shared, int m, long window) {
  RunOutput r;
  shared.record(r, "tau-power");
  config_int(r, "m", m);
  config_int(r, "window", window);

  const auto window_sums = fourier::tau_power_window_norm_sq(m, window);
  const double target = std::pow(kPi, 2 * m) / (2 * m + 1);
  const double computed = window_sums[static_cast<std::size_t>(m)] +
                          fourier::tau_power_tail_sq(m, window);
  r.reports.push_back(CheckReport::make("tau-power norm identity m=" + std::to_string(m),
                                        computed, target, 0.0,
                                        shared.tol_or(1e-10 * target)));

  auto sample_itheta_m = [m](std::size_t count) {
    return fourier::sample_function(count, [m](double theta) {
      std::complex<double> p(1.0, 0.0);
      for (int i = 0; i < m; ++i) p *= std::complex<double>(0.0, theta);
      return p;
    });
  };
  const auto fine = sample_itheta_m(4097);
  const auto coarse = sample_itheta_m(2049);  // same nodes, every second one
  const long spot_window = std::min(window, 5L);
  const auto power = fourier::tau_power(m, spot_window);
  for (long n : {0L, 1L, 2L, 5L}) {
    if (n > spot_window) continue;
    const auto quad = fourier::quadrature_coeff(fine, n);
    // Richardson estimate of the Simpson error; the integrand grows like
    // pi^m, so a flat tolerance would be wrong for large m.
    const double est =
        std::abs(quad - fourier::quadrature_coeff(coarse, n)) / 15.0;
    r.reports.push_back(CheckReport::make(
        "tau-power coeff vs quadrature m=" + std::to_string(m) + " n=" + std::to_string(n),
        power.at(n), quad.real(), 4.0 * est + std::fabs(quad.imag()),
        shared.tol_or(1e-8)));
  }
  return r;
}

RunOutput run_simplex(const SharedOpts& shared, int n, long mc_samples) {
  RunOutput r;
  shared.record(r, "simplex");
  config_int(r, "n", n);
  config_int(r, "mc_samples", mc_samples);

  const Rational vol = kontsevich::simplex_volume_exact(n);
  Rational fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  const Rational closed = Rational(1) / fact;

  CheckReport row = CheckReport::make("simplex volume vs 1/n! n=" + std::to_string(n),
                                      to_double(vol), to_double(closed), 0.0);
  row.exact = to_string(vol);
  r.reports.push_back(row);
  r.reports.push_back(CheckReport::make("simplex volume times n! minus 1",
                                        to_double(vol * fact - 1), 0.0, 0.0));
  if (mc_samples > 0) {
    const auto mc = kontsevich::simplex_volume_mc(n, mc_samples,
                                                  static_cast<std::uint64_t>(shared.seed));
    r.reports.push_back(CheckReport::make(
        "simplex volume monte-carlo 3-sigma n=" + std::to_string(n), mc.estimate,
        to_double(closed), 3.0 * mc.standard_error));
  }
  return r;
}

RunOutput run_b_slice(const SharedOpts& shared, int m, long k) {
  RunOutput r;
  shared.record(r, "b-slice");
  config_int(r, "m", m);
  config_int(r, "k", k);

  const Rational b = kontsevich::b_constant_slice(m, k);
  Rational fact(1);
  for (int i = 2; i <= m; ++i) fact *= i;
  const Rational closed = rational_pow(Rational(k), static_cast<unsigned long>(m)) / fact;
  CheckReport row = CheckReport::make(
      "b-slice vs k^m/m! m=" + std::to_string(m) + " k=" + std::to_string(k), to_double(b),
      to_double(closed), 0.0);
  row.exact = to_string(b);
  r.reports.push_back(row);
  return r;
}

RunOutput run_vassiliev_degree(const SharedOpts& shared, const std::string& coeffs,
                               int max_check) {
  RunOutput r;
  shared.record(r, "vassiliev-degree");
  config_str(r, "coeffs", coeffs);
  config_int(r, "max_check", max_check);

  vassiliev::LaurentElement e;
  std::stringstream ss(coeffs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("vassiliev-degree: expected exponent:coefficient, got '" +
                                  item + "'");
    std::size_t pos = 0;
    const long exp = std::stol(item.substr(0, colon), &pos);
    if (pos != colon) throw std::invalid_argument("vassiliev-degree: bad exponent in '" + item + "'");
    e.add_term(exp, parse_rational(item.substr(colon + 1)));
  }
  if (e.is_zero())
    throw std::invalid_argument("vassiliev-degree: zero element (degree is +infinity)");

  const int degree = vassiliev::vassiliev_degree(e, max_check);
  CheckReport deg = CheckReport::info("vassiliev degree", static_cast<double>(degree));
  deg.exact = std::to_string(degree);
  r.reports.push_back(deg);

  // Re-multiply the fully divided quotient by (q-1)^degree; must reproduce
  // the input exactly.
  vassiliev::LaurentElement quotient = e;
  for (int i = 0; i < degree; ++i) quotient = vassiliev::divide_by_q_minus_1(quotient).first;
  const vassiliev::LaurentElement q_minus_1 =
      vassiliev::LaurentElement::delta(1) - vassiliev::LaurentElement::delta(0);
  vassiliev::LaurentElement rebuilt = quotient;
  for (int i = 0; i < degree; ++i) rebuilt = rebuilt * q_minus_1;
  r.reports.push_back(CheckReport::make("degree reconstruction residual",
                                        to_double(vassiliev::l2_distance_sq(rebuilt, e)), 0.0,
                                        0.0));
  CheckReport aug = CheckReport::info("quotient augmentation (nonzero unless degree capped)",
                                      to_double(vassiliev::augmentation(quotient)));
  aug.exact = to_string(vassiliev::augmentation(quotient));
  r.reports.push_back(aug);
  return r;
}

RunOutput run_density(const SharedOpts& shared, long n) {
  RunOutput r;
  shared.record(r, "density");
  config_int(r, "n", n);

  const auto w = vassiliev::density_witness(n);
  const Rational aug = vassiliev::augmentation(w);
  CheckReport aug_row =
      CheckReport::make("density witness augmentation n=" + std::to_string(n), to_double(aug),
                        0.0, 0.0);
  aug_row.exact = to_string(aug);
  r.reports.push_back(aug_row);

  const Rational dist = vassiliev::l2_distance_sq(w, vassiliev::LaurentElement::delta(0));
  CheckReport dist_row = CheckReport::make("density witness distance-sq vs 1/n",
                                           to_double(dist), to_double(make_rational(1, n)), 0.0);
  dist_row.exact = to_string(dist);
  r.reports.push_back(dist_row);
  return r;
}

RunOutput run_abel_sum(const SharedOpts& shared, double x, long max_terms) {
  RunOutput r;
  shared.record(r, "abel-sum");
  config_double(r, "x", x);
  config_int(r, "max_terms", max_terms);

  const auto s = vassiliev::abel_partial_sum(x, max_terms);
  config_int(r, "terms_used", s.terms_used);
  const double abel_bound =
      s.truncation_bound + s.float_bound + (1.0 - x) / (1.0 + x);
  r.reports.push_back(
      CheckReport::make("abel-twist-sum x=" + std::to_string(x), s.value, 1.0, abel_bound));
  const double closed = 2.0 * x / (1.0 + x);
  r.reports.push_back(CheckReport::make("abel sum vs closed form 2x/(1+x)", s.value, closed,
                                        s.truncation_bound + s.float_bound + 4e-15));
  return r;
}

RunOutput run_p3_probe(const SharedOpts& shared, const std::string& profile, double s, int L) {
  RunOutput r;
  shared.record(r, "p3-probe");
  config_str(r, "profile", profile);
  config_double(r, "s", s);
  config_int(r, "L", L);
  r.notes.push_back(
      "report-only probe of absolute convergence of l2 group-algebra products; "
      "the table is evidence, not a verdict");

  const auto probe = group_algebra::l2_product_probe(profile, s, L);
  for (const auto& row : probe.rows)
    r.reports.push_back(
        CheckReport::info("partial sum L=" + std::to_string(row.length), row.partial_sum));
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification toolkit for two-strand braid series: exp(tau) = q by direct "
               "convolution and by the closed-form Fourier route, plus filtration, simplex "
               "and group-algebra checks"};
  app.require_subcommand(1);

  SharedOpts tau_opts, exp_opts, par_opts, pow_opts, simplex_opts, bslice_opts, vdeg_opts,
      density_opts, abel_opts, probe_opts;

  auto* c_tau = app.add_subcommand("tau", "Construct tau both ways and spot-check it");
  long tau_window = 2048;
  c_tau->add_option("--window", tau_window, "Truncation window")
      ->check(CLI::Range(1L, 100000000L))
      ->capture_default_str();
  tau_opts.attach(c_tau);

  auto* c_exp = app.add_subcommand("exp-check", "Verify exp(tau) = q on both pipelines");
  long exp_window = 2048;
  int exp_terms = 40;
  long exp_probe = 16;
  c_exp->add_option("--window", exp_window, "Truncation window")
      ->check(CLI::Range(1L, 100000000L))
      ->capture_default_str();
  c_exp->add_option("--terms", exp_terms, "Series terms")
      ->check(CLI::Range(1, 170))
      ->capture_default_str();
  c_exp->add_option("--probe", exp_probe, "Probe coefficients |n| <= probe")
      ->check(CLI::Range(0L, 100000L))
      ->capture_default_str();
  exp_opts.attach(c_exp);

  auto* c_par = app.add_subcommand("parseval", "Parseval identity checks by quadrature");
  std::size_t par_grid = 4097;
  long par_window = 10000;
  c_par->add_option("--grid", par_grid, "Sample count (odd, >= 3)")
      ->check(CLI::Range(static_cast<std::size_t>(3), static_cast<std::size_t>(100000001)))
      ->capture_default_str();
  c_par->add_option("--window", par_window, "Coefficient window for the sum side")
      ->check(CLI::Range(1L, 100000000L))
      ->capture_default_str();
  par_opts.attach(c_par);

  auto* c_pow = app.add_subcommand("tau-power", "Convolution powers of tau: norm identity "
                                                "and quadrature cross-checks");
  int pow_m = 2;
  long pow_window = 10000;
  c_pow->add_option("--m", pow_m, "Power")->check(CLI::Range(1, 64))->capture_default_str();
  c_pow->add_option("--window", pow_window, "Window")
      ->check(CLI::Range(1L, 100000000L))
      ->capture_default_str();
  pow_opts.attach(c_pow);

  auto* c_simplex = app.add_subcommand("simplex", "Ordered-simplex volume, exact and Monte Carlo");
  int simplex_n = 6;
  long mc_samples = 0;
  c_simplex->add_option("--n", simplex_n, "Dimension")
      ->check(CLI::Range(1, 20))
      ->capture_default_str();
  c_simplex->add_option("--mc-samples", mc_samples, "Monte Carlo sample count (0 = skip)")
      ->check(CLI::Range(0L, 1000000000L))
      ->capture_default_str();
  simplex_opts.attach(c_simplex);

  auto* c_bslice = app.add_subcommand("b-slice", "Constant-twist invariant k^m/m!");
  int bslice_m = 2;
  long bslice_k = 3;
  c_bslice->add_option("--m", bslice_m, "Degree")->check(CLI::Range(0, 20))->capture_default_str();
  c_bslice->add_option("--k", bslice_k, "Twist")
      ->check(CLI::Range(-1000000L, 1000000L))
      ->capture_default_str();
  bslice_opts.attach(c_bslice);

  auto* c_vdeg = app.add_subcommand("vassiliev-degree",
                                    "Filtration degree by exact (q-1)-division");
  std::string vdeg_coeffs;
  int vdeg_max = 64;
  c_vdeg->add_option("--coeffs", vdeg_coeffs, "Element as exponent:rational pairs, "
                                              "e.g. \"0:-1,1:1\"")
      ->required();
  c_vdeg->add_option("--max-check", vdeg_max, "Division cap")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  vdeg_opts.attach(c_vdeg);

  auto* c_density = app.add_subcommand("density", "Filtration density witness at level V_1");
  long density_n = 1000;
  c_density->add_option("--n", density_n, "Witness parameter")
      ->check(CLI::Range(1L, 10000000L))
      ->capture_default_str();
  density_opts.attach(c_density);

  auto* c_abel = app.add_subcommand("abel-sum", "Abel-regularized twist sum (target -2*zeta(0))");
  double abel_x = 0.999;
  long abel_max_terms = 100000000;
  c_abel->add_option("--x", abel_x, "Damping parameter in (0,1)")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)))
      ->capture_default_str();
  c_abel->add_option("--max-terms", abel_max_terms, "Term cap")
      ->check(CLI::Range(1L, 4000000000L))
      ->capture_default_str();
  abel_opts.attach(c_abel);

  auto* c_probe = app.add_subcommand("p3-probe", "Report-only growth table for l2 "
                                                 "group-algebra products on F2 x Z");
  std::string probe_profile = "shell";
  double probe_s = 2.0;
  int probe_L = 6;
  c_probe->add_option("--profile", probe_profile, "Coefficient profile: delta | shell | "
                                                  "unnormalized")
      ->capture_default_str();
  c_probe->add_option("--s", probe_s, "Shell decay exponent")->capture_default_str();
  c_probe->add_option("--L", probe_L, "Maximum word length (enumeration cap 12)")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  probe_opts.attach(c_probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    RunOutput r;
    std::string format;
    if (*c_tau) {
      r = run_tau(tau_opts, tau_window);
      format = tau_opts.format;
    } else if (*c_exp) {
      if (exp_probe > exp_window)
        throw std::invalid_argument("exp-check: probe must be <= window");
      r = run_exp_check(exp_opts, exp_window, exp_terms, exp_probe);
      format = exp_opts.format;
    } else if (*c_par) {
      if (par_grid % 2 == 0)
        throw std::invalid_argument("parseval: grid must be odd (composite Simpson rule)");
      r = run_parseval(par_opts, par_grid, par_window);
      format = par_opts.format;
    } else if (*c_pow) {
      r = run_tau_power(pow_opts, pow_m, pow_window);
      format = pow_opts.format;
    } else if (*c_simplex) {
      if (mc_samples != 0 && mc_samples < 100)
        throw std::invalid_argument("simplex: --mc-samples must be 0 or >= 100");
      r = run_simplex(simplex_opts, simplex_n, mc_samples);
      format = simplex_opts.format;
    } else if (*c_bslice) {
      r = run_b_slice(bslice_opts, bslice_m, bslice_k);
      format = bslice_opts.format;
    } else if (*c_vdeg) {
      r = run_vassiliev_degree(vdeg_opts, vdeg_coeffs, vdeg_max);
      format = vdeg_opts.format;
    } else if (*c_density) {
      r = run_density(density_opts, density_n);
      format = density_opts.format;
    } else if (*c_abel) {
      r = run_abel_sum(abel_opts, abel_x, abel_max_terms);
      format = abel_opts.format;
    } else if (*c_probe) {
      r = run_p3_probe(probe_opts, probe_profile, probe_s, probe_L);
      format = probe_opts.format;
    } else {
      err << "error: no subcommand\n\n" << app.help();
      return 2;
    }
    return finish(r, format, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tauq::cli
