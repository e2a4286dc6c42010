#include "tauq/rational.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tauq {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // base canonical => num^e / den^e already coprime
  return out;
}

double to_double(const Rational& r) {
  // mpq_get_d rounds toward zero; nudge to the nearest double (ties to even)
  // so conversions agree with standard round-to-nearest semantics.
  const double d = r.get_d();
  if (!std::isfinite(d)) return d;
  const Rational exact_d(d);
  const Rational err = r - exact_d;
  if (err == 0) return d;
  const double next = std::nextafter(
      d, err > 0 ? std::numeric_limits<double>::infinity()
                 : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(next)) return d;
  const Rational err_next = r - Rational(next);
  const Rational a = err > 0 ? err : Rational(-err);
  const Rational b = err_next > 0 ? err_next : Rational(-err_next);
  if (b < a) return next;
  if (a < b) return d;
  // exact tie: even mantissa wins
  return (std::bit_cast<std::uint64_t>(d) & 1u) == 0 ? d : next;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace tauq
