#include "tauq/group_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace tauq::group_algebra {

Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

char letter_char(Letter l) {
  switch (l) {
    case Letter::X: return 'x';
    case Letter::XInv: return 'X';
    case Letter::Y: return 'y';
    case Letter::YInv: return 'Y';
  }
  return '?';
}

GroupWord::GroupWord(std::vector<Letter> letters, long central_exponent)
    : central_(central_exponent) {
  // Stack cancellation reaches the fixed point in one pass.
  free_.reserve(letters.size());
  for (Letter l : letters) {
    if (!free_.empty() && inverse(free_.back()) == l)
      free_.pop_back();
    else
      free_.push_back(l);
  }
}

GroupWord GroupWord::identity(long central_exponent) {
  GroupWord w;
  w.central_ = central_exponent;
  return w;
}

GroupWord GroupWord::inverted() const {
  std::vector<Letter> letters;
  letters.reserve(free_.size());
  for (auto it = free_.rbegin(); it != free_.rend(); ++it) letters.push_back(inverse(*it));
  GroupWord out;
  out.free_ = std::move(letters);  // reversal of a reduced word is reduced
  out.central_ = -central_;
  return out;
}

std::strong_ordering GroupWord::operator<=>(const GroupWord& other) const {
  if (auto c = central_ <=> other.central_; c != 0) return c;
  if (auto c = free_.size() <=> other.free_.size(); c != 0) return c;
  for (std::size_t i = 0; i < free_.size(); ++i)
    if (auto c = static_cast<std::uint8_t>(free_[i]) <=> static_cast<std::uint8_t>(other.free_[i]);
        c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::string GroupWord::str() const {
  std::string out;
  for (Letter l : free_) out += letter_char(l);
  if (out.empty()) out = "e";
  if (central_ != 0) out += " c^" + std::to_string(central_);
  return out;
}

GroupWord reduce(std::vector<Letter> letters, long central_exponent) {
  return GroupWord(std::move(letters), central_exponent);
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> letters = a.free_part();
  letters.insert(letters.end(), b.free_part().begin(), b.free_part().end());
  return GroupWord(std::move(letters), a.central_exponent() + b.central_exponent());
}

GroupAlgebraElement GroupAlgebraElement::delta(const GroupWord& w) {
  GroupAlgebraElement e;
  e.add_term(w, Rational(1));
  return e;
}

Rational GroupAlgebraElement::coeff(const GroupWord& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const GroupWord& w, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = support_.emplace(w, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) support_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
  GroupAlgebraElement out = *this;
  for (const auto& [w, r] : other.support()) out.add_term(w, r);
  return out;
}

GroupAlgebraElement convolve_finite(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [u, ru] : a.support())
    for (const auto& [v, rv] : b.support()) out.add_term(multiply(u, v), ru * rv);
  return out;
}

Rational augmentation(const GroupAlgebraElement& e) {
  Rational sum(0);
  for (const auto& [w, r] : e.support()) sum += r;
  return sum;
}

std::vector<long> shell_counts(int max_len) {
  std::vector<long> counts(static_cast<std::size_t>(max_len) + 1, 0);
  for_each_reduced_word(max_len, [&counts](const std::vector<Letter>& w) {
    ++counts[w.size()];
  });
  return counts;
}

ProbeResult l2_product_probe(const std::string& profile, double s, int max_length) {
  if (max_length < 0 || max_length > 12)
    throw std::invalid_argument("l2_product_probe: need 0 <= max_length <= 12 (enumeration cap)");
  if (profile != "delta" && profile != "shell" && profile != "unnormalized")
    throw std::invalid_argument("l2_product_probe: unknown profile '" + profile + "'");
  if (profile == "unnormalized")
    throw std::invalid_argument(
        "l2_product_probe: profile 'unnormalized' is not square-summable "
        "(squared shell mass 4*3^{L-1}*(1+L)^{-2s} diverges for every s)");
  if (profile == "shell" && !(s > 0.5))
    throw std::invalid_argument(
        "l2_product_probe: profile 'shell' requires s > 1/2 for square-summability "
        "(squared shell mass is (1+L)^{-2s})");

  // Shell sizes by enumeration; the profile weight depends on |w| only.
  const std::vector<long> shells = shell_counts(max_length);
  auto weight = [&](const std::vector<Letter>& w) -> double {
    if (profile == "delta") return (w.size() == 1 && w[0] == Letter::X) ? 1.0 : 0.0;
    const auto len = static_cast<double>(w.size());
    return std::pow(1.0 + len, -s) / std::sqrt(static_cast<double>(shells[w.size()]));
  };

  // Identity-indexed output coefficient in absolute value: u * v = e forces
  // v = u^{-1}, so accumulate |a_w| |b_{w^-1}| per shell (|w^{-1}| = |w|).
  std::vector<double> per_shell(static_cast<std::size_t>(max_length) + 1, 0.0);
  std::vector<Letter> inv;
  for_each_reduced_word(max_length, [&](const std::vector<Letter>& w) {
    inv.assign(w.rbegin(), w.rend());
    for (Letter& l : inv) l = inverse(l);
    per_shell[w.size()] += weight(w) * weight(inv);
  });

  ProbeResult out{profile, s, max_length, {}};
  double running = 0.0;
  for (int len = 0; len <= max_length; ++len) {
    running += per_shell[static_cast<std::size_t>(len)];
    out.rows.push_back({len, running});
  }
  return out;
}

}  // namespace tauq::group_algebra
