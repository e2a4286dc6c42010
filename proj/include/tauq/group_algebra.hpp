#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tauq/rational.hpp"

namespace tauq::group_algebra {

// Generators of the free factor; the central generator (the full twist) is
// tracked as an integer exponent.
enum class Letter : std::uint8_t { X, XInv, Y, YInv };

Letter inverse(Letter l);
char letter_char(Letter l);  // x, X, y, Y

/// Normal form of an element of F2 x Z: a reduced word in {x, x^-1, y, y^-1}
/// (no adjacent inverse pairs) plus the exponent of the central generator.
class GroupWord {
 public:
  GroupWord() = default;
  // Reduces the letters to a fixed point on construction.
  GroupWord(std::vector<Letter> letters, long central_exponent);

  static GroupWord identity(long central_exponent = 0);

  const std::vector<Letter>& free_part() const { return free_; }
  long central_exponent() const { return central_; }
  std::size_t length() const { return free_.size(); }
  bool is_identity() const { return free_.empty() && central_ == 0; }

  GroupWord inverted() const;

  bool operator==(const GroupWord& other) const = default;
  // Order by (central, length, letters): total, deterministic.
  std::strong_ordering operator<=>(const GroupWord& other) const;

  std::string str() const;  // e.g. "xyX c^2", "e" for the identity

 private:
  std::vector<Letter> free_;
  long central_ = 0;
};

// Normal-form map: fully cancels adjacent inverse pairs.
GroupWord reduce(std::vector<Letter> letters, long central_exponent);

// Concatenate free parts (boundary cancellation only: inputs are reduced),
// add central exponents.
GroupWord multiply(const GroupWord& a, const GroupWord& b);

/// Finitely supported rational combination of normal-form words.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  static GroupAlgebraElement delta(const GroupWord& w);

  const std::map<GroupWord, Rational>& support() const { return support_; }
  Rational coeff(const GroupWord& w) const;
  bool is_zero() const { return support_.empty(); }
  void add_term(const GroupWord& w, const Rational& r);
  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;

 private:
  std::map<GroupWord, Rational> support_;
};

// Group law extended bilinearly: coefficient of g is Sum_{u*v=g} a_u b_v.
GroupAlgebraElement convolve_finite(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b);

Rational augmentation(const GroupAlgebraElement& e);

// Number of reduced words of each length 0..max_len in the free factor, by
// brute-force enumeration (1, 4, 12, 36, ... = 4*3^{L-1} for L >= 1).
std::vector<long> shell_counts(int max_len);

// Depth-first enumeration of all reduced free words of length <= max_len
// (central exponent 0), in deterministic order. max_len <= 12.
template <typename Fn>
void for_each_reduced_word(int max_len, Fn&& fn);

struct ProbeRow {
  int length;          // shell cut-off L
  double partial_sum;  // Sum_{|w| <= L} |a_w| |b_{w^-1}|
};

/// Growth table of the identity-coefficient absolute partial sums for the
/// square-summable profile a = b selected by `profile`:
///   "delta"  - a = b = delta_x (finite support),
///   "shell"  - c_w = (1+|w|)^{-s} / sqrt(shell size), square-summable for
///              s > 1/2 (squared shell mass (1+L)^{-2s}),
///   "unnormalized" - c_w = (1+|w|)^{-s}; never square-summable (shell mass
///              grows like 3^L), always rejected.
/// Report-only: the table carries no convergence verdict.
struct ProbeResult {
  std::string profile;
  double s;
  int max_length;
  std::vector<ProbeRow> rows;
};
ProbeResult l2_product_probe(const std::string& profile, double s, int max_length);

// --- template definition ---

namespace detail {
template <typename Fn>
void enumerate_from(std::vector<Letter>& word, int remaining, Fn& fn) {
  fn(static_cast<const std::vector<Letter>&>(word));
  if (remaining == 0) return;
  for (int c = 0; c < 4; ++c) {
    const Letter l = static_cast<Letter>(c);
    if (!word.empty() && inverse(word.back()) == l) continue;
    word.push_back(l);
    enumerate_from(word, remaining - 1, fn);
    word.pop_back();
  }
}
}  // namespace detail

template <typename Fn>
void for_each_reduced_word(int max_len, Fn&& fn) {
  if (max_len < 0 || max_len > 12)
    throw std::invalid_argument("for_each_reduced_word: need 0 <= max_len <= 12");
  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(max_len));
  detail::enumerate_from(word, max_len, fn);
}

}  // namespace tauq::group_algebra
