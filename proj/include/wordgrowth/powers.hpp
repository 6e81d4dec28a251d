#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordgrowth/words.hpp"

namespace wordgrowth {

/// Reduced fraction with a positive denominator.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d);

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

/// A power bound beta (words of exponent >= beta are forbidden) or beta+
/// (exponent > beta forbidden).
class ExponentBound {
 public:
  ExponentBound(std::int64_t num, std::int64_t den, bool plus = false);

  /// Accepts "3", "7/3", "7/3+", "2+".
  static ExponentBound parse(std::string_view text);

  const Ratio& beta() const noexcept { return beta_; }
  bool plus() const noexcept { return plus_; }
  std::string to_string() const;

  bool violated_by(const Ratio& e) const noexcept { return plus_ ? e > beta_ : e >= beta_; }

  /// Shortest length of a forbidden word with period p.
  int forbidden_length(int period) const;

  friend bool operator==(const ExponentBound&, const ExponentBound&) = default;

 private:
  Ratio beta_;
  bool plus_;
};

/// |w| / (shortest period of w). Throws on the empty word.
Ratio exponent(std::span<const Letter> word);

bool violates(const Ratio& e, const ExponentBound& bound);

/// No factor violates the bound.
bool is_free(std::span<const Letter> word, const ExponentBound& bound);

/// A word kept free of forbidden powers under appends. For each candidate
/// period q the tracker keeps the length of the current run of positions i
/// with x[i] == x[i-q], so the longest period-q suffix is known in O(1) and
/// an append costs O(|word|). Only suffixes can become new violations.
class PowerTracker {
 public:
  explicit PowerTracker(ExponentBound bound);

  std::size_t size() const noexcept { return word_.size(); }
  std::span<const Letter> word() const noexcept { return word_; }
  const ExponentBound& bound() const noexcept { return bound_; }

  /// Appends `a` if the word stays free; otherwise leaves it unchanged.
  bool push(Letter a);
  void pop();

  /// For a free word x: x+a is a minimal forbidden word, i.e. x+a itself
  /// violates the bound and none of its proper suffixes does.
  bool completes_minimal(Letter a);

 private:
  int forbidden_length(int q);
  void runs_for(Letter a, std::vector<int>& out) const;

  ExponentBound bound_;
  Word word_;
  std::vector<std::vector<int>> runs_;  // runs_[i][q], 1 <= q <= i
  std::vector<int> min_length_;
  std::vector<int> scratch_;
};

}  // namespace wordgrowth
