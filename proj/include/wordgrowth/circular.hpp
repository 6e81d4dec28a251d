#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "wordgrowth/powers.hpp"
#include "wordgrowth/words.hpp"

namespace wordgrowth {

/// A cyclic sequence of letters, stored as its least rotation.
class CircularWord {
 public:
  explicit CircularWord(std::span<const Letter> letters);

  const Word& representative() const noexcept { return representative_; }
  std::size_t length() const noexcept { return representative_.size(); }

  friend auto operator<=>(const CircularWord&, const CircularWord&) = default;

 private:
  Word representative_;
};

/// No square of length at most n can be read around the circle.
bool circular_is_square_free(const CircularWord& word);

/// Number of minimal forbidden powers of period exactly n over k letters.
/// Squares (bound 2) are counted through circular square-freeness of the
/// root; other bounds by direct search over free roots.
std::uint64_t root_complexity(int k, const ExponentBound& bound, int n);

/// All square-free circular words of length n over k letters, sorted.
std::vector<CircularWord> enumerate_circular_square_free(int n, int k = 3);

/// Number of classes of `words` under renaming of the k letters.
std::size_t renaming_class_count(const std::vector<CircularWord>& words, int k);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int period, std::uint64_t budget);
  int period() const noexcept { return period_; }

 private:
  int period_;
};

struct ScanOptions {
  std::uint64_t budget = 20'000'000;  // search nodes per period
  unsigned threads = 1;
};

/// Periods p <= p_max admitting no minimal forbidden power, decided by
/// exhaustive search over canonical free roots. Throws BudgetExceeded for
/// the smallest p whose search did not finish.
std::vector<int> forbidden_period_scan(int k, const ExponentBound& bound, int p_max,
                                       const ScanOptions& options = {});

struct RootComplexityRow {
  int k = 0;
  ExponentBound bound{2, 1};
  int n = 0;
  std::uint64_t count = 0;
};

void write_root_csv(std::ostream& out, const std::vector<RootComplexityRow>& rows);

}  // namespace wordgrowth
