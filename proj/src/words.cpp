#include "wordgrowth/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordgrowth {

Word word_from_string(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') throw std::invalid_argument(std::string("not a letter: ") + c);
    w.push_back(c - 'a');
  }
  return w;
}

std::string to_string(std::span<const Letter> word) {
  const bool small = std::all_of(word.begin(), word.end(), [](Letter a) { return a >= 0 && a < 26; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (small) {
      out.push_back(static_cast<char>('a' + word[i]));
    } else {
      if (i) out.push_back(' ');
      out += std::to_string(word[i]);
    }
  }
  return out;
}

int minimal_period(std::span<const Letter> word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return 0;
  std::vector<int> border(n + 1, 0);
  border[0] = -1;
  for (int i = 1; i <= n; ++i) {
    int b = border[i - 1];
    while (b >= 0 && word[b] != word[i - 1]) b = border[b];
    border[i] = b + 1;
  }
  return n - border[n];
}

Word canonical_renaming(std::span<const Letter> word) {
  std::vector<Letter> rename;
  Word out;
  out.reserve(word.size());
  Letter fresh = 0;
  for (Letter a : word) {
    if (static_cast<std::size_t>(a) >= rename.size()) rename.resize(a + 1, -1);
    if (rename[a] < 0) rename[a] = fresh++;
    out.push_back(rename[a]);
  }
  return out;
}

int letters_used(std::span<const Letter> word) {
  std::vector<Letter> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Word least_rotation(std::span<const Letter> word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return {};
  std::vector<int> fail(2 * n, -1);
  int k = 0;
  auto at = [&](int i) { return word[i % n]; };
  for (int j = 1; j < 2 * n; ++j) {
    int i = fail[j - k - 1];
    while (i != -1 && at(j) != at(k + i + 1)) {
      if (at(j) < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && at(j) != at(k + i + 1)) {
      if (at(j) < at(k + i + 1)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  Word out(n);
  for (int i = 0; i < n; ++i) out[i] = at(k + i);
  return out;
}

}  // namespace wordgrowth
