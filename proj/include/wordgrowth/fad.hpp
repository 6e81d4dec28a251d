#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wordgrowth/automaton.hpp"
#include "wordgrowth/growth.hpp"
#include "wordgrowth/words.hpp"

namespace wordgrowth {

/// Finite antifactorial set of forbidden words. Construction sorts and
/// deduplicates the words and rejects sets where one word is a factor of
/// another.
class Antidictionary {
 public:
  Antidictionary(int alphabet_size, std::vector<Word> words);

  int alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t total_length() const noexcept;

 private:
  int alphabet_size_;
  std::vector<Word> words_;
};

/// File format: a header line `ad <k>`, then one word per line, either as
/// space-separated letter indices or (k <= 26) as a bare string over a..z.
Antidictionary parse_antidictionary(std::istream& in);
Antidictionary parse_antidictionary_file(const std::string& path);

/// Automaton of all words avoiding the antidictionary, built from the
/// Aho-Corasick trie: one state per proper prefix of a forbidden word, all
/// states accepting.
Dfa fad_automaton(const Antidictionary& ad);

/// Words of the Thue-Morse antidictionary up to length 3*2^i+2 (i >= -1).
Antidictionary tm_antidictionary(int i);

/// Prefix of the Thue-Morse word over {0,1}.
Word thue_morse_prefix(std::size_t length);

enum class Side { right, two_sided };

/// Right-extendable or two-sided-extendable part of a factorial language
/// given by an automaton with all states accepting.
Dfa extendable_part(const Dfa& dfa, Side side);

/// Membership in the language whose power factorization follows the cyclic
/// letter order 0 -> 1 -> ... -> k-1 -> 0 with nondecreasing exponents
/// (the last exponent is free).
bool intermediate_member(std::span<const Letter> word, int k);

/// Number of members of length n.
BigInt intermediate_count(int n, int k);

}  // namespace wordgrowth
