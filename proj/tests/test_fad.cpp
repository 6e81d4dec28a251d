#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wordgrowth/fad.hpp"
#include "wordgrowth/growth.hpp"

using namespace wordgrowth;

namespace {

bool contains_factor(const Word& w, const Word& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

Word w(const char* s) { return word_from_string(s); }

State run(const Dfa& dfa, State s, const Word& word) {
  for (Letter a : word) {
    if (s == kNoState) return s;
    s = dfa.next(s, a);
  }
  return s;
}

std::set<State> reachable_in(const Dfa& dfa, std::set<State> from, int steps) {
  for (int i = 0; i < steps; ++i) {
    std::set<State> next;
    for (State s : from)
      for (int a = 0; a < dfa.alphabet_size(); ++a)
        if (State t = dfa.next(s, a); t != kNoState) next.insert(t);
    from = std::move(next);
  }
  return from;
}

bool accepts(const Dfa& dfa, const Word& word) {
  if (dfa.is_empty()) return false;
  const State s = run(dfa, dfa.initial(), word);
  return s != kNoState && dfa.accepting(s);
}

}  // namespace

TEST_CASE("antidictionary validation") {
  CHECK_THROWS_AS(Antidictionary(2, {w("ab"), w("aab")}), std::invalid_argument);
  CHECK_THROWS_AS(Antidictionary(2, {w("ac")}), std::invalid_argument);
  const Antidictionary ad(2, {w("bb"), w("aa"), w("aa")});
  CHECK(ad.size() == 2);
  CHECK(ad.words().front() == w("aa"));
  CHECK(ad.total_length() == 4);
  CHECK(fad_automaton(Antidictionary(2, {Word{}})).is_empty());
}

TEST_CASE("antidictionary file format") {
  std::istringstream letters("ad 2\n# comment\naaa\nbbb\n");
  CHECK(parse_antidictionary(letters).words() == std::vector<Word>{w("aaa"), w("bbb")});
  std::istringstream indices("ad 30\n0 29\n29 0\n");
  CHECK(parse_antidictionary(indices).words() == std::vector<Word>{{0, 29}, {29, 0}});
  std::istringstream bad("ad 2\nabc\n");
  CHECK_THROWS(parse_antidictionary(bad));
  std::istringstream no_header("aa\n");
  CHECK_THROWS(parse_antidictionary(no_header));
}

TEST_CASE("fad automaton examples") {
  const Dfa alt = fad_automaton(Antidictionary(2, {w("aa"), w("bb")}));
  for (int n = 1; n <= 6; ++n) CHECK(count_words(alt, n) == 2);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(approximate_index(fad_automaton(Antidictionary(2, {w("aaa"), w("bbb")})), 1e-7).contains(phi));
  const Dfa full = fad_automaton(Antidictionary(3, {}));
  CHECK(approximate_index(full, 1e-7).contains(3.0));
}

TEST_CASE("fad automaton agrees with factor search") {
  for (const auto& ad : fixtures::fad_corpus()) {
    const Dfa dfa = fad_automaton(ad);
    const int k = ad.alphabet_size();
    const int max_len = k == 2 ? 12 : 9;
    for (int n = 0; n <= max_len; ++n)
      oracle::for_each_word(k, n, [&](const Word& word) {
        const bool avoids = std::none_of(ad.words().begin(), ad.words().end(),
                                         [&](const Word& f) { return contains_factor(word, f); });
        CHECK(accepts(dfa, word) == avoids);
      });
  }
}

TEST_CASE("thue-morse antidictionary") {
  CHECK(tm_antidictionary(-1).words() == std::vector<Word>{w("aaa"), w("bbb")});
  const auto zero_words = tm_antidictionary(0).words();
  const std::set<Word> zero(zero_words.begin(), zero_words.end());
  CHECK(zero == std::set<Word>{w("aaa"), w("bbb"), w("aabaa"), w("bbabb"), w("ababa"), w("babab")});
  const auto one = tm_antidictionary(1).words();
  CHECK(one.size() == 10);
  CHECK(std::count_if(one.begin(), one.end(), [](const Word& x) { return x.size() == 8; }) == 4);
  CHECK_THROWS(tm_antidictionary(-2));

  CHECK(thue_morse_prefix(8) == w("abbabaab"));
  for (int i = -1; i <= 4; ++i) {
    const Word prefix = thue_morse_prefix(std::size_t{1} << (i + 6));
    const auto ad = tm_antidictionary(i);
    for (const auto& f : ad.words()) {
      CHECK_FALSE(contains_factor(prefix, f));
      // every proper factor does occur
      CHECK(contains_factor(prefix, Word(f.begin() + 1, f.end())));
      CHECK(contains_factor(prefix, Word(f.begin(), f.end() - 1)));
    }
  }
}

TEST_CASE("extendable parts: examples") {
  const Dfa full = fixtures::full(2);
  CHECK(extendable_part(full, Side::right) == full);
  CHECK(extendable_part(full, Side::two_sided) == full);

  const Dfa ab = fixtures::two_loops();
  for (auto side : {Side::right, Side::two_sided}) {
    const Dfa part = extendable_part(ab, side);
    for (int n = 0; n <= 6; ++n) CHECK(count_words(part, n) == count_words(ab, n));
  }
  const Dfa alt = fad_automaton(Antidictionary(2, {w("aa"), w("bb")}));
  for (auto side : {Side::right, Side::two_sided})
    for (int n = 0; n <= 6; ++n) CHECK(count_words(extendable_part(alt, side), n) == count_words(alt, n));

  CHECK_THROWS(extendable_part(fixtures::even_a(), Side::right));
}

TEST_CASE("extendable parts agree with the definition") {
  std::vector<Dfa> corpus;
  for (const auto& ad : fixtures::fad_corpus()) corpus.push_back(fad_automaton(ad));
  // a finite tail hanging off a cycle, and a finite head before one
  corpus.push_back(fixtures::make_dfa(2, 3, 0, {0, 1, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 2}}));
  corpus.push_back(fixtures::make_dfa(2, 3, 0, {0, 1, 2}, {{0, 1, 1}, {1, 1, 2}, {2, 0, 2}}));
  for (const Dfa& dfa : corpus) {
    const Dfa right = extendable_part(dfa, Side::right);
    const Dfa both = extendable_part(dfa, Side::two_sided);
    const int m = static_cast<int>(dfa.state_count()) + 1;
    const auto heads = reachable_in(dfa, {dfa.initial()}, m);
    for (int n = 0; n <= 6; ++n)
      oracle::for_each_word(dfa.alphabet_size(), n, [&](const Word& word) {
        const State end = run(dfa, dfa.initial(), word);
        const bool in_l = end != kNoState;
        const bool r = in_l && !reachable_in(dfa, {end}, m).empty();
        bool e = false;
        for (State h : heads) {
          const State t = run(dfa, h, word);
          if (t != kNoState && !reachable_in(dfa, {t}, m).empty()) {
            e = true;
            break;
          }
        }
        CHECK(accepts(right, word) == r);
        CHECK(accepts(both, word) == e);
      });
  }
}

TEST_CASE("intermediate language membership") {
  CHECK(intermediate_member(w("abc"), 3));
  CHECK(intermediate_member(w("aabb"), 2));
  CHECK(intermediate_member(w("bbaa"), 2));
  CHECK(intermediate_member(w("abaa"), 2));
  CHECK_FALSE(intermediate_member(w("aaba"), 2));
  CHECK_FALSE(intermediate_member(w("acb"), 3));
  CHECK(intermediate_member(Word{}, 3));
  CHECK(intermediate_member(w("ccaab"), 3));
}

TEST_CASE("intermediate counts match enumeration") {
  CHECK(intermediate_count(0, 3) == 1);
  CHECK(intermediate_count(1, 3) == 3);
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n <= (k == 2 ? 14 : 9); ++n) {
      BigInt brute = 0;
      oracle::for_each_word(k, n, [&](const Word& word) {
        if (intermediate_member(word, k)) ++brute;
      });
      CHECK(intermediate_count(n, k) == brute);
    }
}
