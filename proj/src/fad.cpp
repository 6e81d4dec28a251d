#include "wordgrowth/fad.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

namespace wordgrowth {

namespace {

// Aho-Corasick trie with a complete goto table.
struct PatternTrie {
  int k;
  std::vector<State> child;   // node * k + letter, kNoState when absent
  std::vector<State> go;      // full goto function
  std::vector<State> fail;
  std::vector<std::uint8_t> terminal;
  std::vector<std::uint8_t> has_suffix_word;  // some pattern is a suffix

  explicit PatternTrie(int alphabet_size) : k(alphabet_size) { add_node(); }

  State add_node() {
    child.insert(child.end(), k, kNoState);
    terminal.push_back(0);
    return static_cast<State>(terminal.size() - 1);
  }
  std::size_t size() const { return terminal.size(); }

  void insert(std::span<const Letter> word) {
    State v = 0;
    for (Letter a : word) {
      if (a < 0 || a >= k) throw std::invalid_argument("letter out of range in antidictionary");
      State& next = child[static_cast<std::size_t>(v) * k + a];
      if (next == kNoState) {
        const State fresh = add_node();
        child[static_cast<std::size_t>(v) * k + a] = fresh;
        v = fresh;
      } else {
        v = next;
      }
    }
    terminal[v] = 1;
  }

  void link() {
    go.assign(child.size(), kNoState);
    fail.assign(size(), 0);
    has_suffix_word.assign(size(), 0);
    std::queue<State> order;
    has_suffix_word[0] = terminal[0];
    for (Letter a = 0; a < k; ++a) {
      const State c = child[a];
      if (c == kNoState) {
        go[a] = 0;
      } else {
        go[a] = c;
        fail[c] = 0;
        order.push(c);
      }
    }
    while (!order.empty()) {
      const State v = order.front();
      order.pop();
      has_suffix_word[v] = terminal[v] || has_suffix_word[fail[v]];
      for (Letter a = 0; a < k; ++a) {
        const auto slot = static_cast<std::size_t>(v) * k + a;
        const State c = child[slot];
        const State via_fail = go[static_cast<std::size_t>(fail[v]) * k + a];
        if (c == kNoState) {
          go[slot] = via_fail;
        } else {
          go[slot] = c;
          fail[c] = via_fail;
          order.push(c);
        }
      }
    }
  }

  State step(State v, Letter a) const { return go[static_cast<std::size_t>(v) * k + a]; }
};

}  // namespace

Antidictionary::Antidictionary(int alphabet_size, std::vector<Word> words)
    : alphabet_size_(alphabet_size), words_(std::move(words)) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  const bool has_empty = !words_.empty() && words_.front().empty();
  if (has_empty) {
    if (words_.size() > 1) throw std::invalid_argument("antidictionary is not antifactorial: empty word");
    return;
  }

  PatternTrie trie(alphabet_size);
  for (const auto& w : words_) trie.insert(w);
  trie.link();
  for (const auto& w : words_) {
    State v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      v = trie.step(v, w[i]);
      const bool last = i + 1 == w.size();
      const bool hit = last ? trie.has_suffix_word[trie.fail[v]] || !trie.terminal[v]
                            : trie.has_suffix_word[v];
      if (hit)
        throw std::invalid_argument("antidictionary is not antifactorial: " + to_string(w) +
                                    " contains another forbidden word");
    }
  }
}

std::size_t Antidictionary::total_length() const noexcept {
  std::size_t total = 0;
  for (const auto& w : words_) total += w.size();
  return total;
}

Antidictionary parse_antidictionary(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int k = -1;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (k < 0) {
      if (tokens.size() != 2 || tokens[0] != "ad")
        throw ParseError(line_no, "expected header 'ad <k>'");
      try {
        k = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad alphabet size");
      }
      if (k < 1) throw ParseError(line_no, "alphabet size must be positive");
      continue;
    }
    Word w;
    const bool numeric = std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
      return std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    });
    if (numeric) {
      for (const auto& t : tokens) w.push_back(std::stoi(t));
    } else if (tokens.size() == 1 && k <= 26) {
      try {
        w = word_from_string(tokens[0]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "malformed word");
    }
    for (Letter a : w)
      if (a >= k) throw ParseError(line_no, "letter out of range");
    words.push_back(std::move(w));
  }
  if (k < 0) throw ParseError(line_no, "missing 'ad' header");
  try {
    return Antidictionary(k, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Antidictionary parse_antidictionary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_antidictionary(in);
}

Dfa fad_automaton(const Antidictionary& ad) {
  const int k = ad.alphabet_size();
  if (!ad.words().empty() && ad.words().front().empty()) return Dfa::empty(k);
  PatternTrie trie(k);
  for (const auto& w : ad.words()) trie.insert(w);
  trie.link();

  std::vector<State> id(trie.size(), kNoState);
  State count = 0;
  for (std::size_t v = 0; v < trie.size(); ++v)
    if (!trie.terminal[v]) id[v] = count++;
  Dfa dfa(k, static_cast<std::size_t>(count), 0);
  for (State v = 0; v < static_cast<State>(trie.size()); ++v) {
    if (id[v] == kNoState) continue;
    dfa.set_accepting(id[v]);
    for (Letter a = 0; a < k; ++a) {
      const State t = trie.step(v, a);
      if (id[t] != kNoState) dfa.set_transition(id[v], a, id[t]);
    }
  }
  return dfa;
}

namespace {

Word thue_morse_image(Word w, int times) {
  for (int t = 0; t < times; ++t) {
    Word next;
    next.reserve(2 * w.size());
    for (Letter a : w) {
      next.push_back(a);
      next.push_back(1 - a);
    }
    w = std::move(next);
  }
  return w;
}

}  // namespace

Antidictionary tm_antidictionary(int i) {
  if (i < -1) throw std::invalid_argument("Thue-Morse approximation index must be >= -1");
  const Letter a = 0, b = 1;
  std::vector<Word> words{{a, a, a}, {b, b, b}};
  for (int j = 0; j <= i; ++j) {
    const Letter c = thue_morse_image({a}, j).back();
    const Letter d = thue_morse_image({b}, j).back();
    const Word aba = thue_morse_image({a, b, a}, j);
    const Word bab = thue_morse_image({b, a, b}, j);
    auto wrap = [](Letter left, const Word& mid, Letter right) {
      Word w{left};
      w.insert(w.end(), mid.begin(), mid.end());
      w.push_back(right);
      return w;
    };
    words.push_back(wrap(c, aba, a));
    words.push_back(wrap(d, bab, b));
    words.push_back(wrap(c, bab, a));
    words.push_back(wrap(d, aba, b));
  }
  return Antidictionary(2, std::move(words));
}

Word thue_morse_prefix(std::size_t length) {
  Word w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = std::popcount(i) & 1;
  return w;
}

namespace {

std::vector<bool> can_reach(const Dfa& dfa, const std::vector<bool>& targets) {
  const auto n = dfa.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < static_cast<State>(n); ++q)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a)
      if (State r = dfa.next(q, a); r != kNoState) preds[r].push_back(q);
  std::vector<bool> seen = targets;
  std::vector<State> todo;
  for (State q = 0; q < static_cast<State>(n); ++q)
    if (seen[q]) todo.push_back(q);
  while (!todo.empty()) {
    State r = todo.back();
    todo.pop_back();
    for (State q : preds[r])
      if (!seen[q]) {
        seen[q] = true;
        todo.push_back(q);
      }
  }
  return seen;
}

std::vector<bool> reached_from(const Dfa& dfa, const std::vector<bool>& sources) {
  std::vector<bool> seen = sources;
  std::vector<State> todo;
  for (State q = 0; q < static_cast<State>(dfa.state_count()); ++q)
    if (seen[q]) todo.push_back(q);
  while (!todo.empty()) {
    State q = todo.back();
    todo.pop_back();
    for (Letter a = 0; a < dfa.alphabet_size(); ++a)
      if (State r = dfa.next(q, a); r != kNoState && !seen[r]) {
        seen[r] = true;
        todo.push_back(r);
      }
  }
  return seen;
}

}  // namespace

Dfa extendable_part(const Dfa& dfa, Side side) {
  const int k = dfa.alphabet_size();
  if (dfa.is_empty()) return Dfa::empty(k);
  const auto n = dfa.state_count();
  for (State q = 0; q < static_cast<State>(n); ++q)
    if (!dfa.accepting(q))
      throw std::invalid_argument("extendable parts need a factorial-language automaton (all states accepting)");

  const auto parts = scc(dfa);
  std::vector<bool> on_cycle(n, false);
  for (State q = 0; q < static_cast<State>(n); ++q) on_cycle[q] = parts.nontrivial[parts.component_of[q]];
  const auto to_cycle = can_reach(dfa, on_cycle);

  if (side == Side::right) {
    std::vector<State> id(n, kNoState);
    State count = 0;
    for (State q = 0; q < static_cast<State>(n); ++q)
      if (to_cycle[q]) id[q] = count++;
    if (id[dfa.initial()] == kNoState) return Dfa::empty(k);
    Dfa out(k, static_cast<std::size_t>(count), id[dfa.initial()]);
    for (State q = 0; q < static_cast<State>(n); ++q) {
      if (id[q] == kNoState) continue;
      out.set_accepting(id[q]);
      for (Letter a = 0; a < k; ++a)
        if (State r = dfa.next(q, a); r != kNoState && id[r] != kNoState) out.set_transition(id[q], a, id[r]);
    }
    return trim(out);
  }

  // Two-sided: labels of paths inside the states lying between cycles, read
  // from any such state. Determinized by the subset construction.
  const auto from_cycle = reached_from(dfa, on_cycle);
  std::vector<State> start;
  for (State q = 0; q < static_cast<State>(n); ++q)
    if (from_cycle[q] && to_cycle[q]) start.push_back(q);
  if (start.empty()) return Dfa::empty(k);

  std::vector<bool> between(n, false);
  for (State q : start) between[q] = true;
  std::map<std::vector<State>, State> index{{start, 0}};
  std::vector<std::vector<State>> subsets{start};
  std::vector<std::tuple<State, Letter, State>> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      std::vector<State> image;
      for (State q : subsets[i])
        if (State r = dfa.next(q, a); r != kNoState && between[r]) image.push_back(r);
      if (image.empty()) continue;
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      auto [it, fresh] = index.emplace(image, static_cast<State>(subsets.size()));
      if (fresh) subsets.push_back(image);
      edges.emplace_back(static_cast<State>(i), a, it->second);
    }
  }
  Dfa out(k, subsets.size(), 0);
  for (State s = 0; s < static_cast<State>(subsets.size()); ++s) out.set_accepting(s);
  for (const auto& [from, a, to] : edges) out.set_transition(from, a, to);
  return trim(out);
}

bool intermediate_member(std::span<const Letter> word, int k) {
  if (k < 2) throw std::invalid_argument("intermediate language needs k >= 2");
  std::vector<int> exponents;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= k) throw std::invalid_argument("letter out of range");
    if (i > 0 && word[i] == word[i - 1]) {
      ++exponents.back();
      continue;
    }
    if (i > 0 && word[i] != (word[i - 1] + 1) % k) return false;
    exponents.push_back(1);
  }
  for (std::size_t i = 1; i + 1 < exponents.size(); ++i)
    if (exponents[i - 1] > exponents[i]) return false;
  return true;
}

BigInt intermediate_count(int n, int k) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (k < 2) throw std::invalid_argument("intermediate language needs k >= 2");
  if (n == 0) return 1;
  // tails[rem][lo]: ways to cover `rem` letters with blocks of nondecreasing
  // sizes >= lo followed by one final block of any size.
  std::vector<std::vector<BigInt>> tails(n + 1, std::vector<BigInt>(n + 2, 0));
  for (int rem = 1; rem <= n; ++rem) {
    for (int lo = 1; lo <= n; ++lo) {
      BigInt ways = 1;
      for (int m = lo; m < rem; ++m) ways += tails[rem - m][m];
      tails[rem][lo] = ways;
    }
  }
  return BigInt(k) * tails[n][1];
}

}  // namespace wordgrowth
