#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "wordgrowth/automaton.hpp"
#include "wordgrowth/fad.hpp"

namespace fixtures {

using wordgrowth::Dfa;
using wordgrowth::State;

struct Edge {
  State from;
  int letter;
  State to;
};

inline Dfa make_dfa(int k, std::size_t n, State initial, std::initializer_list<State> accept,
                    std::initializer_list<Edge> edges) {
  Dfa dfa(k, n, initial);
  for (State s : accept) dfa.set_accepting(s);
  for (const auto& e : edges) dfa.set_transition(e.from, e.letter, e.to);
  return dfa;
}

inline Dfa all_accepting(Dfa dfa) {
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s) dfa.set_accepting(s);
  return dfa;
}

// a -> b -> c, no cycles.
inline Dfa acyclic_path() { return make_dfa(2, 3, 0, {0, 1, 2}, {{0, 0, 1}, {1, 1, 2}}); }

// One state with both letters looping.
inline Dfa full(int k) {
  Dfa dfa(k, 1, 0);
  dfa.set_accepting(0);
  for (int a = 0; a < k; ++a) dfa.set_transition(0, a, 0);
  return dfa;
}

// a* b*: a-loop, then a b-loop.
inline Dfa two_loops() { return make_dfa(2, 2, 0, {0, 1}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}}); }

// (ab)* c (de)* : a 2-cycle, a bridge, a second 2-cycle.
inline Dfa cycle_path_cycle() {
  return make_dfa(5, 4, 0, {0, 1, 2, 3}, {{0, 0, 1}, {1, 1, 0}, {0, 2, 2}, {2, 3, 3}, {3, 4, 2}});
}

// (aa)*
inline Dfa even_a() { return make_dfa(1, 2, 0, {0}, {{0, 0, 1}, {1, 0, 0}}); }

// Words avoiding {aaa, bbb}: index phi.
inline Dfa phi_block() { return wordgrowth::fad_automaton(wordgrowth::Antidictionary(2, {{0, 0, 0}, {1, 1, 1}})); }

// Two copies of the phi block over letters {0,1}, joined by a bridge on
// letter 2 from every state of the first copy to the entry of the second.
inline Dfa chained_phi() {
  const Dfa block = phi_block();
  const auto n = static_cast<State>(block.state_count());
  Dfa dfa(3, 2 * n, block.initial());
  for (State s = 0; s < n; ++s)
    for (int a = 0; a < 2; ++a)
      if (State t = block.next(s, a); t != wordgrowth::kNoState) {
        dfa.set_transition(s, a, t);
        dfa.set_transition(s + n, a, t + n);
      }
  for (State s = 0; s < 2 * n; ++s) dfa.set_accepting(s);
  for (State s = 0; s < n; ++s) dfa.set_transition(s, 2, block.initial() + n);
  return dfa;
}

// phi block followed by a plain cycle on letter 2.
inline Dfa phi_then_cycle() {
  const Dfa block = phi_block();
  const auto n = static_cast<State>(block.state_count());
  Dfa dfa(3, n + 1, block.initial());
  for (State s = 0; s < n; ++s)
    for (int a = 0; a < 2; ++a)
      if (State t = block.next(s, a); t != wordgrowth::kNoState) dfa.set_transition(s, a, t);
  dfa.set_transition(block.initial(), 2, n);
  dfa.set_transition(n, 2, n);
  for (State s = 0; s <= n; ++s) dfa.set_accepting(s);
  return dfa;
}

// Antidictionaries used for corpus-wide checks.
inline std::vector<wordgrowth::Antidictionary> fad_corpus() {
  using wordgrowth::word_from_string;
  auto ad = [](int k, std::initializer_list<const char*> words) {
    std::vector<wordgrowth::Word> ws;
    for (const char* w : words) ws.push_back(word_from_string(w));
    return wordgrowth::Antidictionary(k, std::move(ws));
  };
  return {
      ad(2, {"aa", "bb"}),
      ad(2, {"aaa", "bbb"}),
      ad(2, {"aa"}),
      ad(2, {"aaa", "bbb", "ababa", "babab"}),
      ad(2, {"aab", "bba"}),
      ad(3, {"aa", "bb", "cc"}),
      ad(3, {"ab", "bc", "ca"}),
      ad(3, {"aa", "bb", "cc", "abcab", "acbac"}),
      ad(2, {"ab"}),
      ad(3, {"aba", "bcb", "cac", "cc"}),
  };
}

}  // namespace fixtures
