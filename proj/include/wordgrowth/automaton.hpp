#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordgrowth {

using State = std::int32_t;
using Letter = std::int32_t;

inline constexpr State kNoState = -1;

/// Raised by the text-format readers; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Deterministic automaton over the letters 0..k-1 with a partial
/// transition function. A missing transition rejects. The empty language is
/// the automaton with zero states.
class Dfa {
 public:
  Dfa() = default;
  Dfa(int alphabet_size, std::size_t state_count, State initial);

  static Dfa empty(int alphabet_size);

  int alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  bool is_empty() const noexcept { return accepting_.empty(); }
  State initial() const noexcept { return initial_; }

  State next(State s, Letter a) const {
    return delta_[static_cast<std::size_t>(s) * alphabet_size_ + a];
  }
  bool accepting(State s) const { return accepting_[s] != 0; }

  /// Throws std::invalid_argument on out-of-range ids or when a different
  /// target is already set for (from, a).
  void set_transition(State from, Letter a, State to);
  void set_accepting(State s, bool on = true);

  std::size_t transition_count() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  void check_state(State s) const;

  int alphabet_size_ = 1;
  State initial_ = kNoState;
  std::vector<State> delta_;
  std::vector<std::uint8_t> accepting_;
};

/// Directed multigraph in compressed adjacency form. Parallel edges are
/// repeated entries of `targets`.
struct Digraph {
  std::vector<std::size_t> offsets{0};
  std::vector<State> targets;

  std::size_t vertex_count() const noexcept { return offsets.size() - 1; }
  std::size_t edge_count() const noexcept { return targets.size(); }
  std::span<const State> out(State v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }

  static Digraph from_edges(std::size_t vertex_count,
                            std::span<const std::pair<State, State>> edges);
};

/// The labelled transition graph with labels dropped.
Digraph transition_graph(const Dfa& dfa);

/// Strong components; ids follow a topological order of the condensation,
/// so every condensation edge goes from a smaller to a larger id.
struct SccDecomposition {
  std::vector<int> component_of;
  std::vector<std::vector<State>> components;
  std::vector<bool> nontrivial;
  std::vector<std::pair<int, int>> condensation_edges;

  std::size_t size() const noexcept { return components.size(); }
  std::vector<int> nontrivial_ids() const;
};

SccDecomposition strong_components(const Digraph& graph);
SccDecomposition scc(const Dfa& dfa);

/// Keeps the states that are reachable from the initial state and reach an
/// accepting state; ids are renumbered densely in increasing order.
Dfa trim(const Dfa& dfa);

/// Gcd of the cycle lengths of a nontrivial strong component.
int imprimitivity(const Digraph& graph, std::span<const State> component);
int imprimitivity(const Dfa& dfa, std::span<const State> component);

/// Maximum number of the `eligible` components met by one accepting walk
/// from the initial state.
int cycle_intersection_bound(const Dfa& dfa, const SccDecomposition& scc,
                             std::span<const int> eligible);

/// Text format:
///   dfa <state_count> <alphabet_size> <initial>
///   accept <id> <id> ...
///   <from> <letter> <to>
/// `#` starts a comment.
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa_file(const std::string& path);
std::string format_dfa(const Dfa& dfa);

}  // namespace wordgrowth
