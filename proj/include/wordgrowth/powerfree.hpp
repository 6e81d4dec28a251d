#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "wordgrowth/automaton.hpp"
#include "wordgrowth/growth.hpp"
#include "wordgrowth/powers.hpp"

namespace wordgrowth {

using Rational = boost::multiprecision::cpp_rational;

/// How the antidictionary of minimal forbidden powers is truncated:
/// `period` keeps roots of length <= cap, `excess` keeps powers whose length
/// exceeds their period by at most cap.
enum class CapMode { period, excess };
std::string to_string(CapMode mode);

struct MinimalPower {
  Word word;
  int period = 0;
  Ratio exponent;
};

/// Minimal forbidden powers with first-occurrence letter order (one per
/// renaming orbit), sorted by (period, word).
std::vector<Word> canonical_minimal_powers(int k, const ExponentBound& bound, int cap, CapMode mode,
                                           unsigned threads = 1);

/// All minimal forbidden powers within the cap, sorted by (period, word).
std::vector<MinimalPower> minimal_powers(int k, const ExponentBound& bound, int cap, CapMode mode,
                                         unsigned threads = 1);

/// Distinct images of a word under injective letter renamings into [0, k).
std::vector<Word> renaming_orbit(const Word& canonical, int k);

/// Falling factorial k!/(k-m)!, the orbit size of a word using m letters.
std::uint64_t orbit_size(int k, int letters);

/// Aho-Corasick automaton of the renaming closure of a set of canonical
/// words, folded by letter renaming. Nodes are trie nodes of the canonical
/// words; the transition on letter b out of node c goes to node d together
/// with the permutation that maps the canonical form of the target back onto
/// the actual suffix. The folded automaton has the same index as the full
/// one.
struct SymmetricFactorAutomaton {
  Dfa dfa;                        // one state per non-forbidden node
  std::vector<int> letters_used;  // per state
  std::vector<std::vector<std::uint8_t>> voltage;  // per (state*k + letter), empty if absent
};

SymmetricFactorAutomaton symmetric_factor_automaton(int k, const std::vector<Word>& canonical_words);

/// True iff the folded automaton lifts to an automaton with exactly one
/// nontrivial strong component. Decided through the permutation group
/// generated around a cycle basis; nullopt when k is too large to check.
std::optional<bool> lifts_to_single_component(const SymmetricFactorAutomaton& automaton);

struct AlgorithmUOptions {
  bool symmetry = true;
  unsigned threads = 1;
};

struct PowerFreeBounds {
  int k = 0;
  ExponentBound bound{2, 1};
  int cap = 0;
  CapMode mode = CapMode::period;
  double delta = 0.0;
  IndexInterval upper;
  std::optional<double> lower;
  std::string lower_note;  // why `lower` is absent
  std::size_t antidictionary_size = 0;
  std::size_t canonical_words = 0;
  std::size_t automaton_states = 0;
  bool single_component = false;
  double seconds = 0.0;
};

/// The language of L^cap has no infinite words.
class FiniteLanguageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound Gr(L^cap) on the growth rate of the beta-free language, and
/// when available the lower bound derived from it.
PowerFreeBounds algorithm_u(int k, const ExponentBound& bound, int cap, CapMode mode, double delta,
                            AlgorithmUOptions options = {});

/// Largest gamma > 1 with gamma + 1/(gamma^(m-1) (gamma-1)) <= upper_lo.
/// Throws std::domain_error when no such gamma exists and
/// std::invalid_argument when the single-component certificate is absent.
double lower_bound(double upper_lo, int m, bool single_component);

/// Closed-form asymptotic growth rate as a rational function of k.
Rational asymptotic_formula(int k, const ExponentBound& bound);

nlohmann::json to_json(const PowerFreeBounds& bounds);

}  // namespace wordgrowth
