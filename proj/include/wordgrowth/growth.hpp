#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "wordgrowth/automaton.hpp"

namespace wordgrowth {

using BigInt = boost::multiprecision::cpp_int;

/// Certified enclosure of a Frobenius root. Endpoints are binary64 values,
/// rounded outward.
struct IndexInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool overlaps(const IndexInterval& o) const noexcept { return lo <= o.hi && o.lo <= hi; }
};

/// Index of one strong component of `graph`. Iterates v <- (A+I)v from the
/// all-ones vector and keeps the best Collatz-Wielandt bounds
/// min (Av)_i/v_i <= index <= max (Av)_i/v_i until they are 2*delta apart.
/// A trivial component has index 0.
IndexInterval component_index(const Digraph& graph, std::span<const State> component,
                              double delta);

/// Index of the whole graph (maximum over strong components).
IndexInterval index_interval(const Digraph& graph, double delta);

/// Growth rate of the language of a trimmed nonempty automaton. Acyclic
/// automata give [0, 0].
IndexInterval approximate_index(const Dfa& dfa, double delta);

struct ComplexityClass {
  enum class Tag { Finite, Polynomial, Exponential };
  Tag tag = Tag::Finite;
  std::optional<int> degree;  // set iff tag == Polynomial

  friend bool operator==(const ComplexityClass&, const ComplexityClass&) = default;
};

std::string to_string(ComplexityClass::Tag tag);

/// Finite / polynomial (with degree) / exponential, from the cycle structure
/// of a trimmed automaton.
ComplexityClass classify(const Dfa& dfa);

/// Exact number of accepted words of length n.
BigInt count_words(const Dfa& dfa, int n);

/// Polynomial index for any infinite language: one less than the maximal
/// number of maximal-index components met by a single accepting walk.
/// Component indices closer than the refined tolerance count as equal.
int polynomial_index_general(const Dfa& dfa, double delta);

enum class Oscillation { NonOscillating, Oscillating, Wild, Indeterminate };
std::string to_string(Oscillation o);

struct ResidueProfile {
  int residue = 0;
  IndexInterval alpha;
  int degree = 0;
  bool infinite = false;  // false: C(n) = 0 for all large n in this class
};

struct GrowthReport {
  ComplexityClass classification;
  IndexInterval gr;
  double delta = 0.0;
  int pd = 0;
  int residue_count = 1;
  std::vector<ResidueProfile> per_residue;
  std::vector<int> important_components;
  Oscillation oscillation = Oscillation::Indeterminate;
};

/// Length-residue restriction: words of length = residue (mod modulus),
/// as a trimmed automaton.
Dfa restrict_length_residue(const Dfa& dfa, int modulus, int residue);

/// Residue count r and per-residue (alpha_j, m_j) for a trimmed automaton,
/// together with the classification and oscillation type.
GrowthReport asymptotic_profile(const Dfa& dfa, double delta);

/// Partial oscillation classifier; Indeterminate when leading coefficients
/// would be needed.
Oscillation oscillation_type(const GrowthReport& report, const Dfa& dfa);

/// Decimal rendering that never moves toward the inside of an interval.
std::string decimal_down(double x, int digits = 12);
std::string decimal_up(double x, int digits = 12);

nlohmann::json to_json(const IndexInterval& interval, int digits = 12);
nlohmann::json to_json(const GrowthReport& report);

}  // namespace wordgrowth
