#include "wordgrowth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace wordgrowth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxIterations = 2'000'000;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
}

// Internal edges of one component, relabelled 0..n-1.
Digraph restrict_to(const Digraph& graph, std::span<const State> component) {
  std::vector<State> local(graph.vertex_count(), kNoState);
  for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = static_cast<State>(i);
  Digraph sub;
  sub.offsets.assign(component.size() + 1, 0);
  for (std::size_t i = 0; i < component.size(); ++i) {
    for (State w : graph.out(component[i]))
      if (local[w] != kNoState) sub.targets.push_back(local[w]);
    sub.offsets[i + 1] = sub.targets.size();
  }
  return sub;
}

}  // namespace

IndexInterval component_index(const Digraph& graph, std::span<const State> component,
                              double delta) {
  check_delta(delta);
  const Digraph sub = restrict_to(graph, component);
  if (sub.edge_count() == 0) return {0.0, 0.0};
  const std::size_t n = sub.vertex_count();

  // Relative slack covering the rounding of a sum of d terms, one division
  // and the final scaling.
  constexpr double unit = std::numeric_limits<double>::epsilon();
  std::vector<double> slack(n);
  for (std::size_t i = 0; i < n; ++i)
    slack[i] = static_cast<double>(sub.offsets[i + 1] - sub.offsets[i] + 4) * unit;

  std::vector<double> v(n, 1.0), w(n);
  double best_lo = 0.0, best_hi = kInf;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    double lo = kInf, hi = 0.0, top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t e = sub.offsets[i]; e < sub.offsets[i + 1]; ++e) sum += v[sub.targets[e]];
      w[i] = sum;
      const double ratio = sum / v[i];
      lo = std::min(lo, ratio * (1.0 - slack[i]));
      hi = std::max(hi, ratio * (1.0 + slack[i]));
    }
    best_lo = std::max(best_lo, std::nextafter(lo, 0.0));
    best_hi = std::min(best_hi, std::nextafter(hi, kInf));
    if (best_hi - best_lo <= 2.0 * delta) return {best_lo, best_hi};

    for (std::size_t i = 0; i < n; ++i) {
      v[i] += w[i];
      top = std::max(top, v[i]);
    }
    for (double& x : v) {
      x /= top;
      if (x < std::numeric_limits<double>::min()) x = std::numeric_limits<double>::min();
    }
  }
  throw std::runtime_error("index iteration did not reach the requested precision");
}

IndexInterval index_interval(const Digraph& graph, double delta) {
  check_delta(delta);
  const auto parts = strong_components(graph);
  IndexInterval best{0.0, 0.0};
  for (int c : parts.nontrivial_ids()) {
    const auto r = component_index(graph, parts.components[c], delta);
    best.lo = std::max(best.lo, r.lo);
    best.hi = std::max(best.hi, r.hi);
  }
  return best;
}

IndexInterval approximate_index(const Dfa& dfa, double delta) {
  if (dfa.is_empty()) throw std::invalid_argument("index of the empty automaton");
  return index_interval(transition_graph(dfa), delta);
}

std::string to_string(ComplexityClass::Tag tag) {
  switch (tag) {
    case ComplexityClass::Tag::Finite: return "Finite";
    case ComplexityClass::Tag::Polynomial: return "Polynomial";
    case ComplexityClass::Tag::Exponential: return "Exponential";
  }
  return "?";
}

std::string to_string(Oscillation o) {
  switch (o) {
    case Oscillation::NonOscillating: return "NonOscillating";
    case Oscillation::Oscillating: return "Oscillating";
    case Oscillation::Wild: return "Wild";
    case Oscillation::Indeterminate: return "Indeterminate";
  }
  return "?";
}

ComplexityClass classify(const Dfa& dfa) {
  if (dfa.is_empty()) return {};
  const auto parts = scc(dfa);
  const auto cyclic = parts.nontrivial_ids();
  if (cyclic.empty()) return {};

  // A strongly connected component is a single cycle iff it has as many
  // internal transitions as states.
  std::vector<std::size_t> internal(parts.size(), 0);
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a)
      if (State t = dfa.next(s, a);
          t != kNoState && parts.component_of[s] == parts.component_of[t])
        ++internal[parts.component_of[s]];
  for (int c : cyclic)
    if (internal[c] > parts.components[c].size()) return {ComplexityClass::Tag::Exponential, {}};

  return {ComplexityClass::Tag::Polynomial, cycle_intersection_bound(dfa, parts, cyclic) - 1};
}

BigInt count_words(const Dfa& dfa, int n) {
  if (n < 0) throw std::invalid_argument("negative word length");
  if (dfa.is_empty()) return 0;
  const auto states = dfa.state_count();
  std::vector<BigInt> cur(states), nxt(states);
  cur[dfa.initial()] = 1;
  for (int step = 0; step < n; ++step) {
    for (auto& x : nxt) x = 0;
    for (State s = 0; s < static_cast<State>(states); ++s) {
      if (cur[s] == 0) continue;
      for (Letter a = 0; a < dfa.alphabet_size(); ++a)
        if (State t = dfa.next(s, a); t != kNoState) nxt[t] += cur[s];
    }
    std::swap(cur, nxt);
  }
  BigInt total = 0;
  for (State s = 0; s < static_cast<State>(states); ++s)
    if (dfa.accepting(s)) total += cur[s];
  return total;
}

namespace {

struct ComponentIndices {
  Digraph graph;
  SccDecomposition parts;
  std::vector<IndexInterval> index;  // [0,0] for trivial components
};

ComponentIndices component_indices(const Dfa& dfa, double delta) {
  ComponentIndices out{transition_graph(dfa), {}, {}};
  out.parts = strong_components(out.graph);
  out.index.assign(out.parts.size(), IndexInterval{});
  for (int c : out.parts.nontrivial_ids())
    out.index[c] = component_index(out.graph, out.parts.components[c], delta);
  return out;
}

// Components whose index equals the maximum up to tolerance: candidates
// within reach of the best lower end are recomputed at delta/4 and kept
// while they still overlap the best one.
std::vector<int> dominant_components(const ComponentIndices& ci, double delta) {
  double best_lo = 0.0;
  for (int c : ci.parts.nontrivial_ids()) best_lo = std::max(best_lo, ci.index[c].lo);
  std::vector<int> candidates;
  for (int c : ci.parts.nontrivial_ids())
    if (ci.index[c].hi >= best_lo) candidates.push_back(c);
  if (candidates.size() <= 1) return candidates;

  std::vector<IndexInterval> refined;
  double refined_lo = 0.0;
  for (int c : candidates) {
    refined.push_back(component_index(ci.graph, ci.parts.components[c], delta / 4));
    refined_lo = std::max(refined_lo, refined.back().lo);
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (refined[i].hi >= refined_lo) keep.push_back(candidates[i]);
  return keep;
}

int lcm_checked(int a, int b) {
  const long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > 1'000'000) throw std::runtime_error("residue modulus too large");
  return static_cast<int>(l);
}

using ResidueSet = std::vector<bool>;

// For every component: residues mod `modulus` of the lengths of accepting
// walks through it.
std::vector<ResidueSet> walk_residues(const Dfa& dfa, const SccDecomposition& parts, int modulus) {
  const auto n = dfa.state_count();
  const auto k = dfa.alphabet_size();
  if (static_cast<double>(n) * modulus > 5e7) throw std::runtime_error("residue product too large");
  auto id = [modulus](State q, int t) { return static_cast<std::size_t>(q) * modulus + t; };

  std::vector<bool> forward(n * modulus, false), backward(n * modulus, false);
  std::vector<std::pair<State, int>> todo{{dfa.initial(), 0}};
  forward[id(dfa.initial(), 0)] = true;
  while (!todo.empty()) {
    auto [q, t] = todo.back();
    todo.pop_back();
    for (Letter a = 0; a < k; ++a) {
      State r = dfa.next(q, a);
      if (r == kNoState) continue;
      int u = (t + 1) % modulus;
      if (!forward[id(r, u)]) {
        forward[id(r, u)] = true;
        todo.emplace_back(r, u);
      }
    }
  }

  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < static_cast<State>(n); ++q)
    for (Letter a = 0; a < k; ++a)
      if (State r = dfa.next(q, a); r != kNoState) preds[r].push_back(q);
  for (State q = 0; q < static_cast<State>(n); ++q) {
    if (dfa.accepting(q)) {
      backward[id(q, 0)] = true;
      todo.emplace_back(q, 0);
    }
  }
  while (!todo.empty()) {
    auto [r, t] = todo.back();
    todo.pop_back();
    int u = (t + 1) % modulus;
    for (State q : preds[r]) {
      if (!backward[id(q, u)]) {
        backward[id(q, u)] = true;
        todo.emplace_back(q, u);
      }
    }
  }

  std::vector<ResidueSet> out(parts.size(), ResidueSet(modulus, false));
  for (State q = 0; q < static_cast<State>(n); ++q) {
    auto& set = out[parts.component_of[q]];
    for (int a = 0; a < modulus; ++a) {
      if (!forward[id(q, a)]) continue;
      for (int b = 0; b < modulus; ++b)
        if (backward[id(q, b)]) set[(a + b) % modulus] = true;
    }
  }
  return out;
}

}  // namespace

int polynomial_index_general(const Dfa& dfa, double delta) {
  check_delta(delta);
  if (classify(dfa).tag == ComplexityClass::Tag::Finite)
    throw std::invalid_argument("polynomial index of a finite language");
  const auto ci = component_indices(dfa, delta);
  return cycle_intersection_bound(dfa, ci.parts, dominant_components(ci, delta)) - 1;
}

Dfa restrict_length_residue(const Dfa& dfa, int modulus, int residue) {
  if (modulus < 1 || residue < 0 || residue >= modulus)
    throw std::invalid_argument("bad residue class");
  if (dfa.is_empty()) return Dfa::empty(dfa.alphabet_size());
  const auto n = dfa.state_count();
  Dfa product(dfa.alphabet_size(), n * modulus, dfa.initial() * modulus);
  for (State q = 0; q < static_cast<State>(n); ++q) {
    for (int t = 0; t < modulus; ++t) {
      const State from = q * modulus + t;
      if (dfa.accepting(q) && t == residue) product.set_accepting(from);
      for (Letter a = 0; a < dfa.alphabet_size(); ++a)
        if (State r = dfa.next(q, a); r != kNoState)
          product.set_transition(from, a, r * modulus + (t + 1) % modulus);
    }
  }
  return trim(product);
}

GrowthReport asymptotic_profile(const Dfa& dfa, double delta) {
  check_delta(delta);
  GrowthReport report;
  report.delta = delta;
  report.classification = classify(dfa);
  if (report.classification.tag == ComplexityClass::Tag::Finite) {
    report.per_residue.push_back({0, {}, 0, false});
    report.oscillation = oscillation_type(report, dfa);
    return report;
  }

  // Index comparisons between components use the refined tolerance.
  const auto ci = component_indices(dfa, delta / 4);
  const auto cyclic = ci.parts.nontrivial_ids();
  int modulus = 1;
  std::vector<int> period(ci.parts.size(), 0);
  for (int c : cyclic) {
    period[c] = imprimitivity(ci.graph, ci.parts.components[c]);
    modulus = lcm_checked(modulus, period[c]);
  }
  const auto residues = walk_residues(dfa, ci.parts, modulus);

  int r = 1;
  for (int c : cyclic) {
    ResidueSet uncovered = residues[c];
    for (int d : cyclic)
      if (d != c && ci.index[d].lo > ci.index[c].hi)
        for (int j = 0; j < modulus; ++j)
          if (residues[d][j]) uncovered[j] = false;
    if (std::find(uncovered.begin(), uncovered.end(), true) != uncovered.end()) {
      report.important_components.push_back(c);
      r = lcm_checked(r, period[c]);
    }
  }
  report.residue_count = r;

  IndexInterval top{0.0, 0.0};
  for (int j = 0; j < r; ++j) {
    ResidueProfile entry{j, {}, 0, false};
    const Dfa part = r == 1 ? dfa : restrict_length_residue(dfa, r, j);
    if (!part.is_empty() && classify(part).tag != ComplexityClass::Tag::Finite) {
      entry.infinite = true;
      entry.alpha = approximate_index(part, delta);
      entry.degree = polynomial_index_general(part, delta);
      top.lo = std::max(top.lo, entry.alpha.lo);
      top.hi = std::max(top.hi, entry.alpha.hi);
    }
    report.per_residue.push_back(entry);
  }

  const auto whole = approximate_index(dfa, delta);
  report.gr = {std::max(whole.lo, top.lo), std::min(whole.hi, top.hi)};
  if (report.gr.lo > report.gr.hi) report.gr = whole;  // unreachable for sound enclosures

  for (const auto& entry : report.per_residue)
    if (entry.infinite && entry.alpha.overlaps(report.gr))
      report.pd = std::max(report.pd, entry.degree);
  report.oscillation = oscillation_type(report, dfa);
  return report;
}

Oscillation oscillation_type(const GrowthReport& report, [[maybe_unused]] const Dfa& dfa) {
  if (report.residue_count == 1) return Oscillation::NonOscillating;
  const auto& rows = report.per_residue;
  const bool any_finite = std::any_of(rows.begin(), rows.end(), [](auto& e) { return !e.infinite; });
  const bool any_infinite = std::any_of(rows.begin(), rows.end(), [](auto& e) { return e.infinite; });
  if (any_finite && any_infinite) return Oscillation::Wild;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!rows[i].alpha.overlaps(rows[j].alpha)) return Oscillation::Wild;
      // Equal growth rates with different degrees still make the ratio
      // C(n+1)/C(n) grow like a power of n along one residue class.
      if (rows[i].degree != rows[j].degree) return Oscillation::Wild;
    }
  return Oscillation::Indeterminate;
}

namespace {

// Exact decimal expansion of a double, truncated to `digits` places and
// bumped by one unit in the last place when moving in direction `up` lost
// a nonzero tail.
std::string directed_decimal(double x, int digits, bool up) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.400f", std::fabs(x));
  std::string s(buf);
  const auto dot = s.find('.');
  std::string head = s.substr(0, dot + 1 + digits);
  const bool lost = s.find_first_not_of('0', dot + 1 + digits) != std::string::npos;
  const bool negative = std::signbit(x) && x != 0.0;
  // Moving away from zero on a truncated magnitude.
  if (lost && (up != negative)) {
    int i = static_cast<int>(head.size()) - 1;
    for (; i >= 0; --i) {
      if (head[i] == '.') continue;
      if (head[i] == '9') {
        head[i] = '0';
      } else {
        ++head[i];
        break;
      }
    }
    if (i < 0) head.insert(head.begin(), '1');
  }
  if (digits == 0) head.pop_back();
  return (negative ? "-" : "") + head;
}

}  // namespace

std::string decimal_down(double x, int digits) { return directed_decimal(x, digits, false); }
std::string decimal_up(double x, int digits) { return directed_decimal(x, digits, true); }

nlohmann::json to_json(const IndexInterval& interval, int digits) {
  return nlohmann::json::array({decimal_down(interval.lo, digits), decimal_up(interval.hi, digits)});
}

nlohmann::json to_json(const GrowthReport& report) {
  nlohmann::json out;
  out["classification"] = to_string(report.classification.tag);
  if (report.classification.degree) out["degree"] = *report.classification.degree;
  out["gr"] = to_json(report.gr);
  out["delta"] = report.delta;
  out["pd"] = report.pd;
  out["r"] = report.residue_count;
  out["important_components"] = report.important_components;
  auto rows = nlohmann::json::array();
  for (const auto& e : report.per_residue) {
    rows.push_back({{"residue", e.residue},
                    {"alpha", to_json(e.alpha)},
                    {"m", e.degree},
                    {"infinite", e.infinite}});
  }
  out["per_residue"] = rows;
  out["oscillation"] = to_string(report.oscillation);
  return out;
}

}  // namespace wordgrowth
