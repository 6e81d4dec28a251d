#include "wordgrowth/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace wordgrowth {

Dfa::Dfa(int alphabet_size, std::size_t state_count, State initial)
    : alphabet_size_(alphabet_size),
      initial_(state_count == 0 ? kNoState : initial),
      delta_(state_count * static_cast<std::size_t>(alphabet_size), kNoState),
      accepting_(state_count, 0) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
  if (state_count > 0) check_state(initial);
}

Dfa Dfa::empty(int alphabet_size) { return Dfa(alphabet_size, 0, kNoState); }

void Dfa::check_state(State s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= state_count())
    throw std::invalid_argument("state id " + std::to_string(s) + " out of range");
}

void Dfa::set_transition(State from, Letter a, State to) {
  check_state(from);
  check_state(to);
  if (a < 0 || a >= alphabet_size_)
    throw std::invalid_argument("letter " + std::to_string(a) + " out of range");
  State& slot = delta_[static_cast<std::size_t>(from) * alphabet_size_ + a];
  if (slot != kNoState && slot != to)
    throw std::invalid_argument("nondeterministic transition from state " +
                                std::to_string(from) + " on letter " + std::to_string(a));
  slot = to;
}

void Dfa::set_accepting(State s, bool on) {
  check_state(s);
  accepting_[s] = on ? 1 : 0;
}

std::size_t Dfa::transition_count() const {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(), [](State t) { return t != kNoState; }));
}

Digraph Digraph::from_edges(std::size_t vertex_count,
                            std::span<const std::pair<State, State>> edges) {
  Digraph g;
  g.offsets.assign(vertex_count + 1, 0);
  for (const auto& [from, to] : edges) ++g.offsets[from + 1];
  std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());
  g.targets.resize(edges.size());
  std::vector<std::size_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [from, to] : edges) g.targets[fill[from]++] = to;
  return g;
}

Digraph transition_graph(const Dfa& dfa) {
  Digraph g;
  const auto n = dfa.state_count();
  g.offsets.assign(n + 1, 0);
  g.targets.reserve(n * dfa.alphabet_size());
  for (State s = 0; s < static_cast<State>(n); ++s) {
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      if (State t = dfa.next(s, a); t != kNoState) g.targets.push_back(t);
    }
    g.offsets[s + 1] = g.targets.size();
  }
  return g;
}

std::vector<int> SccDecomposition::nontrivial_ids() const {
  std::vector<int> ids;
  for (std::size_t c = 0; c < components.size(); ++c)
    if (nontrivial[c]) ids.push_back(static_cast<int>(c));
  return ids;
}

// Iterative Tarjan. Components come out in reverse topological order and are
// relabelled at the end.
SccDecomposition strong_components(const Digraph& graph) {
  const auto n = graph.vertex_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<State> stack;
  std::vector<std::pair<State, std::size_t>> frames;
  std::vector<std::vector<State>> found;
  int counter = 0;

  for (State root = 0; root < static_cast<State>(n); ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, graph.offsets[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < graph.offsets[v + 1]) {
        State w = graph.targets[pos++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          frames.emplace_back(w, graph.offsets[w]);
        } else if (comp[w] == -1) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      State done = v;
      frames.pop_back();
      if (!frames.empty()) {
        State parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<State> members;
        State w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = static_cast<int>(found.size());
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        found.push_back(std::move(members));
      }
    }
  }

  SccDecomposition out;
  const int count = static_cast<int>(found.size());
  out.components.resize(count);
  for (int c = 0; c < count; ++c) out.components[count - 1 - c] = std::move(found[c]);
  out.component_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.component_of[v] = count - 1 - comp[v];
  out.nontrivial.assign(count, false);
  for (State v = 0; v < static_cast<State>(n); ++v) {
    const int cv = out.component_of[v];
    for (State w : graph.out(v)) {
      const int cw = out.component_of[w];
      if (cv == cw)
        out.nontrivial[cv] = true;
      else
        out.condensation_edges.emplace_back(cv, cw);
    }
  }
  std::sort(out.condensation_edges.begin(), out.condensation_edges.end());
  out.condensation_edges.erase(
      std::unique(out.condensation_edges.begin(), out.condensation_edges.end()),
      out.condensation_edges.end());
  return out;
}

SccDecomposition scc(const Dfa& dfa) { return strong_components(transition_graph(dfa)); }

namespace {

std::vector<bool> reachable_from(const Digraph& g, std::span<const State> sources) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<State> todo(sources.begin(), sources.end());
  for (State s : sources) seen[s] = true;
  while (!todo.empty()) {
    State v = todo.back();
    todo.pop_back();
    for (State w : g.out(v)) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

Digraph reversed(const Digraph& g) {
  std::vector<std::pair<State, State>> edges;
  edges.reserve(g.edge_count());
  for (State v = 0; v < static_cast<State>(g.vertex_count()); ++v)
    for (State w : g.out(v)) edges.emplace_back(w, v);
  return Digraph::from_edges(g.vertex_count(), edges);
}

}  // namespace

Dfa trim(const Dfa& dfa) {
  if (dfa.is_empty()) return Dfa::empty(dfa.alphabet_size());
  const auto g = transition_graph(dfa);
  const State init[] = {dfa.initial()};
  const auto forward = reachable_from(g, init);
  std::vector<State> finals;
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s)
    if (dfa.accepting(s)) finals.push_back(s);
  const auto backward = reachable_from(reversed(g), finals);

  std::vector<State> renumber(dfa.state_count(), kNoState);
  State kept = 0;
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s)
    if (forward[s] && backward[s]) renumber[s] = kept++;
  if (renumber[dfa.initial()] == kNoState) return Dfa::empty(dfa.alphabet_size());

  Dfa out(dfa.alphabet_size(), static_cast<std::size_t>(kept), renumber[dfa.initial()]);
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s) {
    if (renumber[s] == kNoState) continue;
    out.set_accepting(renumber[s], dfa.accepting(s));
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      State t = dfa.next(s, a);
      if (t != kNoState && renumber[t] != kNoState) out.set_transition(renumber[s], a, renumber[t]);
    }
  }
  return out;
}

int imprimitivity(const Digraph& graph, std::span<const State> component) {
  if (component.empty()) throw std::invalid_argument("imprimitivity of an empty component");
  std::vector<char> inside(graph.vertex_count(), 0);
  for (State v : component) inside[v] = 1;
  std::vector<long> level(graph.vertex_count(), -1);
  std::queue<State> todo;
  level[component.front()] = 0;
  todo.push(component.front());
  long period = 0;
  bool has_edge = false;
  while (!todo.empty()) {
    State v = todo.front();
    todo.pop();
    for (State w : graph.out(v)) {
      if (!inside[w]) continue;
      has_edge = true;
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        todo.push(w);
      } else {
        period = std::gcd(period, std::labs(level[v] + 1 - level[w]));
      }
    }
  }
  if (!has_edge || period == 0)
    throw std::invalid_argument("imprimitivity requires a nontrivial strong component");
  return static_cast<int>(period);
}

int imprimitivity(const Dfa& dfa, std::span<const State> component) {
  return imprimitivity(transition_graph(dfa), component);
}

int cycle_intersection_bound(const Dfa& dfa, const SccDecomposition& scc,
                             std::span<const int> eligible) {
  if (dfa.is_empty() || eligible.empty()) return 0;
  const auto count = scc.size();
  std::vector<int> weight(count, 0);
  for (int c : eligible) weight[c] = 1;
  std::vector<bool> has_final(count, false);
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s)
    if (dfa.accepting(s)) has_final[scc.component_of[s]] = true;

  // best[c]: most eligible components on a path from c to an accepting component.
  std::vector<std::vector<int>> succ(count);
  for (const auto& [from, to] : scc.condensation_edges) succ[from].push_back(to);
  std::vector<int> best(count, -1);
  for (int c = static_cast<int>(count) - 1; c >= 0; --c) {
    int tail = has_final[c] ? 0 : -1;
    for (int d : succ[c])
      if (best[d] >= 0) tail = std::max(tail, best[d]);
    if (tail >= 0) best[c] = tail + weight[c];
  }
  return std::max(0, best[scc.component_of[dfa.initial()]]);
}

Dfa parse_dfa(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Dfa dfa;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    try {
      if (head == "dfa") {
        if (have_header) throw ParseError(line_no, "duplicate header");
        long n = -1, k = -1, init = -1;
        if (!(fields >> n >> k >> init) || n < 0 || k < 1)
          throw ParseError(line_no, "expected 'dfa <state_count> <alphabet_size> <initial>'");
        if (n > 0 && (init < 0 || init >= n)) throw ParseError(line_no, "initial state out of range");
        dfa = Dfa(static_cast<int>(k), static_cast<std::size_t>(n), static_cast<State>(init));
        have_header = true;
      } else if (!have_header) {
        throw ParseError(line_no, "missing 'dfa' header");
      } else if (head == "accept") {
        long s;
        while (fields >> s) dfa.set_accepting(static_cast<State>(s));
        if (!fields.eof()) throw ParseError(line_no, "malformed state id");
      } else {
        long from, a, to;
        std::istringstream edge(line);
        std::string extra;
        if (!(edge >> from >> a >> to) || (edge >> extra))
          throw ParseError(line_no, "expected '<from> <letter> <to>'");
        dfa.set_transition(static_cast<State>(from), static_cast<Letter>(a), static_cast<State>(to));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'dfa' header");
  return dfa;
}

Dfa parse_dfa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dfa(in);
}

std::string format_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "dfa " << dfa.state_count() << ' ' << dfa.alphabet_size() << ' '
      << (dfa.is_empty() ? 0 : dfa.initial()) << '\n';
  out << "accept";
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s)
    if (dfa.accepting(s)) out << ' ' << s;
  out << '\n';
  for (State s = 0; s < static_cast<State>(dfa.state_count()); ++s)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a)
      if (State t = dfa.next(s, a); t != kNoState) out << s << ' ' << a << ' ' << t << '\n';
  return out.str();
}

}  // namespace wordgrowth
