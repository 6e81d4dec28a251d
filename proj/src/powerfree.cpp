#include "wordgrowth/powerfree.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "parallel.hpp"
#include "wordgrowth/fad.hpp"

namespace wordgrowth {

namespace {

using Perm = std::vector<std::uint8_t>;

struct PeriodWord {
  int period;
  Word word;
  friend auto operator<=>(const PeriodWord&, const PeriodWord&) = default;
};

class Generator {
 public:
  Generator(int k, const ExponentBound& bound, int cap, CapMode mode)
      : k_(k), bound_(bound), cap_(cap), mode_(mode) {
    if (k < 1) throw std::invalid_argument("alphabet size must be positive");
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    if (mode == CapMode::period) {
      max_period_ = cap;
    } else {
      // excess L(p) - p is strictly increasing in p
      while (bound.forbidden_length(max_period_ + 1) - (max_period_ + 1) <= cap) ++max_period_;
    }
  }

  int max_period() const { return max_period_; }

  // Visits the subtree below the node `tracker` currently holds. Nodes at
  // depth `split` are not expanded but handed to `frontier` when given.
  void expand(PowerTracker& tracker, int used, std::vector<PeriodWord>& out, int split,
              std::vector<Word>* frontier) {
    const int depth = static_cast<int>(tracker.size());
    if (depth == max_period_) return;
    const int top = std::min(used + 1, k_);
    for (Letter a = 0; a < top; ++a) {
      if (!tracker.push(a)) continue;
      close(tracker, out);
      if (frontier && depth + 1 == split)
        frontier->emplace_back(tracker.word().begin(), tracker.word().end());
      else
        expand(tracker, std::max(used, a + 1), out, split, frontier);
      tracker.pop();
    }
  }

 private:
  // Tries to complete the root held by `tracker` into a minimal power.
  void close(PowerTracker& tracker, std::vector<PeriodWord>& out) {
    const int p = static_cast<int>(tracker.size());
    const int length = bound_.forbidden_length(p);
    if (mode_ == CapMode::excess && length - p > cap_) return;
    int pushed = 0;
    bool ok = true;
    for (int i = p; i < length - 1; ++i, ++pushed) {
      if (!tracker.push(tracker.word()[i - p])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      const Letter last = tracker.word()[length - 1 - p];
      if (tracker.completes_minimal(last)) {
        Word w(tracker.word().begin(), tracker.word().end());
        w.push_back(last);
        out.push_back({p, std::move(w)});
      }
    }
    for (; pushed > 0; --pushed) tracker.pop();
  }

  int k_;
  ExponentBound bound_;
  int cap_;
  CapMode mode_;
  int max_period_ = 0;
};

std::vector<PeriodWord> generate(int k, const ExponentBound& bound, int cap, CapMode mode,
                                 unsigned threads) {
  Generator gen(k, bound, cap, mode);
  std::vector<PeriodWord> out;
  PowerTracker root(bound);
  threads = detail::resolve_threads(threads);
  if (threads <= 1) {
    gen.expand(root, 0, out, -1, nullptr);
  } else {
    const int split = std::min(gen.max_period(), 8);
    std::vector<Word> frontier;
    gen.expand(root, 0, out, split, &frontier);
    std::vector<std::vector<PeriodWord>> parts(frontier.size());
    detail::parallel_for(frontier.size(), threads, [&](std::size_t i) {
      Generator local = gen;
      PowerTracker tracker(bound);
      Letter used = 0;
      for (Letter a : frontier[i]) {
        tracker.push(a);
        used = std::max(used, a + 1);
      }
      local.expand(tracker, used, parts[i], -1, nullptr);
    });
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Perm identity(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& outer, const Perm& inner) {
  Perm p(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) p[i] = outer[inner[i]];
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint8_t>(i);
  return q;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::size_t perm_rank(const Perm& p) {
  const int k = static_cast<int>(p.size());
  std::size_t rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

constexpr int kMaxGroupCheck = 8;

}  // namespace

std::string to_string(CapMode mode) { return mode == CapMode::period ? "period" : "excess"; }

std::vector<Word> canonical_minimal_powers(int k, const ExponentBound& bound, int cap, CapMode mode,
                                           unsigned threads) {
  std::vector<Word> words;
  for (auto& pw : generate(k, bound, cap, mode, threads)) words.push_back(std::move(pw.word));
  return words;
}

std::vector<Word> renaming_orbit(const Word& canonical, int k) {
  const int m = letters_used(canonical);
  std::vector<Word> out;
  if (m > k) return out;
  std::vector<Letter> image(m);
  std::vector<bool> taken(k, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      Word w(canonical.size());
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = image[canonical[j]];
      out.push_back(std::move(w));
      return;
    }
    for (Letter a = 0; a < k; ++a) {
      if (taken[a]) continue;
      taken[a] = true;
      image[i] = a;
      self(self, i + 1);
      taken[a] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t orbit_size(int k, int letters) {
  std::uint64_t n = 1;
  for (int i = 0; i < letters; ++i) n *= static_cast<std::uint64_t>(k - i);
  return n;
}

std::vector<MinimalPower> minimal_powers(int k, const ExponentBound& bound, int cap, CapMode mode,
                                         unsigned threads) {
  std::vector<MinimalPower> out;
  for (const auto& pw : generate(k, bound, cap, mode, threads))
    for (auto& w : renaming_orbit(pw.word, k)) {
      const auto length = static_cast<std::int64_t>(w.size());
      out.push_back({std::move(w), pw.period, Ratio(length, pw.period)});
    }
  std::sort(out.begin(), out.end(), [](const MinimalPower& a, const MinimalPower& b) {
    return std::tie(a.period, a.word) < std::tie(b.period, b.word);
  });
  return out;
}

SymmetricFactorAutomaton symmetric_factor_automaton(int k, const std::vector<Word>& canonical_words) {
  if (k < 1 || k > 255) throw std::invalid_argument("alphabet size out of range");
  // Trie of canonical words.
  std::vector<State> child(k, kNoState);
  std::vector<std::uint8_t> terminal{0};
  std::vector<int> used{0};
  for (const auto& w : canonical_words) {
    if (w.empty()) throw std::invalid_argument("empty forbidden word");
    State v = 0;
    for (Letter a : w) {
      if (a < 0 || a > used[v] || a >= k) throw std::invalid_argument("word is not in canonical form");
      if (terminal[v]) break;
      State next = child[static_cast<std::size_t>(v) * k + a];
      if (next == kNoState) {
        next = static_cast<State>(terminal.size());
        child[static_cast<std::size_t>(v) * k + a] = next;
        child.resize(child.size() + k, kNoState);
        terminal.push_back(0);
        used.push_back(std::max(used[v], a + 1));
      }
      v = next;
    }
    terminal[v] = 1;
  }
  const std::size_t nodes = terminal.size();
  for (std::size_t v = 0; v < nodes; ++v)
    if (terminal[v])
      for (int a = 0; a < k; ++a)
        if (child[v * k + a] != kNoState) throw std::invalid_argument("set is not antifactorial");

  std::vector<State> go(nodes * k, kNoState);
  std::vector<Perm> go_perm(nodes * k);
  std::vector<State> fail(nodes, kNoState);
  std::vector<Perm> fail_perm(nodes);

  // Goto of `f` twisted by rho, on the letter b of the outer frame.
  auto twisted = [&](State f, const Perm& rho, Letter b) -> std::pair<State, Perm> {
    const Letter inner = inverse(rho)[b];
    const std::size_t slot = static_cast<std::size_t>(f) * k + inner;
    return {go[slot], compose(rho, go_perm[slot])};
  };

  std::queue<State> order;
  order.push(0);
  while (!order.empty()) {
    const State v = order.front();
    order.pop();
    if (terminal[v]) continue;
    const int m = used[v];
    for (Letter b = 0; b < k; ++b) {
      const Letter canon = std::min(b, static_cast<Letter>(m));
      Perm sigma = identity(k);
      std::swap(sigma[canon], sigma[b]);
      const std::size_t slot = static_cast<std::size_t>(v) * k + b;
      const State c = child[static_cast<std::size_t>(v) * k + canon];
      if (c != kNoState) {
        go[slot] = c;
        go_perm[slot] = std::move(sigma);
      } else if (v == 0) {
        go[slot] = 0;
        go_perm[slot] = identity(k);
      } else {
        std::tie(go[slot], go_perm[slot]) = twisted(fail[v], fail_perm[v], b);
      }
    }
    for (Letter b = 0; b <= std::min(m, k - 1); ++b) {
      const State c = child[static_cast<std::size_t>(v) * k + b];
      if (c == kNoState) continue;
      if (v == 0) {
        fail[c] = 0;
        fail_perm[c] = identity(k);
      } else {
        std::tie(fail[c], fail_perm[c]) = twisted(fail[v], fail_perm[v], b);
      }
      order.push(c);
    }
  }

  std::vector<State> index(nodes, kNoState);
  State count = 0;
  for (std::size_t v = 0; v < nodes; ++v)
    if (!terminal[v]) index[v] = count++;

  SymmetricFactorAutomaton out{Dfa(k, count, 0), {}, {}};
  out.letters_used.resize(count);
  out.voltage.resize(static_cast<std::size_t>(count) * k);
  for (std::size_t v = 0; v < nodes; ++v) {
    if (terminal[v]) continue;
    const State s = index[v];
    out.dfa.set_accepting(s, true);
    out.letters_used[s] = used[v];
    for (Letter b = 0; b < k; ++b) {
      const std::size_t slot = v * k + b;
      if (terminal[go[slot]]) continue;
      out.dfa.set_transition(s, b, index[go[slot]]);
      out.voltage[static_cast<std::size_t>(s) * k + b] = go_perm[slot];
    }
  }
  return out;
}

std::optional<bool> lifts_to_single_component(const SymmetricFactorAutomaton& automaton) {
  const Dfa& dfa = automaton.dfa;
  const int k = dfa.alphabet_size();
  if (dfa.is_empty()) return false;
  const auto parts = scc(dfa);
  const auto cyclic = parts.nontrivial_ids();
  if (cyclic.size() != 1) return false;
  const int comp = cyclic.front();
  const auto& members = parts.components[comp];

  State base = kNoState;
  for (State s : members)
    if (automaton.letters_used[s] >= k - 1) {
      base = s;
      break;
    }
  if (base == kNoState || k > kMaxGroupCheck) return std::nullopt;

  // Spanning tree labels, then one generator per transition in the component.
  std::vector<Perm> label(dfa.state_count());
  std::queue<State> order;
  label[base] = identity(k);
  order.push(base);
  while (!order.empty()) {
    const State v = order.front();
    order.pop();
    for (Letter b = 0; b < k; ++b) {
      const State d = dfa.next(v, b);
      if (d == kNoState || parts.component_of[d] != comp || !label[d].empty()) continue;
      label[d] = compose(label[v], automaton.voltage[static_cast<std::size_t>(v) * k + b]);
      order.push(d);
    }
  }
  std::vector<Perm> gens;
  for (State v : members)
    for (Letter b = 0; b < k; ++b) {
      const State d = dfa.next(v, b);
      if (d == kNoState || parts.component_of[d] != comp) continue;
      gens.push_back(compose(compose(label[v], automaton.voltage[static_cast<std::size_t>(v) * k + b]),
                             inverse(label[d])));
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const std::uint64_t full = factorial(k);
  std::vector<char> seen(full, 0);
  std::vector<Perm> frontier{identity(k)};
  seen[perm_rank(frontier.front())] = 1;
  std::uint64_t size = 1;
  while (!frontier.empty() && size < full) {
    Perm x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(x, g);
      auto& mark = seen[perm_rank(y)];
      if (mark) continue;
      mark = 1;
      ++size;
      frontier.push_back(std::move(y));
    }
  }
  return size == full;
}

PowerFreeBounds algorithm_u(int k, const ExponentBound& bound, int cap, CapMode mode, double delta,
                            AlgorithmUOptions options) {
  const auto start = std::chrono::steady_clock::now();
  PowerFreeBounds out;
  out.k = k;
  out.bound = bound;
  out.cap = cap;
  out.mode = mode;
  out.delta = delta;

  const auto canonical = canonical_minimal_powers(k, bound, cap, mode, options.threads);
  out.canonical_words = canonical.size();
  for (const auto& w : canonical) out.antidictionary_size += orbit_size(k, letters_used(w));

  Dfa dfa = Dfa::empty(k);
  std::optional<bool> single;
  if (options.symmetry) {
    auto folded = symmetric_factor_automaton(k, canonical);
    single = lifts_to_single_component(folded);
    dfa = std::move(folded.dfa);
  } else {
    std::vector<Word> all;
    for (const auto& w : canonical)
      for (auto& v : renaming_orbit(w, k)) all.push_back(std::move(v));
    dfa = fad_automaton(Antidictionary(k, std::move(all)));
    single = scc(dfa).nontrivial_ids().size() == 1;
  }
  out.automaton_states = dfa.state_count();
  if (scc(dfa).nontrivial_ids().empty())
    throw FiniteLanguageError("the approximation with cap " + std::to_string(cap) + " is finite");

  out.upper = approximate_index(dfa, delta);
  out.single_component = single.value_or(false);

  if (bound.beta() < Ratio(2, 1)) {
    out.lower_note = "lower bounds need an exponent of at least 2";
  } else if (mode != CapMode::period) {
    out.lower_note = "lower bounds need the period cap";
  } else if (!single) {
    out.lower_note = "component certificate unavailable for this alphabet size";
  } else if (!*single) {
    out.lower_note = "automaton has more than one nontrivial strong component";
  } else {
    try {
      out.lower = lower_bound(out.upper.lo, cap, true);
    } catch (const std::domain_error& e) {
      out.lower_note = e.what();
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

double lower_bound(double upper_lo, int m, bool single_component) {
  if (!single_component) throw std::invalid_argument("single-component certificate is absent");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (!(upper_lo > 1.0)) throw std::domain_error("no lower bound: upper_lo must exceed 1");

  using Real = long double;
  auto f = [m](Real g) { return g + 1.0L / (std::pow(g, static_cast<Real>(m - 1)) * (g - 1.0L)); };
  const Real target = upper_lo;
  // f is convex on (1, inf) with f -> inf at both ends; find its minimum.
  Real lo = 1.0L, hi = target;
  for (int i = 0; i < 200; ++i) {
    const Real a = lo + (hi - lo) / 3.0L, b = hi - (hi - lo) / 3.0L;
    if (f(a) < f(b))
      hi = b;
    else
      lo = a;
  }
  Real left = (lo + hi) / 2.0L;
  const Real margin = 1.0L + 64.0L * std::numeric_limits<Real>::epsilon();
  if (!(f(left) * margin <= target))
    throw std::domain_error("no gamma > 1 satisfies the inequality for m = " + std::to_string(m));
  Real right = target;
  while (right - left > 1e-13L) {
    const Real mid = (left + right) / 2.0L;
    if (f(mid) * margin <= target)
      left = mid;
    else
      right = mid;
  }
  double g = static_cast<double>(left);
  while (static_cast<Real>(g) > left || f(static_cast<Real>(g)) * margin > target)
    g = std::nextafter(g, 0.0);
  return g;
}

Rational asymptotic_formula(int k, const ExponentBound& bound) {
  if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
  const Ratio beta = bound.beta();
  const Rational kk = k;
  auto inv_pow = [](const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r /= x;
    return r;
  };
  if (beta == Ratio(2, 1)) {
    if (!bound.plus()) {
      if (k < 3) throw std::domain_error("the square-free formula needs k >= 3");
      const Rational j = k - 1;
      return j - inv_pow(j, 1) - inv_pow(j, 3);
    }
    return kk - inv_pow(kk, 1) - inv_pow(kk, 3) - inv_pow(kk, 4);
  }
  if (beta < Ratio(2, 1)) throw std::domain_error("no formula for exponents below 2");
  // beta in [n+, n+1] for integer n >= 2
  std::int64_t n = beta.num / beta.den;
  if (beta.den == 1 && !bound.plus()) n -= 1;
  const Ratio half(2 * n + 1, 2);
  const bool first = beta < half || (beta == half && !bound.plus());
  Rational value = kk - inv_pow(kk, static_cast<int>(n - 1)) + inv_pow(kk, static_cast<int>(n));
  if (first) value -= inv_pow(kk, static_cast<int>(2 * n - 2));
  return value;
}

nlohmann::json to_json(const PowerFreeBounds& b) {
  nlohmann::json out;
  out["k"] = b.k;
  out["beta"] = b.bound.to_string();
  out["mode"] = to_string(b.mode);
  out["cap"] = b.cap;
  out["upper"] = to_json(b.upper);
  if (b.lower)
    out["lower"] = decimal_down(*b.lower);
  else
    out["lower"] = nullptr;
  if (!b.lower_note.empty()) out["lower_note"] = b.lower_note;
  out["delta"] = b.delta;
  out["antidictionary_size"] = b.antidictionary_size;
  out["canonical_words"] = b.canonical_words;
  out["automaton_states"] = b.automaton_states;
  out["single_component"] = b.single_component;
  out["seconds"] = b.seconds;
  return out;
}

}  // namespace wordgrowth
