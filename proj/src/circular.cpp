#include "wordgrowth/circular.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

#include "parallel.hpp"
#include "wordgrowth/powerfree.hpp"

namespace wordgrowth {

namespace {

enum class Walk { finished, stopped, exhausted };

// Visits every free word of length n in first-occurrence letter order.
// `visit` returns true to stop early; `budget` counts search nodes.
template <class Visit>
Walk for_each_canonical_free(int k, const ExponentBound& bound, int n, std::uint64_t budget,
                             Visit&& visit) {
  PowerTracker tracker(bound);
  std::uint64_t spent = 0;
  auto rec = [&](auto&& self, int used) -> Walk {
    if (static_cast<int>(tracker.size()) == n) return visit(tracker) ? Walk::stopped : Walk::finished;
    for (Letter a = 0; a < std::min(used + 1, k); ++a) {
      if (++spent > budget) return Walk::exhausted;
      if (!tracker.push(a)) continue;
      const Walk w = self(self, std::max(used, a + 1));
      tracker.pop();
      if (w != Walk::finished) return w;
    }
    return Walk::finished;
  };
  return rec(rec, 0);
}

// The root in `tracker` extends to a minimal power of the same period.
bool closes(PowerTracker& tracker) {
  const int p = static_cast<int>(tracker.size());
  const int length = tracker.bound().forbidden_length(p);
  int pushed = 0;
  bool ok = true;
  for (int i = p; i < length - 1; ++i, ++pushed)
    if (!tracker.push(tracker.word()[i - p])) {
      ok = false;
      break;
    }
  ok = ok && tracker.completes_minimal(tracker.word()[length - 1 - p]);
  for (; pushed > 0; --pushed) tracker.pop();
  return ok;
}

constexpr std::uint64_t kUnbounded = ~std::uint64_t{0};

}  // namespace

CircularWord::CircularWord(std::span<const Letter> letters) : representative_(least_rotation(letters)) {}

bool circular_is_square_free(const CircularWord& word) {
  const auto& u = word.representative();
  const std::size_t n = u.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t h = 1; 2 * h <= n; ++h) {
      std::size_t i = 0;
      while (i < h && u[(s + i) % n] == u[(s + h + i) % n]) ++i;
      if (i == h) return false;
    }
  return true;
}

std::uint64_t root_complexity(int k, const ExponentBound& bound, int n) {
  if (n < 1) throw std::invalid_argument("period must be positive");
  std::uint64_t count = 0;
  const bool squares = bound == ExponentBound(2, 1);
  for_each_canonical_free(k, bound, n, kUnbounded, [&](PowerTracker& t) {
    const bool hit = squares ? circular_is_square_free(CircularWord(t.word())) : closes(t);
    if (hit) count += orbit_size(k, letters_used(t.word()));
    return false;
  });
  return count;
}

std::vector<CircularWord> enumerate_circular_square_free(int n, int k) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  std::set<CircularWord> found;
  for_each_canonical_free(k, ExponentBound(2, 1), n, kUnbounded, [&](PowerTracker& t) {
    const Word root(t.word().begin(), t.word().end());
    if (!circular_is_square_free(CircularWord(root))) return false;
    for (const auto& w : renaming_orbit(root, k)) found.emplace(w);
    return false;
  });
  return {found.begin(), found.end()};
}

std::size_t renaming_class_count(const std::vector<CircularWord>& words, int k) {
  std::set<Word> classes;
  for (const auto& cw : words) {
    Word best;
    for (const auto& w : renaming_orbit(canonical_renaming(cw.representative()), k)) {
      Word r = least_rotation(w);
      if (best.empty() || r < best) best = std::move(r);
    }
    classes.insert(std::move(best));
  }
  return classes.size();
}

BudgetExceeded::BudgetExceeded(int period, std::uint64_t budget)
    : std::runtime_error("search budget of " + std::to_string(budget) +
                         " nodes exceeded at period " + std::to_string(period)),
      period_(period) {}

std::vector<int> forbidden_period_scan(int k, const ExponentBound& bound, int p_max,
                                       const ScanOptions& options) {
  if (p_max < 1) throw std::invalid_argument("p_max must be positive");
  std::vector<Walk> status(p_max + 1, Walk::finished);
  detail::parallel_for(static_cast<std::size_t>(p_max), options.threads, [&](std::size_t i) {
    const int p = static_cast<int>(i) + 1;
    status[p] = for_each_canonical_free(k, bound, p, options.budget, [](PowerTracker& t) { return closes(t); });
  });
  std::vector<int> forbidden;
  for (int p = 1; p <= p_max; ++p) {
    if (status[p] == Walk::exhausted) throw BudgetExceeded(p, options.budget);
    if (status[p] == Walk::finished) forbidden.push_back(p);
  }
  return forbidden;
}

void write_root_csv(std::ostream& out, const std::vector<RootComplexityRow>& rows) {
  out << "k,beta,n,count\n";
  for (const auto& r : rows) out << r.k << ',' << r.bound.to_string() << ',' << r.n << ',' << r.count << '\n';
}

}  // namespace wordgrowth
