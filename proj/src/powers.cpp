#include "wordgrowth/powers.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace wordgrowth {

Ratio::Ratio(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const auto g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Ratio::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ExponentBound::ExponentBound(std::int64_t num, std::int64_t den, bool plus)
    : beta_(num, den), plus_(plus) {
  if (beta_ <= Ratio(1, 1)) throw std::invalid_argument("exponent bound must exceed 1");
}

ExponentBound ExponentBound::parse(std::string_view text) {
  bool plus = false;
  if (!text.empty() && text.back() == '+') {
    plus = true;
    text.remove_suffix(1);
  }
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty())
      throw std::invalid_argument("malformed exponent '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExponentBound(read(text), 1, plus);
  return ExponentBound(read(text.substr(0, slash)), read(text.substr(slash + 1)), plus);
}

std::string ExponentBound::to_string() const { return beta_.to_string() + (plus_ ? "+" : ""); }

int ExponentBound::forbidden_length(int period) const {
  const auto scaled = static_cast<std::int64_t>(period) * beta_.num;
  if (plus_) return static_cast<int>(scaled / beta_.den + 1);
  return static_cast<int>((scaled + beta_.den - 1) / beta_.den);
}

Ratio exponent(std::span<const Letter> word) {
  if (word.empty()) throw std::invalid_argument("exponent of the empty word");
  return Ratio(static_cast<std::int64_t>(word.size()), minimal_period(word));
}

bool violates(const Ratio& e, const ExponentBound& bound) { return bound.violated_by(e); }

bool is_free(std::span<const Letter> word, const ExponentBound& bound) {
  PowerTracker tracker(bound);
  for (Letter a : word)
    if (!tracker.push(a)) return false;
  return true;
}

PowerTracker::PowerTracker(ExponentBound bound) : bound_(bound) {}

int PowerTracker::forbidden_length(int q) {
  while (static_cast<int>(min_length_.size()) <= q)
    min_length_.push_back(bound_.forbidden_length(static_cast<int>(min_length_.size())));
  return min_length_[q];
}

void PowerTracker::runs_for(Letter a, std::vector<int>& out) const {
  const int i = static_cast<int>(word_.size());
  out.assign(i + 1, 0);
  for (int q = 1; q <= i; ++q) {
    if (word_[i - q] != a) continue;
    out[q] = (q < i ? runs_[i - 1][q] : 0) + 1;
  }
}

bool PowerTracker::push(Letter a) {
  const int i = static_cast<int>(word_.size());
  if (static_cast<int>(runs_.size()) <= i) runs_.emplace_back();
  auto& runs = runs_[i];
  runs_for(a, runs);
  for (int q = 1; q <= i; ++q)
    if (runs[q] > 0 && q + runs[q] >= forbidden_length(q)) return false;
  word_.push_back(a);
  return true;
}

void PowerTracker::pop() {
  if (word_.empty()) throw std::logic_error("pop on empty tracker");
  word_.pop_back();
}

bool PowerTracker::completes_minimal(Letter a) {
  const int i = static_cast<int>(word_.size());
  runs_for(a, scratch_);
  bool whole = false;
  for (int q = 1; q <= i; ++q) {
    const int length = q + scratch_[q];
    if (scratch_[q] == 0) continue;
    if (std::min(length, i) >= forbidden_length(q)) return false;
    if (length >= forbidden_length(q)) whole = true;
  }
  return whole;
}

}  // namespace wordgrowth
