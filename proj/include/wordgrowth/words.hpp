#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordgrowth/automaton.hpp"

namespace wordgrowth {

using Word = std::vector<Letter>;

/// "abc" -> {0,1,2}. Throws std::invalid_argument on characters outside a..z.
Word word_from_string(std::string_view text);

/// Letters as a..z when every letter is below 26, otherwise space-separated
/// indices.
std::string to_string(std::span<const Letter> word);

/// Shortest period (linear-time border computation). Empty word -> 0.
int minimal_period(std::span<const Letter> word);

/// Relabel letters in order of first occurrence: the first letter becomes 0,
/// the next new letter 1, and so on.
Word canonical_renaming(std::span<const Letter> word);

/// Number of distinct letters.
int letters_used(std::span<const Letter> word);

/// Lexicographically least rotation (Booth's algorithm).
Word least_rotation(std::span<const Letter> word);

}  // namespace wordgrowth
