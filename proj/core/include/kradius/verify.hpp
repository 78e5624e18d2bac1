#pragma once

#include "kradius/sequence.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kradius {

/// Outcome of checking the k-radius property of one sequence.
struct CoverageReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t total_pairs = 0;    ///< n(n-1)/2
    std::uint64_t covered_pairs = 0;  ///< pairs seen within index distance k
    /// Up to 100 uncovered pairs (a, b) with a < b, in lexicographic order.
    std::vector<std::pair<Symbol, Symbol>> uncovered_witnesses;
    /// True when more uncovered pairs exist than the witness list holds.
    bool witnesses_truncated = false;
    /// Equivalent to covered_pairs == total_pairs.
    bool is_k_radius = false;
};

/// Checks whether every pair of distinct symbols from {0,...,n-1} occurs at
/// index distance at most k somewhere in the sequence. Runs in O(m*k) time
/// with a sliding window over the last k positions and n(n-1)/2 bits of pair
/// state. Throws std::invalid_argument when k == 0 or a term is outside the
/// alphabet (the message names the offending index).
CoverageReport verify(const Sequence& seq);

/// Smallest index distance between an occurrence of a and an occurrence of b,
/// or nullopt when either symbol never occurs. The pair {a, b} counts as
/// covered by verify exactly when pair_gap(seq, a, b) <= k. Throws
/// std::invalid_argument when a == b or either id is outside the alphabet.
std::optional<std::uint64_t> pair_gap(const Sequence& seq, Symbol a, Symbol b);

}  // namespace kradius
