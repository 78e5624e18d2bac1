#pragma once

#include "kradius/sequence.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace kradius {

/// The bounds on the minimum k-radius sequence length that apply to (n, k).
/// Optional fields are set only when their applicability condition holds.
struct BoundSet {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    /// ceil(n(n-1) / 2k): each new term covers at most k new pairs.
    std::uint64_t general_lower = 0;
    /// ceil(C(n,2)/2 + 3n/4) = n(n+2)/4, valid for k = 2 and n = 2 (mod 4);
    /// attained exactly when n = 2p for an odd prime p.
    std::optional<std::uint64_t> mod4_lower;
    /// Exact optimum for k = 1: C(n,2)+1 for odd n, C(n,2)+n/2 for even n.
    std::optional<std::uint64_t> ghosh_exact;
    /// Exact optimum for large radius: 2n-k-1 when floor(n/2) <= k < n,
    /// and n when k >= n-1 (every symbol still has to occur).
    std::optional<std::uint64_t> large_k_exact;
    /// floor(3n^2 / k), an upper bound on the optimum, valid when n >= k.
    std::optional<std::uint64_t> quadratic_upper;
};

/// Throws std::invalid_argument when n == 0 or k == 0.
BoundSet bounds(std::uint32_t n, std::uint32_t k);

/// Sum of gcd(d, m) over d = 0..m-1, with the convention gcd(0, m) = m.
/// Throws std::invalid_argument when m == 0.
std::uint64_t gcd_sum(std::uint64_t m);

enum class SearchStatus {
    Optimal,          ///< minimum length proven and a witness found
    LowerBoundOnly,   ///< every length <= the cap ruled out; no witness sought
    BudgetExhausted,  ///< node budget ran out mid-level
};

std::string to_string(SearchStatus status);

/// Outcome of the exhaustive search for the minimum k-radius length.
struct SearchResult {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    SearchStatus status = SearchStatus::BudgetExhausted;
    /// Set only when status == Optimal; then best_length == proven_lower.
    std::optional<std::uint64_t> best_length;
    /// Every length below this value is impossible.
    std::uint64_t proven_lower = 0;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    /// A verifying sequence of best_length terms, when one was found.
    std::optional<Sequence> witness;
};

/// Iterative-deepening depth-first search over candidate lengths, starting
/// at the largest analytic lower bound (each appended term covers at most
/// min(k, position) new pairs, and all n symbols must occur). Within a
/// level it prunes on remaining pair capacity, breaks relabeling symmetry
/// by forcing first occurrences of symbols in ascending id order, and skips
/// immediately repeated symbols (a shortest sequence never needs them).
/// Deterministic and single-threaded. Stops with BudgetExhausted once
/// node_budget nodes have been expanded, or with LowerBoundOnly when the
/// candidate length would exceed length_cap. Throws std::invalid_argument
/// when n == 0, k == 0, or node_budget == 0.
SearchResult exact_search(std::uint32_t n, std::uint32_t k,
                          std::uint64_t node_budget = 20'000'000,
                          std::optional<std::uint64_t> length_cap = std::nullopt);

}  // namespace kradius
