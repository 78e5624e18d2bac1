#pragma once

#include "kradius/sequence.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kradius {

/// Raised when a requested construction strategy cannot be applied to the
/// given parameters (for example, no usable q exists).
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Strategy {
    Auto,           ///< pick the first applicable strategy below
    MainRecursive,  ///< grid cycle cover + recursive per-class sequences
    Optimal2p,      ///< exact 2-radius construction for n = 2p, p prime
    BlockExpand,    ///< expand a smaller-radius sequence by symbol blocks
    TrivialLargeK,  ///< 0..n-1,0..n-k-2 for k >= floor(n/2)
    SinglePass,     ///< 0..n-1 for n <= k+1
    GhoshBase,      ///< optimal 1-radius closed walk (valid for any k)
};

enum class QChoice { Prime, Factorial };

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);
std::string to_string(QChoice c);
std::optional<QChoice> parse_q_choice(const std::string& name);

/// One layer of the recursion: which strategy ran at which (n, k), and the
/// q it picked when applicable.
struct PlanStep {
    Strategy strategy = Strategy::Auto;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::optional<std::uint64_t> q;
};

struct BuildPlan {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    Strategy requested = Strategy::Auto;
    QChoice q_choice = QChoice::Prime;
    /// Outermost layer first; n strictly decreases along the trace (the
    /// 2k+1 identical per-class builds are recorded once).
    std::vector<PlanStep> trace;
};

struct BuildResult {
    Sequence sequence;
    BuildPlan plan;
};

/// The largest q <= x congruent to 1 modulo p!, i.e. floor((x-1)/p!)*p! + 1.
/// Any such q > 1 has every divisor other than 1 greater than p. Throws
/// construction_error when x < p!, std::overflow_error when p > 20, and
/// std::invalid_argument when p == 0. May return 1; callers needing a
/// useful modulus must reject that value.
std::uint64_t choose_q_factorial(std::uint32_t p, std::uint64_t x);

/// The largest prime q <= floor(n/(2k+1)) with q > k, or nullopt when no
/// such prime exists.
std::optional<std::uint64_t> choose_q_prime(std::uint32_t k, std::uint64_t n);

/// Stitches a k-radius sequence over n symbols out of 2k+1 class sequences:
/// class i must be k-radius over the contiguous block {iq, ..., iq+q-1}
/// (ids already in global coordinates). The result is the class sequences,
/// then for every leftover symbol b in {q(2k+1), ..., n-1} the pair list
/// a,b over all a, then the grid cycle cover linking symbols across blocks.
/// Requires q(2k+1) <= n and divisor_condition(k, q); violations throw
/// std::invalid_argument naming the failing condition.
Sequence assemble_layer(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                        const std::vector<Sequence>& class_sequences);

/// The sequence 0..n-1 followed by 0..n-k-2, of length 2n-k-1; valid (and
/// optimal) when floor(n/2) <= k < n. Throws std::invalid_argument outside
/// that range.
Sequence trivial_large_k(std::uint32_t n, std::uint32_t k);

/// Optimal 1-radius sequence: a closed walk of the complete graph covering
/// every edge, of length C(n,2)+1 for odd n. For even n a perfect matching
/// {2i, 2i+1} is doubled to make all degrees even; the walk is then rotated
/// so a doubled adjacency comes last and the final vertex is dropped,
/// giving length C(n,2)+n/2.
Sequence ghosh_1radius(std::uint32_t n);

/// Replaces every term a of a radius-K sequence over ceil(n/m) block ids by
/// the ascending run of m = floor((k+1)/(K+1)) consecutive symbols starting
/// at a*m (the last block may be shorter). The result is k-radius over n
/// symbols of length at most |base| * m. Requires base.k <= k and
/// base.n == ceil(n/m).
Sequence block_expand(const Sequence& base, std::uint32_t k, std::uint32_t n);

/// Builds a k-radius sequence over n symbols and reports the recursion
/// taken. Strategy Auto picks, in order: a single pass for n <= k+1; the
/// doubled pass for k >= floor(n/2); the exact 2-radius construction for
/// k = 2 and n twice an odd prime; the recursive grid construction when a
/// usable q exists (q_choice selects how q is found); block expansion for
/// k >= 3; and the 1-radius base otherwise. n == 0 yields an empty sequence
/// and plan. The output is re-verified before returning when n <= 10000; a
/// verification failure throws std::logic_error. Explicitly requested
/// strategies whose preconditions fail throw construction_error.
BuildResult construct(std::uint32_t n, std::uint32_t k,
                      Strategy strategy = Strategy::Auto,
                      QChoice q_choice = QChoice::Prime);

}  // namespace kradius
