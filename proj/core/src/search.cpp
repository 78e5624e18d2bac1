#include "kradius/bounds.hpp"

#include "pair_bitset.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace kradius {

namespace {

/// Depth-first search for a sequence of exactly L terms that covers every
/// pair and uses every symbol. State is mutated in place with undo lists
/// per depth; candidate symbols are tried in ascending order, which makes
/// the search deterministic.
struct Engine {
    std::uint32_t n;
    std::uint32_t k;
    std::uint64_t total;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<Symbol> seq;
    detail::PairBitset bits;
    std::uint64_t covered = 0;
    std::uint32_t used = 0;  // symbols used so far are exactly 0..used-1

    std::vector<std::uint64_t> suffix_cap;         // per level
    std::vector<std::vector<std::uint64_t>> undo;  // per depth
    std::vector<Symbol> witness;

    Engine(std::uint32_t n_, std::uint32_t k_, std::uint64_t budget_)
        : n(n_), k(k_), total(detail::PairBitset::pair_count(n_)),
          budget(budget_), bits(n_) {}

    bool dfs(std::uint64_t t, std::uint64_t level) {
        if (t == level) {
            if (covered == total && used == n) {
                witness = seq;
                return true;
            }
            return false;
        }
        // Remaining positions cannot cover the outstanding pairs.
        if (covered + suffix_cap[static_cast<std::size_t>(t)] < total) return false;
        // Remaining positions cannot introduce the missing symbols.
        if (static_cast<std::uint64_t>(n - used) > level - t) return false;

        const Symbol limit = static_cast<Symbol>(std::min<std::uint32_t>(used, n - 1));
        for (Symbol s = 0; s <= limit; ++s) {
            if (t > 0 && seq.back() == s) continue;  // never helps a shortest sequence
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            auto& undos = undo[static_cast<std::size_t>(t)];
            undos.clear();
            const std::uint64_t lo = t > k ? t - k : 0;
            for (std::uint64_t w = lo; w < t; ++w) {
                const Symbol other = seq[static_cast<std::size_t>(w)];
                if (other == s) continue;
                const std::uint64_t idx = other < s
                                              ? detail::PairBitset::index(other, s)
                                              : detail::PairBitset::index(s, other);
                if (bits.set_index(idx)) undos.push_back(idx);
            }
            covered += undos.size();
            const std::uint32_t used_before = used;
            if (s == used) ++used;
            seq.push_back(s);

            if (dfs(t + 1, level)) return true;

            seq.pop_back();
            used = used_before;
            covered -= undos.size();
            for (std::uint64_t idx : undos) bits.clear_index(idx);
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult exact_search(std::uint32_t n, std::uint32_t k,
                          std::uint64_t node_budget,
                          std::optional<std::uint64_t> length_cap) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("exact_search: n and k must be positive");
    }
    if (node_budget == 0) {
        throw std::invalid_argument("exact_search: node budget must be positive");
    }
    const auto start = std::chrono::steady_clock::now();

    SearchResult result;
    result.n = n;
    result.k = k;
    const std::uint64_t total = detail::PairBitset::pair_count(n);

    // Smallest level worth trying: at least n (every symbol occurs) and
    // enough aggregate pair capacity, position t contributing min(k, t).
    std::uint64_t level0 = 0;
    {
        std::uint64_t cap = 0, level = 0;
        while (level < n || cap < total) {
            cap += std::min<std::uint64_t>(k, level);
            ++level;
        }
        level0 = std::max<std::uint64_t>(level, 1);
    }

    Engine engine(n, k, node_budget);
    for (std::uint64_t level = level0;; ++level) {
        if (length_cap && level > *length_cap) {
            result.status = SearchStatus::LowerBoundOnly;
            result.proven_lower = level;  // all smaller levels exhausted or impossible
            break;
        }
        engine.suffix_cap.assign(static_cast<std::size_t>(level) + 1, 0);
        for (std::uint64_t t = level; t-- > 0;) {
            engine.suffix_cap[static_cast<std::size_t>(t)] =
                engine.suffix_cap[static_cast<std::size_t>(t) + 1] +
                std::min<std::uint64_t>(k, t);
        }
        engine.undo.resize(static_cast<std::size_t>(level));
        engine.seq.reserve(static_cast<std::size_t>(level));

        const bool found = engine.dfs(0, level);
        if (found) {
            result.status = SearchStatus::Optimal;
            result.best_length = level;
            result.proven_lower = level;
            result.witness = Sequence{n, k, engine.witness};
            break;
        }
        if (engine.budget_hit) {
            result.status = SearchStatus::BudgetExhausted;
            result.proven_lower = level;  // every smaller level was exhausted
            break;
        }
        // Level exhausted without a witness: the optimum exceeds it.
    }

    result.nodes_explored = engine.nodes;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace kradius
