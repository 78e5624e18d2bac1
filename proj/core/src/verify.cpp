#include "kradius/verify.hpp"

#include "pair_bitset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kradius {

CoverageReport verify(const Sequence& seq) {
    if (seq.k == 0) throw std::invalid_argument("verify: radius k must be positive");
    const std::uint32_t n = seq.n;
    const std::size_t m = seq.symbols.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (seq.symbols[i] >= n) {
            std::ostringstream msg;
            msg << "verify: symbol " << seq.symbols[i] << " at index " << i
                << " is outside the alphabet 0.." << n << "-1";
            throw std::invalid_argument(msg.str());
        }
    }

    CoverageReport report;
    report.n = n;
    report.k = seq.k;
    report.total_pairs = detail::PairBitset::pair_count(n);

    detail::PairBitset bits(n);
    std::uint64_t covered = 0;
    const std::uint64_t k = seq.k;
    for (std::size_t i = 0; i < m; ++i) {
        const Symbol cur = seq.symbols[i];
        const std::size_t lo = i > k ? i - k : 0;
        for (std::size_t w = lo; w < i; ++w) {
            const Symbol other = seq.symbols[w];
            if (other != cur && bits.set(other, cur)) ++covered;
        }
    }
    report.covered_pairs = covered;
    report.is_k_radius = covered == report.total_pairs;

    if (!report.is_k_radius) {
        const std::uint64_t missing = report.total_pairs - covered;
        report.witnesses_truncated = missing > 100;
        report.uncovered_witnesses.reserve(
            static_cast<std::size_t>(std::min<std::uint64_t>(missing, 100)));
        for (Symbol a = 0; a + 1 < n && report.uncovered_witnesses.size() < 100; ++a) {
            for (Symbol b = a + 1; b < n && report.uncovered_witnesses.size() < 100; ++b) {
                if (!bits.test(a, b)) report.uncovered_witnesses.emplace_back(a, b);
            }
        }
    }
    return report;
}

std::optional<std::uint64_t> pair_gap(const Sequence& seq, Symbol a, Symbol b) {
    if (a == b) throw std::invalid_argument("pair_gap: the two symbols must differ");
    if (a >= seq.n || b >= seq.n) {
        throw std::invalid_argument("pair_gap: symbol outside the alphabet");
    }
    std::optional<std::uint64_t> best;
    std::int64_t last_a = -1, last_b = -1;
    for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
        const Symbol s = seq.symbols[i];
        if (s == a) {
            if (last_b >= 0) {
                const std::uint64_t gap = i - static_cast<std::uint64_t>(last_b);
                if (!best || gap < *best) best = gap;
            }
            last_a = static_cast<std::int64_t>(i);
        } else if (s == b) {
            if (last_a >= 0) {
                const std::uint64_t gap = i - static_cast<std::uint64_t>(last_a);
                if (!best || gap < *best) best = gap;
            }
            last_b = static_cast<std::int64_t>(i);
        }
    }
    return best;
}

}  // namespace kradius
