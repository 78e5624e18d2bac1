#include "kradius/verify.hpp"

#include "doctest.h"
#include "naive_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using kradius::CoverageReport;
using kradius::Sequence;
using kradius::Symbol;

namespace {

Sequence make(std::uint32_t n, std::uint32_t k, std::vector<Symbol> symbols) {
    return Sequence{n, k, std::move(symbols)};
}

bool same_report(const CoverageReport& a, const CoverageReport& b) {
    return a.n == b.n && a.k == b.k && a.total_pairs == b.total_pairs &&
           a.covered_pairs == b.covered_pairs &&
           a.uncovered_witnesses == b.uncovered_witnesses &&
           a.witnesses_truncated == b.witnesses_truncated &&
           a.is_k_radius == b.is_k_radius;
}

}  // namespace

TEST_CASE("verify accepts the 21-term 2-radius sequence over 9 symbols") {
    const Sequence seq = make(
        9, 2, {0, 1, 6, 4, 3, 7, 8, 0, 4, 2, 5, 0, 3, 2, 1, 8, 5, 6, 7, 2, 1});
    const CoverageReport report = kradius::verify(seq);
    CHECK(report.total_pairs == 36);
    CHECK(report.covered_pairs == 36);
    CHECK(report.is_k_radius);
    CHECK(report.uncovered_witnesses.empty());
    CHECK_FALSE(report.witnesses_truncated);
}

TEST_CASE("verify rejects 0,1,2,3 at radius 2 with witness (0,3)") {
    const CoverageReport report = kradius::verify(make(4, 2, {0, 1, 2, 3}));
    CHECK_FALSE(report.is_k_radius);
    CHECK(report.covered_pairs == 5);
    REQUIRE(report.uncovered_witnesses.size() == 1);
    CHECK(report.uncovered_witnesses[0] == std::pair<Symbol, Symbol>{0, 3});
}

TEST_CASE("verify accepts 0,1,2,3,0 at radius 2") {
    CHECK(kradius::verify(make(4, 2, {0, 1, 2, 3, 0})).is_k_radius);
}

TEST_CASE("verify rejects malformed input") {
    CHECK_THROWS_AS(kradius::verify(make(3, 2, {0, 1, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(kradius::verify(make(3, 0, {0, 1, 2})),
                    std::invalid_argument);
}

TEST_CASE("verify edge cases: empty and single-symbol alphabets") {
    const CoverageReport empty = kradius::verify(make(0, 1, {}));
    CHECK(empty.total_pairs == 0);
    CHECK(empty.is_k_radius);

    // One symbol has no pairs to cover, but nothing forbids the empty list.
    const CoverageReport one = kradius::verify(make(1, 1, {}));
    CHECK(one.total_pairs == 0);
    CHECK(one.is_k_radius);
}

TEST_CASE("witness list truncates at 100 with the flag set") {
    // An empty sequence over 20 symbols misses all 190 pairs.
    const CoverageReport report = kradius::verify(make(20, 1, {}));
    CHECK(report.covered_pairs == 0);
    CHECK(report.uncovered_witnesses.size() == 100);
    CHECK(report.witnesses_truncated);
    // Lexicographic order: first witness (0,1), last of the kept ones...
    CHECK(report.uncovered_witnesses.front() ==
          std::pair<Symbol, Symbol>{0, 1});

    // Exactly 100 missing pairs must not set the flag: n=15 gives 105 pairs
    // and the walk 0,1,2,3,4,0 covers exactly five at radius 1.
    const CoverageReport at_limit =
        kradius::verify(make(15, 1, {0, 1, 2, 3, 4, 0}));
    CHECK(at_limit.covered_pairs == 5);
    CHECK(at_limit.uncovered_witnesses.size() == 100);
    CHECK_FALSE(at_limit.witnesses_truncated);
}

TEST_CASE("pair_gap reports minimum occurrence distance") {
    const Sequence seq = make(
        9, 2, {0, 1, 6, 4, 3, 7, 8, 0, 4, 2, 5, 0, 3, 2, 1, 8, 5, 6, 7, 2, 1});
    CHECK(kradius::pair_gap(seq, 0, 1) == 1);
    CHECK(kradius::pair_gap(make(4, 2, {0, 1, 2, 3}), 0, 3) == 3);
    CHECK_FALSE(kradius::pair_gap(make(4, 2, {0, 1, 2}), 0, 3).has_value());
    CHECK_THROWS_AS(kradius::pair_gap(seq, 3, 3), std::invalid_argument);
}

TEST_CASE("pair_gap agrees with verify coverage") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t n = 2 + rng() % 8;
        const std::uint32_t k = 1 + rng() % 4;
        const std::size_t m = rng() % 40;
        Sequence seq = make(n, k, {});
        for (std::size_t i = 0; i < m; ++i) {
            seq.symbols.push_back(rng() % n);
        }
        const CoverageReport report = kradius::verify(seq);
        for (Symbol a = 0; a + 1 < n; ++a) {
            for (Symbol b = a + 1; b < n; ++b) {
                const auto gap = kradius::pair_gap(seq, a, b);
                const bool covered = gap && *gap <= k;
                const bool listed =
                    std::find(report.uncovered_witnesses.begin(),
                              report.uncovered_witnesses.end(),
                              std::pair<Symbol, Symbol>{a, b}) !=
                    report.uncovered_witnesses.end();
                CHECK(covered == !listed);
            }
        }
    }
}

TEST_CASE("verify agrees with the naive double-loop oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t n = 1 + rng() % 12;
        const std::uint32_t k = 1 + rng() % 6;
        const std::size_t m = rng() % 51;
        Sequence seq = make(n, k, {});
        for (std::size_t i = 0; i < m; ++i) {
            seq.symbols.push_back(rng() % n);
        }
        CHECK(same_report(kradius::verify(seq),
                          kradius::testing::naive_verify(seq)));
    }
}

TEST_CASE("reversing a sequence leaves the report unchanged") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t n = 2 + rng() % 10;
        const std::uint32_t k = 1 + rng() % 5;
        Sequence seq = make(n, k, {});
        const std::size_t m = rng() % 60;
        for (std::size_t i = 0; i < m; ++i) {
            seq.symbols.push_back(rng() % n);
        }
        Sequence rev = seq;
        std::reverse(rev.symbols.begin(), rev.symbols.end());
        CHECK(same_report(kradius::verify(seq), kradius::verify(rev)));
    }
}

TEST_CASE("appending symbols never decreases coverage") {
    std::mt19937 rng(4242);
    const std::uint32_t n = 8;
    const std::uint32_t k = 2;
    Sequence seq = make(n, k, {});
    std::uint64_t last = 0;
    for (int step = 0; step < 80; ++step) {
        seq.symbols.push_back(rng() % n);
        const std::uint64_t now = kradius::verify(seq).covered_pairs;
        CHECK(now >= last);
        last = now;
    }
}

TEST_CASE("a permutation is k-radius exactly when n <= k+1") {
    for (std::uint32_t n = 1; n <= 12; ++n) {
        for (std::uint32_t k = 1; k <= 12; ++k) {
            Sequence seq = make(n, k, {});
            for (Symbol v = 0; v < n; ++v) seq.symbols.push_back(v);
            CHECK(kradius::verify(seq).is_k_radius == (n <= k + 1));
        }
    }
}
