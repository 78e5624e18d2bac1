#pragma once

#include "kradius/sequence.hpp"

#include <cstdint>
#include <vector>

namespace kradius::detail {

/// Bitset over the unordered pairs {a, b}, a != b, of symbols below n,
/// stored triangularly: pair (a, b) with a < b lives at index b(b-1)/2 + a.
class PairBitset {
public:
    explicit PairBitset(std::uint32_t n)
        : words_((pair_count(n) + 63) / 64, 0) {}

    static std::uint64_t pair_count(std::uint32_t n) noexcept {
        return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    }

    /// Requires a < b.
    static std::uint64_t index(Symbol a, Symbol b) noexcept {
        return static_cast<std::uint64_t>(b) * (b - 1) / 2 + a;
    }

    bool test_index(std::uint64_t idx) const noexcept {
        return (words_[idx >> 6] >> (idx & 63)) & 1;
    }

    /// Sets the bit; returns true when it was previously clear.
    bool set_index(std::uint64_t idx) noexcept {
        std::uint64_t& w = words_[idx >> 6];
        const std::uint64_t mask = std::uint64_t(1) << (idx & 63);
        if (w & mask) return false;
        w |= mask;
        return true;
    }

    void clear_index(std::uint64_t idx) noexcept {
        words_[idx >> 6] &= ~(std::uint64_t(1) << (idx & 63));
    }

    bool test(Symbol a, Symbol b) const noexcept {
        return test_index(a < b ? index(a, b) : index(b, a));
    }

    bool set(Symbol a, Symbol b) noexcept {
        return set_index(a < b ? index(a, b) : index(b, a));
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace kradius::detail
