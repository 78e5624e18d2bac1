#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kradius {

/// Alphabet symbols are dense identifiers 0..n-1. Callers with richer
/// alphabets are expected to map them onto this range themselves; every
/// construction here is index arithmetic on dense ids.
using Symbol = std::uint32_t;

/// A sequence over the alphabet {0, ..., n-1} together with the radius k it
/// targets: the sequence has the k-radius property when every pair of
/// distinct symbols appears somewhere at index distance at most k.
struct Sequence {
    std::uint32_t n = 0;          ///< alphabet size
    std::uint32_t k = 0;          ///< radius parameter
    std::vector<Symbol> symbols;  ///< the terms, in order

    std::size_t size() const noexcept { return symbols.size(); }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

}  // namespace kradius
