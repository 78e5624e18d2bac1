#pragma once

#include "kradius/sequence.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kradius {

/// Symbol of the doubled alphabet used by the exact 2-radius construction:
/// the p values 0..p-1 plus an underlined copy of each. Underlined symbols
/// encode into Sequence ids as p + value, plain ones as the value itself.
struct BipSymbol {
    std::uint32_t value = 0;
    bool underlined = false;

    friend bool operator==(const BipSymbol&, const BipSymbol&) = default;
};

Symbol encode_bip(BipSymbol s, std::uint32_t p) noexcept;
BipSymbol decode_bip(Symbol id, std::uint32_t p) noexcept;

/// Hamiltonian cycle number j of the complete bipartite graph between the
/// plain and underlined value sets: vertex t (t = 0..2p-1) carries value
/// t*j mod p and is underlined exactly when t is odd, so consecutive
/// vertices always differ by +-j with alternating underline. Requires p an
/// odd prime and 1 <= j <= (p-1)/2; throws std::invalid_argument otherwise.
std::vector<BipSymbol> ham_cycle(std::uint32_t p, std::uint32_t j);

/// Splits ham_cycle(p, j) immediately before underlined 1: the first part
/// starts at plain 0, the second at underlined 1, and concatenating them
/// restores the full cycle traversal.
std::pair<std::vector<BipSymbol>, std::vector<BipSymbol>>
split_ham_cycle(std::uint32_t p, std::uint32_t j);

/// Interleaving of all the cycle halves, of length p^2 - p: ascending
/// j = 1..(p-1)/2 contributes the first half for odd j and the second half
/// for even j, then descending j contributes the remaining halves. Every
/// half is used exactly once.
std::vector<BipSymbol> interleaving(std::uint32_t p);

/// Closing 2p-term block whose adjacent pairs are exactly the pairs the
/// interleaving cannot place within distance 2: every (v, underlined v), the
/// plain pairs (1-j, 1+j), and the underlined pairs (-j, j) for
/// j = 1..(p-1)/2 (values mod p). tail() swaps the first two terms of
/// tail_unswapped() so the block can directly follow the interleaving.
std::vector<BipSymbol> tail_unswapped(std::uint32_t p);
std::vector<BipSymbol> tail(std::uint32_t p);

/// Optimal 2-radius sequence over 2p symbols for prime p: the interleaving
/// followed by the tail, of length p^2 + p. For p = 2 the fixed five-term
/// sequence 0,1,2,3,0 is returned. Throws std::invalid_argument when p is
/// not prime.
Sequence construct_2p(std::uint32_t p);

/// Removes every occurrence of the victim symbols and renumbers survivors
/// densely, preserving order. Index distances only shrink, so a k-radius
/// input stays k-radius over the smaller alphabet. Victims must be a proper
/// subset of the alphabet; duplicates in the list are allowed.
Sequence erase_symbols(const Sequence& seq, const std::vector<Symbol>& victims);

}  // namespace kradius
