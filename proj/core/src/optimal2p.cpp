#include "kradius/optimal2p.hpp"

#include "kradius/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kradius {

namespace {

void require_odd_prime(std::uint32_t p, const char* where) {
    if (p < 3 || !is_prime(p)) {
        std::ostringstream msg;
        msg << where << ": p=" << p << " must be an odd prime";
        throw std::invalid_argument(msg.str());
    }
}

void require_half_index(std::uint32_t p, std::uint32_t j, const char* where) {
    if (j == 0 || j > (p - 1) / 2) {
        std::ostringstream msg;
        msg << where << ": j=" << j << " must satisfy 1 <= j <= (p-1)/2 = "
            << (p - 1) / 2;
        throw std::invalid_argument(msg.str());
    }
}

/// (-x) mod p for 0 <= x.
std::uint32_t neg_mod(std::uint32_t p, std::uint32_t x) {
    const std::uint32_t r = x % p;
    return r == 0 ? 0 : p - r;
}

}  // namespace

Symbol encode_bip(BipSymbol s, std::uint32_t p) noexcept {
    return s.underlined ? p + s.value : s.value;
}

BipSymbol decode_bip(Symbol id, std::uint32_t p) noexcept {
    return id < p ? BipSymbol{id, false} : BipSymbol{id - p, true};
}

std::vector<BipSymbol> ham_cycle(std::uint32_t p, std::uint32_t j) {
    require_odd_prime(p, "ham_cycle");
    require_half_index(p, j, "ham_cycle");
    std::vector<BipSymbol> cycle;
    cycle.reserve(2 * p);
    for (std::uint32_t t = 0; t < 2 * p; ++t) {
        cycle.push_back(BipSymbol{
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(t) * j) % p),
            (t & 1) != 0});
    }
    return cycle;
}

std::pair<std::vector<BipSymbol>, std::vector<BipSymbol>>
split_ham_cycle(std::uint32_t p, std::uint32_t j) {
    std::vector<BipSymbol> cycle = ham_cycle(p, j);  // validates p, j
    // Underlined 1 sits at the odd t with t*j = 1 (mod p): the inverse of j
    // mod p, shifted by p when that inverse is even (p odd flips parity).
    const std::uint64_t inv = mod_inverse(j, p);
    const std::size_t cut = static_cast<std::size_t>(inv % 2 == 1 ? inv : inv + p);
    std::vector<BipSymbol> first(cycle.begin(), cycle.begin() + cut);
    std::vector<BipSymbol> second(cycle.begin() + cut, cycle.end());
    return {std::move(first), std::move(second)};
}

std::vector<BipSymbol> interleaving(std::uint32_t p) {
    require_odd_prime(p, "interleaving");
    const std::uint32_t h = (p - 1) / 2;
    std::vector<std::vector<BipSymbol>> firsts(h + 1), seconds(h + 1);
    for (std::uint32_t j = 1; j <= h; ++j) {
        auto parts = split_ham_cycle(p, j);
        firsts[j] = std::move(parts.first);
        seconds[j] = std::move(parts.second);
    }
    std::vector<BipSymbol> out;
    out.reserve(static_cast<std::size_t>(p) * p - p);
    // Ascending pass takes one half per cycle, descending pass the other.
    for (std::uint32_t j = 1; j <= h; ++j) {
        const auto& part = (j % 2 == 1) ? firsts[j] : seconds[j];
        out.insert(out.end(), part.begin(), part.end());
    }
    for (std::uint32_t j = h; j >= 1; --j) {
        const auto& part = (j % 2 == 1) ? seconds[j] : firsts[j];
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<BipSymbol> tail_unswapped(std::uint32_t p) {
    require_odd_prime(p, "tail_unswapped");
    std::vector<BipSymbol> t;
    t.reserve(2 * p);
    for (std::uint32_t i = 1; i <= 2 * p; ++i) {
        switch (i % 4) {
            case 1: t.push_back(BipSymbol{neg_mod(p, (i - 1) / 2), true}); break;
            case 2: t.push_back(BipSymbol{neg_mod(p, (i - 2) / 2), false}); break;
            case 3: t.push_back(BipSymbol{((i + 1) / 2) % p, false}); break;
            default: t.push_back(BipSymbol{(i / 2) % p, true}); break;
        }
    }
    return t;
}

std::vector<BipSymbol> tail(std::uint32_t p) {
    std::vector<BipSymbol> t = tail_unswapped(p);
    std::swap(t[0], t[1]);
    return t;
}

Sequence construct_2p(std::uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("construct_2p: p=" + std::to_string(p) +
                                    " must be prime");
    }
    Sequence s;
    s.n = 2 * p;
    s.k = 2;
    if (p == 2) {
        s.symbols = {0, 1, 2, 3, 0};
        return s;
    }
    const std::vector<BipSymbol> mid = interleaving(p);
    const std::vector<BipSymbol> end = tail(p);
    s.symbols.reserve(mid.size() + end.size());
    for (BipSymbol b : mid) s.symbols.push_back(encode_bip(b, p));
    for (BipSymbol b : end) s.symbols.push_back(encode_bip(b, p));
    return s;
}

Sequence erase_symbols(const Sequence& seq, const std::vector<Symbol>& victims) {
    std::vector<char> dead(seq.n, 0);
    for (Symbol v : victims) {
        if (v >= seq.n) {
            throw std::invalid_argument("erase_symbols: victim id " +
                                        std::to_string(v) +
                                        " is outside the alphabet");
        }
        dead[v] = 1;
    }
    std::uint32_t removed = 0;
    for (char d : dead) removed += d;
    if (removed == seq.n && seq.n > 0) {
        throw std::invalid_argument("erase_symbols: cannot erase the entire alphabet");
    }

    std::vector<Symbol> remap(seq.n, 0);
    Symbol next = 0;
    for (Symbol s = 0; s < seq.n; ++s) {
        if (!dead[s]) remap[s] = next++;
    }

    Sequence out;
    out.n = seq.n - removed;
    out.k = seq.k;
    out.symbols.reserve(seq.symbols.size());
    for (Symbol s : seq.symbols) {
        if (s >= seq.n) {
            throw std::invalid_argument(
                "erase_symbols: input sequence contains symbol " +
                std::to_string(s) + " outside its alphabet");
        }
        if (!dead[s]) out.symbols.push_back(remap[s]);
    }
    return out;
}

}  // namespace kradius
