#pragma once

#include "kradius/sequence.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kradius {

/// Vertex of the toroidal grid: row i taken modulo 2k+1, column j modulo q.
struct Vertex {
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// True when every divisor of q other than 1 exceeds k — equivalently, the
/// smallest prime factor of q exceeds k. Under this condition the flattened
/// cycle cover produced by CycleSystem::sequence places every pair of
/// vertices from different rows within index distance k.
bool divisor_condition(std::uint32_t k, std::uint64_t q);

/// The (2k+1) x q toroidal grid with its column-step edge classes. Class d
/// (0 <= d < q) consists of the edges (i, j)--(i+1, j+d); it decomposes into
/// cycle_count(d) = gcd((2k+1)d, q) vertex-disjoint cycles, each of length
/// (2k+1)q / cycle_count(d). Cycle j of class d starts at (0, j) and
/// repeatedly steps (+1 row, +d columns).
class CycleSystem {
public:
    /// Throws std::invalid_argument when k == 0, q == 0, or the alphabet
    /// (2k+1)q would not fit in a 32-bit symbol id.
    CycleSystem(std::uint32_t k, std::uint32_t q);

    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t rows() const noexcept { return 2 * k_ + 1; }
    std::uint64_t vertex_count() const noexcept {
        return static_cast<std::uint64_t>(rows()) * q_;
    }

    /// gcd((2k+1)d, q), with gcd(0, q) = q. Throws when d >= q.
    std::uint64_t cycle_count(std::uint32_t d) const;
    /// (2k+1)q / cycle_count(d).
    std::uint64_t cycle_length(std::uint32_t d) const;

    /// The vertices of cycle j of class d, starting at (0, j); the edge from
    /// the last vertex back to the first is implicit. Throws when d >= q or
    /// j >= cycle_count(d).
    std::vector<Vertex> cycle(std::uint32_t d, std::uint64_t j) const;

    /// cycle(d, j) followed by a copy of its first k vertices, so that any
    /// two vertices within cyclic distance k end up within linear distance k.
    std::vector<Vertex> padded_cycle(std::uint32_t d, std::uint64_t j) const;

    /// Concatenation of every padded cycle, class-major (d ascending, cycle
    /// index ascending within a class), encoded over the alphabet of size
    /// (2k+1)q and tagged with radius k.
    Sequence sequence() const;

    /// Closed-form length of sequence():
    /// (2k+1)q^2 + k * sum_{d=0}^{q-1} gcd((2k+1)d, q).
    std::uint64_t sequence_length() const;

    Symbol encode(Vertex v) const noexcept { return v.i * q_ + v.j; }
    Vertex decode(Symbol s) const noexcept { return Vertex{s / q_, s % q_}; }

    /// The edge classes as canonical (min, max) symbol pairs: result[d] lists
    /// the (2k+1)q edges of class d. Audits that the classes are pairwise
    /// disjoint and together cover exactly the grid's edge set (every pair of
    /// vertices in cyclically adjacent rows); throws std::logic_error if the
    /// audit fails and std::invalid_argument when the grid is too large to
    /// enumerate.
    std::vector<std::vector<std::pair<Symbol, Symbol>>> edge_classes() const;

private:
    std::uint32_t k_;
    std::uint32_t q_;
};

}  // namespace kradius
