#include "kradius/cycles.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kradius {

bool divisor_condition(std::uint32_t k, std::uint64_t q) {
    if (q == 1) return true;  // no divisor other than 1 at all
    if (q <= k) return false; // q divides itself
    for (std::uint64_t d = 2; d <= k; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

CycleSystem::CycleSystem(std::uint32_t k, std::uint32_t q) : k_(k), q_(q) {
    if (k == 0) throw std::invalid_argument("CycleSystem: k must be positive");
    if (q == 0) throw std::invalid_argument("CycleSystem: q must be positive");
    const std::uint64_t alphabet = (2 * static_cast<std::uint64_t>(k) + 1) * q;
    if (alphabet > std::numeric_limits<Symbol>::max()) {
        throw std::invalid_argument(
            "CycleSystem: alphabet (2k+1)q does not fit a 32-bit symbol id");
    }
}

std::uint64_t CycleSystem::cycle_count(std::uint32_t d) const {
    if (d >= q_) {
        std::ostringstream msg;
        msg << "CycleSystem: class index d=" << d << " must be below q=" << q_;
        throw std::invalid_argument(msg.str());
    }
    return std::gcd(static_cast<std::uint64_t>(rows()) * d,
                    static_cast<std::uint64_t>(q_));
}

std::uint64_t CycleSystem::cycle_length(std::uint32_t d) const {
    return vertex_count() / cycle_count(d);
}

std::vector<Vertex> CycleSystem::cycle(std::uint32_t d, std::uint64_t j) const {
    const std::uint64_t count = cycle_count(d);  // validates d
    if (j >= count) {
        std::ostringstream msg;
        msg << "CycleSystem: cycle index j=" << j << " out of range, class d=" << d
            << " has " << count << " cycles";
        throw std::invalid_argument(msg.str());
    }
    const std::uint64_t len = cycle_length(d);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(len));
    std::uint32_t i = 0;
    std::uint64_t col = j;
    for (std::uint64_t t = 0; t < len; ++t) {
        out.push_back(Vertex{i, static_cast<std::uint32_t>(col)});
        i = (i + 1) % rows();
        col = (col + d) % q_;
    }
    return out;
}

std::vector<Vertex> CycleSystem::padded_cycle(std::uint32_t d, std::uint64_t j) const {
    std::vector<Vertex> out = cycle(d, j);
    const std::size_t len = out.size();
    out.reserve(len + k_);
    for (std::uint32_t t = 0; t < k_; ++t) out.push_back(out[t]);
    return out;
}

Sequence CycleSystem::sequence() const {
    Sequence s;
    s.n = rows() * q_;
    s.k = k_;
    s.symbols.reserve(static_cast<std::size_t>(sequence_length()));
    for (std::uint32_t d = 0; d < q_; ++d) {
        const std::uint64_t count = cycle_count(d);
        const std::uint64_t padded = cycle_length(d) + k_;
        for (std::uint64_t j = 0; j < count; ++j) {
            // Continuing the (+1, +d) walk past the cycle's end retraces its
            // first vertices, which is exactly the k-term padding.
            std::uint32_t i = 0;
            std::uint64_t col = j;
            for (std::uint64_t t = 0; t < padded; ++t) {
                s.symbols.push_back(i * q_ + static_cast<std::uint32_t>(col));
                i = (i + 1) % rows();
                col = (col + d) % q_;
            }
        }
    }
    return s;
}

std::uint64_t CycleSystem::sequence_length() const {
    const std::uint64_t r = rows();
    std::uint64_t gcds = 0;
    for (std::uint32_t d = 0; d < q_; ++d) {
        gcds += std::gcd(r * d, static_cast<std::uint64_t>(q_));
    }
    return r * q_ * q_ + k_ * gcds;
}

std::vector<std::vector<std::pair<Symbol, Symbol>>> CycleSystem::edge_classes() const {
    const std::uint64_t edge_total = static_cast<std::uint64_t>(rows()) * q_ * q_;
    if (edge_total > 2'000'000) {
        throw std::invalid_argument(
            "CycleSystem: grid too large to enumerate edge classes");
    }
    const auto canon = [this](Vertex u, Vertex v) {
        const Symbol a = encode(u), b = encode(v);
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };

    std::vector<std::vector<std::pair<Symbol, Symbol>>> classes(q_);
    std::set<std::pair<Symbol, Symbol>> seen;
    for (std::uint32_t d = 0; d < q_; ++d) {
        auto& cls = classes[d];
        cls.reserve(static_cast<std::size_t>(rows()) * q_);
        for (std::uint32_t i = 0; i < rows(); ++i) {
            for (std::uint32_t j = 0; j < q_; ++j) {
                const auto e = canon(Vertex{i, j},
                                     Vertex{(i + 1) % rows(),
                                            static_cast<std::uint32_t>(
                                                (j + static_cast<std::uint64_t>(d)) % q_)});
                cls.push_back(e);
                if (!seen.insert(e).second) {
                    throw std::logic_error("CycleSystem: edge classes overlap");
                }
            }
        }
    }

    std::set<std::pair<Symbol, Symbol>> expected;
    for (std::uint32_t i = 0; i < rows(); ++i) {
        for (std::uint32_t j = 0; j < q_; ++j) {
            for (std::uint32_t j2 = 0; j2 < q_; ++j2) {
                expected.insert(canon(Vertex{i, j}, Vertex{(i + 1) % rows(), j2}));
            }
        }
    }
    if (seen != expected) {
        throw std::logic_error(
            "CycleSystem: edge classes do not cover the grid edge set");
    }
    return classes;
}

}  // namespace kradius
