#include "kradius/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace kradius {

BoundSet bounds(std::uint32_t n, std::uint32_t k) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("bounds: n and k must be positive");
    }
    BoundSet b;
    b.n = n;
    b.k = k;
    const std::uint64_t twice_pairs = static_cast<std::uint64_t>(n) * (n - 1);
    b.general_lower = (twice_pairs + 2 * std::uint64_t(k) - 1) / (2 * std::uint64_t(k));
    if (k == 2 && n % 4 == 2) {
        // ceil(C(n,2)/2 + 3n/4) = n(n+2)/4, an integer for n = 2 (mod 4).
        b.mod4_lower = static_cast<std::uint64_t>(n) * (n + 2) / 4;
    }
    if (k == 1) {
        b.ghosh_exact = twice_pairs / 2 + (n % 2 == 1 ? 1 : n / 2);
    }
    if (k >= n - 1) {
        b.large_k_exact = n;
    } else if (k >= n / 2) {
        b.large_k_exact = 2 * static_cast<std::uint64_t>(n) - k - 1;
    }
    if (n >= k) {
        b.quadratic_upper = 3 * static_cast<std::uint64_t>(n) * n / k;
    }
    return b;
}

std::uint64_t gcd_sum(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("gcd_sum: m must be positive");
    std::uint64_t sum = 0;
    for (std::uint64_t d = 0; d < m; ++d) {
        sum += std::gcd(d, m);  // gcd(0, m) == m
    }
    return sum;
}

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Optimal: return "optimal";
        case SearchStatus::LowerBoundOnly: return "lower_bound_only";
        case SearchStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "unknown";
}

}  // namespace kradius
