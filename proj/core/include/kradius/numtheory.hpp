#pragma once

#include <cstdint>
#include <optional>

namespace kradius {

/// Deterministic primality test, exact for every 64-bit input (Miller-Rabin
/// over a fixed base set with no 64-bit strong pseudoprime).
bool is_prime(std::uint64_t value) noexcept;

/// Largest prime p <= limit, or nullopt when limit < 2.
std::optional<std::uint64_t> largest_prime_at_most(std::uint64_t limit);

/// Exact p!; throws std::overflow_error when p > 20 (21! does not fit in
/// 64 bits).
std::uint64_t factorial(std::uint32_t p);

/// Multiplicative inverse of a modulo m via the extended Euclidean
/// algorithm. Throws std::invalid_argument when m == 0, m is too large for
/// signed intermediates, or gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace kradius
