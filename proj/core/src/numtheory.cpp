#include "kradius/numtheory.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace kradius {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t value) noexcept {
    if (value < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (value % p == 0) return value == p;
    }
    // value is odd and > 37 from here on.
    std::uint64_t d = value - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set has no strong pseudoprime below 2^64.
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull,
                            9780504ull, 1795265022ull}) {
        const std::uint64_t base = a % value;
        if (base == 0) continue;
        std::uint64_t x = powmod(base, d, value);
        if (x == 1 || x == value - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, value);
            if (x == value - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::uint64_t> largest_prime_at_most(std::uint64_t limit) {
    if (limit < 2) return std::nullopt;
    if (limit == 2) return 2;
    std::uint64_t candidate = (limit % 2 == 0) ? limit - 1 : limit;
    for (; candidate >= 3; candidate -= 2) {
        if (is_prime(candidate)) return candidate;
    }
    return 2;
}

std::uint64_t factorial(std::uint32_t p) {
    if (p > 20) {
        throw std::overflow_error("factorial: " + std::to_string(p) +
                                  "! does not fit in 64 bits");
    }
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= p; ++i) f *= i;
    return f;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (m > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw std::invalid_argument("mod_inverse: modulus too large");
    }
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m);
    std::int64_t new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) {
        throw std::invalid_argument("mod_inverse: " + std::to_string(a) +
                                    " has no inverse modulo " + std::to_string(m));
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

}  // namespace kradius
