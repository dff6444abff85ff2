#include "esg/primes.hpp"

namespace esg {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t i = 5; i <= n / i; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t k) noexcept {
    std::uint64_t p = k + 1;
    while (!is_prime(p)) ++p;
    return p;
}

std::uint64_t smallest_odd_prime_at_least(std::uint64_t k) noexcept {
    std::uint64_t p = k < 3 ? 3 : k;
    while (!is_prime(p)) ++p;
    return p;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace esg
