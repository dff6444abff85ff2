#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace esg {

/// Deterministic trial division; intended for desk-scale magnitudes.
bool is_prime(std::uint64_t n) noexcept;

/// Least prime strictly greater than k.
std::uint64_t next_prime(std::uint64_t k) noexcept;

/// Smallest odd prime p with p >= k.
std::uint64_t smallest_odd_prime_at_least(std::uint64_t k) noexcept;

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace esg
