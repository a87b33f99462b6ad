#pragma once

#include <cstdint>
#include <optional>

namespace pbdtk::alg {

// Largest integer r with r*r <= x.
std::uint64_t isqrt(std::uint64_t x);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Smallest prime >= x.  Throws Errc::overflow if the search would leave
// the 64-bit range (unreachable for the parameter sizes used here).
std::uint64_t next_prime_at_least(std::uint64_t x);

struct PrimePower {
    std::uint64_t q = 0; // q == p^e
    std::uint64_t p = 0;
    std::uint32_t e = 0;
};

// Decomposition q = p^e with p prime, or nullopt when q is not a prime power.
std::optional<PrimePower> try_prime_power(std::uint64_t q);

// As try_prime_power but throws Errc::not_prime_power on failure.
PrimePower prime_power_decompose(std::uint64_t q);

// Smallest prime power >= x.
PrimePower next_prime_power_at_least(std::uint64_t x);

} // namespace pbdtk::alg
