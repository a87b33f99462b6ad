#include "primes.hpp"

#include <cmath>
#include <limits>

#include "error.hpp"

namespace pbdtk::alg {

std::uint64_t isqrt(std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One strong-pseudoprime round; n odd, n - 1 == d * 2^s.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a,
                           std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

std::uint64_t next_prime_at_least(std::uint64_t x) {
    if (x <= 2) return 2;
    if ((x & 1) == 0) ++x;
    while (true) {
        if (is_prime(x)) return x;
        if (x > std::numeric_limits<std::uint64_t>::max() - 2)
            fail(Errc::overflow, "next_prime_at_least: search left the 64-bit range");
        x += 2;
    }
}

std::optional<PrimePower> try_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    if (is_prime(q)) return PrimePower{q, q, 1};
    // q == p^e with e >= 2 forces p <= q^(1/2) <= 2^32.
    for (std::uint64_t p = 2; p * p <= q; p = next_prime_at_least(p + 1)) {
        if (q % p != 0) continue;
        std::uint64_t rest = q;
        std::uint32_t e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (rest == 1) return PrimePower{q, p, e};
        return std::nullopt; // two distinct prime factors
    }
    return std::nullopt;
}

PrimePower prime_power_decompose(std::uint64_t q) {
    auto pp = try_prime_power(q);
    if (!pp) fail(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
    return *pp;
}

PrimePower next_prime_power_at_least(std::uint64_t x) {
    if (x <= 2) return PrimePower{2, 2, 1};
    for (std::uint64_t q = x;; ++q) {
        auto pp = try_prime_power(q);
        if (pp) return *pp;
        if (q == std::numeric_limits<std::uint64_t>::max())
            fail(Errc::overflow, "next_prime_power_at_least: search left the 64-bit range");
    }
}

} // namespace pbdtk::alg
