#include "bounds.hpp"

#include "error.hpp"
#include "primes.hpp"

namespace pbdtk::bounds {

namespace {

BoundValue make_lower(Rational exact, std::string source) {
    BoundValue b;
    b.rounded = exact.ceil();
    b.exact = std::move(exact);
    b.source = std::move(source);
    return b;
}

void require(bool cond, const std::string& message) {
    if (!cond) fail(Errc::domain, message);
}

} // namespace

BoundValue sigma_lower_basic(std::int64_t n) {
    require(n >= 3, "sigma_lower_basic needs n >= 3");
    return make_lower(Rational(3 * n - 3), "dbe");
}

BoundValue max_valency_lower(std::int64_t n) {
    require(n >= 3, "max_valency_lower needs n >= 3");
    std::int64_t r = 1;
    while (r * (r - 1) < n - 1) ++r;
    return make_lower(Rational(r), "valency");
}

BoundValue bound_a(std::int64_t n, std::int64_t tau) {
    require(n >= 3 && tau >= 2 && tau <= n, "bound_a needs 2 <= tau <= n");
    return make_lower(Rational(n) * Rational(n - 1) / Rational(tau - 1), "A");
}

BoundValue bound_b(std::int64_t n, std::int64_t k) {
    require(n >= 2 && k >= 2 && k <= n, "bound_b needs 2 <= k <= n");
    Rational v = Rational(n + 1) * Rational(k) -
                 Rational(k) * Rational(k) * Rational(k - 1) / Rational(n - 1);
    return make_lower(v, "B");
}

BoundValue bound_c(std::int64_t n, std::int64_t k) {
    require(n >= 2 && k >= 2 && k <= n, "bound_c needs 2 <= k <= n");
    Rational v = Rational(k) - Rational(n - k) * Rational(n - 5 * k - 1) / Rational(2);
    return make_lower(v, "C");
}

BoundValue best_sigma_lower(std::int64_t n, std::int64_t tau) {
    require(n >= 3 && tau >= 2 && tau <= n - 1, "best_sigma_lower needs 2 <= tau <= n-1");
    BoundValue a = bound_a(n, tau);
    BoundValue b = bound_b(n, tau);
    BoundValue c = bound_c(n, tau);
    BoundValue best = a;
    if (b.exact > best.exact) best = b;
    if (c.exact > best.exact) best = c;
    return best;
}

bool no_large_block_applies(std::int64_t n, std::int64_t max_block) {
    // |B| <= n - (sqrt(n)+1)/2  <=>  2(n - |B|) - 1 >= sqrt(n)
    std::int64_t t = 2 * (n - max_block) - 1;
    return t >= 0 && t * t >= n;
}

BoundValue sigma_lower_no_large_block(std::int64_t n) {
    require(n >= 10, "sigma_lower_no_large_block needs n >= 10");
    std::int64_t root = static_cast<std::int64_t>(alg::isqrt(static_cast<std::uint64_t>(n)));
    return make_lower(Rational(n * (root + 1) - 1), "no-large-block");
}

ScpBounds scp_complete_minus_clique(std::int64_t n, std::int64_t m) {
    require(n >= 2 && m >= 1 && m <= n, "scp_complete_minus_clique needs 1 <= m <= n, n >= 2");
    ScpBounds out;
    out.lower = make_lower(Rational(m) * Rational(n) -
                               Rational(m) * Rational(m) * Rational(m - 1) / Rational(n - 1),
                           "knkm-lower");
    Rational up = Rational((2 * m - 1) * (n - m) + 1);
    out.upper = BoundValue{up, up.floor(), "knkm-upper"};
    return out;
}

BoundValue scp_complete_minus_clique_exact_half(std::int64_t n, std::int64_t m) {
    require(n >= 2 && m >= 1 && m <= n, "exact_half needs 1 <= m <= n");
    require(2 * m >= n, "exact_half needs 2m >= n");
    Rational v = bound_c(n, m).exact - Rational(m);
    return make_lower(v, "knkm-half-exact");
}

BoundValue scp_complete_minus_clique_sparse_lower(std::int64_t n, std::int64_t m) {
    require(n >= 2 && m >= 1, "sparse_lower needs n >= 2, m >= 1");
    require(4 * m * m <= n, "sparse_lower needs 4m^2 <= n");
    Rational v = Rational((2 * m - 1) * n) -
                 Rational(5 * m * m - 7 * m + 4) / Rational(2);
    return make_lower(v, "knkm-sparse-lower");
}

DensityCoefficients scp_density_coefficients(std::int64_t n, std::int64_t m) {
    require(n >= 3 && m >= 1 && 2 * m < n, "density coefficients need 0 < m < n/2");
    Rational c = Rational(m, n);
    DensityCoefficients out;
    out.lower = c * (Rational(1) - c * c);
    std::int64_t k = n / m; // floor(1/c)
    out.upper = (Rational(1) - c) * (Rational(k) - c) / Rational(k * (k - 1));
    return out;
}

BoundValue scp_complement_pair_lower(std::int64_t n, std::int64_t scp_h,
                                     std::int64_t omega_h, std::int64_t omega_hbar,
                                     std::int64_t m) {
    require(n >= 10 && m >= 1 && m <= n && scp_h >= 0, "scp_complement_pair_lower domain");
    std::int64_t t1 = 2 * (n - omega_h) - 1;
    if (t1 < 0 || t1 * t1 < n)
        fail(Errc::hypothesis, "omega(H) > n - (sqrt(n)+1)/2");
    std::int64_t t2 = 2 * (m - omega_hbar) - 1;
    if (t2 < 0 || t2 * t2 < n)
        fail(Errc::hypothesis, "omega(complement of H) > m - (sqrt(n)+1)/2");
    std::int64_t root = static_cast<std::int64_t>(alg::isqrt(static_cast<std::uint64_t>(n)));
    return make_lower(Rational(n * (root + 1) - 1 - scp_h), "complement-pair");
}

std::string bounds_csv(std::int64_t n) {
    require(n >= 3, "bounds_csv needs n >= 3");
    std::string out = "tau,A,B,C,best,source\n";
    for (std::int64_t tau = 2; tau <= n - 1; ++tau) {
        BoundValue a = bound_a(n, tau);
        BoundValue b = bound_b(n, tau);
        BoundValue c = bound_c(n, tau);
        BoundValue best = best_sigma_lower(n, tau);
        out += std::to_string(tau) + "," + a.exact.str() + "," + b.exact.str() + "," +
               c.exact.str() + "," + best.exact.str() + "," + best.source + "\n";
    }
    return out;
}

} // namespace pbdtk::bounds
