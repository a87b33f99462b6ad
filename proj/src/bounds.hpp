#pragma once

#include <cstdint>
#include <string>

#include "rational.hpp"

namespace pbdtk::bounds {

// A lower or upper bound carried as an exact rational together with the
// integer it rounds to (ceiling for lower bounds) and a tag naming the
// inequality that produced it.  No floating point participates in any
// comparison.
struct BoundValue {
    Rational exact;
    std::int64_t rounded = 0;
    std::string source;
};

// Minimum sigma over nontrivial pairwise balanced designs: 3n - 3,
// with equality exactly at near-pencils.  n >= 3.
BoundValue sigma_lower_basic(std::int64_t n);

// Smallest integer r with r(r-1) >= n - 1: a lower bound on the maximum
// point valency of a nontrivial design.  Returned in integer form; the
// exact field carries the same integer.  n >= 3.
BoundValue max_valency_lower(std::int64_t n);

// Lower bounds on sigma for a design on n points, parameterized by block
// size information.  A: largest block has size tau (2 <= tau <= n).
// B: some block has size k (2 <= k <= n).  C: some block has size k,
// sharpest for k >= n/2.
BoundValue bound_a(std::int64_t n, std::int64_t tau);
BoundValue bound_b(std::int64_t n, std::int64_t k);
BoundValue bound_c(std::int64_t n, std::int64_t k);

// Max of A, B, C at the given largest-block size; ties prefer A, then B.
// Exact integer predicates: A >= B iff tau(tau-1) <= n-1, and C >= B iff
// 2*tau >= n-1 (B - C factors as -(2tau-n+1)(tau-n+1)(tau-n)/(2(n-1)), so
// the two meet at 2*tau = n-1 and again at tau = n-1, where both equal 3n-3).
// The winning source is therefore "A" up to the first crossover, "B" while
// 2*tau <= n-1, "C" strictly between, and "B" again at tau = n-1.
BoundValue best_sigma_lower(std::int64_t n, std::int64_t tau);

// Lower bound n(floor(sqrt(n))+1) - 1 for designs on n >= 10 points whose
// blocks all satisfy 2(n - |B|) - 1 >= sqrt(n).
BoundValue sigma_lower_no_large_block(std::int64_t n);
// The block-size hypothesis above, as an exact integer predicate.
bool no_large_block_applies(std::int64_t n, std::int64_t max_block);

struct ScpBounds {
    BoundValue lower;
    BoundValue upper;
};

// Bounds on the minimum sigma of a clique partition of K_n minus K_m:
// lower mn - m^2(m-1)/(n-1), upper (2m-1)(n-m) + 1.  1 <= m <= n, n >= 2.
ScpBounds scp_complete_minus_clique(std::int64_t n, std::int64_t m);

// Exact value for the half range 2m >= n: bound_c(n, m) - m.
BoundValue scp_complete_minus_clique_exact_half(std::int64_t n, std::int64_t m);

// Lower bound for the sparse range 4m^2 <= n, from the three-case valency
// argument: (2m-1)n - (5m^2 - 7m + 4)/2 (the weakest case, attained as the
// largest block approaches n - m + 1).
BoundValue scp_complete_minus_clique_sparse_lower(std::int64_t n, std::int64_t m);

// Leading coefficients for scp(K_n - K_m) when m = c*n with 0 < c < 1/2:
// sigma / n^2 lies between c(1 - c^2) and (1-c)(k-c)/(k(k-1)) with
// k = floor(1/c), asymptotically.  Returned as exact rationals in n, m.
struct DensityCoefficients {
    Rational lower;
    Rational upper;
};
DensityCoefficients scp_density_coefficients(std::int64_t n, std::int64_t m);

// For a graph H on m vertices with both clique-number hypotheses
// 2(n - omega(H)) - 1 >= sqrt(n) and 2(m - omega(complement of H)) - 1 >=
// sqrt(n): scp(K_n - H) >= n(floor(sqrt(n))+1) - 1 - scp(H).
// Throws Errc::hypothesis naming the failed inequality.
BoundValue scp_complement_pair_lower(std::int64_t n, std::int64_t scp_h,
                                     std::int64_t omega_h, std::int64_t omega_hbar,
                                     std::int64_t m);

// CSV table of A/B/C/best over tau = 2..n-1; columns documented in
// docs/formats.md.
std::string bounds_csv(std::int64_t n);

} // namespace pbdtk::bounds
