#pragma once

#include <cstdint>
#include <vector>

#include "design.hpp"
#include "graph.hpp"

namespace pbdtk::solver {

struct SolverOptions {
    // 0 means unlimited.  When the graph exceeds vertex_cap and no budget
    // was given, a defensive default budget of 10^6 nodes applies so the
    // call terminates with proved_optimal == false instead of running
    // without bound.
    std::uint64_t node_budget = 0;
    int vertex_cap = 10;
};

inline constexpr std::uint64_t default_capped_budget = 1000000;

struct SolverResult {
    std::int64_t optimum = 0;
    bool proved_optimal = false;
    std::uint64_t nodes = 0;
    CliquePartition witness;
};

struct DesignSearchResult {
    std::int64_t optimum = 0;
    bool proved_optimal = false;
    std::uint64_t nodes = 0;
    Design witness;
};

// Minimum sum of clique sizes over partitions of E(g) into cliques.
// Deterministic: branches on the lexicographically smallest uncovered edge
// and visits containing cliques largest-first in vertex-lexicographic
// order, so the reported witness is reproducible.
SolverResult exact_scp(const Graph& g, const SolverOptions& opt = {});

// Minimum number of cliques over partitions of E(g).
SolverResult exact_cp(const Graph& g, const SolverOptions& opt = {});

// Minimum sigma over pairwise balanced designs on n points whose largest
// block has size exactly m (or at most m when exactly == false).
// 2 <= m <= n; m < n keeps the design nontrivial.
DesignSearchResult min_sigma_largest_block(int n, int m, bool exactly,
                                           const SolverOptions& opt = {});

// Minimum sigma over pairwise balanced designs on n points having at least
// one block of size m: m + exact_scp(K_n minus K_m).
DesignSearchResult min_sigma_with_block(int n, int m, const SolverOptions& opt = {});

// Every optimal witness partition with the given sigma target, in canonical
// search order.  size_cap bounds clique sizes (0 = none); require_cap_block
// keeps only partitions containing a clique of size exactly size_cap.
// Throws Errc::budget if the enumeration cannot be completed within budget.
std::vector<CliquePartition> enumerate_optimal_scp(const Graph& g, std::int64_t target,
                                                   int size_cap, bool require_cap_block,
                                                   const SolverOptions& opt = {});

} // namespace pbdtk::solver
