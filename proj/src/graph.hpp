#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "design.hpp"

namespace pbdtk {

enum class GraphFamily {
    complete_minus_clique, // K_n minus the clique on the last m vertices
    complement_path,       // K_n minus the path 0-1-...-(n-1)
    complement_cycle,      // K_n minus the cycle 0-1-...-(n-1)-0
    cocktail_party,        // K_n minus the matching {0,1},{2,3},...
    explicit_edges,
};

// Simple undirected graph on {0,...,n-1} with a canonical sorted edge list
// and a bitset adjacency for O(1) membership tests.
struct Graph {
    int n = 0;
    GraphFamily family = GraphFamily::explicit_edges;
    int m = 0; // removed-clique size for complete_minus_clique
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int a, int b) const {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n) return false;
        return adj_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63) & 1;
    }

    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }

    // internal: rebuilt by the factory functions
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph make_graph(int n, GraphFamily family, int m,
                 std::vector<std::pair<int, int>> edges);

// K_n minus the clique on vertices {n-m, ..., n-1}; 0 <= m <= n.
Graph complete_minus_clique(int n, int m);
// K_n minus the edges of the path 0-1-...-(n-1); n >= 1.
Graph complement_path(int n);
// K_n minus the edges of the cycle through 0,...,n-1 in order; n >= 3.
Graph complement_cycle(int n);
// K_n minus the matching {0,1},{2,3},...; odd n leaves the last vertex
// unmatched (equals the even case on n+1 vertices with the last vertex
// deleted).  n >= 1.
Graph cocktail_party(int n);
Graph explicit_graph(int n, std::vector<std::pair<int, int>> edges);

// Clique number by closed form for the four named families; throws
// Errc::domain for explicit graphs.
int clique_number_closed_form(const Graph& g);

// Exact clique number by branch and bound; intended for small graphs
// (guarded by Errc::cap_exceeded above 64 vertices).
int max_clique(const Graph& g);

struct CliquePartition {
    std::vector<std::vector<int>> cliques;

    bool operator==(const CliquePartition&) const = default;
};

void canonicalize(CliquePartition& p);

// Sum of clique sizes.
std::int64_t partition_sigma(const CliquePartition& p);

// Checks that every member is a clique of g and every edge of g lies in
// exactly one member.  Isolated vertices need not appear; singleton members
// are permitted and contribute their size to sigma.
ValidationReport validate_partition(const Graph& g, const CliquePartition& p);

const char* family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

} // namespace pbdtk
