#include "solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "error.hpp"

namespace pbdtk::solver {

namespace {

// Fixed-width edge bitset; 512 bits covers all graphs up to 32 vertices,
// beyond the supported solver range.
struct EdgeSet {
    static constexpr int words = 8;
    std::array<std::uint64_t, words> w{};

    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }

    int count() const {
        int c = 0;
        for (int k = 0; k < words; ++k) c += __builtin_popcountll(w[k]);
        return c;
    }

    // Index of the lowest set bit, or -1.
    int first() const {
        for (int k = 0; k < words; ++k)
            if (w[k] != 0) return 64 * k + __builtin_ctzll(w[k]);
        return -1;
    }

    bool any() const {
        for (int k = 0; k < words; ++k)
            if (w[k] != 0) return true;
        return false;
    }

    void operator|=(const EdgeSet& o) {
        for (int k = 0; k < words; ++k) w[k] |= o.w[k];
    }
    void operator&=(const EdgeSet& o) {
        for (int k = 0; k < words; ++k) w[k] &= o.w[k];
    }
    EdgeSet operator~() const {
        EdgeSet r;
        for (int k = 0; k < words; ++k) r.w[k] = ~w[k];
        return r;
    }
};

struct Search {
    int n = 0;
    int cap = 0;              // maximum clique size allowed in the partition
    bool require_cap = false; // demand a clique of size exactly cap
    bool count_blocks = false; // objective: number of cliques instead of sigma
    int omega = 2;            // per-edge cost denominator: min(clique number, cap)
    std::uint64_t budget = 0; // 0 = unlimited
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::vector<std::uint32_t> adj; // adjacency masks, n <= 32
    std::vector<std::array<int, 32>> edge_id; // edge_id[a][b]

    std::int64_t best = INT64_MAX;
    std::vector<std::vector<int>> best_cliques;
    bool found = false;

    // enumeration mode: collect every complete partition with value == best
    bool enumerate = false;
    std::vector<CliquePartition>* sink = nullptr;

    std::vector<std::vector<int>> current;

    std::int64_t cost_of(const std::vector<int>& clique) const {
        return count_blocks ? 1 : static_cast<std::int64_t>(clique.size());
    }

    std::int64_t lower_bound(int remaining_edges) const {
        if (remaining_edges == 0) return 0;
        if (count_blocks) {
            int per = omega * (omega - 1) / 2;
            return (remaining_edges + per - 1) / per;
        }
        // Each clique of size s covers s(s-1)/2 edges at cost s, so the cost
        // per covered edge is at least 2/(omega - 1).
        return (2 * remaining_edges + omega - 2) / (omega - 1);
    }

    void dfs(EdgeSet uncovered, std::int64_t cost, bool have_cap_block) {
        if (exhausted) return;
        int e = uncovered.first();
        if (e < 0) {
            if (require_cap && !have_cap_block) return;
            if (enumerate) {
                if (cost == best) {
                    CliquePartition p;
                    p.cliques = current;
                    canonicalize(p);
                    sink->push_back(std::move(p));
                }
                return;
            }
            if (cost < best) {
                best = cost;
                best_cliques = current;
                found = true;
            }
            return;
        }

        // Decode the lexicographically smallest uncovered edge.
        int u = 0, v = 0;
        {
            int id = e;
            for (u = 0; u < n; ++u) {
                int row = n - 1 - u;
                if (id < row) { v = u + 1 + id; break; }
                id -= row;
            }
        }

        // Candidate extensions: common neighbours w with both joining edges
        // still uncovered.
        std::vector<int> cand;
        for (int w2 = 0; w2 < n; ++w2) {
            if (w2 == u || w2 == v) continue;
            if (!(adj[u] >> w2 & 1) || !(adj[v] >> w2 & 1)) continue;
            int a = std::min(u, w2), b = std::max(u, w2);
            if (!uncovered.test(edge_id[a][b])) continue;
            a = std::min(v, w2); b = std::max(v, w2);
            if (!uncovered.test(edge_id[a][b])) continue;
            cand.push_back(w2);
        }

        // All cliques through {u, v} inside the uncovered graph, then visit
        // largest-first (vertex-lexicographic within a size).
        std::vector<std::vector<int>> cliques;
        std::vector<int> base{u, v};
        extend_cliques(base, cand, uncovered, cliques);
        std::stable_sort(cliques.begin(), cliques.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             return a.size() > b.size();
                         });

        for (const auto& clique : cliques) {
            ++nodes;
            if (budget != 0 && nodes > budget) {
                exhausted = true;
                return;
            }
            std::int64_t c = cost + cost_of(clique);
            EdgeSet next = uncovered;
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j) {
                    int a = std::min(clique[i], clique[j]);
                    int b = std::max(clique[i], clique[j]);
                    next.reset(edge_id[a][b]);
                }
            std::int64_t lb = c + lower_bound(next.count());
            if (enumerate ? lb > best : lb >= best) continue;
            current.push_back(clique);
            dfs(next, c, have_cap_block || static_cast<int>(clique.size()) == cap);
            current.pop_back();
            if (exhausted) return;
        }
    }

    // Enumerates every clique that contains `base`, extending by candidates
    // in ascending order; all candidate-to-candidate edges are checked
    // against the uncovered set.
    void extend_cliques(std::vector<int>& base, const std::vector<int>& cand,
                        const EdgeSet& uncovered, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(base.size()) <= cap) out.push_back(base);
        if (static_cast<int>(base.size()) >= cap) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int w2 = cand[i];
            std::vector<int> next_cand;
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                int x = cand[j];
                if (!(adj[w2] >> x & 1)) continue;
                int a = std::min(w2, x), b = std::max(w2, x);
                if (!uncovered.test(edge_id[a][b])) continue;
                next_cand.push_back(x);
            }
            base.push_back(w2);
            extend_cliques(base, next_cand, uncovered, out);
            base.pop_back();
        }
    }
};

Search prepare(const Graph& g, const SolverOptions& opt, int size_cap, bool require_cap,
               bool count_blocks) {
    if (g.n > 32) fail(Errc::cap_exceeded, "solver supports at most 32 vertices");
    Search s;
    s.n = g.n;
    s.cap = size_cap > 0 ? std::min(size_cap, g.n) : g.n;
    s.require_cap = require_cap;
    s.count_blocks = count_blocks;
    s.budget = opt.node_budget;
    if (s.budget == 0 && g.n > opt.vertex_cap) s.budget = default_capped_budget;

    s.adj.assign(std::max(g.n, 1), 0);
    for (auto [a, b] : g.edges) {
        s.adj[a] |= 1u << b;
        s.adj[b] |= 1u << a;
    }
    s.edge_id.assign(std::max(g.n, 1), {});
    int id = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) s.edge_id[a][b] = id++;

    s.omega = std::min(max_clique(g), s.cap);
    if (s.omega < 2) s.omega = 2;
    return s;
}

EdgeSet initial_uncovered(const Graph& g, const Search& s) {
    EdgeSet e;
    for (auto [a, b] : g.edges) e.set(s.edge_id[a][b]);
    return e;
}

SolverResult run_partition_search(const Graph& g, const SolverOptions& opt, int size_cap,
                                  bool require_cap, bool count_blocks) {
    Search s = prepare(g, opt, size_cap, require_cap, count_blocks);
    s.dfs(initial_uncovered(g, s), 0, false);
    if (!s.found) {
        if (s.exhausted)
            fail(Errc::budget, "node budget exhausted before any feasible partition");
        fail(Errc::infeasible, "no clique partition satisfies the constraints");
    }
    SolverResult r;
    r.optimum = s.best;
    r.proved_optimal = !s.exhausted;
    r.nodes = s.nodes;
    r.witness.cliques = s.best_cliques;
    canonicalize(r.witness);
    return r;
}

} // namespace

SolverResult exact_scp(const Graph& g, const SolverOptions& opt) {
    return run_partition_search(g, opt, 0, false, false);
}

SolverResult exact_cp(const Graph& g, const SolverOptions& opt) {
    return run_partition_search(g, opt, 0, false, true);
}

DesignSearchResult min_sigma_largest_block(int n, int m, bool exactly,
                                           const SolverOptions& opt) {
    if (n < 2 || m < 2 || m > n)
        fail(Errc::domain, "min_sigma_largest_block needs 2 <= m <= n");
    Graph g = complete_minus_clique(n, 0);
    SolverResult r = run_partition_search(g, opt, m, exactly, false);
    DesignSearchResult out;
    out.optimum = r.optimum;
    out.proved_optimal = r.proved_optimal;
    out.nodes = r.nodes;
    out.witness = make_design(n, r.witness.cliques);
    return out;
}

DesignSearchResult min_sigma_with_block(int n, int m, const SolverOptions& opt) {
    if (n < 2 || m < 2 || m > n)
        fail(Errc::domain, "min_sigma_with_block needs 2 <= m <= n");
    Graph g = complete_minus_clique(n, m);
    DesignSearchResult out;
    std::vector<std::vector<int>> blocks;
    if (n - m == 0) {
        out.optimum = m;
        out.proved_optimal = true;
        out.nodes = 0;
    } else {
        SolverResult r = exact_scp(g, opt);
        out.optimum = r.optimum + m;
        out.proved_optimal = r.proved_optimal;
        out.nodes = r.nodes;
        blocks = r.witness.cliques;
    }
    std::vector<int> removed;
    for (int x = n - m; x < n; ++x) removed.push_back(x);
    blocks.push_back(std::move(removed));
    out.witness = make_design(n, std::move(blocks));
    return out;
}

std::vector<CliquePartition> enumerate_optimal_scp(const Graph& g, std::int64_t target,
                                                   int size_cap, bool require_cap_block,
                                                   const SolverOptions& opt) {
    Search s = prepare(g, opt, size_cap, require_cap_block, false);
    std::vector<CliquePartition> out;
    s.enumerate = true;
    s.sink = &out;
    s.best = target;
    s.dfs(initial_uncovered(g, s), 0, false);
    if (s.exhausted) fail(Errc::budget, "node budget exhausted during enumeration");
    return out;
}

} // namespace pbdtk::solver
