#include "graph.hpp"

#include <algorithm>

#include "error.hpp"

namespace pbdtk {

const char* family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::complete_minus_clique: return "knkm";
        case GraphFamily::complement_path: return "comp-path";
        case GraphFamily::complement_cycle: return "comp-cycle";
        case GraphFamily::cocktail_party: return "cocktail";
        case GraphFamily::explicit_edges: return "explicit";
    }
    return "unknown";
}

GraphFamily family_from_name(const std::string& name) {
    if (name == "knkm") return GraphFamily::complete_minus_clique;
    if (name == "comp-path") return GraphFamily::complement_path;
    if (name == "comp-cycle") return GraphFamily::complement_cycle;
    if (name == "cocktail") return GraphFamily::cocktail_party;
    if (name == "explicit") return GraphFamily::explicit_edges;
    fail(Errc::parse, "unknown graph family '" + name + "'");
}

Graph make_graph(int n, GraphFamily family, int m,
                 std::vector<std::pair<int, int>> edges) {
    if (n < 0) fail(Errc::domain, "negative vertex count");
    Graph g;
    g.n = n;
    g.family = family;
    g.m = m;
    for (auto& [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            fail(Errc::domain, "edge endpoints out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.words_ = static_cast<std::size_t>((n + 63) / 64);
    g.adj_.assign(g.words_ * static_cast<std::size_t>(std::max(n, 1)), 0);
    for (auto [a, b] : g.edges) {
        g.adj_[static_cast<std::size_t>(a) * g.words_ + (b >> 6)] |= 1ull << (b & 63);
        g.adj_[static_cast<std::size_t>(b) * g.words_ + (a >> 6)] |= 1ull << (a & 63);
    }
    return g;
}

Graph complete_minus_clique(int n, int m) {
    if (n < 1 || m < 0 || m > n) fail(Errc::domain, "complete_minus_clique needs 0 <= m <= n");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (a < n - m || b < n - m) edges.emplace_back(a, b);
    return make_graph(n, GraphFamily::complete_minus_clique, m, std::move(edges));
}

Graph complement_path(int n) {
    if (n < 1) fail(Errc::domain, "complement_path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 2; b < n; ++b) edges.emplace_back(a, b);
    return make_graph(n, GraphFamily::complement_path, 0, std::move(edges));
}

Graph complement_cycle(int n) {
    if (n < 3) fail(Errc::domain, "complement_cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 2; b < n; ++b)
            if (!(a == 0 && b == n - 1)) edges.emplace_back(a, b);
    return make_graph(n, GraphFamily::complement_cycle, 0, std::move(edges));
}

Graph cocktail_party(int n) {
    if (n < 1) fail(Errc::domain, "cocktail_party needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!(b == a + 1 && a % 2 == 0)) edges.emplace_back(a, b);
    return make_graph(n, GraphFamily::cocktail_party, 0, std::move(edges));
}

Graph explicit_graph(int n, std::vector<std::pair<int, int>> edges) {
    return make_graph(n, GraphFamily::explicit_edges, 0, std::move(edges));
}

int clique_number_closed_form(const Graph& g) {
    switch (g.family) {
        case GraphFamily::complete_minus_clique:
            // One removed-clique vertex extends the clique on the rest.
            return g.m >= 1 ? g.n - g.m + 1 : g.n;
        case GraphFamily::complement_path:
            return (g.n + 1) / 2; // alternate path vertices
        case GraphFamily::complement_cycle:
            return g.n / 2;
        case GraphFamily::cocktail_party:
            return (g.n + 1) / 2; // one endpoint per matching pair
        case GraphFamily::explicit_edges:
            break;
    }
    fail(Errc::domain, "no closed-form clique number for explicit graphs");
}

namespace {

// Classic max-clique branch and bound over 64-bit candidate masks.
void max_clique_rec(const std::vector<std::uint64_t>& adj, std::uint64_t cand,
                    int size, int& best) {
    if (size + __builtin_popcountll(cand) <= best) return;
    while (cand != 0) {
        if (size + __builtin_popcountll(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        max_clique_rec(adj, cand & adj[v], size + 1, best);
        if (size + 1 > best) best = size + 1;
    }
}

} // namespace

int max_clique(const Graph& g) {
    if (g.n > 64) fail(Errc::cap_exceeded, "max_clique supports at most 64 vertices");
    if (g.n == 0) return 0;
    std::vector<std::uint64_t> adj(g.n, 0);
    for (auto [a, b] : g.edges) {
        adj[a] |= 1ull << b;
        adj[b] |= 1ull << a;
    }
    int best = 1;
    std::uint64_t all = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
    max_clique_rec(adj, all, 0, best);
    return best;
}

void canonicalize(CliquePartition& p) {
    for (auto& c : p.cliques) std::sort(c.begin(), c.end());
    std::sort(p.cliques.begin(), p.cliques.end());
}

std::int64_t partition_sigma(const CliquePartition& p) {
    std::int64_t s = 0;
    for (const auto& c : p.cliques) s += static_cast<std::int64_t>(c.size());
    return s;
}

ValidationReport validate_partition(const Graph& g, const CliquePartition& p) {
    ValidationReport report;

    bool structurally_sound = true;
    for (std::size_t i = 0; i < p.cliques.size(); ++i) {
        const auto& c = p.cliques[i];
        if (c.empty()) {
            report.violations.push_back({ViolationKind::structural, -1, -1,
                                         static_cast<int>(i), "empty clique"});
            structurally_sound = false;
        }
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] < 0 || c[j] >= g.n) {
                report.violations.push_back({ViolationKind::structural, c[j], -1,
                                             static_cast<int>(i), "vertex out of range"});
                structurally_sound = false;
            }
            for (std::size_t k = j + 1; k < c.size(); ++k) {
                if (c[j] == c[k]) {
                    report.violations.push_back({ViolationKind::structural, c[j], -1,
                                                 static_cast<int>(i), "duplicate vertex in clique"});
                    structurally_sound = false;
                }
            }
        }
    }
    if (!structurally_sound) return report;

    std::vector<std::uint16_t> cover(static_cast<std::size_t>(g.n) * g.n, 0);
    for (std::size_t i = 0; i < p.cliques.size(); ++i) {
        const auto& c = p.cliques[i];
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t k = j + 1; k < c.size(); ++k) {
                int a = std::min(c[j], c[k]), b = std::max(c[j], c[k]);
                if (!g.has_edge(a, b)) {
                    report.violations.push_back({ViolationKind::non_clique_block, a, b,
                                                 static_cast<int>(i), ""});
                } else {
                    auto& cnt = cover[static_cast<std::size_t>(a) * g.n + b];
                    if (cnt < UINT16_MAX) ++cnt;
                }
            }
    }
    for (auto [a, b] : g.edges) {
        std::uint16_t c = cover[static_cast<std::size_t>(a) * g.n + b];
        if (c == 0)
            report.violations.push_back({ViolationKind::edge_uncovered, a, b, -1, ""});
        else if (c > 1)
            report.violations.push_back({ViolationKind::edge_duplicated, a, b, -1,
                                         "covered " + std::to_string(c) + " times"});
    }

    report.ok = report.violations.empty();
    return report;
}

} // namespace pbdtk
