#include "constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "classical.hpp"
#include "error.hpp"
#include "primes.hpp"

namespace pbdtk::constructions {

namespace {

using bounds::BoundValue;

BoundValue integral_bound(std::int64_t value, const std::string& source) {
    return BoundValue{Rational(value), value, source};
}

BoundValue rational_bound(const Rational& value, const std::string& source) {
    return BoundValue{value, value.ceil(), source};
}

std::vector<int> range_block(int count) {
    std::vector<int> b(count);
    std::iota(b.begin(), b.end(), 0);
    return b;
}

// Smallest integer s with s*s >= n.
std::int64_t ceil_sqrt(std::int64_t n) {
    auto s = static_cast<std::int64_t>(alg::isqrt(static_cast<std::uint64_t>(n)));
    return s * s >= n ? s : s + 1;
}

// Exact minimum-sigma partitions of small path complements, computed by the
// exact solver and frozen here as the recursion's base cases.
std::vector<std::vector<int>> comp_path_fixture(int n) {
    switch (n) {
        case 2: return {};
        case 3: return {{0, 2}};
        case 4: return {{0, 2}, {0, 3}, {1, 3}};
        case 5: return {{0, 2, 4}, {0, 3}, {1, 3}, {1, 4}};
        case 6: return {{0, 2, 4}, {0, 3, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 5}};
        case 7: return {{0, 2, 4, 6}, {0, 3, 5}, {1, 3, 6}, {1, 4}, {1, 5}, {2, 5}};
        case 8:
            return {{0, 2, 4, 6}, {0, 3, 5, 7}, {1, 3, 6}, {1, 4, 7}, {1, 5}, {2, 5}, {2, 7}};
        case 9:
            return {{0, 2, 4, 6, 8}, {0, 3, 5, 7}, {1, 3, 6}, {1, 4, 7},
                    {1, 5, 8},       {2, 5},      {2, 7},    {3, 8}};
        case 10:
            return {{0, 2, 4, 6, 8}, {0, 3, 7}, {0, 5, 9}, {1, 3, 5, 8}, {1, 4, 7, 9},
                    {1, 6},          {2, 5, 7}, {2, 9},    {3, 6, 9}};
        default: fail(Errc::domain, "no cached partition for n=" + std::to_string(n));
    }
}

CliquePartition comp_path_cliques(int n) {
    if (n <= 10) {
        CliquePartition p{comp_path_fixture(n)};
        canonicalize(p);
        return p;
    }
    const int d = static_cast<int>(alg::isqrt(static_cast<std::uint64_t>(n)));
    const int e = (n + d - 1) / d;
    const auto q = static_cast<std::int64_t>(
        alg::next_prime_at_least(static_cast<std::uint64_t>(std::max<std::int64_t>(ceil_sqrt(n), e))));

    // Path positions snake through the d-by-e grid column by column: odd
    // columns run top to bottom, even columns bottom to top, so consecutive
    // positions are either vertical neighbors or the turn pairs sitting in
    // rows 1 and d.  Rows and columns are 1-based here.
    auto pos = [&](int i, int j) { return (j - 1) * d + (j % 2 == 1 ? i : d + 1 - i) - 1; };

    std::vector<std::vector<int>> cliques;

    // Each column is a run of d consecutive path positions; give it the
    // recursive partition of a path complement of size d.
    const CliquePartition pd = comp_path_cliques(d);
    for (int j = 1; j <= e; ++j)
        for (const auto& c : pd.cliques) {
            std::vector<int> mc;
            mc.reserve(c.size());
            for (int t : c) mc.push_back((j - 1) * d + t);
            cliques.push_back(std::move(mc));
        }

    // The two turn rows contain path edges, so they carry recursive
    // partitions along their column order instead of staying cliques.
    const CliquePartition pe = comp_path_cliques(e);
    for (int i : {1, d})
        for (const auto& c : pe.cliques) {
            std::vector<int> mc;
            mc.reserve(c.size());
            for (int t : c) mc.push_back(pos(i, t + 1));
            cliques.push_back(std::move(mc));
        }

    // Middle rows meet no path edge and stay whole.
    for (int i = 2; i <= d - 1; ++i) {
        std::vector<int> mc;
        mc.reserve(e);
        for (int j = 1; j <= e; ++j) mc.push_back(pos(i, j));
        cliques.push_back(std::move(mc));
    }

    // Consecutive same-row pairs that are not turns are real edges of the
    // path complement, excluded by the row partitions above; add them back.
    for (int j = 1; j <= e - 1; ++j) {
        const int i = j % 2 == 1 ? 1 : d;
        cliques.push_back({pos(i, j), pos(i, j + 1)});
    }

    // Every remaining line of the affine plane of order q meets each row and
    // each column at most once, so its grid restriction is a clique; these
    // lines cover each cross pair (different row, different column) exactly
    // once.
    for (std::int64_t a = 1; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b) {
            std::vector<int> mc;
            for (int x = 0; x < e; ++x) {
                const int y = static_cast<int>((a * x + b) % q);
                if (y < d) mc.push_back(pos(y + 1, x + 1));
            }
            if (mc.size() >= 2) cliques.push_back(std::move(mc));
        }

    // Shrink the d*e grid back to n path vertices.
    std::vector<std::vector<int>> kept;
    kept.reserve(cliques.size());
    for (auto& c : cliques) {
        std::vector<int> t;
        t.reserve(c.size());
        for (int x : c)
            if (x < n) t.push_back(x);
        if (t.size() >= 2) kept.push_back(std::move(t));
    }
    CliquePartition p{std::move(kept)};
    canonicalize(p);
    return p;
}

} // namespace

DesignCertificate near_pencil(int n) {
    if (n < 3) fail(Errc::domain, "near-pencil needs n >= 3");
    std::vector<std::vector<int>> blocks;
    blocks.push_back(range_block(n - 1));
    for (int i = 0; i + 1 < n; ++i) blocks.push_back({i, n - 1});
    DesignCertificate cert;
    cert.design = make_design(n, std::move(blocks));
    cert.claimed = bounds::sigma_lower_basic(n);
    cert.achieved = sigma(cert.design);
    cert.construction = "near-pencil";
    cert.parameters = {{"n", n}};
    return cert;
}

DesignCertificate pbdc_equality(int n, int k) {
    if (k < 2 || k > n - 1 || 2 * k < n)
        fail(Errc::domain, "the equality construction needs n/2 <= k <= n-1");
    const int v = n - k;
    const auto coloring = classical::proper_edge_coloring_complete(v, v);
    std::vector<std::vector<int>> blocks;
    blocks.push_back(range_block(k));
    std::vector<std::vector<std::uint8_t>> covered(k, std::vector<std::uint8_t>(v, 0));
    for (int i = 0; i < v; ++i)
        for (auto [a, b] : coloring.classes[i]) {
            blocks.push_back({i, k + a, k + b});
            covered[i][a] = covered[i][b] = 1;
        }
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < v; ++y)
            if (!covered[x][y]) blocks.push_back({x, k + y});
    DesignCertificate cert;
    cert.design = make_design(n, std::move(blocks));
    cert.claimed = bounds::bound_c(n, k);
    cert.achieved = sigma(cert.design);
    cert.construction = "pbdc";
    cert.parameters = {{"n", n}, {"k", k}};
    return cert;
}

DesignCertificate augmented_plane_tight(std::uint32_t q) {
    DesignCertificate cert;
    cert.design = classical::augmented_affine_plane(q);
    const auto n = static_cast<std::int64_t>(cert.design.n);
    cert.claimed =
        integral_bound(n * (static_cast<std::int64_t>(alg::isqrt(n)) + 1) - 1, "no-large-block");
    cert.achieved = sigma(cert.design);
    cert.construction = "thm24";
    cert.parameters = {{"q", q}};
    return cert;
}

PartitionCertificate knkm_trivial(int n, int m) {
    if (m < 2 || m > n - 1) fail(Errc::domain, "the one-clique partition needs 2 <= m <= n-1");
    PartitionCertificate cert;
    cert.graph = complete_minus_clique(n, m);
    std::vector<std::vector<int>> cliques;
    cliques.push_back(range_block(n - m + 1));
    for (int x = 0; x < n - m; ++x)
        for (int y = n - m + 1; y < n; ++y) cliques.push_back({x, y});
    cert.partition = CliquePartition{std::move(cliques)};
    canonicalize(cert.partition);
    cert.claimed = bounds::scp_complete_minus_clique(n, m).upper;
    cert.achieved = partition_sigma(cert.partition);
    cert.construction = "knkm-trivial";
    cert.parameters = {{"n", n}, {"m", m}};
    return cert;
}

PartitionCertificate truncated_design_partition(int n, int m, const Design& base,
                                                const CliquePartition& hbar) {
    if (n < 2 || m < 1 || m >= n) fail(Errc::domain, "needs 1 <= m < n");
    if (base.blocks.empty()) fail(Errc::hypothesis, "base design has no blocks");
    Design b = base;
    canonicalize(b);
    const auto k = static_cast<int>(b.blocks.front().size());
    for (const auto& blk : b.blocks)
        if (static_cast<int>(blk.size()) != k)
            fail(Errc::hypothesis, "base design blocks are not of uniform size");
    if (!validate_pbd(b).ok) fail(Errc::hypothesis, "base design fails pairwise balance");
    const int v = b.n;
    if (k < m) fail(Errc::hypothesis, "base block size " + std::to_string(k) +
                                          " cannot host a removed set of size " + std::to_string(m));
    if (v - k < n - m)
        fail(Errc::hypothesis, "base design has too few points outside its first block");

    const auto& b1 = b.blocks.front();
    std::vector<int> vertex_of(v, -1);
    std::vector<std::uint8_t> in_b1(v, 0);
    for (int x : b1) in_b1[x] = 1;
    for (int j = 0; j < m; ++j) vertex_of[b1[j]] = n - m + j;
    int next = 0;
    for (int x = 0; x < v && next < n - m; ++x)
        if (!in_b1[x]) vertex_of[x] = next++;

    std::vector<std::vector<int>> cliques;
    for (std::size_t bi = 1; bi < b.blocks.size(); ++bi) {
        std::vector<int> c;
        for (int x : b.blocks[bi])
            if (vertex_of[x] >= 0) c.push_back(vertex_of[x]);
        if (c.size() >= 2) cliques.push_back(std::move(c));
    }

    std::vector<std::vector<std::uint8_t>> hbar_pair(m, std::vector<std::uint8_t>(m, 0));
    for (const auto& c : hbar.cliques) {
        if (c.size() < 2) fail(Errc::hypothesis, "hbar cliques need at least two vertices");
        for (int x : c)
            if (x < 0 || x >= m) fail(Errc::hypothesis, "hbar vertex out of range");
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (c[i] == c[j] || hbar_pair[c[i]][c[j]])
                    fail(Errc::hypothesis, "hbar covers a vertex pair twice");
                hbar_pair[c[i]][c[j]] = hbar_pair[c[j]][c[i]] = 1;
            }
        std::vector<int> mc;
        mc.reserve(c.size());
        for (int x : c) mc.push_back(n - m + x);
        cliques.push_back(std::move(mc));
    }

    PartitionCertificate cert;
    if (hbar.cliques.empty()) {
        cert.graph = complete_minus_clique(n, m);
    } else {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c) {
                if (a >= n - m && !hbar_pair[a - (n - m)][c - (n - m)]) continue;
                edges.push_back({a, c});
            }
        cert.graph = explicit_graph(n, std::move(edges));
    }
    cert.partition = CliquePartition{std::move(cliques)};
    canonicalize(cert.partition);
    const Rational r = Rational(v - 1) / Rational(k - 1);
    cert.claimed = rational_bound(Rational(n) * r - Rational(m) + Rational(partition_sigma(hbar)),
                                  "truncated-design");
    cert.achieved = partition_sigma(cert.partition);
    cert.construction = "truncated-design";
    cert.parameters = {{"n", n}, {"m", m}, {"v", v}, {"k", k}};
    return cert;
}

PartitionCertificate knkm_prime(int n, int m) {
    if (m < static_cast<int>(alg::isqrt(static_cast<std::uint64_t>(n))) || m >= n || m < 1)
        fail(Errc::domain, "needs floor(sqrt n) <= m < n");
    std::uint64_t q = alg::next_prime_power_at_least(static_cast<std::uint64_t>(m)).q;
    while (q * q < static_cast<std::uint64_t>(n - m)) q = alg::next_prime_power_at_least(q + 1).q;
    auto cert = truncated_design_partition(n, m, classical::projective_plane(
                                                     static_cast<std::uint32_t>(q)),
                                           CliquePartition{});
    cert.claimed = integral_bound(static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(q) + 1) - m,
                                  "knkm-prime");
    cert.construction = "knkm-prime";
    cert.parameters = {{"n", n}, {"m", m}, {"q", static_cast<std::int64_t>(q)}};
    return cert;
}

PartitionCertificate knkm_sqrt(int n, int m, const CliquePartition& hbar) {
    const auto n64 = static_cast<std::int64_t>(n);
    const auto m64 = static_cast<std::int64_t>(m);
    if (m < 1 || m64 * m64 > n64 || 4 * m64 * m64 < n64)
        fail(Errc::domain, "needs sqrt(n)/2 <= m <= sqrt(n)");
    std::uint64_t q =
        alg::next_prime_power_at_least(static_cast<std::uint64_t>(ceil_sqrt(n64))).q;
    while (q + 1 < static_cast<std::uint64_t>(m) || q * q < static_cast<std::uint64_t>(n - m))
        q = alg::next_prime_power_at_least(q + 1).q;
    auto cert = truncated_design_partition(n, m, classical::projective_plane(
                                                     static_cast<std::uint32_t>(q)),
                                           hbar);
    cert.claimed = rational_bound(Rational(n64 * (static_cast<std::int64_t>(q) + 1) - m64) +
                                      Rational(partition_sigma(hbar)),
                                  "knkm-sqrt");
    cert.construction = "knkm-sqrt";
    cert.parameters = {{"n", n}, {"m", m}, {"q", static_cast<std::int64_t>(q)}};
    return cert;
}

PartitionCertificate knkm_resolvable(int n, int m) {
    if (m < 1 || m >= n) fail(Errc::domain, "needs 1 <= m < n");
    const int k = n / m;
    if (k < 2 || k > 3)
        fail(Errc::unsupported_k, "k = floor(n/m) = " + std::to_string(k) +
                                      " unsupported: choose m with floor(n/m) equal to 2 or 3");
    int v = n - m;
    while (v % k != 0 || (v - 1) % (k - 1) != 0) ++v;
    const auto rd = classical::resolvable_design(v, k);
    const int t = (v - 1) / (k - 1);
    if (m > t)
        fail(Errc::hypothesis, "needs m <= (v-1)/(k-1) = " + std::to_string(t) +
                                   " parallel classes, got m = " + std::to_string(m));
    std::vector<std::vector<int>> cliques;
    for (std::size_t ci = 0; ci < rd.resolution.classes.size(); ++ci)
        for (int bi : rd.resolution.classes[ci]) {
            std::vector<int> c;
            for (int x : rd.design.blocks[bi])
                if (x < n - m) c.push_back(x);
            if (static_cast<int>(ci) < m && !c.empty()) c.push_back(n - m + static_cast<int>(ci));
            if (c.size() >= 2) cliques.push_back(std::move(c));
        }
    PartitionCertificate cert;
    cert.graph = complete_minus_clique(n, m);
    cert.partition = CliquePartition{std::move(cliques)};
    canonicalize(cert.partition);
    cert.claimed = integral_bound(static_cast<std::int64_t>(n - m) * t +
                                      static_cast<std::int64_t>(m) * (v / k),
                                  "knkm-resolvable");
    cert.achieved = partition_sigma(cert.partition);
    cert.construction = "knkm-resolvable";
    cert.parameters = {{"n", n}, {"m", m}, {"k", k}, {"v", v}};
    return cert;
}

PartitionCertificate complement_path_partition(int n) {
    if (n < 2) fail(Errc::domain, "path complement needs n >= 2");
    PartitionCertificate cert;
    cert.graph = complement_path(n);
    cert.partition = comp_path_cliques(n);
    cert.achieved = partition_sigma(cert.partition);
    cert.claimed = integral_bound(cert.achieved, "comp-path");
    cert.construction = "comp-path";
    cert.parameters = {{"n", n}};
    return cert;
}

PartitionCertificate complement_cycle_partition(int n) {
    if (n < 4) fail(Errc::domain, "cycle complement needs n >= 4");
    const CliquePartition sub = comp_path_cliques(n - 1);
    const std::int64_t sub_sigma = partition_sigma(sub);
    std::vector<std::vector<int>> cliques = sub.cliques;
    for (int u = 1; u <= n - 3; ++u) cliques.push_back({u, n - 1});
    PartitionCertificate cert;
    cert.graph = complement_cycle(n);
    cert.partition = CliquePartition{std::move(cliques)};
    canonicalize(cert.partition);
    cert.claimed = integral_bound(sub_sigma + 2 * (n - 3), "comp-cycle");
    cert.achieved = partition_sigma(cert.partition);
    cert.construction = "comp-cycle";
    cert.parameters = {{"n", n}};
    return cert;
}

PartitionCertificate cocktail_party_partition(int n) {
    if (n < 2) fail(Errc::domain, "cocktail-party partition needs n >= 2");
    const CliquePartition sub = comp_path_cliques(n);
    const std::int64_t sub_sigma = partition_sigma(sub);
    std::vector<std::vector<int>> cliques = sub.cliques;
    for (int j = 1; j + 1 <= n - 1; j += 2) cliques.push_back({j, j + 1});
    PartitionCertificate cert;
    cert.graph = cocktail_party(n);
    cert.partition = CliquePartition{std::move(cliques)};
    canonicalize(cert.partition);
    cert.claimed = integral_bound(sub_sigma + 2 * ((n - 1) / 2), "cocktail");
    cert.achieved = partition_sigma(cert.partition);
    cert.construction = "cocktail";
    cert.parameters = {{"n", n}};
    return cert;
}

} // namespace pbdtk::constructions
