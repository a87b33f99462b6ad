#include "classical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

#include "error.hpp"
#include "gf.hpp"

namespace pbdtk::classical {

namespace {

using alg::FiniteField;
using Elem = FiniteField::Elem;

// Canonicalizes the design and re-expresses the parallel classes as indices
// into the sorted block list.
ResolvableDesign assemble(int n, const std::vector<std::vector<std::vector<int>>>& class_blocks) {
    std::vector<std::vector<int>> all;
    for (const auto& cls : class_blocks) all.insert(all.end(), cls.begin(), cls.end());
    ResolvableDesign out;
    out.design = make_design(n, std::move(all));
    for (const auto& cls : class_blocks) {
        std::vector<int> idx;
        idx.reserve(cls.size());
        for (auto block : cls) {
            std::sort(block.begin(), block.end());
            auto it = std::lower_bound(out.design.blocks.begin(), out.design.blocks.end(), block);
            idx.push_back(static_cast<int>(it - out.design.blocks.begin()));
        }
        std::sort(idx.begin(), idx.end());
        out.resolution.classes.push_back(std::move(idx));
    }
    return out;
}

// Lines of AG(2,q) grouped into parallel classes: slopes 0..q-1 (lines
// y = a*x + b ordered by intercept b), then the vertical class x = c.
// Point (x,y) has index x*q + y.
std::vector<std::vector<std::vector<int>>> affine_line_classes(const FiniteField& f) {
    const int q = static_cast<int>(f.order());
    std::vector<std::vector<std::vector<int>>> classes;
    for (Elem a = 0; a < static_cast<Elem>(q); ++a) {
        std::vector<std::vector<int>> cls;
        for (Elem b = 0; b < static_cast<Elem>(q); ++b) {
            std::vector<int> line;
            line.reserve(q);
            for (Elem x = 0; x < static_cast<Elem>(q); ++x) {
                Elem y = f.add(f.mul(a, x), b);
                line.push_back(static_cast<int>(x) * q + static_cast<int>(y));
            }
            cls.push_back(std::move(line));
        }
        classes.push_back(std::move(cls));
    }
    std::vector<std::vector<int>> vertical;
    for (int c = 0; c < q; ++c) {
        std::vector<int> line;
        line.reserve(q);
        for (int y = 0; y < q; ++y) line.push_back(c * q + y);
        vertical.push_back(std::move(line));
    }
    classes.push_back(std::move(vertical));
    return classes;
}

struct Triple {
    Elem x = 0, y = 0, z = 0;
};

Triple normalize(const FiniteField& f, Triple t) {
    Elem lead = t.x != 0 ? t.x : (t.y != 0 ? t.y : t.z);
    Elem s = f.inv(lead);
    return {f.mul(s, t.x), f.mul(s, t.y), f.mul(s, t.z)};
}

// Lexicographic index of a normalized triple: (0,0,1), then (0,1,z), then
// (1,y,z) — the same scheme indexes points and lines.
int triple_index(std::uint64_t q, const Triple& t) {
    if (t.x == 0 && t.y == 0) return 0;
    if (t.x == 0) return 1 + static_cast<int>(t.z);
    return 1 + static_cast<int>(q) + static_cast<int>(t.y) * static_cast<int>(q) +
           static_cast<int>(t.z);
}

Triple index_triple(std::uint64_t q, int idx) {
    if (idx == 0) return {0, 0, 1};
    if (idx <= static_cast<int>(q)) return {0, 1, static_cast<Elem>(idx - 1)};
    int r = idx - 1 - static_cast<int>(q);
    return {1, static_cast<Elem>(r / static_cast<int>(q)),
            static_cast<Elem>(r % static_cast<int>(q))};
}

bool triple_zero(const Triple& t) { return t.x == 0 && t.y == 0 && t.z == 0; }

Triple axpy(const FiniteField& f, Elem t, const Triple& p, const Triple& q) {
    return {f.add(f.mul(t, p.x), q.x), f.add(f.mul(t, p.y), q.y), f.add(f.mul(t, p.z), q.z)};
}

// Two distinct points incident with the line [a,b,c]; each candidate below
// satisfies the incidence relation identically, and for any nonzero (a,b,c)
// at least two of them are nonzero and projectively distinct.
std::pair<Triple, Triple> line_span(const FiniteField& f, const Triple& l) {
    std::array<Triple, 3> cand = {Triple{l.y, f.neg(l.x), 0}, Triple{l.z, 0, f.neg(l.x)},
                                  Triple{0, l.z, f.neg(l.y)}};
    std::vector<Triple> distinct;
    std::vector<int> seen;
    for (const Triple& c : cand) {
        if (triple_zero(c)) continue;
        Triple nc = normalize(f, c);
        int idx = triple_index(f.order(), nc);
        if (std::find(seen.begin(), seen.end(), idx) != seen.end()) continue;
        seen.push_back(idx);
        distinct.push_back(nc);
        if (distinct.size() == 2) break;
    }
    return {distinct.at(0), distinct.at(1)};
}

// ---- Kirkman triple system backtracking -----------------------------------

struct KirkmanSearch {
    int v;
    int nclasses;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<std::vector<std::array<int, 3>>> classes;
    std::vector<std::vector<std::uint8_t>> pair;
    std::vector<int> class_of;

    KirkmanSearch(int v_, std::uint64_t budget_)
        : v(v_), nclasses((v_ - 1) / 2), budget(budget_), classes(nclasses),
          pair(v_, std::vector<std::uint8_t>(v_, 0)), class_of(v_, -1) {}

    void mark(int a, int b, std::uint8_t x) { pair[a][b] = pair[b][a] = x; }

    void place(int ci, int p, int a, int b) {
        mark(p, a, 1);
        mark(p, b, 1);
        mark(a, b, 1);
        class_of[p] = class_of[a] = class_of[b] = ci;
        classes[ci].push_back({p, a, b});
    }

    void unplace(int ci, int p, int a, int b) {
        mark(p, a, 0);
        mark(p, b, 0);
        mark(a, b, 0);
        class_of[p] = class_of[a] = class_of[b] = ci - 1;
        classes[ci].pop_back();
    }

    // Fills classes in order; within a class always extends the smallest
    // point not yet scheduled, trying partner pairs in lexicographic order.
    bool fill(int ci, int placed) {
        if (placed == v) {
            if (ci + 1 == nclasses) return true;
            return fill(ci + 1, 0);
        }
        int p = 0;
        while (class_of[p] == ci) ++p;
        for (int a = p + 1; a < v; ++a) {
            if (class_of[a] == ci || pair[p][a]) continue;
            for (int b = a + 1; b < v; ++b) {
                if (class_of[b] == ci || pair[p][b] || pair[a][b]) continue;
                if (++nodes > budget) {
                    exhausted = true;
                    return false;
                }
                place(ci, p, a, b);
                if (fill(ci, placed + 3)) return true;
                unplace(ci, p, a, b);
                if (exhausted) return false;
            }
        }
        return false;
    }

    bool run() {
        // The first class is pinned to {0,1,2},{3,4,5},...: any resolvable
        // triple system can be relabeled into this form, so the pin only
        // removes relabelings of the same system.
        for (int t = 0; t + 2 < v; t += 3) place(0, t, t + 1, t + 2);
        return fill(0, v);
    }
};

std::vector<std::vector<std::vector<int>>> kirkman_classes(int v, std::uint64_t budget) {
    KirkmanSearch s(v, budget);
    if (!s.run()) {
        if (s.exhausted)
            fail(Errc::search_exhausted,
                 "triple system search hit its node budget at v=" + std::to_string(v));
        fail(Errc::search_exhausted, "no resolvable triple system found at v=" + std::to_string(v));
    }
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& cls : s.classes) {
        std::vector<std::vector<int>> blocks;
        for (const auto& t : cls) blocks.push_back({t[0], t[1], t[2]});
        out.push_back(std::move(blocks));
    }
    return out;
}

// Bundled Kirkman triple system on 15 points (generated by KirkmanSearch and
// revalidated on load); first class pinned as in the search.
std::vector<std::vector<std::vector<int>>> kirkman_15() {
    return {
        {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}, {12, 13, 14}},
        {{0, 3, 6}, {1, 4, 7}, {2, 9, 12}, {5, 10, 13}, {8, 11, 14}},
        {{0, 4, 9}, {1, 5, 11}, {2, 7, 14}, {3, 8, 13}, {6, 10, 12}},
        {{0, 5, 14}, {1, 3, 12}, {2, 6, 11}, {4, 8, 10}, {7, 9, 13}},
        {{0, 7, 10}, {1, 6, 13}, {2, 5, 8}, {3, 9, 14}, {4, 11, 12}},
        {{0, 8, 12}, {1, 10, 14}, {2, 4, 13}, {3, 7, 11}, {5, 6, 9}},
        {{0, 11, 13}, {1, 8, 9}, {2, 3, 10}, {4, 6, 14}, {5, 7, 12}},
    };
}

std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

} // namespace

ResolvableDesign affine_plane(std::uint32_t q) {
    FiniteField f(q);
    return assemble(static_cast<int>(q) * static_cast<int>(q), affine_line_classes(f));
}

Design projective_plane(std::uint32_t q) {
    FiniteField f(q);
    const int qi = static_cast<int>(q);
    const int count = qi * qi + qi + 1;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(count);
    for (int li = 0; li < count; ++li) {
        Triple l = index_triple(q, li);
        auto [p0, p1] = line_span(f, l);
        std::vector<int> block;
        block.reserve(qi + 1);
        block.push_back(triple_index(q, p0));
        for (Elem t = 0; t < static_cast<Elem>(q); ++t)
            block.push_back(triple_index(q, normalize(f, axpy(f, t, p0, p1))));
        blocks.push_back(std::move(block));
    }
    return make_design(count, std::move(blocks));
}

Design augmented_affine_plane(std::uint32_t q) {
    FiniteField f(q);
    auto classes = affine_line_classes(f);
    const int n = static_cast<int>(q) * static_cast<int>(q) + 1;
    for (auto& line : classes.front()) line.push_back(n - 1);
    std::vector<std::vector<int>> all;
    for (auto& cls : classes) all.insert(all.end(), cls.begin(), cls.end());
    return make_design(n, std::move(all));
}

EdgeColoring one_factorization(int v) {
    if (v < 2 || v % 2 != 0) fail(Errc::domain, "1-factorization needs an even order >= 2");
    EdgeColoring ec;
    ec.v = v;
    const int h = v - 1;
    for (int r = 0; r < h; ++r) {
        std::vector<std::pair<int, int>> cls;
        cls.push_back(edge(v - 1, r));
        for (int i = 1; i <= v / 2 - 1; ++i) cls.push_back(edge((r + i) % h, (r - i + h) % h));
        std::sort(cls.begin(), cls.end());
        ec.classes.push_back(std::move(cls));
    }
    return ec;
}

EdgeColoring proper_edge_coloring_complete(int v, int target_classes) {
    if (v < 1) fail(Errc::domain, "edge coloring needs at least one vertex");
    const int chi = v % 2 == 0 ? v - 1 : v;
    if (target_classes < chi)
        fail(Errc::domain, "K_" + std::to_string(v) + " needs at least " + std::to_string(chi) +
                               " color classes");
    EdgeColoring ec;
    if (v % 2 == 0) {
        ec = one_factorization(v);
    } else {
        ec.v = v;
        for (int i = 0; i < v; ++i) {
            std::vector<std::pair<int, int>> cls;
            for (int j = 1; j <= (v - 1) / 2; ++j) cls.push_back(edge((i + j) % v, (i - j + v) % v));
            std::sort(cls.begin(), cls.end());
            ec.classes.push_back(std::move(cls));
        }
    }
    ec.classes.resize(target_classes);
    return ec;
}

bool validate_edge_coloring(const EdgeColoring& ec, std::string* why) {
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (ec.v < 0) return reject("negative vertex count");
    std::vector<std::vector<std::uint8_t>> seen(ec.v, std::vector<std::uint8_t>(ec.v, 0));
    std::int64_t covered = 0;
    for (std::size_t ci = 0; ci < ec.classes.size(); ++ci) {
        std::vector<std::uint8_t> used(ec.v, 0);
        for (auto [a, b] : ec.classes[ci]) {
            if (a < 0 || b < 0 || a >= ec.v || b >= ec.v || a == b)
                return reject("class " + std::to_string(ci) + " holds an invalid edge");
            if (used[a] || used[b])
                return reject("class " + std::to_string(ci) + " is not a matching");
            used[a] = used[b] = 1;
            if (seen[a][b])
                return reject("edge {" + std::to_string(std::min(a, b)) + "," +
                              std::to_string(std::max(a, b)) + "} colored twice");
            seen[a][b] = seen[b][a] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::int64_t>(ec.v) * (ec.v - 1) / 2)
        return reject("classes do not cover every edge");
    return true;
}

ResolvableDesign resolvable_design(int v, int k, std::uint64_t node_budget, int search_cap) {
    if (k == 2) {
        if (v < 2 || v % 2 != 0)
            fail(Errc::congruence, "a resolvable (v,2,1) design needs v = 0 (mod 2)");
        EdgeColoring ec = one_factorization(v);
        std::vector<std::vector<std::vector<int>>> classes;
        for (const auto& cls : ec.classes) {
            std::vector<std::vector<int>> blocks;
            for (auto [a, b] : cls) blocks.push_back({a, b});
            classes.push_back(std::move(blocks));
        }
        return assemble(v, classes);
    }
    if (k == 3) {
        if (v < 3 || v % 6 != 3)
            fail(Errc::congruence, "a resolvable (v,3,1) design needs v = 3 (mod 6)");
        if (v == 9) return affine_plane(3);
        if (v == 15) return assemble(15, kirkman_15());
        if (v > search_cap)
            fail(Errc::cap_exceeded,
                 "triple system search capped at v=" + std::to_string(search_cap));
        return assemble(v, kirkman_classes(v, node_budget));
    }
    fail(Errc::unsupported_k, "resolvable designs support only k in {2,3}, got k=" +
                                  std::to_string(k));
}

} // namespace pbdtk::classical
