#include "design.hpp"

#include <algorithm>

#include "error.hpp"

namespace pbdtk {

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::structural: return "structural";
        case ViolationKind::coverage_missing: return "coverage-missing";
        case ViolationKind::coverage_duplicate: return "coverage-duplicate";
        case ViolationKind::non_clique_block: return "non-clique-block";
        case ViolationKind::edge_uncovered: return "edge-uncovered";
        case ViolationKind::edge_duplicated: return "edge-duplicated";
    }
    return "unknown";
}

std::string ValidationReport::text() const {
    if (ok && violations.empty()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        out += violation_kind_name(v.kind);
        if (v.a >= 0) out += " pair (" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
        if (v.block >= 0) out += " block " + std::to_string(v.block);
        if (!v.detail.empty()) out += ": " + v.detail;
        out += '\n';
    }
    return out;
}

void canonicalize(Design& d) {
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
}

Design make_design(int n, std::vector<std::vector<int>> blocks) {
    Design d{n, std::move(blocks)};
    canonicalize(d);
    auto report = validate_pbd(d);
    for (const auto& v : report.violations)
        if (v.kind == ViolationKind::structural)
            fail(Errc::validation, "malformed block: " + v.detail);
    return d;
}

std::int64_t sigma(const Design& d) {
    std::int64_t s = 0;
    for (const auto& b : d.blocks) s += static_cast<std::int64_t>(b.size());
    return s;
}

std::vector<std::int64_t> valencies(const Design& d) {
    std::vector<std::int64_t> r(d.n, 0);
    for (const auto& b : d.blocks)
        for (int x : b)
            if (x >= 0 && x < d.n) ++r[x];
    return r;
}

std::int64_t max_block_size(const Design& d) {
    std::size_t m = 0;
    for (const auto& b : d.blocks) m = std::max(m, b.size());
    return static_cast<std::int64_t>(m);
}

ValidationReport validate_pbd(const Design& d) {
    ValidationReport report;
    if (d.n < 2) {
        report.violations.push_back({ViolationKind::structural, -1, -1, -1,
                                     "point count must be at least 2"});
        return report;
    }

    bool structurally_sound = true;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        if (b.size() < 2) {
            report.violations.push_back({ViolationKind::structural, -1, -1,
                                         static_cast<int>(i), "block has fewer than 2 points"});
            structurally_sound = false;
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] < 0 || b[j] >= d.n) {
                report.violations.push_back({ViolationKind::structural, b[j], -1,
                                             static_cast<int>(i), "point out of range"});
                structurally_sound = false;
            } else if (j > 0 && b[j] == b[j - 1]) {
                report.violations.push_back({ViolationKind::structural, b[j], -1,
                                             static_cast<int>(i), "duplicate point in block"});
                structurally_sound = false;
            }
        }
    }

    // Pair coverage counts; n stays small enough for a dense matrix.
    std::vector<std::uint16_t> cover(static_cast<std::size_t>(d.n) * d.n, 0);
    if (structurally_sound) {
        for (const auto& b : d.blocks)
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    auto& c = cover[static_cast<std::size_t>(b[i]) * d.n + b[j]];
                    if (c < UINT16_MAX) ++c;
                }
        for (int a = 0; a < d.n; ++a)
            for (int b2 = a + 1; b2 < d.n; ++b2) {
                std::uint16_t c = cover[static_cast<std::size_t>(a) * d.n + b2];
                if (c == 0)
                    report.violations.push_back({ViolationKind::coverage_missing, a, b2, -1, ""});
                else if (c > 1)
                    report.violations.push_back({ViolationKind::coverage_duplicate, a, b2, -1,
                                                 "covered " + std::to_string(c) + " times"});
            }
    }

    report.ok = report.violations.empty();
    if (report.ok) {
        report.is_nontrivial = true;
        for (const auto& b : d.blocks)
            if (static_cast<int>(b.size()) == d.n) report.is_nontrivial = false;
        // Near-pencil: one block on all points but one, every other block a pair.
        int big = 0, other_pairs = 0;
        for (const auto& b : d.blocks) {
            if (static_cast<int>(b.size()) == d.n - 1) ++big;
            else if (b.size() == 2) ++other_pairs;
        }
        report.is_near_pencil =
            big >= 1 && big + other_pairs == static_cast<int>(d.blocks.size());
    }
    return report;
}

bool verify_resolution(const Design& d, const Resolution& r) {
    std::vector<char> used(d.blocks.size(), 0);
    for (const auto& cls : r.classes) {
        std::vector<char> seen(d.n, 0);
        int covered = 0;
        for (int idx : cls) {
            if (idx < 0 || idx >= static_cast<int>(d.blocks.size())) return false;
            if (used[idx]) return false;
            used[idx] = 1;
            for (int x : d.blocks[idx]) {
                if (x < 0 || x >= d.n || seen[x]) return false;
                seen[x] = 1;
                ++covered;
            }
        }
        if (covered != d.n) return false; // class must partition the points
    }
    for (char u : used)
        if (!u) return false; // every block in exactly one class
    return true;
}

} // namespace pbdtk
