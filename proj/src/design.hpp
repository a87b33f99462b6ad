#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pbdtk {

// A point set {0, ..., n-1} together with a list of blocks.  Canonical form:
// every block sorted ascending and the block list sorted lexicographically.
// All generators in this library produce canonical designs; validate_pbd
// decides whether the blocks form a pairwise balanced design (every pair of
// points in exactly one block).
struct Design {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const Design&) const = default;
};

// Partition of the block list (by index) into parallel classes.
struct Resolution {
    std::vector<std::vector<int>> classes;

    bool operator==(const Resolution&) const = default;
};

enum class ViolationKind {
    structural,         // malformed block: out-of-range, duplicate point, size < 2
    coverage_missing,   // a pair of points lies in no block
    coverage_duplicate, // a pair of points lies in more than one block
    non_clique_block,   // partition member covers a non-edge
    edge_uncovered,     // graph edge lies in no clique
    edge_duplicated,    // graph edge lies in more than one clique
};

struct Violation {
    ViolationKind kind;
    int a = -1;        // pair/edge endpoints where applicable
    int b = -1;
    int block = -1;    // offending block/clique index where applicable
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
    bool is_nontrivial = false; // no block equals the whole point set
    bool is_near_pencil = false;

    std::string text() const; // one line per violation, or "ok"
};

// Sorts each block and the block list.
void canonicalize(Design& d);

// Canonicalizes and enforces structural invariants (throws Errc::validation).
Design make_design(int n, std::vector<std::vector<int>> blocks);

// Sum of block sizes.
std::int64_t sigma(const Design& d);

// Number of blocks through each point.
std::vector<std::int64_t> valencies(const Design& d);

std::int64_t max_block_size(const Design& d);

// Full pairwise-balance check: reports every structural and coverage
// violation rather than stopping at the first.
ValidationReport validate_pbd(const Design& d);

// True when `classes` partitions the block indices and every class
// partitions the point set.
bool verify_resolution(const Design& d, const Resolution& r);

const char* violation_kind_name(ViolationKind k);

} // namespace pbdtk
