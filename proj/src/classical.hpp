#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "design.hpp"

namespace pbdtk::classical {

// Proper edge coloring of the complete graph on v vertices: classes partition
// the edge set and each class is a matching.  Empty classes are allowed (used
// as padding so callers can request a fixed class count).
struct EdgeColoring {
    int v = 0;
    std::vector<std::vector<std::pair<int, int>>> classes;
};

struct ResolvableDesign {
    Design design;
    Resolution resolution;
};

// Affine plane of order q: q^2 points indexed row-major as x*q+y over GF(q),
// q^2+q blocks of size q, resolved into q+1 parallel classes ordered by slope
// 0,1,...,q-1 followed by the vertical class.
ResolvableDesign affine_plane(std::uint32_t q);

// Projective plane of order q: q^2+q+1 points (normalized homogeneous triples
// in lexicographic order), q^2+q+1 blocks of size q+1.
Design projective_plane(std::uint32_t q);

// Affine plane of order q with one extra point joined to every block of the
// slope-0 parallel class: a PBD on q^2+1 points with total block size
// q^3+q^2+q.
Design augmented_affine_plane(std::uint32_t q);

// Circle-method 1-factorization of K_v (v even): v-1 classes, each a perfect
// matching of v/2 edges.
EdgeColoring one_factorization(int v);

// Proper edge coloring of K_v using exactly target_classes classes, padding
// with empty classes at the end.  Requires target_classes >= v-1 for even v
// (1-factorization) and >= v for odd v (class i misses vertex i).
EdgeColoring proper_edge_coloring_complete(int v, int target_classes);

// Checks the EdgeColoring invariants; `why` (when non-null) receives a short
// description of the first failure.
bool validate_edge_coloring(const EdgeColoring& ec, std::string* why = nullptr);

// Resolvable (v,k,1)-BIBD for k in {2,3}.  k=2 needs v even and wraps the
// 1-factorization; k=3 needs v = 3 (mod 6) and uses the affine plane (v=9), a
// bundled system (v=15) or bounded backtracking (v <= search_cap).
ResolvableDesign resolvable_design(int v, int k, std::uint64_t node_budget = 20'000'000,
                                   int search_cap = 27);

} // namespace pbdtk::classical
