#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "design.hpp"
#include "graph.hpp"

namespace pbdtk::constructions {

// Uniform wrapper for constructive results: the object built, the sigma
// bound the construction claims, and the sigma it actually achieved.
// Equality constructions achieve their claim exactly; upper-bound
// constructions stay at or below it.
struct DesignCertificate {
    Design design;
    bounds::BoundValue claimed;
    std::int64_t achieved = 0;
    std::string construction;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
};

struct PartitionCertificate {
    Graph graph;
    CliquePartition partition;
    bounds::BoundValue claimed;
    std::int64_t achieved = 0;
    std::string construction;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
};

// One block on all points but one, the rest 2-blocks: sigma = 3n-3.  n >= 3.
DesignCertificate near_pencil(int n);

// PBD on n points with a distinguished block {0..k-1} meeting bound C with
// equality: the points outside form a complete graph whose proper edge
// coloring by n-k colors turns each colored edge into a triple through one
// big-block point; uncovered cross pairs become 2-blocks.  Needs
// n/2 <= k <= n-1.
DesignCertificate pbdc_equality(int n, int k);

// Augmented affine plane of order q as a certificate that the no-large-block
// lower bound n(floor(sqrt n)+1)-1 is tight at n = q^2+1.
DesignCertificate augmented_plane_tight(std::uint32_t q);

// One clique on the n-m+1 vertices outside-plus-one and 2-cliques for the
// rest: sigma = (2m-1)(n-m)+1.  Needs 2 <= m <= n-1.
PartitionCertificate knkm_trivial(int n, int m);

// Partition of K_n minus H built from a (v,k,1)-BIBD `base`: delete the
// first block B1, map the first m points of B1 to the removed-set vertices
// n-m..n-1 and the first n-m other points to 0..n-m-1, truncate every other
// block, and append `hbar` (a partition of the complement of H given on
// local vertices 0..m-1; empty when H = K_m).  sigma <= n(v-1)/(k-1) - m +
// sigma(hbar).
PartitionCertificate truncated_design_partition(int n, int m, const Design& base,
                                                const CliquePartition& hbar);

// Truncated projective plane of order q, q the smallest prime power >= m
// (bumped until q^2 >= n-m): partition of K_n-K_m with sigma <= n(q+1)-m.
// Needs floor(sqrt n) <= m <= n.
PartitionCertificate knkm_prime(int n, int m);

// Same truncation with q the smallest prime power with q^2 >= n (bumped
// until q >= m-1), for H on m vertices with sqrt(n)/2 <= m <= sqrt(n):
// sigma <= n(q+1) - m + sigma(hbar).
PartitionCertificate knkm_sqrt(int n, int m, const CliquePartition& hbar);

// Resolvable-design construction for K_n-K_m with m < n/2 and k = floor(n/m)
// in {2,3}: each of the m removed-set vertices joins every block of its own
// parallel class; sigma <= (n-m)(v-1)/(k-1) + m*v/k.
PartitionCertificate knkm_resolvable(int n, int m);

// Partition of the complement of the path 0-1-...-(n-1).  Exact cached
// partitions for n <= 10; otherwise a d-by-e grid inside the affine plane of
// prime order q (rows and columns recurse, other lines stay cliques).  The
// claimed bound is the measured sigma: the underlying growth analysis fixes
// no explicit constant.  n >= 2.
PartitionCertificate complement_path_partition(int n);

// Complement of the cycle 0-...-(n-1)-0: path-complement partition on the
// first n-1 vertices plus 2-cliques joining vertex n-1 to the n-3 vertices
// it still sees.  n >= 4.
PartitionCertificate complement_cycle_partition(int n);

// Cocktail-party graph (K_n minus the matching {0,1},{2,3},...): the
// path-complement partition plus the path edges outside the matching.
// n >= 2.
PartitionCertificate cocktail_party_partition(int n);

} // namespace pbdtk::constructions
