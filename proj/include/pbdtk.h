/* pbdtk — C interface to the pairwise-balanced-design / clique-partition
 * toolkit.
 *
 * Conventions
 *   - Every function returns a status code: PBDTK_OK (0) on success, one of
 *     the PBDTK_E_* codes otherwise.  On failure a human-readable message is
 *     available from pbdtk_last_error() until the next failing call on the
 *     same thread; no output parameter is written.
 *   - Objects are opaque handles released with the matching *_free function;
 *     freeing NULL is a no-op.
 *   - Strings returned through char** are NUL-terminated copies owned by the
 *     caller; release them with pbdtk_string_free.
 *   - Exact rationals are returned as a num/den pair (den > 0, fully
 *     reduced) together with the integer they round to (ceiling for lower
 *     bounds, as published by the underlying inequality).
 */

#ifndef PBDTK_H
#define PBDTK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes ---------------------------------------------------- */

#define PBDTK_OK 0
#define PBDTK_E_DOMAIN 1            /* argument outside the documented domain */
#define PBDTK_E_NOT_PRIME_POWER 2   /* order has no prime-power decomposition */
#define PBDTK_E_CAP_EXCEEDED 3      /* object larger than the configured cap */
#define PBDTK_E_OVERFLOW 4          /* 64-bit arithmetic would overflow */
#define PBDTK_E_PARSE 5             /* malformed input document */
#define PBDTK_E_IO 6                /* file could not be read or written */
#define PBDTK_E_VALIDATION 7        /* object fails its structural contract */
#define PBDTK_E_UNSUPPORTED_K 8     /* block size outside the implemented range */
#define PBDTK_E_CONGRUENCE 9        /* necessary divisibility condition fails */
#define PBDTK_E_SEARCH_EXHAUSTED 10 /* backtracking gave up within its budget */
#define PBDTK_E_HYPOTHESIS 11       /* hypothesis of the inequality fails */
#define PBDTK_E_BUDGET 12           /* solver node budget exhausted */
#define PBDTK_E_INFEASIBLE 13       /* no object with these parameters exists */
#define PBDTK_E_VERSION 14          /* unsupported document version */
#define PBDTK_E_INVALID_ARGUMENT 100 /* NULL handle or out-pointer */
#define PBDTK_E_INTERNAL 101        /* unexpected failure inside the library */

/* ---- library ---------------------------------------------------------- */

const char* pbdtk_version(void);

/* Message for the most recent failure on the calling thread ("" if none). */
const char* pbdtk_last_error(void);

void pbdtk_string_free(char* s);

/* ---- opaque handles --------------------------------------------------- */

typedef struct pbdtk_design pbdtk_design;       /* point set + blocks (+ resolution) */
typedef struct pbdtk_graph pbdtk_graph;         /* vertex set + edge set */
typedef struct pbdtk_partition pbdtk_partition; /* list of cliques */

void pbdtk_design_free(pbdtk_design* d);
void pbdtk_graph_free(pbdtk_graph* g);
void pbdtk_partition_free(pbdtk_partition* p);

/* ---- classical designs ------------------------------------------------ */

/* Affine plane of order q (q^2 points, resolved into q+1 parallel classes). */
int pbdtk_affine_plane(uint32_t q, pbdtk_design** out);

/* Projective plane of order q (q^2+q+1 points, blocks of size q+1). */
int pbdtk_projective_plane(uint32_t q, pbdtk_design** out);

/* Affine plane of order q with one extra point added to every block of the
 * first parallel class: q^2+1 points, total block size q^3+q^2+q. */
int pbdtk_augmented_affine_plane(uint32_t q, pbdtk_design** out);

/* Resolvable (v,k,1)-design for k in {2,3}; node_budget 0 keeps the default
 * backtracking budget. */
int pbdtk_resolvable_design(int32_t v, int32_t k, uint64_t node_budget,
                            pbdtk_design** out);

/* ---- design accessors -------------------------------------------------- */

int pbdtk_design_n(const pbdtk_design* d, int32_t* out);
int pbdtk_design_block_count(const pbdtk_design* d, int64_t* out);
int pbdtk_design_block_size(const pbdtk_design* d, int64_t block, int32_t* out);
int pbdtk_design_block_point(const pbdtk_design* d, int64_t block, int32_t pos,
                             int32_t* out);
int pbdtk_design_sigma(const pbdtk_design* d, int64_t* out);
int pbdtk_design_max_block(const pbdtk_design* d, int32_t* out);

/* Number of blocks through the given point. */
int pbdtk_design_valency(const pbdtk_design* d, int32_t point, int64_t* out);

/* Number of parallel classes carried by the design; 0 when it has none. */
int pbdtk_design_class_count(const pbdtk_design* d, int64_t* out);

/* Pairwise-balance check.  ok := 1 when every pair of points lies in exactly
 * one block; nontrivial := 1 when no block is the whole point set;
 * near_pencil := 1 for one (n-1)-block plus 2-blocks.  report receives a
 * line-per-violation listing ("ok" when valid); any out-pointer may be NULL. */
int pbdtk_design_validate(const pbdtk_design* d, int32_t* ok, int32_t* nontrivial,
                          int32_t* near_pencil, char** report);

/* Checks the carried resolution: ok := 1 when the classes partition the
 * block list and every class partitions the point set (0 when the design
 * carries no resolution). */
int pbdtk_design_verify_resolution(const pbdtk_design* d, int32_t* ok);

/* ---- graphs and partitions --------------------------------------------- */

/* family: "knkm" (complete graph minus the clique on the last m vertices),
 * "comp-path", "comp-cycle", "cocktail"; m is only read for "knkm". */
int pbdtk_graph_create(const char* family, int32_t n, int32_t m, pbdtk_graph** out);

int pbdtk_graph_n(const pbdtk_graph* g, int32_t* out);
int pbdtk_graph_edge_count(const pbdtk_graph* g, int64_t* out);
int pbdtk_graph_family(const pbdtk_graph* g, char** out);

/* Clique number by closed form (named families only). */
int pbdtk_graph_clique_number(const pbdtk_graph* g, int32_t* out);

int pbdtk_partition_clique_count(const pbdtk_partition* p, int64_t* out);
int pbdtk_partition_clique_size(const pbdtk_partition* p, int64_t index, int32_t* out);
int pbdtk_partition_clique_member(const pbdtk_partition* p, int64_t index, int32_t pos,
                                  int32_t* out);
int pbdtk_partition_sigma(const pbdtk_partition* p, int64_t* out);

/* ok := 1 when every member is a clique of g and every edge of g lies in
 * exactly one member; report as in pbdtk_design_validate. */
int pbdtk_partition_validate(const pbdtk_graph* g, const pbdtk_partition* p,
                             int32_t* ok, char** report);

/* ---- lower and upper bounds -------------------------------------------- */

/* Minimum sigma over nontrivial pairwise balanced designs: 3n-3.  n >= 3. */
int pbdtk_sigma_lower_basic(int64_t n, int64_t* num, int64_t* den, int64_t* rounded);

/* Smallest r with r(r-1) >= n-1 (max-valency lower bound).  n >= 3. */
int pbdtk_max_valency_lower(int64_t n, int64_t* num, int64_t* den, int64_t* rounded);

/* tag "A": largest block size tau; "B"/"C": some block of size k. */
int pbdtk_bound_tagged(const char* tag, int64_t n, int64_t k, int64_t* num,
                       int64_t* den, int64_t* rounded);

/* Max of A/B/C at the given largest-block size; source receives "A", "B" or
 * "C" (ties prefer A, then B). */
int pbdtk_best_sigma_lower(int64_t n, int64_t tau, int64_t* num, int64_t* den,
                           int64_t* rounded, char** source);

/* n(floor(sqrt n)+1) - 1 for n >= 10. */
int pbdtk_sigma_lower_no_large_block(int64_t n, int64_t* num, int64_t* den,
                                     int64_t* rounded);

/* applies := 1 when 2(n - max_block) - 1 >= sqrt(n) holds exactly. */
int pbdtk_no_large_block_applies(int64_t n, int64_t max_block, int32_t* applies);

/* Bounds on the minimum partition sigma of the complete graph minus a clique
 * on m of its n vertices: lower mn - m^2(m-1)/(n-1), upper (2m-1)(n-m)+1. */
int pbdtk_scp_clique_bounds(int64_t n, int64_t m, int64_t* lo_num, int64_t* lo_den,
                            int64_t* lo_rounded, int64_t* up_num, int64_t* up_den,
                            int64_t* up_rounded);

/* Exact value in the half range 2m >= n. */
int pbdtk_scp_clique_exact_half(int64_t n, int64_t m, int64_t* num, int64_t* den,
                                int64_t* rounded);

/* Sharper lower bound in the sparse range 4m^2 <= n. */
int pbdtk_scp_clique_sparse_lower(int64_t n, int64_t m, int64_t* num, int64_t* den,
                                  int64_t* rounded);

/* Leading sigma/n^2 coefficients for m = c*n, 0 < c < 1/2. */
int pbdtk_scp_density_coefficients(int64_t n, int64_t m, int64_t* lo_num,
                                   int64_t* lo_den, int64_t* up_num, int64_t* up_den);

/* Lower bound for the complete graph minus an arbitrary graph H on m
 * vertices, given scp(H) and the clique numbers of H and its complement. */
int pbdtk_scp_complement_pair_lower(int64_t n, int64_t scp_h, int64_t omega_h,
                                    int64_t omega_hbar, int64_t m, int64_t* num,
                                    int64_t* den, int64_t* rounded);

/* CSV table over tau = 2..n-1 with columns tau,A,B,C,best,source. */
int pbdtk_bounds_csv(int64_t n, char** csv);

/* ---- constructions ------------------------------------------------------ */

/* Design-producing constructions.
 *   what = "near-pencil": a = n, b unused
 *   what = "pbdc":        a = n, b = k     (n/2 <= k <= n-1; sigma = bound C)
 *   what = "thm24":       a = q, b unused  (augmented plane, n = q^2+1)
 * Outputs: the design, the claimed sigma bound (exact + rounded + source
 * tag), the sigma achieved, and the parameter list as a JSON object text.
 * Any output pointer may be NULL. */
int pbdtk_construct_design(const char* what, int64_t a, int64_t b, pbdtk_design** out,
                           int64_t* claim_num, int64_t* claim_den,
                           int64_t* claim_rounded, char** claim_source,
                           int64_t* achieved, char** params_json);

/* Partition-producing constructions on the named graph families.
 *   what = "knkm-trivial" | "knkm-prime" | "knkm-resolvable": args n, m
 *   what = "comp-path" | "comp-cycle" | "cocktail":           arg n (m unused)
 * Outputs as above plus the graph the partition lives on. */
int pbdtk_construct_partition(const char* what, int64_t n, int64_t m,
                              pbdtk_graph** graph_out, pbdtk_partition** out,
                              int64_t* claim_num, int64_t* claim_den,
                              int64_t* claim_rounded, char** claim_source,
                              int64_t* achieved, char** params_json);

/* ---- exact solver -------------------------------------------------------- */

/* Minimum total clique size (scp) / minimum clique count (cp) over clique
 * partitions of g.  node_budget 0 = unlimited, except that graphs above 10
 * vertices fall back to a defensive 10^6-node budget; proved receives 0 when
 * the search stopped at the budget (optimum is then the best found). */
int pbdtk_exact_scp(const pbdtk_graph* g, uint64_t node_budget, int64_t* optimum,
                    int32_t* proved, uint64_t* nodes, pbdtk_partition** witness);
int pbdtk_exact_cp(const pbdtk_graph* g, uint64_t node_budget, int64_t* optimum,
                   int32_t* proved, uint64_t* nodes, pbdtk_partition** witness);

/* Minimum sigma over pairwise balanced designs on n points whose largest
 * block has size exactly m (at_most = 0) or at most m (at_most = 1). */
int pbdtk_exact_min_sigma_largest_block(int32_t n, int32_t m, int32_t at_most,
                                        uint64_t node_budget, int64_t* optimum,
                                        int32_t* proved, uint64_t* nodes,
                                        pbdtk_design** witness);

/* Minimum sigma over pairwise balanced designs on n points containing a
 * block of size m. */
int pbdtk_exact_min_sigma_with_block(int32_t n, int32_t m, uint64_t node_budget,
                                     int64_t* optimum, int32_t* proved,
                                     uint64_t* nodes, pbdtk_design** witness);

/* ---- files --------------------------------------------------------------- */

/* extras_json (may be NULL or ""): JSON object whose optional members
 * "metadata", "certificate" and "solver" are stored verbatim in the
 * document. */
int pbdtk_design_write(const pbdtk_design* d, const char* path,
                       const char* extras_json);
int pbdtk_design_read(const char* path, pbdtk_design** out);

int pbdtk_partition_write(const pbdtk_graph* g, const pbdtk_partition* p,
                          const char* path, const char* extras_json);
int pbdtk_partition_read(const char* path, pbdtk_graph** graph_out,
                         pbdtk_partition** out);

/* kind receives "design", "partition" or "edge-coloring"; certificate_json
 * receives the document's certificate block as JSON text ("" when absent).
 * Either out-pointer may be NULL. */
int pbdtk_file_info(const char* path, char** kind, char** certificate_json);

/* Validates whatever document the file holds; ok := 1 on a fully valid
 * object, report as in pbdtk_design_validate. */
int pbdtk_verify_file(const char* path, int32_t* ok, char** report);

/* FNV-1a 64-bit checksum of the file bytes, as 16 hex digits. */
int pbdtk_file_checksum(const char* path, char** hex);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PBDTK_H */
