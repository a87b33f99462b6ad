#include "pbdtk.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "classical.hpp"
#include "constructions.hpp"
#include "design.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "solver.hpp"

struct pbdtk_design {
    pbdtk::Design design;
    std::optional<pbdtk::Resolution> resolution;
};

struct pbdtk_graph {
    pbdtk::Graph graph;
};

struct pbdtk_partition {
    pbdtk::CliquePartition partition;
};

namespace {

using nlohmann::json;

thread_local std::string tl_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const pbdtk::Error& e) {
        tl_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        tl_last_error = "out of memory";
        return PBDTK_E_INTERNAL;
    } catch (const std::exception& e) {
        tl_last_error = e.what();
        return PBDTK_E_INTERNAL;
    } catch (...) {
        tl_last_error = "unknown failure";
        return PBDTK_E_INTERNAL;
    }
}

int invalid(const char* what) {
    tl_last_error = std::string("invalid argument: ") + what;
    return PBDTK_E_INVALID_ARGUMENT;
}

void put_i32(int32_t* out, int32_t v) { if (out) *out = v; }
void put_i64(int64_t* out, int64_t v) { if (out) *out = v; }
void put_u64(uint64_t* out, uint64_t v) { if (out) *out = v; }

void put_rational(const pbdtk::Rational& r, int64_t* num, int64_t* den) {
    put_i64(num, r.num());
    put_i64(den, r.den());
}

void put_bound(const pbdtk::bounds::BoundValue& b, int64_t* num, int64_t* den,
               int64_t* rounded) {
    put_rational(b.exact, num, den);
    put_i64(rounded, b.rounded);
}

json params_to_json(const std::vector<std::pair<std::string, std::int64_t>>& params) {
    json j = json::object();
    for (const auto& [key, value] : params) j[key] = value;
    return j;
}

void apply_extras(const char* extras_json, json& metadata, json& certificate,
                  json& solver) {
    if (extras_json == nullptr || *extras_json == '\0') return;
    json j;
    try {
        j = json::parse(extras_json);
    } catch (const json::parse_error& e) {
        pbdtk::fail(pbdtk::Errc::parse, std::string("invalid extras JSON: ") + e.what());
    }
    if (!j.is_object()) pbdtk::fail(pbdtk::Errc::parse, "extras JSON must be an object");
    if (j.contains("metadata")) metadata = j["metadata"];
    if (j.contains("certificate")) certificate = j["certificate"];
    if (j.contains("solver")) solver = j["solver"];
}

int solver_partition_result(const pbdtk::solver::SolverResult& r, int64_t* optimum,
                            int32_t* proved, uint64_t* nodes, pbdtk_partition** witness) {
    put_i64(optimum, r.optimum);
    put_i32(proved, r.proved_optimal ? 1 : 0);
    put_u64(nodes, r.nodes);
    if (witness) *witness = new pbdtk_partition{r.witness};
    return PBDTK_OK;
}

int solver_design_result(const pbdtk::solver::DesignSearchResult& r, int64_t* optimum,
                         int32_t* proved, uint64_t* nodes, pbdtk_design** witness) {
    put_i64(optimum, r.optimum);
    put_i32(proved, r.proved_optimal ? 1 : 0);
    put_u64(nodes, r.nodes);
    if (witness) *witness = new pbdtk_design{r.witness, std::nullopt};
    return PBDTK_OK;
}

} // namespace

extern "C" {

const char* pbdtk_version(void) { return "0.1.0"; }

const char* pbdtk_last_error(void) { return tl_last_error.c_str(); }

void pbdtk_string_free(char* s) { delete[] s; }

void pbdtk_design_free(pbdtk_design* d) { delete d; }
void pbdtk_graph_free(pbdtk_graph* g) { delete g; }
void pbdtk_partition_free(pbdtk_partition* p) { delete p; }

/* ---- classical designs ------------------------------------------------ */

int pbdtk_affine_plane(uint32_t q, pbdtk_design** out) {
    if (!out) return invalid("out");
    return guarded([&] {
        auto rd = pbdtk::classical::affine_plane(q);
        *out = new pbdtk_design{std::move(rd.design), std::move(rd.resolution)};
        return PBDTK_OK;
    });
}

int pbdtk_projective_plane(uint32_t q, pbdtk_design** out) {
    if (!out) return invalid("out");
    return guarded([&] {
        *out = new pbdtk_design{pbdtk::classical::projective_plane(q), std::nullopt};
        return PBDTK_OK;
    });
}

int pbdtk_augmented_affine_plane(uint32_t q, pbdtk_design** out) {
    if (!out) return invalid("out");
    return guarded([&] {
        *out = new pbdtk_design{pbdtk::classical::augmented_affine_plane(q), std::nullopt};
        return PBDTK_OK;
    });
}

int pbdtk_resolvable_design(int32_t v, int32_t k, uint64_t node_budget,
                            pbdtk_design** out) {
    if (!out) return invalid("out");
    return guarded([&] {
        auto rd = node_budget == 0
                      ? pbdtk::classical::resolvable_design(v, k)
                      : pbdtk::classical::resolvable_design(v, k, node_budget);
        *out = new pbdtk_design{std::move(rd.design), std::move(rd.resolution)};
        return PBDTK_OK;
    });
}

/* ---- design accessors -------------------------------------------------- */

int pbdtk_design_n(const pbdtk_design* d, int32_t* out) {
    if (!d || !out) return invalid("design or out");
    *out = d->design.n;
    return PBDTK_OK;
}

int pbdtk_design_block_count(const pbdtk_design* d, int64_t* out) {
    if (!d || !out) return invalid("design or out");
    *out = static_cast<int64_t>(d->design.blocks.size());
    return PBDTK_OK;
}

int pbdtk_design_block_size(const pbdtk_design* d, int64_t block, int32_t* out) {
    if (!d || !out) return invalid("design or out");
    if (block < 0 || block >= static_cast<int64_t>(d->design.blocks.size())) {
        tl_last_error = "block index out of range";
        return PBDTK_E_DOMAIN;
    }
    *out = static_cast<int32_t>(d->design.blocks[static_cast<std::size_t>(block)].size());
    return PBDTK_OK;
}

int pbdtk_design_block_point(const pbdtk_design* d, int64_t block, int32_t pos,
                             int32_t* out) {
    if (!d || !out) return invalid("design or out");
    if (block < 0 || block >= static_cast<int64_t>(d->design.blocks.size())) {
        tl_last_error = "block index out of range";
        return PBDTK_E_DOMAIN;
    }
    const auto& b = d->design.blocks[static_cast<std::size_t>(block)];
    if (pos < 0 || pos >= static_cast<int32_t>(b.size())) {
        tl_last_error = "position out of range";
        return PBDTK_E_DOMAIN;
    }
    *out = b[static_cast<std::size_t>(pos)];
    return PBDTK_OK;
}

int pbdtk_design_sigma(const pbdtk_design* d, int64_t* out) {
    if (!d || !out) return invalid("design or out");
    *out = pbdtk::sigma(d->design);
    return PBDTK_OK;
}

int pbdtk_design_max_block(const pbdtk_design* d, int32_t* out) {
    if (!d || !out) return invalid("design or out");
    *out = static_cast<int32_t>(pbdtk::max_block_size(d->design));
    return PBDTK_OK;
}

int pbdtk_design_valency(const pbdtk_design* d, int32_t point, int64_t* out) {
    if (!d || !out) return invalid("design or out");
    if (point < 0 || point >= d->design.n) {
        tl_last_error = "point out of range";
        return PBDTK_E_DOMAIN;
    }
    std::int64_t v = 0;
    for (const auto& b : d->design.blocks)
        for (int x : b)
            if (x == point) { ++v; break; }
    *out = v;
    return PBDTK_OK;
}

int pbdtk_design_class_count(const pbdtk_design* d, int64_t* out) {
    if (!d || !out) return invalid("design or out");
    *out = d->resolution ? static_cast<int64_t>(d->resolution->classes.size()) : 0;
    return PBDTK_OK;
}

int pbdtk_design_validate(const pbdtk_design* d, int32_t* ok, int32_t* nontrivial,
                          int32_t* near_pencil, char** report) {
    if (!d) return invalid("design");
    return guarded([&] {
        auto rep = pbdtk::validate_pbd(d->design);
        put_i32(ok, rep.ok ? 1 : 0);
        put_i32(nontrivial, rep.is_nontrivial ? 1 : 0);
        put_i32(near_pencil, rep.is_near_pencil ? 1 : 0);
        if (report) *report = dup_string(rep.text());
        return PBDTK_OK;
    });
}

int pbdtk_design_verify_resolution(const pbdtk_design* d, int32_t* ok) {
    if (!d || !ok) return invalid("design or out");
    return guarded([&] {
        *ok = d->resolution && pbdtk::verify_resolution(d->design, *d->resolution) ? 1 : 0;
        return PBDTK_OK;
    });
}

/* ---- graphs and partitions --------------------------------------------- */

int pbdtk_graph_create(const char* family, int32_t n, int32_t m, pbdtk_graph** out) {
    if (!family || !out) return invalid("family or out");
    return guarded([&] {
        pbdtk::GraphFamily f = pbdtk::family_from_name(family);
        pbdtk::Graph g;
        switch (f) {
            case pbdtk::GraphFamily::complete_minus_clique:
                g = pbdtk::complete_minus_clique(n, m);
                break;
            case pbdtk::GraphFamily::complement_path:
                g = pbdtk::complement_path(n);
                break;
            case pbdtk::GraphFamily::complement_cycle:
                g = pbdtk::complement_cycle(n);
                break;
            case pbdtk::GraphFamily::cocktail_party:
                g = pbdtk::cocktail_party(n);
                break;
            case pbdtk::GraphFamily::explicit_edges:
                pbdtk::fail(pbdtk::Errc::domain,
                            "explicit graphs are built from files, not parameters");
        }
        *out = new pbdtk_graph{std::move(g)};
        return PBDTK_OK;
    });
}

int pbdtk_graph_n(const pbdtk_graph* g, int32_t* out) {
    if (!g || !out) return invalid("graph or out");
    *out = g->graph.n;
    return PBDTK_OK;
}

int pbdtk_graph_edge_count(const pbdtk_graph* g, int64_t* out) {
    if (!g || !out) return invalid("graph or out");
    *out = g->graph.edge_count();
    return PBDTK_OK;
}

int pbdtk_graph_family(const pbdtk_graph* g, char** out) {
    if (!g || !out) return invalid("graph or out");
    *out = dup_string(pbdtk::family_name(g->graph.family));
    return PBDTK_OK;
}

int pbdtk_graph_clique_number(const pbdtk_graph* g, int32_t* out) {
    if (!g || !out) return invalid("graph or out");
    return guarded([&] {
        *out = pbdtk::clique_number_closed_form(g->graph);
        return PBDTK_OK;
    });
}

int pbdtk_partition_clique_count(const pbdtk_partition* p, int64_t* out) {
    if (!p || !out) return invalid("partition or out");
    *out = static_cast<int64_t>(p->partition.cliques.size());
    return PBDTK_OK;
}

int pbdtk_partition_clique_size(const pbdtk_partition* p, int64_t index, int32_t* out) {
    if (!p || !out) return invalid("partition or out");
    if (index < 0 || index >= static_cast<int64_t>(p->partition.cliques.size())) {
        tl_last_error = "clique index out of range";
        return PBDTK_E_DOMAIN;
    }
    *out = static_cast<int32_t>(p->partition.cliques[static_cast<std::size_t>(index)].size());
    return PBDTK_OK;
}

int pbdtk_partition_clique_member(const pbdtk_partition* p, int64_t index, int32_t pos,
                                  int32_t* out) {
    if (!p || !out) return invalid("partition or out");
    if (index < 0 || index >= static_cast<int64_t>(p->partition.cliques.size())) {
        tl_last_error = "clique index out of range";
        return PBDTK_E_DOMAIN;
    }
    const auto& c = p->partition.cliques[static_cast<std::size_t>(index)];
    if (pos < 0 || pos >= static_cast<int32_t>(c.size())) {
        tl_last_error = "position out of range";
        return PBDTK_E_DOMAIN;
    }
    *out = c[static_cast<std::size_t>(pos)];
    return PBDTK_OK;
}

int pbdtk_partition_sigma(const pbdtk_partition* p, int64_t* out) {
    if (!p || !out) return invalid("partition or out");
    *out = pbdtk::partition_sigma(p->partition);
    return PBDTK_OK;
}

int pbdtk_partition_validate(const pbdtk_graph* g, const pbdtk_partition* p,
                             int32_t* ok, char** report) {
    if (!g || !p) return invalid("graph or partition");
    return guarded([&] {
        auto rep = pbdtk::validate_partition(g->graph, p->partition);
        put_i32(ok, rep.ok ? 1 : 0);
        if (report) *report = dup_string(rep.text());
        return PBDTK_OK;
    });
}

/* ---- lower and upper bounds -------------------------------------------- */

int pbdtk_sigma_lower_basic(int64_t n, int64_t* num, int64_t* den, int64_t* rounded) {
    return guarded([&] {
        put_bound(pbdtk::bounds::sigma_lower_basic(n), num, den, rounded);
        return PBDTK_OK;
    });
}

int pbdtk_max_valency_lower(int64_t n, int64_t* num, int64_t* den, int64_t* rounded) {
    return guarded([&] {
        put_bound(pbdtk::bounds::max_valency_lower(n), num, den, rounded);
        return PBDTK_OK;
    });
}

int pbdtk_bound_tagged(const char* tag, int64_t n, int64_t k, int64_t* num,
                       int64_t* den, int64_t* rounded) {
    if (!tag) return invalid("tag");
    return guarded([&] {
        std::string t = tag;
        pbdtk::bounds::BoundValue b;
        if (t == "A") b = pbdtk::bounds::bound_a(n, k);
        else if (t == "B") b = pbdtk::bounds::bound_b(n, k);
        else if (t == "C") b = pbdtk::bounds::bound_c(n, k);
        else pbdtk::fail(pbdtk::Errc::domain, "unknown bound tag '" + t + "'");
        put_bound(b, num, den, rounded);
        return PBDTK_OK;
    });
}

int pbdtk_best_sigma_lower(int64_t n, int64_t tau, int64_t* num, int64_t* den,
                           int64_t* rounded, char** source) {
    return guarded([&] {
        auto b = pbdtk::bounds::best_sigma_lower(n, tau);
        put_bound(b, num, den, rounded);
        if (source) *source = dup_string(b.source);
        return PBDTK_OK;
    });
}

int pbdtk_sigma_lower_no_large_block(int64_t n, int64_t* num, int64_t* den,
                                     int64_t* rounded) {
    return guarded([&] {
        put_bound(pbdtk::bounds::sigma_lower_no_large_block(n), num, den, rounded);
        return PBDTK_OK;
    });
}

int pbdtk_no_large_block_applies(int64_t n, int64_t max_block, int32_t* applies) {
    if (!applies) return invalid("applies");
    *applies = pbdtk::bounds::no_large_block_applies(n, max_block) ? 1 : 0;
    return PBDTK_OK;
}

int pbdtk_scp_clique_bounds(int64_t n, int64_t m, int64_t* lo_num, int64_t* lo_den,
                            int64_t* lo_rounded, int64_t* up_num, int64_t* up_den,
                            int64_t* up_rounded) {
    return guarded([&] {
        auto b = pbdtk::bounds::scp_complete_minus_clique(n, m);
        put_bound(b.lower, lo_num, lo_den, lo_rounded);
        put_bound(b.upper, up_num, up_den, up_rounded);
        return PBDTK_OK;
    });
}

int pbdtk_scp_clique_exact_half(int64_t n, int64_t m, int64_t* num, int64_t* den,
                                int64_t* rounded) {
    return guarded([&] {
        put_bound(pbdtk::bounds::scp_complete_minus_clique_exact_half(n, m), num, den,
                  rounded);
        return PBDTK_OK;
    });
}

int pbdtk_scp_clique_sparse_lower(int64_t n, int64_t m, int64_t* num, int64_t* den,
                                  int64_t* rounded) {
    return guarded([&] {
        put_bound(pbdtk::bounds::scp_complete_minus_clique_sparse_lower(n, m), num, den,
                  rounded);
        return PBDTK_OK;
    });
}

int pbdtk_scp_density_coefficients(int64_t n, int64_t m, int64_t* lo_num,
                                   int64_t* lo_den, int64_t* up_num, int64_t* up_den) {
    return guarded([&] {
        auto c = pbdtk::bounds::scp_density_coefficients(n, m);
        put_rational(c.lower, lo_num, lo_den);
        put_rational(c.upper, up_num, up_den);
        return PBDTK_OK;
    });
}

int pbdtk_scp_complement_pair_lower(int64_t n, int64_t scp_h, int64_t omega_h,
                                    int64_t omega_hbar, int64_t m, int64_t* num,
                                    int64_t* den, int64_t* rounded) {
    return guarded([&] {
        put_bound(pbdtk::bounds::scp_complement_pair_lower(n, scp_h, omega_h, omega_hbar, m),
                  num, den, rounded);
        return PBDTK_OK;
    });
}

int pbdtk_bounds_csv(int64_t n, char** csv) {
    if (!csv) return invalid("csv");
    return guarded([&] {
        *csv = dup_string(pbdtk::bounds::bounds_csv(n));
        return PBDTK_OK;
    });
}

/* ---- constructions ------------------------------------------------------ */

int pbdtk_construct_design(const char* what, int64_t a, int64_t b, pbdtk_design** out,
                           int64_t* claim_num, int64_t* claim_den,
                           int64_t* claim_rounded, char** claim_source,
                           int64_t* achieved, char** params_json) {
    if (!what) return invalid("what");
    return guarded([&] {
        std::string w = what;
        pbdtk::constructions::DesignCertificate cert;
        if (w == "near-pencil") cert = pbdtk::constructions::near_pencil(static_cast<int>(a));
        else if (w == "pbdc")
            cert = pbdtk::constructions::pbdc_equality(static_cast<int>(a),
                                                       static_cast<int>(b));
        else if (w == "thm24") {
            if (a < 2 || a > 1 << 15)
                pbdtk::fail(pbdtk::Errc::domain, "plane order out of range");
            cert = pbdtk::constructions::augmented_plane_tight(static_cast<uint32_t>(a));
        } else
            pbdtk::fail(pbdtk::Errc::domain, "unknown design construction '" + w + "'");
        put_bound(cert.claimed, claim_num, claim_den, claim_rounded);
        if (claim_source) *claim_source = dup_string(cert.claimed.source);
        put_i64(achieved, cert.achieved);
        if (params_json) *params_json = dup_string(params_to_json(cert.parameters).dump());
        if (out) *out = new pbdtk_design{std::move(cert.design), std::nullopt};
        return PBDTK_OK;
    });
}

int pbdtk_construct_partition(const char* what, int64_t n, int64_t m,
                              pbdtk_graph** graph_out, pbdtk_partition** out,
                              int64_t* claim_num, int64_t* claim_den,
                              int64_t* claim_rounded, char** claim_source,
                              int64_t* achieved, char** params_json) {
    if (!what) return invalid("what");
    return guarded([&] {
        std::string w = what;
        int ni = static_cast<int>(n), mi = static_cast<int>(m);
        pbdtk::constructions::PartitionCertificate cert;
        if (w == "knkm-trivial") cert = pbdtk::constructions::knkm_trivial(ni, mi);
        else if (w == "knkm-prime") cert = pbdtk::constructions::knkm_prime(ni, mi);
        else if (w == "knkm-resolvable")
            cert = pbdtk::constructions::knkm_resolvable(ni, mi);
        else if (w == "comp-path") cert = pbdtk::constructions::complement_path_partition(ni);
        else if (w == "comp-cycle")
            cert = pbdtk::constructions::complement_cycle_partition(ni);
        else if (w == "cocktail") cert = pbdtk::constructions::cocktail_party_partition(ni);
        else pbdtk::fail(pbdtk::Errc::domain, "unknown partition construction '" + w + "'");
        put_bound(cert.claimed, claim_num, claim_den, claim_rounded);
        if (claim_source) *claim_source = dup_string(cert.claimed.source);
        put_i64(achieved, cert.achieved);
        if (params_json) *params_json = dup_string(params_to_json(cert.parameters).dump());
        if (graph_out) *graph_out = new pbdtk_graph{std::move(cert.graph)};
        if (out) *out = new pbdtk_partition{std::move(cert.partition)};
        return PBDTK_OK;
    });
}

/* ---- exact solver -------------------------------------------------------- */

int pbdtk_exact_scp(const pbdtk_graph* g, uint64_t node_budget, int64_t* optimum,
                    int32_t* proved, uint64_t* nodes, pbdtk_partition** witness) {
    if (!g) return invalid("graph");
    return guarded([&] {
        pbdtk::solver::SolverOptions opt;
        opt.node_budget = node_budget;
        return solver_partition_result(pbdtk::solver::exact_scp(g->graph, opt), optimum,
                                       proved, nodes, witness);
    });
}

int pbdtk_exact_cp(const pbdtk_graph* g, uint64_t node_budget, int64_t* optimum,
                   int32_t* proved, uint64_t* nodes, pbdtk_partition** witness) {
    if (!g) return invalid("graph");
    return guarded([&] {
        pbdtk::solver::SolverOptions opt;
        opt.node_budget = node_budget;
        return solver_partition_result(pbdtk::solver::exact_cp(g->graph, opt), optimum,
                                       proved, nodes, witness);
    });
}

int pbdtk_exact_min_sigma_largest_block(int32_t n, int32_t m, int32_t at_most,
                                        uint64_t node_budget, int64_t* optimum,
                                        int32_t* proved, uint64_t* nodes,
                                        pbdtk_design** witness) {
    return guarded([&] {
        pbdtk::solver::SolverOptions opt;
        opt.node_budget = node_budget;
        auto r = pbdtk::solver::min_sigma_largest_block(n, m, at_most == 0, opt);
        return solver_design_result(r, optimum, proved, nodes, witness);
    });
}

int pbdtk_exact_min_sigma_with_block(int32_t n, int32_t m, uint64_t node_budget,
                                     int64_t* optimum, int32_t* proved,
                                     uint64_t* nodes, pbdtk_design** witness) {
    return guarded([&] {
        pbdtk::solver::SolverOptions opt;
        opt.node_budget = node_budget;
        auto r = pbdtk::solver::min_sigma_with_block(n, m, opt);
        return solver_design_result(r, optimum, proved, nodes, witness);
    });
}

/* ---- files --------------------------------------------------------------- */

int pbdtk_design_write(const pbdtk_design* d, const char* path,
                       const char* extras_json) {
    if (!d || !path) return invalid("design or path");
    return guarded([&] {
        pbdtk::io::DesignDocument doc;
        doc.design = d->design;
        doc.resolution = d->resolution;
        apply_extras(extras_json, doc.metadata, doc.certificate, doc.solver);
        pbdtk::io::write_design_file(path, doc);
        return PBDTK_OK;
    });
}

int pbdtk_design_read(const char* path, pbdtk_design** out) {
    if (!path || !out) return invalid("path or out");
    return guarded([&] {
        auto doc = pbdtk::io::read_design_file(path);
        *out = new pbdtk_design{std::move(doc.design), std::move(doc.resolution)};
        return PBDTK_OK;
    });
}

int pbdtk_partition_write(const pbdtk_graph* g, const pbdtk_partition* p,
                          const char* path, const char* extras_json) {
    if (!g || !p || !path) return invalid("graph, partition or path");
    return guarded([&] {
        pbdtk::io::PartitionDocument doc;
        doc.graph = g->graph;
        doc.partition = p->partition;
        apply_extras(extras_json, doc.metadata, doc.certificate, doc.solver);
        pbdtk::io::write_partition_file(path, doc);
        return PBDTK_OK;
    });
}

int pbdtk_partition_read(const char* path, pbdtk_graph** graph_out,
                         pbdtk_partition** out) {
    if (!path) return invalid("path");
    return guarded([&] {
        auto doc = pbdtk::io::read_partition_file(path);
        if (graph_out) *graph_out = new pbdtk_graph{std::move(doc.graph)};
        if (out) *out = new pbdtk_partition{std::move(doc.partition)};
        return PBDTK_OK;
    });
}

int pbdtk_file_info(const char* path, char** kind, char** certificate_json) {
    if (!path) return invalid("path");
    return guarded([&] {
        std::string text = pbdtk::io::read_text_file(path);
        std::string k = pbdtk::io::document_kind(text);
        if (certificate_json) {
            std::string cert;
            if (k == "design") {
                auto doc = pbdtk::io::parse_design(text);
                if (!doc.certificate.is_null()) cert = doc.certificate.dump();
            } else if (k == "partition") {
                auto doc = pbdtk::io::parse_partition(text);
                if (!doc.certificate.is_null()) cert = doc.certificate.dump();
            }
            *certificate_json = dup_string(cert);
        }
        if (kind) *kind = dup_string(k);
        return PBDTK_OK;
    });
}

int pbdtk_verify_file(const char* path, int32_t* ok, char** report) {
    if (!path) return invalid("path");
    return guarded([&] {
        std::string text = pbdtk::io::read_text_file(path);
        std::string k = pbdtk::io::document_kind(text);
        bool valid = false;
        std::string rep;
        if (k == "design") {
            auto doc = pbdtk::io::parse_design(text);
            auto r = pbdtk::validate_pbd(doc.design);
            valid = r.ok;
            rep = r.text();
            if (doc.resolution) {
                bool res_ok = pbdtk::verify_resolution(doc.design, *doc.resolution);
                valid = valid && res_ok;
                rep += res_ok ? "\nresolution: ok" : "\nresolution: invalid";
            }
        } else if (k == "partition") {
            auto doc = pbdtk::io::parse_partition(text);
            auto r = pbdtk::validate_partition(doc.graph, doc.partition);
            valid = r.ok;
            rep = r.text();
        } else if (k == "edge-coloring") {
            auto doc = pbdtk::io::parse_edge_coloring(text);
            pbdtk::classical::EdgeColoring ec;
            ec.v = doc.n;
            ec.classes = doc.classes;
            std::string why;
            valid = pbdtk::classical::validate_edge_coloring(ec, &why);
            rep = valid ? "ok" : why;
        } else {
            pbdtk::fail(pbdtk::Errc::parse, "unknown document kind '" + k + "'");
        }
        put_i32(ok, valid ? 1 : 0);
        if (report) *report = dup_string(rep);
        return PBDTK_OK;
    });
}

int pbdtk_file_checksum(const char* path, char** hex) {
    if (!path || !hex) return invalid("path or hex");
    return guarded([&] {
        *hex = dup_string(pbdtk::io::fnv1a64_hex(pbdtk::io::read_text_file(path)));
        return PBDTK_OK;
    });
}

} // extern "C"
