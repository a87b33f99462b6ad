// pbdtk command-line front end.  Every number printed here comes straight
// from the shared library through the C interface; the tool itself only
// parses flags, formats output and moves files around.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <pbdtk.h>

namespace {

using nlohmann::json;

// Exit codes: 0 ok, 1 usage, 2 validation/domain failure, 3 budget exhausted.
int exit_code_for(int status) {
    switch (status) {
        case PBDTK_OK: return 0;
        case PBDTK_E_BUDGET:
        case PBDTK_E_SEARCH_EXHAUSTED: return 3;
        default: return 2;
    }
}

[[noreturn]] void die(int status) {
    std::fprintf(stderr, "error: %s\n", pbdtk_last_error());
    std::exit(exit_code_for(status));
}

void need(int status) {
    if (status != PBDTK_OK) die(status);
}

[[noreturn]] void usage_error(const std::string& message) {
    std::fprintf(stderr, "usage error: %s\n", message.c_str());
    std::exit(1);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    pbdtk_string_free(s);
    return out;
}

// "p/q (approx x.xxxxxx)" for proper fractions, plain integer otherwise.
// Golden comparisons rely only on the exact p/q part.
std::string rat_str(int64_t num, int64_t den) {
    if (den == 1) return std::to_string(num);
    char approx[48];
    std::snprintf(approx, sizeof approx, "%.6f",
                  static_cast<double>(num) / static_cast<double>(den));
    return std::to_string(num) + "/" + std::to_string(den) + " (approx " + approx + ")";
}

uint64_t env_solver_budget() {
    const char* v = std::getenv("PBDTK_SOLVER_CAP");
    if (!v || !*v) return 0;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0') usage_error("PBDTK_SOLVER_CAP must be an integer");
    return static_cast<uint64_t>(parsed);
}

json certificate_json(const std::string& construction, const json& params,
                      int64_t claim_num, int64_t claim_den, int64_t claim_rounded,
                      const std::string& source, int64_t achieved) {
    json cert;
    cert["construction"] = construction;
    cert["parameters"] = params;
    cert["claimed"] = claim_den == 1 ? std::to_string(claim_num)
                                     : std::to_string(claim_num) + "/" +
                                           std::to_string(claim_den);
    cert["claimed_rounded"] = claim_rounded;
    cert["source"] = source;
    cert["achieved"] = achieved;
    return cert;
}

void print_valency_histogram(const std::map<int64_t, int64_t>& hist) {
    std::printf("valency histogram:");
    for (const auto& [valency, count] : hist)
        std::printf(" %" PRId64 "x%" PRId64, valency, count);
    std::printf("\n");
}

// ---- verify -----------------------------------------------------------

int verify_design_file(const std::string& path) {
    pbdtk_design* d = nullptr;
    need(pbdtk_design_read(path.c_str(), &d));

    int32_t n = 0, ok = 0, nontrivial = 0, near_pencil = 0, max_block = 0;
    int64_t blocks = 0, sig = 0;
    char* report = nullptr;
    need(pbdtk_design_n(d, &n));
    need(pbdtk_design_block_count(d, &blocks));
    need(pbdtk_design_sigma(d, &sig));
    need(pbdtk_design_max_block(d, &max_block));
    need(pbdtk_design_validate(d, &ok, &nontrivial, &near_pencil, &report));

    std::printf("kind: design\n");
    std::printf("n: %d\nblocks: %" PRId64 "\nsigma: %" PRId64 "\nmax block: %d\n", n,
                blocks, sig, max_block);

    std::map<int64_t, int64_t> hist;
    int64_t max_valency = 0;
    for (int32_t p = 0; p < n; ++p) {
        int64_t v = 0;
        need(pbdtk_design_valency(d, p, &v));
        ++hist[v];
        if (v > max_valency) max_valency = v;
    }
    print_valency_histogram(hist);

    std::printf("valid: %s\n", ok ? "yes" : "no");
    if (!ok) std::printf("%s\n", take_string(report).c_str());
    else pbdtk_string_free(report);
    std::printf("nontrivial: %s\nnear-pencil: %s\n", nontrivial ? "yes" : "no",
                near_pencil ? "yes" : "no");

    bool overall = ok != 0;
    int64_t classes = 0;
    need(pbdtk_design_class_count(d, &classes));
    if (classes > 0) {
        int32_t res_ok = 0;
        need(pbdtk_design_verify_resolution(d, &res_ok));
        std::printf("resolution: %" PRId64 " classes (%s)\n", classes,
                    res_ok ? "ok" : "invalid");
        overall = overall && res_ok;
    }

    if (ok && n >= 3) {
        std::vector<std::string> eq;
        int64_t num = 0, den = 0, rounded = 0;
        need(pbdtk_sigma_lower_basic(n, &num, &den, &rounded));
        if (sig == rounded) eq.push_back("sigma=3n-3");
        need(pbdtk_max_valency_lower(n, &num, &den, &rounded));
        if (max_valency == rounded) eq.push_back("max-valency");
        int32_t applies = 0;
        need(pbdtk_no_large_block_applies(n, max_block, &applies));
        if (n >= 10 && applies) {
            need(pbdtk_sigma_lower_no_large_block(n, &num, &den, &rounded));
            if (sig == rounded) eq.push_back("no-large-block");
        }
        std::printf("equalities:");
        if (eq.empty()) std::printf(" none");
        for (const auto& e : eq) std::printf(" %s", e.c_str());
        std::printf("\n");
    }

    pbdtk_design_free(d);
    return overall ? 0 : 2;
}

int verify_partition_file(const std::string& path) {
    pbdtk_graph* g = nullptr;
    pbdtk_partition* p = nullptr;
    need(pbdtk_partition_read(path.c_str(), &g, &p));

    int32_t n = 0, ok = 0;
    int64_t edges = 0, cliques = 0, sig = 0;
    char* family = nullptr;
    char* report = nullptr;
    need(pbdtk_graph_n(g, &n));
    need(pbdtk_graph_edge_count(g, &edges));
    need(pbdtk_graph_family(g, &family));
    need(pbdtk_partition_clique_count(p, &cliques));
    need(pbdtk_partition_sigma(p, &sig));
    need(pbdtk_partition_validate(g, p, &ok, &report));

    std::printf("kind: partition\n");
    std::printf("family: %s\nn: %d\nedges: %" PRId64 "\ncliques: %" PRId64
                "\nsigma: %" PRId64 "\n",
                take_string(family).c_str(), n, edges, cliques, sig);

    std::map<int64_t, int64_t> per_vertex;
    std::vector<int64_t> counts(static_cast<std::size_t>(n), 0);
    for (int64_t i = 0; i < cliques; ++i) {
        int32_t size = 0;
        need(pbdtk_partition_clique_size(p, i, &size));
        for (int32_t j = 0; j < size; ++j) {
            int32_t v = 0;
            need(pbdtk_partition_clique_member(p, i, j, &v));
            if (v >= 0 && v < n) ++counts[static_cast<std::size_t>(v)];
        }
    }
    for (int64_t c : counts) ++per_vertex[c];
    print_valency_histogram(per_vertex);

    std::printf("valid: %s\n", ok ? "yes" : "no");
    if (!ok) std::printf("%s\n", take_string(report).c_str());
    else pbdtk_string_free(report);

    pbdtk_partition_free(p);
    pbdtk_graph_free(g);
    return ok ? 0 : 2;
}

int cmd_verify(const std::string& file, const std::string& as) {
    char* kind_raw = nullptr;
    need(pbdtk_file_info(file.c_str(), &kind_raw, nullptr));
    std::string kind = take_string(kind_raw);
    if (!as.empty()) {
        std::string expected = as == "pbd" ? "design" : "partition";
        if (kind != expected) {
            std::fprintf(stderr, "error: file holds a %s document, not %s\n",
                         kind.c_str(), expected.c_str());
            return 2;
        }
    }
    if (kind == "design") return verify_design_file(file);
    if (kind == "partition") return verify_partition_file(file);

    int32_t ok = 0;
    char* report = nullptr;
    need(pbdtk_verify_file(file.c_str(), &ok, &report));
    std::printf("kind: %s\nvalid: %s\n", kind.c_str(), ok ? "yes" : "no");
    if (!ok) std::printf("%s\n", take_string(report).c_str());
    else pbdtk_string_free(report);
    return ok ? 0 : 2;
}

// ---- plane --------------------------------------------------------------

int cmd_plane(const std::string& kind, uint32_t order, const std::string& out) {
    pbdtk_design* d = nullptr;
    if (kind == "affine") need(pbdtk_affine_plane(order, &d));
    else if (kind == "projective") need(pbdtk_projective_plane(order, &d));
    else usage_error("--kind must be affine or projective");

    int32_t n = 0;
    int64_t blocks = 0, sig = 0, classes = 0;
    need(pbdtk_design_n(d, &n));
    need(pbdtk_design_block_count(d, &blocks));
    need(pbdtk_design_sigma(d, &sig));
    need(pbdtk_design_class_count(d, &classes));

    std::printf("kind: %s\norder: %u\nn: %d\nblocks: %" PRId64 "\nsigma: %" PRId64 "\n",
                kind.c_str(), order, n, blocks, sig);
    if (classes > 0) std::printf("classes: %" PRId64 "\n", classes);

    if (!out.empty()) {
        json extras;
        extras["metadata"] = {{"kind", kind}, {"order", order}};
        need(pbdtk_design_write(d, out.c_str(), extras.dump().c_str()));
        std::printf("written: %s\n", out.c_str());
    }
    pbdtk_design_free(d);
    return 0;
}

// ---- bounds ---------------------------------------------------------------

int cmd_bounds(int64_t n, int64_t tau, int64_t m, bool have_tau, bool have_m, bool csv) {
    if (csv) {
        char* text = nullptr;
        need(pbdtk_bounds_csv(n, &text));
        std::fputs(take_string(text).c_str(), stdout);
        return 0;
    }

    int64_t num = 0, den = 0, rounded = 0;
    need(pbdtk_sigma_lower_basic(n, &num, &den, &rounded));
    std::printf("dbe: %s\n", rat_str(num, den).c_str());
    need(pbdtk_max_valency_lower(n, &num, &den, &rounded));
    std::printf("max-valency: %s\n", rat_str(num, den).c_str());
    if (n >= 10) {
        need(pbdtk_sigma_lower_no_large_block(n, &num, &den, &rounded));
        std::printf("no-large-block: %s\n", rat_str(num, den).c_str());
    }

    if (have_tau) {
        for (const char* tag : {"A", "B", "C"}) {
            need(pbdtk_bound_tagged(tag, n, tau, &num, &den, &rounded));
            std::printf("%s: %s (rounded %" PRId64 ")\n", tag, rat_str(num, den).c_str(),
                        rounded);
        }
        char* source = nullptr;
        need(pbdtk_best_sigma_lower(n, tau, &num, &den, &rounded, &source));
        std::printf("best: %s (rounded %" PRId64 ", source %s)\n",
                    rat_str(num, den).c_str(), rounded, take_string(source).c_str());
    }

    if (have_m) {
        int64_t lo_num = 0, lo_den = 0, lo_rounded = 0;
        int64_t up_num = 0, up_den = 0, up_rounded = 0;
        need(pbdtk_scp_clique_bounds(n, m, &lo_num, &lo_den, &lo_rounded, &up_num,
                                     &up_den, &up_rounded));
        std::printf("scp lower: %s (rounded %" PRId64 ")\n",
                    rat_str(lo_num, lo_den).c_str(), lo_rounded);
        std::printf("scp upper: %s\n", rat_str(up_num, up_den).c_str());
        if (2 * m >= n) {
            need(pbdtk_scp_clique_exact_half(n, m, &num, &den, &rounded));
            std::printf("scp exact: %s (rounded %" PRId64 ")\n",
                        rat_str(num, den).c_str(), rounded);
        }
        if (4 * m * m <= n) {
            need(pbdtk_scp_clique_sparse_lower(n, m, &num, &den, &rounded));
            std::printf("scp sparse lower: %s (rounded %" PRId64 ")\n",
                        rat_str(num, den).c_str(), rounded);
        }
        if (2 * m < n) {
            int64_t cl_num = 0, cl_den = 0, cu_num = 0, cu_den = 0;
            need(pbdtk_scp_density_coefficients(n, m, &cl_num, &cl_den, &cu_num, &cu_den));
            std::printf("density coefficients: %s .. %s\n",
                        rat_str(cl_num, cl_den).c_str(), rat_str(cu_num, cu_den).c_str());
        }
    }
    return 0;
}

// ---- construct --------------------------------------------------------------

int cmd_construct(const std::string& what, int64_t n, int64_t m, int64_t k, int64_t q,
                  bool have_n, bool have_m, bool have_k, bool have_q,
                  const std::string& out) {
    const bool is_design =
        what == "near-pencil" || what == "pbdc" || what == "thm24";
    const bool is_partition = what == "knkm-trivial" || what == "knkm-prime" ||
                              what == "knkm-resolvable" || what == "comp-path" ||
                              what == "comp-cycle" || what == "cocktail";
    if (!is_design && !is_partition)
        usage_error("unknown construction '" + what + "'");

    if (what == "thm24") {
        if (!have_q) usage_error("thm24 needs --q");
    } else if (!have_n) {
        usage_error(what + " needs --n");
    }
    if (what == "pbdc" && !have_k) usage_error("pbdc needs --k");
    if ((what == "knkm-trivial" || what == "knkm-prime" || what == "knkm-resolvable") &&
        !have_m)
        usage_error(what + " needs --m");

    int64_t claim_num = 0, claim_den = 0, claim_rounded = 0, achieved = 0;
    char* claim_source = nullptr;
    char* params_text = nullptr;

    pbdtk_design* d = nullptr;
    pbdtk_graph* g = nullptr;
    pbdtk_partition* p = nullptr;
    if (is_design) {
        int64_t a = what == "thm24" ? q : n;
        int64_t b = what == "pbdc" ? k : 0;
        need(pbdtk_construct_design(what.c_str(), a, b, &d, &claim_num, &claim_den,
                                    &claim_rounded, &claim_source, &achieved,
                                    &params_text));
    } else {
        need(pbdtk_construct_partition(what.c_str(), n, have_m ? m : 0, &g, &p,
                                       &claim_num, &claim_den, &claim_rounded,
                                       &claim_source, &achieved, &params_text));
    }
    std::string source = take_string(claim_source);
    json params = json::parse(take_string(params_text));

    std::printf("construction: %s\n", what.c_str());
    std::printf("parameters:");
    for (const auto& [key, value] : params.items())
        std::printf(" %s=%s", key.c_str(), value.dump().c_str());
    std::printf("\n");
    std::printf("claimed: %s (rounded %" PRId64 ", source %s)\n",
                rat_str(claim_num, claim_den).c_str(), claim_rounded, source.c_str());
    std::printf("achieved sigma: %" PRId64 "\n", achieved);
    if (is_design)
        std::printf("equality: %s\n",
                    achieved == claim_num && claim_den == 1 ? "yes" : "no");
    if (what == "comp-path") {
        double nn = static_cast<double>(n);
        std::printf("ratio sigma/n^1.5: %.6f\n",
                    static_cast<double>(achieved) / (nn * std::sqrt(nn)));
    }

    if (!out.empty()) {
        json extras;
        extras["certificate"] = certificate_json(what, params, claim_num, claim_den,
                                                 claim_rounded, source, achieved);
        if (is_design)
            need(pbdtk_design_write(d, out.c_str(), extras.dump().c_str()));
        else
            need(pbdtk_partition_write(g, p, out.c_str(), extras.dump().c_str()));
        std::printf("written: %s\n", out.c_str());
    }

    pbdtk_design_free(d);
    pbdtk_partition_free(p);
    pbdtk_graph_free(g);
    return 0;
}

// ---- exact ---------------------------------------------------------------

int cmd_exact(const std::string& objective, const std::string& family, int32_t n,
              int32_t m, bool have_m, bool at_most, uint64_t budget,
              const std::string& out) {
    int64_t optimum = 0;
    int32_t proved = 0;
    uint64_t nodes = 0;

    pbdtk_design* wd = nullptr;
    pbdtk_graph* g = nullptr;
    pbdtk_partition* wp = nullptr;

    if (objective == "scp" || objective == "cp") {
        if (family.empty()) usage_error("--objective " + objective + " needs --family");
        if (family == "knkm" && !have_m) usage_error("family knkm needs --m");
        need(pbdtk_graph_create(family.c_str(), n, have_m ? m : 0, &g));
        int status = objective == "scp"
                         ? pbdtk_exact_scp(g, budget, &optimum, &proved, &nodes, &wp)
                         : pbdtk_exact_cp(g, budget, &optimum, &proved, &nodes, &wp);
        need(status);
    } else if (objective == "S") {
        if (!have_m) usage_error("--objective S needs --m");
        need(pbdtk_exact_min_sigma_largest_block(n, m, at_most ? 1 : 0, budget, &optimum,
                                                 &proved, &nodes, &wd));
    } else if (objective == "Sprime") {
        if (!have_m) usage_error("--objective Sprime needs --m");
        need(pbdtk_exact_min_sigma_with_block(n, m, budget, &optimum, &proved, &nodes,
                                              &wd));
    } else {
        usage_error("--objective must be scp, cp, S or Sprime");
    }

    std::printf("objective: %s\n", objective.c_str());
    std::printf("optimum: %" PRId64 "\nproved optimal: %s\nnodes: %" PRIu64 "\n",
                optimum, proved ? "yes" : "no", nodes);

    if (!out.empty()) {
        json extras;
        extras["solver"] = {{"objective", objective},
                            {"budget", budget},
                            {"nodes", nodes},
                            {"proved_optimal", proved != 0}};
        if (wd) need(pbdtk_design_write(wd, out.c_str(), extras.dump().c_str()));
        else need(pbdtk_partition_write(g, wp, out.c_str(), extras.dump().c_str()));
        std::printf("witness: %s\n", out.c_str());
    }

    pbdtk_design_free(wd);
    pbdtk_partition_free(wp);
    pbdtk_graph_free(g);
    return proved ? 0 : 3;
}

// ---- catalog ----------------------------------------------------------------

std::string catalog_index_path(const std::string& dir) { return dir + "/catalog.json"; }

json load_catalog(const std::string& dir) {
    std::FILE* f = std::fopen(catalog_index_path(dir).c_str(), "rb");
    if (!f) return json{{"version", 1}, {"entries", json::array()}};
    std::string text;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
    std::fclose(f);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("entries") ||
        !j["entries"].is_array()) {
        std::fprintf(stderr, "error: malformed catalog index in %s\n", dir.c_str());
        std::exit(2);
    }
    return j;
}

void store_catalog(const std::string& dir, const json& j) {
    std::FILE* f = std::fopen(catalog_index_path(dir).c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "error: cannot write catalog index in %s\n", dir.c_str());
        std::exit(2);
    }
    std::string text = j.dump(2) + "\n";
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

// Entries inside the catalog directory are stored relative to it.
std::string entry_path(const std::string& dir, const std::string& file) {
    std::string prefix = dir;
    if (!prefix.empty() && prefix.back() != '/') prefix += '/';
    if (file.rfind(prefix, 0) == 0) return file.substr(prefix.size());
    return file;
}

std::string resolve_path(const std::string& dir, const std::string& stored) {
    if (!stored.empty() && stored.front() == '/') return stored;
    return dir + "/" + stored;
}

int cmd_catalog(const std::string& action, const std::string& dir,
                const std::string& file) {
    json cat = load_catalog(dir);

    if (action == "list") {
        for (const auto& e : cat["entries"])
            std::printf("%s  kind=%s  checksum=%s  parameters=%s\n",
                        e.value("path", "?").c_str(), e.value("kind", "?").c_str(),
                        e.value("checksum", "?").c_str(),
                        e.value("parameters", json::object()).dump().c_str());
        std::printf("%zu entries\n", cat["entries"].size());
        return 0;
    }

    if (action == "add") {
        if (file.empty()) usage_error("catalog add needs --file");
        int32_t ok = 0;
        char* report = nullptr;
        need(pbdtk_verify_file(file.c_str(), &ok, &report));
        if (!ok) {
            std::fprintf(stderr, "validation failed: %s\n%s\n", file.c_str(),
                         take_string(report).c_str());
            return 2;
        }
        pbdtk_string_free(report);

        char* kind = nullptr;
        char* cert_text = nullptr;
        need(pbdtk_file_info(file.c_str(), &kind, &cert_text));
        char* checksum = nullptr;
        need(pbdtk_file_checksum(file.c_str(), &checksum));

        json params = json::object();
        std::string cert_str = take_string(cert_text);
        if (!cert_str.empty()) {
            json cert = json::parse(cert_str, nullptr, false);
            if (cert.is_object()) {
                if (cert.contains("construction"))
                    params["construction"] = cert["construction"];
                if (cert.contains("parameters") && cert["parameters"].is_object())
                    for (const auto& [key, value] : cert["parameters"].items())
                        params[key] = value;
            }
        }

        std::string stored = entry_path(dir, file);
        json entry = {{"path", stored},
                      {"kind", take_string(kind)},
                      {"parameters", params},
                      {"checksum", take_string(checksum)}};
        auto& entries = cat["entries"];
        bool replaced = false;
        for (auto& e : entries)
            if (e.value("path", "") == stored) {
                e = entry;
                replaced = true;
            }
        if (!replaced) entries.push_back(entry);
        store_catalog(dir, cat);
        std::printf("%s: %s\n", replaced ? "updated" : "added", stored.c_str());
        return 0;
    }

    if (action == "check") {
        int failures = 0;
        for (const auto& e : cat["entries"]) {
            std::string stored = e.value("path", "");
            std::string full = resolve_path(dir, stored);
            char* checksum = nullptr;
            int status = pbdtk_file_checksum(full.c_str(), &checksum);
            if (status != PBDTK_OK) {
                std::fprintf(stderr, "unreadable: %s (%s)\n", stored.c_str(),
                             pbdtk_last_error());
                ++failures;
                continue;
            }
            std::string sum = take_string(checksum);
            if (sum != e.value("checksum", "")) {
                std::fprintf(stderr, "checksum mismatch: %s\n", stored.c_str());
                ++failures;
                continue;
            }
            int32_t ok = 0;
            char* report = nullptr;
            status = pbdtk_verify_file(full.c_str(), &ok, &report);
            if (status != PBDTK_OK) {
                std::fprintf(stderr, "unparsable: %s (%s)\n", stored.c_str(),
                             pbdtk_last_error());
                ++failures;
                continue;
            }
            if (!ok) {
                std::fprintf(stderr, "validation failed: %s\n%s\n", stored.c_str(),
                             take_string(report).c_str());
                ++failures;
                continue;
            }
            pbdtk_string_free(report);
            std::printf("ok: %s\n", stored.c_str());
        }
        std::printf("%zu entries, %d failures\n", cat["entries"].size(), failures);
        return failures == 0 ? 0 : 2;
    }

    usage_error("catalog action must be list, add or check");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for pairwise balanced designs and minimum-sigma clique "
                 "partitions"};
    app.require_subcommand(1);

    // plane
    auto* plane = app.add_subcommand("plane", "Generate an affine or projective plane");
    std::string plane_kind, plane_out;
    uint32_t plane_order = 0;
    plane->add_option("--kind", plane_kind, "affine or projective")->required();
    plane->add_option("--order", plane_order, "plane order (prime power)")->required();
    plane->add_option("--out", plane_out, "write the design file here");

    // verify
    auto* verify = app.add_subcommand("verify", "Validate a design or partition file");
    std::string verify_file, verify_as;
    verify->add_option("--file", verify_file, "document to check")->required();
    verify->add_option("--as", verify_as, "expected kind: pbd or partition")
        ->check(CLI::IsMember({"pbd", "partition"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Evaluate sigma bounds");
    int64_t bounds_n = 0, bounds_tau = 0, bounds_m = 0;
    bool bounds_csv = false;
    bounds->add_option("--n", bounds_n, "number of points")->required();
    auto* tau_opt = bounds->add_option("--tau", bounds_tau, "largest block size");
    auto* m_opt = bounds->add_option("--m", bounds_m, "removed clique size");
    tau_opt->excludes(m_opt);
    m_opt->excludes(tau_opt);
    bounds->add_flag("--csv", bounds_csv, "emit the tau table as CSV");

    // construct
    auto* construct = app.add_subcommand("construct", "Run a named construction");
    std::string construct_what, construct_out;
    int64_t construct_n = 0, construct_m = 0, construct_k = 0, construct_q = 0;
    construct
        ->add_option("--what", construct_what,
                     "near-pencil|pbdc|thm24|knkm-trivial|knkm-prime|knkm-resolvable|"
                     "comp-path|comp-cycle|cocktail")
        ->required();
    auto* cn = construct->add_option("--n", construct_n, "number of points/vertices");
    auto* cm = construct->add_option("--m", construct_m, "removed clique size");
    auto* ck = construct->add_option("--k", construct_k, "distinguished block size");
    auto* cq = construct->add_option("--q", construct_q, "plane order");
    construct->add_option("--out", construct_out, "write the certificate file here");

    // exact
    auto* exact = app.add_subcommand("exact", "Exhaustive branch-and-bound oracle");
    std::string exact_objective, exact_family, exact_out;
    int32_t exact_n = 0, exact_m = 0;
    int exact_threads = 1;
    bool exact_at_most = false;
    uint64_t exact_budget = 0;
    exact->add_option("--objective", exact_objective, "scp|cp|S|Sprime")->required();
    exact->add_option("--family", exact_family, "knkm|comp-path|comp-cycle|cocktail");
    exact->add_option("--n", exact_n, "size parameter")->required();
    auto* em = exact->add_option("--m", exact_m, "block/clique size parameter");
    exact->add_flag("--at-most", exact_at_most,
                    "objective S: largest block at most m instead of exactly m");
    auto* eb = exact->add_option("--budget", exact_budget, "search node budget");
    exact->add_option("--threads", exact_threads,
                      "worker count (execution is sequential and deterministic)")
        ->check(CLI::PositiveNumber);
    exact->add_option("--out", exact_out, "write the witness file here");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "Maintain a directory of documents");
    std::string catalog_action, catalog_dir, catalog_file;
    catalog->add_option("action", catalog_action, "list|add|check")->required();
    catalog->add_option("--dir", catalog_dir, "catalog directory")->required();
    catalog->add_option("--file", catalog_file, "document to add");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (plane->parsed()) return cmd_plane(plane_kind, plane_order, plane_out);
    if (verify->parsed()) return cmd_verify(verify_file, verify_as);
    if (bounds->parsed())
        return cmd_bounds(bounds_n, bounds_tau, bounds_m, tau_opt->count() > 0,
                          m_opt->count() > 0, bounds_csv);
    if (construct->parsed())
        return cmd_construct(construct_what, construct_n, construct_m, construct_k,
                             construct_q, cn->count() > 0, cm->count() > 0,
                             ck->count() > 0, cq->count() > 0, construct_out);
    if (exact->parsed()) {
        uint64_t budget = eb->count() > 0 ? exact_budget : env_solver_budget();
        return cmd_exact(exact_objective, exact_family, exact_n, exact_m,
                         em->count() > 0, exact_at_most, budget, exact_out);
    }
    if (catalog->parsed()) return cmd_catalog(catalog_action, catalog_dir, catalog_file);
    return 1;
}
