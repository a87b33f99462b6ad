#include "doctest.h"

#include "pbdtk.h"

#include <cctype>
#include <cstring>
#include <filesystem>
#include <string>

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    pbdtk_string_free(s);
    return out;
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("pbdtk_capi_" + name)).string();
}

} // namespace

TEST_CASE("version and error strings") {
    const char* v = pbdtk_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
    const char* e = pbdtk_last_error();
    REQUIRE(e != nullptr);
}

TEST_CASE("null arguments are rejected with a message") {
    CHECK(pbdtk_design_n(nullptr, nullptr) == PBDTK_E_INVALID_ARGUMENT);
    CHECK(std::strlen(pbdtk_last_error()) > 0);

    int32_t n = 0;
    CHECK(pbdtk_design_n(nullptr, &n) == PBDTK_E_INVALID_ARGUMENT);
    CHECK(pbdtk_graph_create(nullptr, 5, 0, nullptr) == PBDTK_E_INVALID_ARGUMENT);
    CHECK(pbdtk_file_checksum(nullptr, nullptr) == PBDTK_E_INVALID_ARGUMENT);
}

TEST_CASE("freeing NULL handles is a no-op") {
    pbdtk_design_free(nullptr);
    pbdtk_graph_free(nullptr);
    pbdtk_partition_free(nullptr);
    pbdtk_string_free(nullptr);
}

TEST_CASE("affine plane of non-prime-power order fails") {
    pbdtk_design* d = nullptr;
    CHECK(pbdtk_affine_plane(6, &d) == PBDTK_E_NOT_PRIME_POWER);
    CHECK(d == nullptr);
    std::string msg = pbdtk_last_error();
    CHECK(msg.find("prime") != std::string::npos);
}

TEST_CASE("affine plane of order 3 through the C surface") {
    pbdtk_design* d = nullptr;
    REQUIRE(pbdtk_affine_plane(3, &d) == PBDTK_OK);
    REQUIRE(d != nullptr);

    int32_t n = 0;
    CHECK(pbdtk_design_n(d, &n) == PBDTK_OK);
    CHECK(n == 9);

    int64_t blocks = 0;
    CHECK(pbdtk_design_block_count(d, &blocks) == PBDTK_OK);
    CHECK(blocks == 12);

    int64_t sigma = 0;
    CHECK(pbdtk_design_sigma(d, &sigma) == PBDTK_OK);
    CHECK(sigma == 36);

    int32_t maxb = 0;
    CHECK(pbdtk_design_max_block(d, &maxb) == PBDTK_OK);
    CHECK(maxb == 3);

    int64_t classes = 0;
    CHECK(pbdtk_design_class_count(d, &classes) == PBDTK_OK);
    CHECK(classes == 4);

    for (int32_t p = 0; p < 9; ++p) {
        int64_t val = 0;
        CHECK(pbdtk_design_valency(d, p, &val) == PBDTK_OK);
        CHECK(val == 4);
    }

    // Every block is readable and in range.
    for (int64_t b = 0; b < blocks; ++b) {
        int32_t size = 0;
        REQUIRE(pbdtk_design_block_size(d, b, &size) == PBDTK_OK);
        CHECK(size == 3);
        for (int32_t pos = 0; pos < size; ++pos) {
            int32_t pt = -1;
            REQUIRE(pbdtk_design_block_point(d, b, pos, &pt) == PBDTK_OK);
            CHECK(pt >= 0);
            CHECK(pt < 9);
        }
    }
    int32_t size = 0;
    CHECK(pbdtk_design_block_size(d, blocks, &size) == PBDTK_E_DOMAIN);

    int32_t ok = 0, nontrivial = 0, pencil = 0;
    char* report = nullptr;
    REQUIRE(pbdtk_design_validate(d, &ok, &nontrivial, &pencil, &report) == PBDTK_OK);
    CHECK(ok == 1);
    CHECK(nontrivial == 1);
    CHECK(pencil == 0);
    CHECK(take(report) == "ok");

    int32_t res_ok = 0;
    CHECK(pbdtk_design_verify_resolution(d, &res_ok) == PBDTK_OK);
    CHECK(res_ok == 1);

    pbdtk_design_free(d);
}

TEST_CASE("design file round trip, info, verification and checksum") {
    pbdtk_design* d = nullptr;
    REQUIRE(pbdtk_affine_plane(3, &d) == PBDTK_OK);
    std::string path = tmp_path("affine3.json");
    REQUIRE(pbdtk_design_write(d, path.c_str(),
                               "{\"metadata\":{\"note\":\"round trip\"}}") == PBDTK_OK);
    pbdtk_design_free(d);

    char* kind = nullptr;
    char* cert = nullptr;
    REQUIRE(pbdtk_file_info(path.c_str(), &kind, &cert) == PBDTK_OK);
    CHECK(take(kind) == "design");
    CHECK(take(cert) == "");

    pbdtk_design* back = nullptr;
    REQUIRE(pbdtk_design_read(path.c_str(), &back) == PBDTK_OK);
    int32_t n = 0;
    CHECK(pbdtk_design_n(back, &n) == PBDTK_OK);
    CHECK(n == 9);
    int32_t res_ok = 0;
    CHECK(pbdtk_design_verify_resolution(back, &res_ok) == PBDTK_OK);
    CHECK(res_ok == 1);
    pbdtk_design_free(back);

    int32_t ok = 0;
    char* report = nullptr;
    REQUIRE(pbdtk_verify_file(path.c_str(), &ok, &report) == PBDTK_OK);
    CHECK(ok == 1);
    CHECK(take(report).find("ok") != std::string::npos);

    char* hex1 = nullptr;
    char* hex2 = nullptr;
    REQUIRE(pbdtk_file_checksum(path.c_str(), &hex1) == PBDTK_OK);
    REQUIRE(pbdtk_file_checksum(path.c_str(), &hex2) == PBDTK_OK);
    std::string h1 = take(hex1), h2 = take(hex2);
    CHECK(h1 == h2);
    CHECK(h1.size() == 16);
    for (char c : h1) CHECK(std::isxdigit(static_cast<unsigned char>(c)));

    std::filesystem::remove(path);

    pbdtk_design* missing = nullptr;
    CHECK(pbdtk_design_read(path.c_str(), &missing) == PBDTK_E_IO);
}

TEST_CASE("resolvable design error codes surface unchanged") {
    pbdtk_design* d = nullptr;
    CHECK(pbdtk_resolvable_design(7, 2, 0, &d) == PBDTK_E_CONGRUENCE);
    CHECK(pbdtk_resolvable_design(8, 4, 0, &d) == PBDTK_E_UNSUPPORTED_K);
    REQUIRE(pbdtk_resolvable_design(8, 2, 0, &d) == PBDTK_OK);
    int64_t classes = 0;
    CHECK(pbdtk_design_class_count(d, &classes) == PBDTK_OK);
    CHECK(classes == 7);
    pbdtk_design_free(d);
}

TEST_CASE("graph creation and accessors") {
    pbdtk_graph* g = nullptr;
    REQUIRE(pbdtk_graph_create("knkm", 6, 3, &g) == PBDTK_OK);
    int32_t n = 0;
    CHECK(pbdtk_graph_n(g, &n) == PBDTK_OK);
    CHECK(n == 6);
    int64_t edges = 0;
    CHECK(pbdtk_graph_edge_count(g, &edges) == PBDTK_OK);
    CHECK(edges == 12); // C(6,2) - C(3,2)
    char* fam = nullptr;
    CHECK(pbdtk_graph_family(g, &fam) == PBDTK_OK);
    CHECK(take(fam) == "knkm");
    int32_t omega = 0;
    CHECK(pbdtk_graph_clique_number(g, &omega) == PBDTK_OK);
    CHECK(omega == 4);
    pbdtk_graph_free(g);

    pbdtk_graph* bad = nullptr;
    CHECK(pbdtk_graph_create("explicit", 5, 0, &bad) == PBDTK_E_DOMAIN);
    CHECK(pbdtk_graph_create("no-such-family", 5, 0, &bad) == PBDTK_E_PARSE);
}

TEST_CASE("scalar bounds through the C surface") {
    int64_t num = 0, den = 0, rounded = 0;

    REQUIRE(pbdtk_sigma_lower_basic(10, &num, &den, &rounded) == PBDTK_OK);
    CHECK(num == 27);
    CHECK(den == 1);
    CHECK(rounded == 27);

    REQUIRE(pbdtk_max_valency_lower(7, &num, &den, &rounded) == PBDTK_OK);
    CHECK(rounded == 3);

    REQUIRE(pbdtk_bound_tagged("A", 21, 5, &num, &den, &rounded) == PBDTK_OK);
    CHECK(num == 105);
    CHECK(den == 1);

    REQUIRE(pbdtk_bound_tagged("B", 21, 10, &num, &den, &rounded) == PBDTK_OK);
    CHECK(num == 175);
    CHECK(pbdtk_bound_tagged("D", 21, 10, &num, &den, &rounded) == PBDTK_E_DOMAIN);

    char* source = nullptr;
    REQUIRE(pbdtk_best_sigma_lower(21, 15, &num, &den, &rounded, &source) == PBDTK_OK);
    CHECK(num == 180);
    CHECK(den == 1);
    CHECK(take(source) == "C");

    REQUIRE(pbdtk_sigma_lower_no_large_block(10, &num, &den, &rounded) == PBDTK_OK);
    CHECK(rounded == 39);

    int32_t applies = -1;
    REQUIRE(pbdtk_no_large_block_applies(10, 3, &applies) == PBDTK_OK);
    CHECK(applies == 1);
    REQUIRE(pbdtk_no_large_block_applies(10, 8, &applies) == PBDTK_OK);
    CHECK(applies == 0);
}

TEST_CASE("clique-removal bounds through the C surface") {
    int64_t lo_num = 0, lo_den = 0, lo_rounded = 0;
    int64_t up_num = 0, up_den = 0, up_rounded = 0;
    REQUIRE(pbdtk_scp_clique_bounds(50, 8, &lo_num, &lo_den, &lo_rounded,
                                    &up_num, &up_den, &up_rounded) == PBDTK_OK);
    CHECK(lo_num == 2736); // 400 - 64/7, fully reduced
    CHECK(lo_den == 7);
    CHECK(lo_rounded == 391);
    CHECK(up_num == 631);
    CHECK(up_den == 1);
    CHECK(up_rounded == 631);

    int64_t num = 0, den = 0, rounded = 0;
    REQUIRE(pbdtk_scp_clique_exact_half(7, 4, &num, &den, &rounded) == PBDTK_OK);
    CHECK(num == 21);
    CHECK(den == 1);

    REQUIRE(pbdtk_scp_clique_sparse_lower(17, 2, &num, &den, &rounded) == PBDTK_OK);
    CHECK(rounded == 46);

    REQUIRE(pbdtk_scp_density_coefficients(50, 8, &lo_num, &lo_den, &up_num,
                                           &up_den) == PBDTK_OK);
    CHECK(lo_num == 2436);
    CHECK(lo_den == 15625);
    CHECK(up_num == 511);
    CHECK(up_den == 3125);

    REQUIRE(pbdtk_scp_complement_pair_lower(100, 60, 60, 1, 60, &num, &den,
                                            &rounded) == PBDTK_OK);
    CHECK(rounded == 1039);
    CHECK(pbdtk_scp_complement_pair_lower(100, 60, 96, 1, 60, &num, &den,
                                          &rounded) == PBDTK_E_HYPOTHESIS);
}

TEST_CASE("bounds table as CSV text") {
    char* csv = nullptr;
    REQUIRE(pbdtk_bounds_csv(21, &csv) == PBDTK_OK);
    std::string table = take(csv);
    CHECK(table.rfind("tau,A,B,C,best,source\n", 0) == 0);
    int lines = 0;
    for (char c : table)
        if (c == '\n') ++lines;
    CHECK(lines == 20); // header + tau = 2..20
}

TEST_CASE("design construction certificates") {
    pbdtk_design* d = nullptr;
    int64_t cn = 0, cd = 0, cr = 0, achieved = 0;
    char* source = nullptr;
    char* params = nullptr;
    REQUIRE(pbdtk_construct_design("pbdc", 6, 3, &d, &cn, &cd, &cr, &source,
                                   &achieved, &params) == PBDTK_OK);
    CHECK(cn == 18);
    CHECK(cd == 1);
    CHECK(cr == 18);
    CHECK(achieved == 18);
    CHECK(take(source) == "C");
    std::string pj = take(params);
    CHECK(pj.find("\"n\"") != std::string::npos);
    CHECK(pj.find("\"k\"") != std::string::npos);
    int32_t ok = 0;
    REQUIRE(pbdtk_design_validate(d, &ok, nullptr, nullptr, nullptr) == PBDTK_OK);
    CHECK(ok == 1);
    pbdtk_design_free(d);

    d = nullptr;
    REQUIRE(pbdtk_construct_design("thm24", 3, 0, &d, &cn, &cd, &cr, &source,
                                   &achieved, &params) == PBDTK_OK);
    int32_t n = 0;
    CHECK(pbdtk_design_n(d, &n) == PBDTK_OK);
    CHECK(n == 10);
    CHECK(cr == 39);
    CHECK(achieved == 39);
    CHECK(take(source) == "no-large-block");
    take(params);
    pbdtk_design_free(d);

    CHECK(pbdtk_construct_design("no-such-thing", 5, 0, nullptr, nullptr, nullptr,
                                 nullptr, nullptr, nullptr, nullptr) == PBDTK_E_DOMAIN);
}

TEST_CASE("partition construction certificates") {
    pbdtk_graph* g = nullptr;
    pbdtk_partition* p = nullptr;
    int64_t cr = 0, achieved = 0;
    REQUIRE(pbdtk_construct_partition("comp-path", 12, 0, &g, &p, nullptr, nullptr,
                                      &cr, nullptr, &achieved, nullptr) == PBDTK_OK);
    int64_t sigma = 0;
    CHECK(pbdtk_partition_sigma(p, &sigma) == PBDTK_OK);
    CHECK(sigma == achieved);
    int32_t ok = 0;
    char* report = nullptr;
    REQUIRE(pbdtk_partition_validate(g, p, &ok, &report) == PBDTK_OK);
    CHECK(ok == 1);
    take(report);

    // Partition file round trip keeps the graph and the cliques.
    std::string path = tmp_path("comp_path12.json");
    REQUIRE(pbdtk_partition_write(g, p, path.c_str(), nullptr) == PBDTK_OK);
    pbdtk_graph* g2 = nullptr;
    pbdtk_partition* p2 = nullptr;
    REQUIRE(pbdtk_partition_read(path.c_str(), &g2, &p2) == PBDTK_OK);
    int64_t sigma2 = 0;
    CHECK(pbdtk_partition_sigma(p2, &sigma2) == PBDTK_OK);
    CHECK(sigma2 == sigma);
    int64_t count = 0, count2 = 0;
    CHECK(pbdtk_partition_clique_count(p, &count) == PBDTK_OK);
    CHECK(pbdtk_partition_clique_count(p2, &count2) == PBDTK_OK);
    CHECK(count == count2);
    for (int64_t i = 0; i < count; ++i) {
        int32_t s1 = 0, s2 = 0;
        REQUIRE(pbdtk_partition_clique_size(p, i, &s1) == PBDTK_OK);
        REQUIRE(pbdtk_partition_clique_size(p2, i, &s2) == PBDTK_OK);
        CHECK(s1 == s2);
        for (int32_t pos = 0; pos < s1; ++pos) {
            int32_t a = -1, b = -1;
            REQUIRE(pbdtk_partition_clique_member(p, i, pos, &a) == PBDTK_OK);
            REQUIRE(pbdtk_partition_clique_member(p2, i, pos, &b) == PBDTK_OK);
            CHECK(a == b);
        }
    }
    std::filesystem::remove(path);
    pbdtk_graph_free(g2);
    pbdtk_partition_free(p2);
    pbdtk_graph_free(g);
    pbdtk_partition_free(p);
}

TEST_CASE("exact solver through the C surface") {
    pbdtk_graph* g = nullptr;
    REQUIRE(pbdtk_graph_create("knkm", 6, 3, &g) == PBDTK_OK);
    int64_t optimum = 0;
    int32_t proved = 0;
    uint64_t nodes = 0;
    pbdtk_partition* witness = nullptr;
    REQUIRE(pbdtk_exact_scp(g, 0, &optimum, &proved, &nodes, &witness) == PBDTK_OK);
    CHECK(optimum == 15);
    CHECK(proved == 1);
    CHECK(nodes > 0);
    int32_t ok = 0;
    REQUIRE(pbdtk_partition_validate(g, witness, &ok, nullptr) == PBDTK_OK);
    CHECK(ok == 1);
    int64_t sigma = 0;
    CHECK(pbdtk_partition_sigma(witness, &sigma) == PBDTK_OK);
    CHECK(sigma == 15);
    pbdtk_partition_free(witness);

    REQUIRE(pbdtk_exact_cp(g, 0, &optimum, &proved, &nodes, nullptr) == PBDTK_OK);
    CHECK(proved == 1);
    pbdtk_graph_free(g);
}

TEST_CASE("design searches through the C surface") {
    int64_t optimum = 0;
    int32_t proved = 0;
    uint64_t nodes = 0;
    pbdtk_design* witness = nullptr;
    REQUIRE(pbdtk_exact_min_sigma_largest_block(6, 5, 0, 0, &optimum, &proved,
                                                &nodes, &witness) == PBDTK_OK);
    CHECK(optimum == 15); // near-pencil on 6 points
    CHECK(proved == 1);
    int32_t ok = 0, pencil = 0;
    REQUIRE(pbdtk_design_validate(witness, &ok, nullptr, &pencil, nullptr) == PBDTK_OK);
    CHECK(ok == 1);
    CHECK(pencil == 1);
    pbdtk_design_free(witness);

    witness = nullptr;
    REQUIRE(pbdtk_exact_min_sigma_with_block(7, 3, 0, &optimum, &proved, &nodes,
                                             &witness) == PBDTK_OK);
    CHECK(optimum == 21); // the Fano plane is optimal here
    CHECK(proved == 1);
    pbdtk_design_free(witness);
}
