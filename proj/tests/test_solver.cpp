#include <doctest.h>

#include "bounds.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "oracles.hpp"
#include "solver.hpp"

using namespace pbdtk;
using namespace pbdtk::solver;

TEST_SUITE("solver") {

TEST_CASE("minimum partition weight matches the exhaustive oracle on small graphs") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            Graph g = complete_minus_clique(n, m);
            if (g.edge_count() == 0) continue;
            SolverResult r = exact_scp(g);
            CHECK(r.optimum == oracle::scp(g));
            CHECK(r.proved_optimal);
            CHECK(validate_partition(g, r.witness).ok);
            CHECK(partition_sigma(r.witness) == r.optimum);

            SolverResult rc = exact_cp(g);
            CHECK(rc.optimum == oracle::cp(g));
            CHECK(static_cast<std::int64_t>(rc.witness.cliques.size()) == rc.optimum);
        }
    for (int n = 4; n <= 7; ++n) {
        for (Graph g : {complement_path(n), complement_cycle(n), cocktail_party(n)}) {
            if (g.edge_count() == 0) continue;
            CHECK(exact_scp(g).optimum == oracle::scp(g));
            CHECK(exact_cp(g).optimum == oracle::cp(g));
        }
    }
}

TEST_CASE("frozen small values") {
    CHECK(exact_scp(complete_minus_clique(4, 2)).optimum == 7);
    CHECK(exact_scp(complete_minus_clique(6, 3)).optimum == 15);
    CHECK(exact_cp(complete_minus_clique(4, 2)).optimum == 3);
    CHECK(exact_cp(complement_cycle(5)).optimum == 5);  // triangle-free
    CHECK(exact_cp(complete_minus_clique(5, 0)).optimum == 1);
    CHECK(exact_scp(complement_cycle(4)).optimum == 4);
    CHECK(exact_scp(complement_cycle(5)).optimum == 10);
    CHECK(exact_scp(cocktail_party(4)).optimum == 8);
}

TEST_CASE("an edgeless graph has an empty optimal partition") {
    Graph g = complement_path(2);
    SolverResult r = exact_scp(g);
    CHECK(r.optimum == 0);
    CHECK(r.witness.cliques.empty());
    CHECK(r.proved_optimal);
}

TEST_CASE("path-complement optima for n up to 10") {
    const std::int64_t expected[] = {0, 0, 0, 2, 6, 9, 14, 16, 20, 24, 29};
    for (int n = 3; n <= 10; ++n) {
        SolverResult r = exact_scp(complement_path(n));
        CHECK(r.optimum == expected[n]);
        CHECK(r.proved_optimal);
        // the shipped construction is exact in this range
        CHECK(constructions::complement_path_partition(n).achieved == r.optimum);
    }
}

TEST_CASE("designs with a largest block of exactly m") {
    DesignSearchResult r43 = min_sigma_largest_block(4, 3, true);
    CHECK(r43.optimum == 9);
    CHECK(validate_pbd(r43.witness).ok);
    CHECK(max_block_size(r43.witness) == 3);

    DesignSearchResult r73 = min_sigma_largest_block(7, 3, true);
    CHECK(r73.optimum == 21); // Fano
    CHECK(validate_pbd(r73.witness).ok);

    for (int n = 4; n <= 7; ++n) {
        DesignSearchResult r = min_sigma_largest_block(n, n - 1, true);
        CHECK(r.optimum == 3 * n - 3);
        auto rep = validate_pbd(r.witness);
        CHECK(rep.ok);
        CHECK(rep.is_near_pencil);
    }

    // at-most-m can only improve on exactly-m
    CHECK(min_sigma_largest_block(7, 3, false).optimum <=
          min_sigma_largest_block(7, 3, true).optimum);
    CHECK_THROWS_AS(min_sigma_largest_block(4, 1, true), Error);
}

TEST_CASE("designs forced to contain a block of size m") {
    DesignSearchResult r42 = min_sigma_with_block(4, 2);
    CHECK(r42.optimum == 9);
    DesignSearchResult r73 = min_sigma_with_block(7, 3);
    CHECK(r73.optimum == 21);
    DesignSearchResult r63 = min_sigma_with_block(6, 3);
    CHECK(r63.optimum == 18);

    for (DesignSearchResult* r : {&r42, &r73, &r63})
        CHECK(validate_pbd(r->witness).ok);

    // dominates bounds B and C, with equality against C in the half range
    for (int n = 4; n <= 8; ++n)
        for (int m = 2; m <= n - 1; ++m) {
            DesignSearchResult r = min_sigma_with_block(n, m);
            Rational v(r.optimum);
            CHECK(v >= bounds::bound_b(n, m).exact);
            CHECK(v >= bounds::bound_c(n, m).exact);
            if (2 * m >= n) CHECK(v == bounds::bound_c(n, m).exact);
        }

    // forcing the full point set is the trivial one-block design
    DesignSearchResult full = min_sigma_with_block(5, 5);
    CHECK(full.optimum == 5);
    CHECK(full.witness.blocks.size() == 1);
}

TEST_CASE("half-range clique partitions match the closed-form value") {
    for (int n = 4; n <= 7; ++n)
        for (int m = (n + 1) / 2; m <= n - 1; ++m) {
            Graph g = complete_minus_clique(n, m);
            SolverResult r = exact_scp(g);
            CHECK(Rational(r.optimum) ==
                  bounds::scp_complete_minus_clique_exact_half(n, m).exact);
        }
}

TEST_CASE("construction results never beat the solver at small sizes") {
    for (int n = 4; n <= 7; ++n) {
        CHECK(exact_scp(complement_path(n)).optimum <=
              constructions::complement_path_partition(n).achieved);
        if (n >= 4)
            CHECK(exact_scp(complement_cycle(n)).optimum <=
                  constructions::complement_cycle_partition(n).achieved);
        CHECK(exact_scp(cocktail_party(n)).optimum <=
              constructions::cocktail_party_partition(n).achieved);
    }
}

TEST_CASE("budget exhaustion reports best-found or gives up loudly") {
    Graph g = complete_minus_clique(9, 2);
    SolverOptions tight;
    tight.node_budget = 50;
    bool gave_up = false;
    try {
        SolverResult r = exact_scp(g, tight);
        CHECK_FALSE(r.proved_optimal);
        CHECK(r.nodes <= 51);
        CHECK(validate_partition(g, r.witness).ok);
    } catch (const Error& e) {
        gave_up = true;
        CHECK(e.code() == Errc::budget);
    }
    // either path is acceptable; an unproved incumbent must still validate
    (void)gave_up;

    SolverOptions enough;
    enough.node_budget = 0;
    SolverResult full = exact_scp(g, enough);
    CHECK(full.proved_optimal);
}

TEST_CASE("a graph beyond the vertex cap gets a defensive budget") {
    Graph g = complement_path(14);
    SolverOptions opt; // no explicit budget, n > vertex_cap
    SolverResult r = exact_scp(g, opt);
    // must terminate; optimality may or may not be proved within the
    // defensive budget, but any answer must be a valid partition
    CHECK(validate_partition(g, r.witness).ok);
    CHECK(r.optimum >= 0);
}

TEST_CASE("vertex hard cap") {
    bool threw = false;
    try {
        exact_scp(complement_path(33));
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == Errc::cap_exceeded);
    }
    CHECK(threw);
}

TEST_CASE("determinism: identical runs give identical witnesses") {
    Graph g = complete_minus_clique(7, 3);
    SolverResult a = exact_scp(g);
    SolverResult b = exact_scp(g);
    CHECK(a.optimum == b.optimum);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness == b.witness);

    DesignSearchResult da = min_sigma_largest_block(6, 5, true);
    DesignSearchResult db = min_sigma_largest_block(6, 5, true);
    CHECK(da.witness == db.witness);
}

TEST_CASE("enumerating all optima finds exactly the near-pencils at the basic bound") {
    Graph k4 = complete_minus_clique(4, 0);
    auto optima = enumerate_optimal_scp(k4, 9, 3, true);
    CHECK(optima.size() == 4); // one near-pencil per choice of apex point
    for (const auto& p : optima) {
        Design d = make_design(4, p.cliques);
        auto rep = validate_pbd(d);
        CHECK(rep.ok);
        CHECK(rep.is_near_pencil);
    }
}

TEST_CASE("enumeration within a too-small budget throws") {
    Graph k6 = complete_minus_clique(6, 0);
    SolverOptions tight;
    tight.node_budget = 3;
    CHECK_THROWS_AS(enumerate_optimal_scp(k6, 15, 5, true, tight), Error);
}

} // TEST_SUITE
