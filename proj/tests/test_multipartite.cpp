#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coopcolor/multipartite.hpp"
#include "coopcolor/oracle.hpp"

using namespace coopcolor;

TEST_CASE("lower-bound family construction") {
    auto fam = build_lower_bound_family(3, 2);
    CHECK(fam.instance.n == 9);
    CHECK(fam.instance.size() == 2);
    for (const auto& h : fam.instance.hypergraphs) {
        CHECK(h.kind == HypergraphKind::CompleteKPartite);
        CHECK(h.part_count() == 3);
    }
    // Hypergraph 0 splits by the least-significant digit, 1 by the next.
    CHECK(fam.instance.hypergraphs[0].parts[0] == std::vector<VertexId>{0, 3, 6});
    CHECK(fam.instance.hypergraphs[1].parts[0] == std::vector<VertexId>{0, 1, 2});

    CHECK_THROWS_AS(build_lower_bound_family(2, 2), ParameterError);
    CHECK_THROWS_AS(build_lower_bound_family(3, 0), ParameterError);
    CHECK_THROWS_AS(build_lower_bound_family(10, 9), ParameterError);
}

TEST_CASE("uncovered diagonal vertex") {
    auto fam = build_lower_bound_family(3, 2);
    CHECK(uncovered_diagonal_vertex(fam, {1, 1}) == 0);
    CHECK(uncovered_diagonal_vertex(fam, {2, 3}) == 7);
    CHECK(uncovered_diagonal_vertex(fam, {3, 3}) == 8);
    CHECK_THROWS_AS(uncovered_diagonal_vertex(fam, {1}), ValidationError);
    CHECK_THROWS_AS(uncovered_diagonal_vertex(fam, {0, 1}), ValidationError);
}

TEST_CASE("verify_lower_bound") {
    for (auto [k, m] : {std::pair{3, 1}, {3, 2}, {3, 3}, {4, 2}}) {
        auto fam = build_lower_bound_family(k, m);
        auto verdict = verify_lower_bound(fam);
        CHECK(verdict.ok);
    }
    // A corrupted family is caught: swap two parts so a diagonal vertex
    // escapes its avoided part.
    auto fam = build_lower_bound_family(3, 2);
    std::swap(fam.instance.hypergraphs[0].parts[0], fam.instance.hypergraphs[0].parts[1]);
    CHECK_FALSE(verify_lower_bound(fam).ok);
}

TEST_CASE("the (3,2) family admits no cooperative coloring") {
    auto fam = build_lower_bound_family(3, 2);
    auto r = exact_coop_coloring(fam.instance);
    CHECK(r.status == SearchStatus::None);
}

TEST_CASE("bounds formulas") {
    auto b = compute_bounds(3, 81.0, 0.1);
    CHECK(b.lower == doctest::Approx(2.0));
    CHECK(b.upper == doctest::Approx(3.0 * 1.1 * std::sqrt(2.0 * 81.0 / std::log(81.0))));

    auto b2 = compute_bounds(4, 1000.0, 0.5);
    CHECK(b2.lower == doctest::Approx(std::log(1000.0) / std::log(4.0) / 3.0));
    CHECK(b2.upper ==
          doctest::Approx(4.0 * 1.5 * std::pow(3.0 * 1000.0 / std::log(1000.0), 1.0 / 3.0)));

    CHECK_THROWS_AS(compute_bounds(1, 10.0, 0.1), ParameterError);
    CHECK_THROWS_AS(compute_bounds(3, 1.0, 0.1), ParameterError);
    CHECK_THROWS_AS(compute_bounds(3, 10.0, 0.0), ParameterError);
}

TEST_CASE("lll diagnostic") {
    const double e = std::exp(1.0);
    CHECK(lll_diagnostic(3, 10.0) == doctest::Approx(e * 8001.0 / 10000.0));
    CHECK(lll_diagnostic(2, 100.0) == doctest::Approx(e * 2000001.0 / 100000000.0));
    // Grows harmless for large d at fixed k.
    CHECK(lll_diagnostic(3, 1e6) < 1.0);
    CHECK_THROWS_AS(lll_diagnostic(3, 1.0), ParameterError);
}

TEST_CASE("k-partite view and W-classes") {
    CoopInstance inst{4, {make_complete_kpartite(4, {{0, 1}, {2, 3}}),
                          make_complete_kpartite(4, {{0, 2}, {1, 3}})}};
    auto st = build_assignment_state(inst);
    CHECK(st.view.k == 2);
    CHECK(st.J[0][0] == std::vector<int>{0, 1});
    CHECK(st.J[0][1].empty());
    CHECK(st.J[3][1] == std::vector<int>{0, 1});
    CHECK(st.wclass == std::vector<int>{0, 0, 0, 1});
    CHECK(st.chosen == std::vector<int>{-1, -1, -1, -1});

    CoopInstance mixed{4, {make_complete_kpartite(4, {{0, 1}, {2, 3}}),
                           make_complete_kpartite(4, {{0}, {1}, {2, 3}})}};
    CHECK_THROWS_AS(make_kpartite_view(mixed), ValidationError);
    CoopInstance bare{3, {make_explicit_hypergraph(3, {{0, 1}})}};
    CHECK_THROWS_AS(make_kpartite_view(bare), ValidationError);
}

TEST_CASE("gen_random_kpartite") {
    const int k = 3, m = 5, n = 30, dmax = 4;
    auto inst = gen_random_kpartite(k, m, n, dmax, 42);
    CHECK(inst.n == n);
    CHECK(inst.size() == m);
    for (const auto& h : inst.hypergraphs) {
        REQUIRE(h.part_count() == k);
        for (const auto& part : h.parts) CHECK(static_cast<int>(part.size()) == n / k);
        CHECK(static_cast<long long>(h.edges.size()) <=
              static_cast<long long>(n) * dmax / k);
        CHECK(max_degree(h) <= dmax);
        for (const auto& e : h.edges) CHECK(static_cast<int>(e.size()) == k);
    }
    // Seeded reproducibility.
    auto again = gen_random_kpartite(k, m, n, dmax, 42);
    for (int j = 0; j < m; ++j) {
        CHECK(inst.hypergraphs[static_cast<std::size_t>(j)].edges ==
              again.hypergraphs[static_cast<std::size_t>(j)].edges);
    }
    auto other = gen_random_kpartite(k, m, n, dmax, 43);
    CHECK(inst.hypergraphs[0].edges != other.hypergraphs[0].edges);

    CHECK_THROWS_AS(gen_random_kpartite(3, 5, 31, 4, 1), ParameterError);
    CHECK_THROWS_AS(gen_random_kpartite(2, 5, 30, 4, 1), ParameterError);
}

TEST_CASE("semi-random coloring succeeds on sparse random families") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        auto inst = gen_random_kpartite(3, 9, 60, 4, seed);
        SemiRandomConfig cfg;
        cfg.seed = seed * 1000;
        auto res = semi_random_coloring(inst, cfg);
        REQUIRE(res.success);
        CHECK(verify_coop_coloring(inst, res.coloring).ok);
    }
}

TEST_CASE("semi-random coloring is deterministic per seed") {
    auto inst = gen_random_kpartite(3, 9, 60, 4, 7);
    SemiRandomConfig cfg;
    cfg.seed = 12345;
    auto r1 = semi_random_coloring(inst, cfg);
    auto r2 = semi_random_coloring(inst, cfg);
    CHECK(r1.success == r2.success);
    CHECK(r1.rounds == r2.rounds);
    if (r1.success) CHECK(r1.coloring.assignment == r2.coloring.assignment);
}

TEST_CASE("semi-random coloring aborts on the lower-bound family") {
    auto fam = build_lower_bound_family(3, 2);
    SemiRandomConfig cfg;
    cfg.seed = 99;
    cfg.maxRounds = 200;
    auto res = semi_random_coloring(fam.instance, cfg);
    REQUIRE_FALSE(res.success);
    CHECK(res.rounds == 200);
    // Vertex 8 = (3,3) sits in the last part of both hypergraphs; its
    // surviving index set is always empty.
    CHECK(std::find(res.badVertices.begin(), res.badVertices.end(), 8) !=
          res.badVertices.end());
}
