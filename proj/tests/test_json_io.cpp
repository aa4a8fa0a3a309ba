#include <doctest.h>

#include "coopcolor/json_io.hpp"
#include "coopcolor/multipartite.hpp"

using namespace coopcolor;

TEST_CASE("instance round-trip") {
    CoopInstance inst{5, {make_explicit_hypergraph(5, {{0, 1, 2}, {2, 3}}),
                          make_complete_kpartite(5, {{0, 1}, {2, 3, 4}})}};
    auto doc = instance_to_json(inst);
    auto back = instance_from_json(doc);
    CHECK(back.n == 5);
    REQUIRE(back.size() == 2);
    CHECK(back.hypergraphs[0].kind == HypergraphKind::Explicit);
    CHECK(back.hypergraphs[0].edges == inst.hypergraphs[0].edges);
    CHECK(back.hypergraphs[1].kind == HypergraphKind::CompleteKPartite);
    CHECK(back.hypergraphs[1].parts == inst.hypergraphs[1].parts);
}

TEST_CASE("instance power form") {
    json doc = {{"type", "complete-kpartite-power"}, {"k", 3}, {"m", 2}};
    auto inst = instance_from_json(doc);
    auto fam = build_lower_bound_family(3, 2);
    CHECK(inst.n == 9);
    REQUIRE(inst.size() == 2);
    CHECK(inst.hypergraphs[0].parts == fam.instance.hypergraphs[0].parts);
    CHECK(inst.hypergraphs[1].parts == fam.instance.hypergraphs[1].parts);

    CHECK_THROWS_AS(instance_from_json(json{{"type", "unknown"}}), ValidationError);
    CHECK_THROWS_AS(instance_from_json(json{{"type", "complete-kpartite-power"}, {"k", 3}}),
                    ValidationError);
}

TEST_CASE("instance document errors") {
    CHECK_THROWS_AS(instance_from_json(json::array()), ValidationError);
    CHECK_THROWS_AS(instance_from_json(json{{"n", 3}}), ValidationError);
    json bad_kind = {{"n", 3}, {"hypergraphs", {{{"kind", "weird"}, {"edges", json::array()}}}}};
    CHECK_THROWS_AS(instance_from_json(bad_kind), ValidationError);
    json kp_with_edges = {{"n", 2},
                          {"hypergraphs",
                           {{{"kind", "complete-kpartite"},
                             {"edges", {{0, 1}}},
                             {"parts", {{0}, {1}}}}}}};
    CHECK_THROWS_AS(instance_from_json(kp_with_edges), ValidationError);
}

TEST_CASE("chain round-trip") {
    auto c = make_chain_system(6, {5, 0, 1, 2, 3, 4}, {{0, 2}, {2, 4}}, true);
    auto doc = chain_to_json(c);
    CHECK(doc["type"] == "chain");
    auto back = chain_from_json(doc);
    CHECK(back.n == c.n);
    CHECK(back.order == c.order);
    CHECK(back.closed == c.closed);
    REQUIRE(back.intervals.size() == 2);
    CHECK(back.intervals[1].start == 2);
    CHECK(back.intervals[1].len == 4);

    CHECK_THROWS_AS(chain_from_json(json{{"n", 3}}), ValidationError);
    json bad = doc;
    bad["intervals"] = {{0, 2, 5}};
    CHECK_THROWS_AS(chain_from_json(bad), ValidationError);
}

TEST_CASE("coloring round-trip") {
    CoopColoring c{{0, 1, 1, 0}};
    auto doc = coloring_to_json(c, 2);
    CHECK(doc["m"] == 2);
    auto back = coloring_from_json(doc);
    CHECK(back.assignment == c.assignment);

    json bad = {{"m", 2}, {"assignment", {0, 2}}};
    CHECK_THROWS_AS(coloring_from_json(bad), ValidationError);
}

TEST_CASE("partition document") {
    TwoCycleInstance inst{5, {1, 0, 2, 4, 3}};
    auto [p, trace] = partition_two_cycles(inst);
    auto doc = partition_to_json(inst, p, trace);
    CHECK(doc["n"] == 5);
    CHECK(doc["caseTag"] == "odd-D-nonempty");
    CHECK(doc["B"].get<std::vector<VertexId>>() == p.blue());
    CHECK(doc["R"].get<std::vector<VertexId>>() == p.red());
}

TEST_CASE("file io") {
    const std::string path = "io_roundtrip_tmp.json";
    json doc = {{"n", 3}, {"hypergraphs", json::array()}};
    save_json_file(path, doc);
    auto back = load_json_file(path);
    CHECK(back == doc);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_json_file("does_not_exist.json"), ValidationError);
}
