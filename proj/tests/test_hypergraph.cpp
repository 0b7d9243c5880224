#include <vector>

#include "doctest.h"
#include "perrdi/errors.hpp"
#include "perrdi/hypergraph.hpp"
#include "test_support.hpp"

using namespace perrdi;
using perrdi::testing::bridged_triangles;

TEST_CASE("hypergraph basics: pins, degrees, unit weights") {
    Hypergraph hg = Hypergraph::with_unit_weights(4);
    hg.nets = {{0, 1, 2}, {2, 3}};
    CHECK(hg.node_weights == std::vector<int>{1, 1, 1, 1});
    CHECK(hg.pin_count() == 5);
    CHECK(hg.degrees() == std::vector<int>{1, 1, 2, 1});
    CHECK_NOTHROW(hg.validate());
    CHECK(hg.is_clean());
}

TEST_CASE("hypergraph validate rejects malformed structure") {
    Hypergraph hg;
    CHECK_THROWS_AS(hg.validate(), ContractError);  // no nodes

    hg = Hypergraph::with_unit_weights(3);
    CHECK_THROWS_AS(hg.validate(), ContractError);  // no nets

    hg.nets = {{0}};
    CHECK_THROWS_AS(hg.validate(), ContractError);  // single pin

    hg.nets = {{0, 3}};
    CHECK_THROWS_AS(hg.validate(), ContractError);  // pin out of range

    hg.nets = {{0, 1}};
    hg.node_weights = {1, 1};
    CHECK_THROWS_AS(hg.validate(), ContractError);  // weight vector too short

    hg.node_weights = {1, -1, 1};
    CHECK_THROWS_AS(hg.validate(), ContractError);  // negative weight
}

TEST_CASE("cleanliness checks name the offender") {
    Hypergraph hg = Hypergraph::with_unit_weights(3);
    hg.nets = {{0, 0, 1}, {1, 2}};
    CHECK_FALSE(hg.is_clean());
    CHECK_THROWS_WITH_AS(hg.require_clean("test"),
                         doctest::Contains("more than once"), ContractError);

    hg.nets = {{0, 1}};  // node 2 isolated
    CHECK_FALSE(hg.is_clean());
    CHECK_THROWS_WITH_AS(hg.require_clean("test"),
                         doctest::Contains("node 2"), ContractError);

    CHECK(bridged_triangles().is_clean());
}

TEST_CASE("weighted graph build canonicalizes the edge list") {
    // Out-of-order endpoints, out-of-order edges, and a duplicate pair.
    WeightedGraph g = WeightedGraph::build(
        4, {{3, 1, 0.5}, {0, 1, 1.0}, {1, 3, 0.25}, {2, 0, 2.0}});
    REQUIRE(g.edges.size() == 3);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);
    CHECK(g.edges[0].w == 1.0);
    CHECK(g.edges[1].u == 0);
    CHECK(g.edges[1].v == 2);
    CHECK(g.edges[1].w == 2.0);
    CHECK(g.edges[2].u == 1);
    CHECK(g.edges[2].v == 3);
    CHECK(g.edges[2].w == doctest::Approx(0.75));
    CHECK(g.node_weights == std::vector<int>{1, 1, 1, 1});
    CHECK(g.total_edge_weight() == doctest::Approx(3.75));

    const auto deg = g.weighted_degrees();
    CHECK(deg[0] == doctest::Approx(3.0));
    CHECK(deg[1] == doctest::Approx(1.75));
    CHECK(deg[2] == doctest::Approx(2.0));
    CHECK(deg[3] == doctest::Approx(0.75));
}

TEST_CASE("weighted graph build rejects bad edges") {
    CHECK_THROWS_AS(WeightedGraph::build(0, {}), ContractError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 0, 1.0}}), ContractError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 2, 1.0}}), ContractError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, 0.0}}), ContractError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, -1.0}}), ContractError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, 1.0}}, {1}), ContractError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, 1.0}}, {1, -2}), ContractError);
    // Zero node weights are legal (auxiliary nodes).
    CHECK_NOTHROW(WeightedGraph::build(2, {{0, 1, 1.0}}, {1, 0}));
}

TEST_CASE("partition assignment validation and sizes") {
    PartitionAssignment pa;
    pa.part = {0, 1, 0, 1, 1};
    pa.k = 2;
    CHECK_NOTHROW(pa.validate());
    CHECK(pa.part_sizes() == std::vector<int>{2, 3});

    pa.k = 1;
    CHECK_THROWS_AS(pa.validate(), ContractError);
    pa.k = 2;
    pa.part.push_back(2);
    CHECK_THROWS_AS(pa.validate(), ContractError);
    pa.part = {};
    CHECK_THROWS_AS(pa.validate(), ContractError);
}
