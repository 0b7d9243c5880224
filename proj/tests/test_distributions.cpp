#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "perrdi/distributions.hpp"
#include "perrdi/errors.hpp"
#include "perrdi/rng.hpp"
#include "test_support.hpp"

using namespace perrdi;

TEST_CASE("size distribution construction and accessors") {
    const SizeDistribution d(std::map<int, double>{{2, 0.25}, {5, 0.75}});
    CHECK_FALSE(d.empty());
    CHECK(d.probability(2) == doctest::Approx(0.25));
    CHECK(d.probability(5) == doctest::Approx(0.75));
    CHECK(d.probability(3) == 0.0);
    CHECK(d.max_size() == 5);
    CHECK(d.mean() == doctest::Approx(0.25 * 2 + 0.75 * 5));
    CHECK(d.entries().size() == 2);
}

TEST_CASE("size distribution drops exact-zero entries") {
    const SizeDistribution d(std::map<int, double>{{2, 0.5}, {3, 0.0}, {4, 0.5}});
    CHECK(d.entries().size() == 2);
    CHECK(d.probability(3) == 0.0);
}

TEST_CASE("size distribution rejects malformed input") {
    CHECK_THROWS_AS(SizeDistribution(std::map<int, double>{}), ContractError);
    CHECK_THROWS_AS(SizeDistribution(std::map<int, double>{{1, 1.0}}), ContractError);
    CHECK_THROWS_AS(SizeDistribution(std::map<int, double>{{2, -0.5}, {3, 1.5}}),
                    ContractError);
    CHECK_THROWS_AS(SizeDistribution(std::map<int, double>{{2, 0.7}, {3, 0.7}}),
                    ContractError);  // sums to 1.4
    CHECK_THROWS_AS(SizeDistribution(std::map<int, double>{{2, 0.0}}), ContractError);
}

TEST_CASE("from_counts normalizes a histogram") {
    const auto d = SizeDistribution::from_counts({{2, 2}, {3, 1}, {7, 0}});
    CHECK(d.probability(2) == doctest::Approx(2.0 / 3.0));
    CHECK(d.probability(3) == doctest::Approx(1.0 / 3.0));
    CHECK(d.probability(7) == 0.0);
    CHECK(d.max_size() == 3);
    CHECK_THROWS_AS(SizeDistribution::from_counts({{2, 0}}), ContractError);
    CHECK_THROWS_AS(SizeDistribution::from_counts({{2, -1}}), ContractError);
}

TEST_CASE("weighted sampling is deterministic and single-support exact") {
    const SizeDistribution point(std::map<int, double>{{4, 1.0}});
    Rng rng(5);
    for (int i = 0; i < 100; ++i) CHECK(weighted_sample(point, rng) == 4);

    const SizeDistribution d(std::map<int, double>{{2, 0.3}, {3, 0.5}, {9, 0.2}});
    Rng a(17), b(17);
    for (int i = 0; i < 500; ++i) CHECK(weighted_sample(d, a) == weighted_sample(d, b));
}

TEST_CASE("weighted sampling frequencies track the PMF") {
    const SizeDistribution d(
        std::map<int, double>{{2, 0.1}, {3, 0.4}, {5, 0.3}, {8, 0.2}});
    Rng rng(23);
    const int trials = 100000;
    std::map<int, int> hist;
    for (int i = 0; i < trials; ++i) hist[weighted_sample(d, rng)]++;
    for (const auto& [size, p] : d.entries()) {
        const double freq = static_cast<double>(hist[size]) / trials;
        const double sigma = std::sqrt(p * (1.0 - p) / trials);
        CHECK(std::abs(freq - p) <= 4.0 * sigma);
    }
}

TEST_CASE("l1 distance spans [0, 2]") {
    const SizeDistribution a(std::map<int, double>{{2, 0.6}, {3, 0.4}});
    const SizeDistribution b(std::map<int, double>{{2, 0.5}, {3, 0.5}});
    const SizeDistribution c(std::map<int, double>{{7, 1.0}});
    CHECK(l1_distance(a, a) == doctest::Approx(0.0));
    CHECK(l1_distance(a, b) == doctest::Approx(0.2));
    CHECK(l1_distance(b, a) == doctest::Approx(0.2));
    CHECK(l1_distance(a, c) == doctest::Approx(2.0));
}

TEST_CASE("cleanup drops single-pin nets and the nodes they strand") {
    Hypergraph hg = Hypergraph::with_unit_weights(3);
    hg.nets = {{0, 1}, {2}};
    const Hypergraph cleaned = cleanup_netlist(hg);
    CHECK(cleaned.n == 2);
    REQUIRE(cleaned.nets.size() == 1);
    CHECK(cleaned.nets[0] == std::vector<int>{0, 1});
    CHECK(cleaned.is_clean());
}

TEST_CASE("cleanup merges duplicate pins keeping first positions") {
    Hypergraph hg = Hypergraph::with_unit_weights(3);
    hg.nets = {{1, 0, 1, 2, 0}};
    const Hypergraph cleaned = cleanup_netlist(hg);
    REQUIRE(cleaned.nets.size() == 1);
    CHECK(cleaned.nets[0] == std::vector<int>{1, 0, 2});
}

TEST_CASE("cleanup renumbers survivors densely and keeps their weights") {
    Hypergraph hg;
    hg.n = 5;
    hg.node_weights = {10, 20, 30, 40, 50};
    hg.nets = {{1, 3}, {3, 4}, {2}};  // nodes 0 and 2 drop out
    const Hypergraph cleaned = cleanup_netlist(hg);
    CHECK(cleaned.n == 3);
    CHECK(cleaned.node_weights == std::vector<int>{20, 40, 50});
    CHECK(cleaned.nets == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
}

TEST_CASE("cleanup is idempotent") {
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph raw = Hypergraph::with_unit_weights(10);
        for (int e = 0; e < 8; ++e) {
            std::vector<int> net;
            const int size = 1 + static_cast<int>(rng.below(4));
            for (int i = 0; i < size; ++i)
                net.push_back(static_cast<int>(rng.below(10)));  // duplicates likely
            raw.nets.push_back(std::move(net));
        }
        Hypergraph once;
        try {
            once = cleanup_netlist(raw);
        } catch (const EmptyDesignError&) {
            continue;  // everything dropped; nothing to compare
        }
        const Hypergraph twice = cleanup_netlist(once);
        CHECK(twice.n == once.n);
        CHECK(twice.nets == once.nets);
        CHECK(twice.node_weights == once.node_weights);
    }
}

TEST_CASE("cleanup reports a fully-degenerate design") {
    Hypergraph hg = Hypergraph::with_unit_weights(3);
    hg.nets = {{0}, {1, 1, 1}};
    CHECK_THROWS_AS(cleanup_netlist(hg), EmptyDesignError);
    CHECK_THROWS_AS(cleanup_netlist(Hypergraph{}), EmptyDesignError);
}

TEST_CASE("extraction histograms sizes and degrees") {
    // Sizes {2, 2, 3}; degrees: every node on exactly 2 nets but node 1 on 3.
    Hypergraph hg = Hypergraph::with_unit_weights(3);
    hg.nets = {{0, 1}, {1, 2}, {0, 1, 2}};
    const auto dists = extract_distributions(hg);
    CHECK(dists.ndv.probability(2) == doctest::Approx(2.0 / 3.0));
    CHECK(dists.ndv.probability(3) == doctest::Approx(1.0 / 3.0));
    CHECK(dists.gdv.probability(2) == doctest::Approx(2.0 / 3.0));
    CHECK(dists.gdv.probability(3) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("extraction refuses degree-1 gates by name") {
    Hypergraph hg = Hypergraph::with_unit_weights(4);
    hg.nets = {{0, 1}, {1, 2}, {2, 0}, {0, 3}};  // node 3 has degree 1
    CHECK_THROWS_WITH_AS(extract_distributions(hg), doctest::Contains("node 3"),
                         ContractError);
}

TEST_CASE("extraction requires a cleaned netlist") {
    Hypergraph hg = Hypergraph::with_unit_weights(3);
    hg.nets = {{0, 0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(extract_distributions(hg), ContractError);
}
