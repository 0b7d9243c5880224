#include <charconv>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "perrdi/errors.hpp"
#include "perrdi/generator.hpp"
#include "perrdi/io.hpp"
#include "perrdi/version.hpp"
#include "test_support.hpp"

using namespace perrdi;
using perrdi::testing::fixture_path;

namespace {

// Fresh scratch directory per process run.
std::string scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "perrdi_io_tests";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

GeneratorParams tiny_params(int n, int k, std::uint64_t seed) {
    GeneratorParams p;
    p.n = n;
    p.k = k;
    p.ndv = SizeDistribution(std::map<int, double>{{2, 0.5}, {3, 0.5}});
    p.gdv = SizeDistribution(std::map<int, double>{{2, 0.6}, {3, 0.4}});
    p.seed = seed;
    return p;
}

}  // namespace

TEST_CASE("netlist parsing reads the plain format") {
    const Hypergraph hg = parse_hgr("3 9\n1 2\n3 4 5\n6 7 8 9\n");
    CHECK(hg.n == 9);
    CHECK(hg.nets == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
    CHECK(hg.node_weights == std::vector<int>(9, 1));
}

TEST_CASE("netlist parsing skips comments and blank lines") {
    const Hypergraph hg = parse_hgr(
        "% a header comment\n\n1 3\n%% mid comment\n\n  1 2 3\n\n% trailing\n");
    CHECK(hg.n == 3);
    CHECK(hg.nets == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("netlist parsing accepts the weighted header variants") {
    // fmt 1: per-net weight column, all 1.
    const Hypergraph nets1 = parse_hgr("2 3 1\n1 1 2\n1 2 3\n");
    CHECK(nets1.nets == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    // fmt 10: per-node weights after the nets.
    const Hypergraph nodes10 = parse_hgr("1 2 10\n1 2\n3\n4\n");
    CHECK(nodes10.node_weights == std::vector<int>{3, 4});

    // fmt 11: both.
    const Hypergraph both = parse_hgr("1 2 11\n1 1 2\n5\n6\n");
    CHECK(both.nets == std::vector<std::vector<int>>{{0, 1}});
    CHECK(both.node_weights == std::vector<int>{5, 6});
}

TEST_CASE("netlist parsing rejects what the toolkit cannot honour") {
    CHECK_THROWS_WITH_AS(parse_hgr(""), doctest::Contains("missing header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("3\n"), doctest::Contains("numNets numNodes"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2 7\n1 2\n"), doctest::Contains("unknown fmt"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("0 2\n"), doctest::Contains("positive"), ParseError);
    // Net weights other than 1 are data loss; refuse them loudly.
    CHECK_THROWS_WITH_AS(parse_hgr("1 2 1\n2 1 2\n"),
                         doctest::Contains("net weights other than 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2\n1 2 x\n"),
                         doctest::Contains("expected an integer"), ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2\n1\n"), doctest::Contains("fewer than 2 pins"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2\n1 3\n"), doctest::Contains("outside [1, 2]"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("2 3\n1 2\n"), doctest::Contains("found only 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2\n1 2\n1 2\n"),
                         doctest::Contains("unexpected content"), ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2 10\n1 2\n0\n1\n"),
                         doctest::Contains("node weight must be positive"), ParseError);
    CHECK_THROWS_WITH_AS(parse_hgr("1 2 10\n1 2\n1\n"), doctest::Contains("found only 1"),
                         ParseError);
}

TEST_CASE("parse errors carry 1-based line numbers") {
    try {
        parse_hgr("2 4\n1 2\n1 5\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3:") != std::string::npos);
    }
}

TEST_CASE("netlist emission is canonical") {
    Hypergraph hg = Hypergraph::with_unit_weights(2);
    hg.nets = {{0, 1}};
    CHECK(emit_hgr(hg) == "1 2\n1 2\n");

    hg.node_weights = {2, 1};
    CHECK(emit_hgr(hg) == "1 2 10\n1 2\n2\n1\n");

    hg.node_weights = {0, 1};  // zero weights cannot survive a round trip
    CHECK_THROWS_AS(emit_hgr(hg), ContractError);
}

TEST_CASE("netlist round trips are exact") {
    Rng rng(111);
    for (int trial = 0; trial < 10; ++trial) {
        const Hypergraph hg = perrdi::testing::random_clean_hypergraph(rng, 15, 20);
        const std::string text = emit_hgr(hg);
        const Hypergraph back = parse_hgr(text);
        CHECK(back.n == hg.n);
        CHECK(back.nets == hg.nets);
        CHECK(back.node_weights == hg.node_weights);
        CHECK(emit_hgr(back) == text);  // emission is idempotent
    }
}

TEST_CASE("golden netlist files survive a parse/emit cycle byte for byte") {
    for (const char* name : {"golden_unit.hgr", "golden_weighted.hgr", "ispd_like.hgr"}) {
        const std::string text = read_text_file(fixture_path(name));
        CHECK(emit_hgr(parse_hgr(text)) == text);
    }
}

TEST_CASE("partition files parse and emit losslessly") {
    const std::string text = read_text_file(fixture_path("golden.part"));
    const auto res = parse_partition(text);
    CHECK(res.assignment.part == std::vector<int>{0, 0, 1, 1});
    CHECK(res.assignment.k == 2);
    CHECK_FALSE(res.label_gaps);
    CHECK(emit_partition(res.assignment) == text);
}

TEST_CASE("partition parsing flags label gaps and single-part files") {
    const auto gappy = parse_partition("0\n2\n0\n2\n");
    CHECK(gappy.assignment.k == 3);
    CHECK(gappy.label_gaps);

    // All-zero files still load as a 2-part assignment.
    const auto flat = parse_partition("0\n0\n0\n");
    CHECK(flat.assignment.k == 2);
    CHECK_FALSE(flat.label_gaps);
}

TEST_CASE("partition parsing rejects malformed files") {
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("0\n-1\n"), doctest::Contains("negative"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("0 1\n"), doctest::Contains("exactly one"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("zero\n"),
                         doctest::Contains("expected an integer"), ParseError);
}

TEST_CASE("distribution files round-trip exactly") {
    const SizeDistribution d(
        std::map<int, double>{{2, 0.2}, {3, 0.25}, {7, 0.25}, {9, 0.3}});
    const std::string text = emit_distribution(d);
    const SizeDistribution back = parse_distribution(text);
    REQUIRE(back.entries().size() == d.entries().size());
    for (std::size_t i = 0; i < d.entries().size(); ++i) {
        CHECK(back.entries()[i].first == d.entries()[i].first);
        CHECK(back.entries()[i].second == d.entries()[i].second);  // bitwise
    }
    CHECK(emit_distribution(back) == text);
}

TEST_CASE("distribution parsing enforces order, range, and mass") {
    CHECK(parse_distribution("# sizes\n2 0.5\n\n3 0.5\n").probability(3) == 0.5);
    CHECK_THROWS_WITH_AS(parse_distribution("3 0.5\n2 0.5\n"),
                         doctest::Contains("ascending"), ParseError);
    CHECK_THROWS_WITH_AS(parse_distribution("1 1.0\n"), doctest::Contains("legal range"),
                         ParseError);
    CHECK_THROWS_AS(parse_distribution(""), ParseError);
    CHECK_THROWS_AS(parse_distribution("2 0.5\n3 0.2\n"), ContractError);  // sums to 0.7
    CHECK_THROWS_WITH_AS(parse_distribution("2 0.5 9\n3 0.5\n"),
                         doctest::Contains("trailing"), ParseError);
}

TEST_CASE("edge lists round-trip bit-exactly including awkward weights") {
    const WeightedGraph g = WeightedGraph::build(
        4, {{0, 1, 1.0 / 3.0}, {1, 2, 0.1}, {2, 3, 123456.789}}, {1, 2, 0, 7});
    const std::string text = emit_edge_list(g);
    const WeightedGraph back = parse_edge_list(text);
    CHECK(back.n == g.n);
    CHECK(back.node_weights == g.node_weights);
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(back.edges[i].u == g.edges[i].u);
        CHECK(back.edges[i].v == g.edges[i].v);
        CHECK(back.edges[i].w == g.edges[i].w);  // bitwise
    }
    CHECK(emit_edge_list(back) == text);
}

TEST_CASE("edge list parsing reports structural problems") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 5 1.0\n1\n1\n"),
                         doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 2\n0 1 1.0\n"),
                         doctest::Contains("found only 1"), ParseError);
    // Self-loops are caught by graph construction and rethrown with a line.
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0 1.0\n1\n1\n"), ParseError);
}

TEST_CASE("text file helpers read back what they wrote") {
    const std::string dir = scratch_dir();
    const std::string path = dir + "/roundtrip.txt";
    write_text_file(path, "two\nlines\n");
    CHECK(read_text_file(path) == "two\nlines\n");
    CHECK_THROWS(read_text_file(dir + "/does_not_exist.txt"));
}

TEST_CASE("benchmark bundles write, reload, and self-verify") {
    const std::string dir = scratch_dir() + "/bundle_ok";
    const auto bench = generate_perrdi(tiny_params(40, 2, 21));
    const auto paths = write_bundle(bench, dir, "case");
    CHECK(std::filesystem::exists(paths.hgr));
    CHECK(std::filesystem::exists(paths.planted_part));
    CHECK(std::filesystem::exists(paths.refined_part));
    CHECK(std::filesystem::exists(paths.meta));

    const auto loaded = load_bundle(paths);
    CHECK(loaded.hypergraph.nets == bench.hypergraph.nets);
    CHECK(loaded.planted.part == bench.planted.part);
    REQUIRE(loaded.refined.has_value());
    CHECK(loaded.refined->part == bench.refined->part);
    CHECK(loaded.meta.seed == 21);
    CHECK(loaded.meta.n == 40);
    CHECK(loaded.meta.k == 2);
    CHECK(loaded.meta.budget == bench.budget);
    CHECK(loaded.meta.planted_cut == bench.planted_cut);
    CHECK(loaded.meta.refined_cut == bench.refined_cut);
    CHECK(loaded.meta.net_count == static_cast<long long>(bench.hypergraph.nets.size()));
    CHECK(loaded.meta.tool_version == kToolVersion);
}

TEST_CASE("bundle metadata keeps a fixed key order") {
    const std::string dir = scratch_dir() + "/bundle_keys";
    const auto bench = generate_perrdi(tiny_params(30, 2, 5));
    const auto paths = write_bundle(bench, dir, "case");
    const std::string meta = read_text_file(paths.meta);
    const std::vector<std::string> keys = {
        "\"seed\"",   "\"n\"",           "\"k\"",          "\"rent_t\"",
        "\"rent_p\"", "\"ndv\"",         "\"gdv\"",        "\"budget\"",
        "\"planted_cut\"", "\"refined_cut\"", "\"net_count\"",
        "\"skipped_nets\"", "\"tool_version\""};
    std::string::size_type prev = 0;
    for (const auto& key : keys) {
        const auto at = meta.find(key, prev);
        REQUIRE_MESSAGE(at != std::string::npos, key.c_str());
        prev = at;
    }
    // Parse as JSON to be sure the file is well-formed.
    const auto parsed = nlohmann::json::parse(meta);
    CHECK(parsed.size() == keys.size());
}

TEST_CASE("bundles without refinement omit the refined partition") {
    const std::string dir = scratch_dir() + "/bundle_kway";
    const auto bench = generate_perrdi(tiny_params(40, 4, 2));
    const auto paths = write_bundle(bench, dir, "case");
    CHECK_FALSE(std::filesystem::exists(paths.refined_part));
    const auto loaded = load_bundle(paths);
    CHECK_FALSE(loaded.refined.has_value());
    CHECK_FALSE(loaded.meta.refined_cut.has_value());
    CHECK(loaded.planted.k == 4);
}

TEST_CASE("tampered bundles fail loudly") {
    const auto bench = generate_perrdi(tiny_params(40, 2, 21));

    // Flip one planted label: the recomputed cut no longer matches.
    {
        const std::string dir = scratch_dir() + "/tamper_planted";
        const auto paths = write_bundle(bench, dir, "case");
        auto planted = bench.planted;
        planted.part[0] ^= 1;
        write_text_file(paths.planted_part, emit_partition(planted));
        CHECK_THROWS_WITH_AS(load_bundle(paths), doctest::Contains("self-consistency"),
                             ContractError);
    }

    // Remove the refined partition while the metadata still records its cut.
    {
        const std::string dir = scratch_dir() + "/tamper_refined";
        const auto paths = write_bundle(bench, dir, "case");
        std::filesystem::remove(paths.refined_part);
        CHECK_THROWS_WITH_AS(load_bundle(paths),
                             doctest::Contains("no refined partition"), ContractError);
    }

    // Shrink the netlist: node and net counts disagree with the metadata.
    {
        const std::string dir = scratch_dir() + "/tamper_hgr";
        const auto paths = write_bundle(bench, dir, "case");
        Hypergraph clipped = bench.hypergraph;
        clipped.nets.pop_back();
        write_text_file(paths.hgr, emit_hgr(clipped));
        CHECK_THROWS_WITH_AS(load_bundle(paths), doctest::Contains("inconsistency"),
                             ContractError);
    }
}

TEST_CASE("compact float formatting survives a parse round trip") {
    for (const double x : {0.1, 1.0 / 3.0, 2.0, 1e-9, 123456.789, 0.665}) {
        const std::string s = format_double(x);
        double back = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc());
        CHECK(back == x);
    }
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(2.0) == "2");
}
