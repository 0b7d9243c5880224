// File formats: hMETIS-style .hgr, METIS-style partition files, distribution
// files, weighted edge lists, and benchmark bundles with JSON metadata.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "perrdi/distributions.hpp"
#include "perrdi/generator.hpp"
#include "perrdi/hypergraph.hpp"

namespace perrdi {

// hMETIS format: optional '%' comment lines; header `numNets numNodes [fmt]`
// with fmt 1 (net weights), 10 (node weights), or 11 (both); one net per
// line as 1-based pins; node-weight lines follow for fmt 10/11. Net weights
// are accepted only when all equal 1. Errors carry 1-based line numbers.
Hypergraph parse_hgr(const std::string& text);

// Canonical form: no fmt field when every node weighs 1 (fmt 10 otherwise),
// nets in stored order, single spaces, trailing newline. Refuses weights < 1
// (zero-weight nodes exist only in expanded graphs, which are not .hgr).
std::string emit_hgr(const Hypergraph& hg);

struct PartitionReadResult {
    PartitionAssignment assignment;  // k = highest id + 1
    bool label_gaps = false;         // some id below the highest never occurs
};

// One part id per line, line i belonging to node i.
PartitionReadResult parse_partition(const std::string& text);
std::string emit_partition(const PartitionAssignment& pa);

// One `size probability` pair per line, sizes strictly ascending; '#'
// comments and blank lines are skipped.
SizeDistribution parse_distribution(const std::string& text);
std::string emit_distribution(const SizeDistribution& dist);

// Header `n m`, then m lines `u v w` (0-based endpoints), then n node-weight
// lines. Weights print in shortest round-trip decimal form.
std::string emit_edge_list(const WeightedGraph& g);
WeightedGraph parse_edge_list(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// A generated benchmark on disk: netlist + planted partition + metadata
// (+ the refined partition when FM ran).
struct BundlePaths {
    std::string hgr;
    std::string planted_part;
    std::string refined_part;  // may not exist on disk
    std::string meta;
};
BundlePaths bundle_paths(const std::string& out_dir, const std::string& stem);

BundlePaths write_bundle(const GeneratedBenchmark& bench, const std::string& out_dir,
                         const std::string& stem);

struct BundleMeta {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 2;
    double rent_t = 0.0;
    double rent_p = 0.0;
    long long budget = 0;
    long long planted_cut = 0;
    std::optional<long long> refined_cut;
    long long net_count = 0;
    long long skipped_nets = 0;
    std::string tool_version;
};

struct LoadedBundle {
    Hypergraph hypergraph;
    PartitionAssignment planted;
    std::optional<PartitionAssignment> refined;
    BundleMeta meta;
};

// Reads a bundle back and recomputes the planted cut from the files; any
// disagreement with the recorded metadata fails loudly.
LoadedBundle load_bundle(const BundlePaths& paths);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

}  // namespace perrdi
