#pragma once

#include <string>
#include <vector>

#include "perrdi/errors.hpp"

namespace perrdi {

// A netlist: n weighted nodes plus nets (hyperedges), each an ordered list of
// node indices. The first pin of a net is its driver by convention.
//
// Raw inputs may still contain duplicate pins or isolated nodes; those are
// normalized away by cleanup_netlist(). Operations that need a cleaned-up
// netlist call require_clean().
struct Hypergraph {
    int n = 0;
    std::vector<int> node_weights;           // size n, non-negative
    std::vector<std::vector<int>> nets;      // each net lists >= 2 pins

    static Hypergraph with_unit_weights(int num_nodes);

    long long pin_count() const;
    // Number of nets incident to each node.
    std::vector<int> degrees() const;

    // Structural checks: positive node/net counts, pins in range, >= 2 pins
    // per net, weight vector consistent. Throws ContractError.
    void validate() const;

    // True when every net has >= 2 distinct pins and no node is isolated.
    bool is_clean() const;
    // Throws ContractError naming the offending net or node.
    void require_clean(const std::string& op) const;
};

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Simple undirected weighted graph. The edge list is canonical: u < v,
// sorted lexicographically, one entry per node pair. build() normalizes raw
// edge lists by merging duplicate pairs (weights sum) and rejects self-loops
// and non-positive weights.
struct WeightedGraph {
    int n = 0;
    std::vector<int> node_weights;           // 0 allowed (star nodes only)
    std::vector<Edge> edges;

    static WeightedGraph build(int num_nodes, std::vector<Edge> raw_edges,
                               std::vector<int> node_weights = {});

    std::vector<double> weighted_degrees() const;
    double total_edge_weight() const;
};

// Hard node-to-part assignment with ids in [0, k).
struct PartitionAssignment {
    std::vector<int> part;
    int k = 2;

    int size() const { return static_cast<int>(part.size()); }
    void validate() const;
    std::vector<int> part_sizes() const;
};

}  // namespace perrdi
