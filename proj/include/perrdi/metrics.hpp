// Discrete partition-quality metrics and topology statistics.
#pragma once

#include <vector>

#include "perrdi/hypergraph.hpp"

namespace perrdi {

// Number of nets whose pins span at least two distinct parts. Each spanning
// net counts exactly once, no matter how many parts it touches.
// Throws ContractError if the assignment length does not match hg.n.
long long hyperedge_cut(const Hypergraph& hg, const PartitionAssignment& pa);

// Total weight of graph edges whose endpoints lie in different parts.
double graph_cut(const WeightedGraph& g, const PartitionAssignment& pa);

// Sum of weighted degrees of the nodes assigned to `part_id`.
// Throws ContractError if part_id is outside [0, pa.k).
double partition_volume(const WeightedGraph& g, const PartitionAssignment& pa,
                        int part_id);

// Normalized cut: sum over parts of cut(S_k, complement) / vol(S_k).
// Every part must have strictly positive volume; a zero-volume part raises
// DegeneratePartitionError rather than dividing by zero.
double simple_ncut(const WeightedGraph& g, const PartitionAssignment& pa);

// Fraction of nodes in the most populous part (node counts, unit weights).
double balancedness(const PartitionAssignment& pa);

// Same, but nodes with weight 0 (auxiliary star centers) are excluded from
// both the part counts and the total.
double balancedness(const PartitionAssignment& pa,
                    const std::vector<int>& node_weights);

struct PathLengthStats {
    double avg_path = 0.0;    // mean hop distance over ordered reachable pairs
    bool connected = true;    // false if computed on the largest component only
    bool exact = true;        // false if estimated from sampled BFS sources
    int component_nodes = 0;  // size of the component the mean was taken on
    long long pairs = 0;      // number of ordered pairs averaged over
};

// Average unweighted shortest-path length. Exact all-pairs BFS when the
// component has at most `exact_limit` nodes; otherwise BFS from
// `sample_sources` deterministically chosen sources (a seeded shuffle of the
// component's node ids with a fixed internal seed, so results are stable).
// Disconnected graphs are measured on their largest component with
// connected=false. Edge weights are ignored: every edge is one hop.
PathLengthStats avg_shortest_path(const WeightedGraph& g, int exact_limit = 2000,
                                  int sample_sources = 64);

}  // namespace perrdi
