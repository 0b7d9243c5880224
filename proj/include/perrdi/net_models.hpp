// Hypergraph-to-graph expansions: clique, star (zero-weight hub per net),
// and fanout (driver-to-sink edges).
#pragma once

#include <string>
#include <vector>

#include "perrdi/hypergraph.hpp"

namespace perrdi {

enum class NetModel { clique, star, fanout };

const char* net_model_name(NetModel model);
NetModel net_model_from_name(const std::string& name);  // throws ContractError

struct ExpandedGraph {
    WeightedGraph graph;
    int num_original_nodes = 0;
    // Auxiliary hub nodes (star model only): star_nodes[e] is the hub created
    // for net e. Hubs carry node weight 0; original nodes keep their weights.
    std::vector<int> star_nodes;
    NetModel model = NetModel::clique;
};

// Each net of size s becomes all s(s-1)/2 pairs with weight 2/(s(s-1)), so a
// net contributes total weight 1 and the graph's total edge weight equals the
// net count. Pairs shared by several nets get summed weights.
ExpandedGraph expand_clique(const Hypergraph& hg);

// Each net gains one new zero-weight hub node connected to every pin by a
// unit-weight spoke. 2-pin nets are not special-cased.
ExpandedGraph expand_star(const Hypergraph& hg);

// Each net becomes s-1 edges from its driver (first listed pin) to each sink,
// weight 1/(s-1); total edge weight again equals the net count.
ExpandedGraph expand_fanout(const Hypergraph& hg);

ExpandedGraph expand(const Hypergraph& hg, NetModel model);

// Lifts a partition of the original nodes onto an expansion. For clique and
// fanout this is the identity; for star, each hub joins the part holding the
// most of its net's pins (ties go to the lowest part id).
PartitionAssignment extend_to_expansion(const Hypergraph& hg, const ExpandedGraph& eg,
                                        const PartitionAssignment& pa);

}  // namespace perrdi
