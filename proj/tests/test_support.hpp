// Shared fixtures and small random-instance builders for the unit tests.
#pragma once

#include <string>
#include <vector>

#include "perrdi/distributions.hpp"
#include "perrdi/hypergraph.hpp"
#include "perrdi/rng.hpp"

#ifndef PERRDI_FIXTURE_DIR
#error "PERRDI_FIXTURE_DIR must point at the test fixture directory"
#endif

namespace perrdi::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(PERRDI_FIXTURE_DIR) + "/" + name;
}

// Two triangles joined by a single bridge net: the minimum balanced cut is
// exactly that bridge.
inline Hypergraph bridged_triangles() {
    Hypergraph hg = Hypergraph::with_unit_weights(6);
    hg.nets = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
    return hg;
}

// The 4-cycle as a weighted graph.
inline WeightedGraph cycle4() {
    return WeightedGraph::build(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
}

// Complete unit-weight graph.
inline WeightedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return WeightedGraph::build(n, std::move(edges));
}

// Random clean hypergraph: nets drawn with 2..max_size distinct pins, then
// normalized so no node is isolated and no pin repeats. May shrink below
// max_nodes when cleanup drops isolated nodes.
inline Hypergraph random_clean_hypergraph(Rng& rng, int max_nodes, int max_nets,
                                          int max_size = 5) {
    const int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes - 2)));
    const int nets = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nets - 1)));
    Hypergraph hg = Hypergraph::with_unit_weights(n);
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;
    for (int e = 0; e < nets; ++e) {
        const int cap = std::min(max_size, n);
        const int size = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - 1)));
        rng.shuffle(ids);
        hg.nets.emplace_back(ids.begin(), ids.begin() + size);
    }
    return cleanup_netlist(hg);
}

// Random connected unit graph: a shuffled spanning path plus extra edges.
// Every node has degree >= 1, as the soft objective requires.
inline WeightedGraph random_connected_graph(Rng& rng, int n, int extra_edges) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    rng.shuffle(order);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({order[static_cast<std::size_t>(i)],
                         order[static_cast<std::size_t>(i + 1)], 1.0});
    for (int e = 0; e < extra_edges; ++e) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) v = (v + 1) % n;
        edges.push_back({u, v, 0.5 + rng.next_double()});
    }
    return WeightedGraph::build(n, std::move(edges));
}

}  // namespace perrdi::testing
