#include "perrdi/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace perrdi {

Hypergraph Hypergraph::with_unit_weights(int num_nodes) {
    Hypergraph hg;
    hg.n = num_nodes;
    hg.node_weights.assign(static_cast<std::size_t>(num_nodes), 1);
    return hg;
}

long long Hypergraph::pin_count() const {
    long long pins = 0;
    for (const auto& net : nets) pins += static_cast<long long>(net.size());
    return pins;
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& net : nets)
        for (int v : net) deg[static_cast<std::size_t>(v)]++;
    return deg;
}

void Hypergraph::validate() const {
    if (n <= 0) throw ContractError("hypergraph has no nodes");
    if (nets.empty()) throw ContractError("hypergraph has no nets");
    if (node_weights.size() != static_cast<std::size_t>(n))
        throw ContractError("node weight vector size does not match node count");
    for (int w : node_weights)
        if (w < 0) throw ContractError("negative node weight");
    for (std::size_t e = 0; e < nets.size(); ++e) {
        if (nets[e].size() < 2)
            throw ContractError("net " + std::to_string(e) + " has fewer than 2 pins");
        for (int v : nets[e])
            if (v < 0 || v >= n)
                throw ContractError("net " + std::to_string(e) + " references node " +
                                    std::to_string(v) + " out of range");
    }
}

bool Hypergraph::is_clean() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::unordered_set<int> seen;
    for (const auto& net : nets) {
        seen.clear();
        for (int v : net) {
            if (v < 0 || v >= n) return false;
            if (!seen.insert(v).second) return false;
            deg[static_cast<std::size_t>(v)]++;
        }
        if (seen.size() < 2) return false;
    }
    for (int d : deg)
        if (d == 0) return false;
    return n > 0 && !nets.empty();
}

void Hypergraph::require_clean(const std::string& op) const {
    validate();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::unordered_set<int> seen;
    for (std::size_t e = 0; e < nets.size(); ++e) {
        seen.clear();
        for (int v : nets[e]) {
            if (!seen.insert(v).second)
                throw ContractError(op + ": net " + std::to_string(e) +
                                    " lists node " + std::to_string(v) + " more than once");
            deg[static_cast<std::size_t>(v)]++;
        }
    }
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 0)
            throw ContractError(op + ": node " + std::to_string(v) + " is not on any net");
}

WeightedGraph WeightedGraph::build(int num_nodes, std::vector<Edge> raw_edges,
                                   std::vector<int> node_weights) {
    WeightedGraph g;
    g.n = num_nodes;
    if (num_nodes <= 0) throw ContractError("graph has no nodes");
    if (node_weights.empty()) node_weights.assign(static_cast<std::size_t>(num_nodes), 1);
    if (node_weights.size() != static_cast<std::size_t>(num_nodes))
        throw ContractError("node weight vector size does not match node count");
    for (int w : node_weights)
        if (w < 0) throw ContractError("negative node weight");
    g.node_weights = std::move(node_weights);

    for (auto& e : raw_edges) {
        if (e.u == e.v) throw ContractError("self-loop on node " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes)
            throw ContractError("edge endpoint out of range");
        if (!(e.w > 0.0)) throw ContractError("edge weight must be positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(raw_edges.begin(), raw_edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    g.edges.reserve(raw_edges.size());
    for (const auto& e : raw_edges) {
        if (!g.edges.empty() && g.edges.back().u == e.u && g.edges.back().v == e.v)
            g.edges.back().w += e.w;  // duplicate pair: weights sum
        else
            g.edges.push_back(e);
    }
    return g;
}

std::vector<double> WeightedGraph::weighted_degrees() const {
    std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
    for (const auto& e : edges) {
        deg[static_cast<std::size_t>(e.u)] += e.w;
        deg[static_cast<std::size_t>(e.v)] += e.w;
    }
    return deg;
}

double WeightedGraph::total_edge_weight() const {
    double total = 0.0;
    for (const auto& e : edges) total += e.w;
    return total;
}

void PartitionAssignment::validate() const {
    if (k < 2) throw ContractError("partition count must be at least 2");
    if (part.empty()) throw ContractError("empty partition assignment");
    for (int p : part)
        if (p < 0 || p >= k)
            throw ContractError("part id " + std::to_string(p) + " outside [0, " +
                                std::to_string(k) + ")");
}

std::vector<int> PartitionAssignment::part_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int p : part) sizes[static_cast<std::size_t>(p)]++;
    return sizes;
}

}  // namespace perrdi
