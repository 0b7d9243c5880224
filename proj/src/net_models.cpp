#include "perrdi/net_models.hpp"

#include <algorithm>

#include "perrdi/errors.hpp"

namespace perrdi {

const char* net_model_name(NetModel model) {
    switch (model) {
        case NetModel::clique: return "clique";
        case NetModel::star: return "star";
        case NetModel::fanout: return "fanout";
    }
    throw ContractError("unknown net model tag");
}

NetModel net_model_from_name(const std::string& name) {
    if (name == "clique") return NetModel::clique;
    if (name == "star") return NetModel::star;
    if (name == "fanout") return NetModel::fanout;
    throw ContractError("unknown net model '" + name +
                        "' (expected clique, star, or fanout)");
}

ExpandedGraph expand_clique(const Hypergraph& hg) {
    hg.require_clean("expand_clique");
    std::vector<Edge> edges;
    for (const auto& net : hg.nets) {
        const auto s = static_cast<double>(net.size());
        const double w = 2.0 / (s * (s - 1.0));
        for (std::size_t i = 0; i < net.size(); ++i)
            for (std::size_t j = i + 1; j < net.size(); ++j)
                edges.push_back({net[i], net[j], w});
    }
    ExpandedGraph eg;
    eg.graph = WeightedGraph::build(hg.n, std::move(edges), hg.node_weights);
    eg.num_original_nodes = hg.n;
    eg.model = NetModel::clique;
    return eg;
}

ExpandedGraph expand_star(const Hypergraph& hg) {
    hg.require_clean("expand_star");
    const int total = hg.n + static_cast<int>(hg.nets.size());
    std::vector<int> weights = hg.node_weights;
    weights.resize(static_cast<std::size_t>(total), 0);  // hubs weigh nothing

    ExpandedGraph eg;
    eg.num_original_nodes = hg.n;
    eg.model = NetModel::star;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(hg.pin_count()));
    for (std::size_t e = 0; e < hg.nets.size(); ++e) {
        const int hub = hg.n + static_cast<int>(e);
        eg.star_nodes.push_back(hub);
        for (int v : hg.nets[e]) edges.push_back({hub, v, 1.0});
    }
    eg.graph = WeightedGraph::build(total, std::move(edges), std::move(weights));
    return eg;
}

ExpandedGraph expand_fanout(const Hypergraph& hg) {
    hg.require_clean("expand_fanout");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(hg.pin_count()) - hg.nets.size());
    for (const auto& net : hg.nets) {
        const int driver = net.front();
        const double w = 1.0 / (static_cast<double>(net.size()) - 1.0);
        for (std::size_t j = 1; j < net.size(); ++j)
            edges.push_back({driver, net[j], w});
    }
    ExpandedGraph eg;
    eg.graph = WeightedGraph::build(hg.n, std::move(edges), hg.node_weights);
    eg.num_original_nodes = hg.n;
    eg.model = NetModel::fanout;
    return eg;
}

ExpandedGraph expand(const Hypergraph& hg, NetModel model) {
    switch (model) {
        case NetModel::clique: return expand_clique(hg);
        case NetModel::star: return expand_star(hg);
        case NetModel::fanout: return expand_fanout(hg);
    }
    throw ContractError("unknown net model tag");
}

PartitionAssignment extend_to_expansion(const Hypergraph& hg, const ExpandedGraph& eg,
                                        const PartitionAssignment& pa) {
    pa.validate();
    if (pa.part.size() != static_cast<std::size_t>(hg.n))
        throw ContractError("partition covers " + std::to_string(pa.part.size()) +
                            " nodes, expected " + std::to_string(hg.n));
    PartitionAssignment out = pa;
    if (eg.model != NetModel::star) return out;

    if (eg.star_nodes.size() != hg.nets.size())
        throw ContractError("expansion does not match hypergraph: " +
                            std::to_string(eg.star_nodes.size()) + " hubs for " +
                            std::to_string(hg.nets.size()) + " nets");
    out.part.resize(static_cast<std::size_t>(eg.graph.n), 0);
    std::vector<int> tally(static_cast<std::size_t>(pa.k));
    for (std::size_t e = 0; e < hg.nets.size(); ++e) {
        std::fill(tally.begin(), tally.end(), 0);
        for (int v : hg.nets[e]) tally[static_cast<std::size_t>(pa.part[static_cast<std::size_t>(v)])]++;
        const auto best = std::max_element(tally.begin(), tally.end());  // first max wins
        out.part[static_cast<std::size_t>(eg.star_nodes[e])] =
            static_cast<int>(best - tally.begin());
    }
    return out;
}

}  // namespace perrdi
