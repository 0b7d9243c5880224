#include "perrdi/metrics.hpp"

#include <algorithm>
#include <deque>

#include "perrdi/errors.hpp"
#include "perrdi/rng.hpp"

namespace perrdi {

namespace {

void check_lengths(std::size_t n, const PartitionAssignment& pa) {
    pa.validate();
    if (pa.part.size() != n)
        throw ContractError("partition assignment covers " +
                            std::to_string(pa.part.size()) + " nodes, expected " +
                            std::to_string(n));
}

}  // namespace

long long hyperedge_cut(const Hypergraph& hg, const PartitionAssignment& pa) {
    check_lengths(static_cast<std::size_t>(hg.n), pa);
    long long cut = 0;
    for (const auto& net : hg.nets) {
        const int first = pa.part[static_cast<std::size_t>(net.front())];
        for (int v : net) {
            if (pa.part[static_cast<std::size_t>(v)] != first) {
                cut++;
                break;
            }
        }
    }
    return cut;
}

double graph_cut(const WeightedGraph& g, const PartitionAssignment& pa) {
    check_lengths(static_cast<std::size_t>(g.n), pa);
    double cut = 0.0;
    for (const auto& e : g.edges)
        if (pa.part[static_cast<std::size_t>(e.u)] != pa.part[static_cast<std::size_t>(e.v)])
            cut += e.w;
    return cut;
}

double partition_volume(const WeightedGraph& g, const PartitionAssignment& pa,
                        int part_id) {
    check_lengths(static_cast<std::size_t>(g.n), pa);
    if (part_id < 0 || part_id >= pa.k)
        throw ContractError("part id " + std::to_string(part_id) + " outside [0, " +
                            std::to_string(pa.k) + ")");
    double vol = 0.0;
    for (const auto& e : g.edges) {
        if (pa.part[static_cast<std::size_t>(e.u)] == part_id) vol += e.w;
        if (pa.part[static_cast<std::size_t>(e.v)] == part_id) vol += e.w;
    }
    return vol;
}

double simple_ncut(const WeightedGraph& g, const PartitionAssignment& pa) {
    check_lengths(static_cast<std::size_t>(g.n), pa);
    std::vector<double> vol(static_cast<std::size_t>(pa.k), 0.0);
    std::vector<double> cut(static_cast<std::size_t>(pa.k), 0.0);
    for (const auto& e : g.edges) {
        const int pu = pa.part[static_cast<std::size_t>(e.u)];
        const int pv = pa.part[static_cast<std::size_t>(e.v)];
        vol[static_cast<std::size_t>(pu)] += e.w;
        vol[static_cast<std::size_t>(pv)] += e.w;
        if (pu != pv) {
            cut[static_cast<std::size_t>(pu)] += e.w;
            cut[static_cast<std::size_t>(pv)] += e.w;
        }
    }
    double total = 0.0;
    for (int p = 0; p < pa.k; ++p) {
        if (!(vol[static_cast<std::size_t>(p)] > 0.0))
            throw DegeneratePartitionError("part " + std::to_string(p) +
                                           " has zero volume");
        total += cut[static_cast<std::size_t>(p)] / vol[static_cast<std::size_t>(p)];
    }
    return total;
}

double balancedness(const PartitionAssignment& pa) {
    pa.validate();
    const auto sizes = pa.part_sizes();
    const int largest = *std::max_element(sizes.begin(), sizes.end());
    return static_cast<double>(largest) / static_cast<double>(pa.part.size());
}

double balancedness(const PartitionAssignment& pa,
                    const std::vector<int>& node_weights) {
    pa.validate();
    if (node_weights.size() != pa.part.size())
        throw ContractError("node weight vector size does not match assignment");
    std::vector<long long> counted(static_cast<std::size_t>(pa.k), 0);
    long long total = 0;
    for (std::size_t i = 0; i < pa.part.size(); ++i) {
        if (node_weights[i] == 0) continue;  // auxiliary nodes don't count
        counted[static_cast<std::size_t>(pa.part[i])]++;
        total++;
    }
    if (total == 0) throw ContractError("no weighted nodes to balance");
    const long long largest = *std::max_element(counted.begin(), counted.end());
    return static_cast<double>(largest) / static_cast<double>(total);
}

namespace {

// BFS from `src` over `adj`, accumulating hop distances to every reachable
// node. Returns the summed distance and the number of nodes reached (src
// excluded). `dist` is scratch, reset lazily via the `stamp` trick.
struct BfsScratch {
    std::vector<int> dist;
    std::vector<int> stamp;
    std::vector<int> queue;
    int round = 0;

    explicit BfsScratch(std::size_t n) : dist(n, 0), stamp(n, -1) { queue.reserve(n); }

    std::pair<long long, long long> run(const std::vector<std::vector<int>>& adj, int src) {
        round++;
        queue.clear();
        queue.push_back(src);
        stamp[static_cast<std::size_t>(src)] = round;
        dist[static_cast<std::size_t>(src)] = 0;
        long long sum = 0, reached = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<std::size_t>(u)];
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (stamp[static_cast<std::size_t>(v)] == round) continue;
                stamp[static_cast<std::size_t>(v)] = round;
                dist[static_cast<std::size_t>(v)] = du + 1;
                sum += du + 1;
                reached++;
                queue.push_back(v);
            }
        }
        return {sum, reached};
    }
};

// Fixed seed for source sampling so repeated runs agree byte-for-byte.
constexpr std::uint64_t kPathSampleSeed = 0x50415448ULL;

}  // namespace

PathLengthStats avg_shortest_path(const WeightedGraph& g, int exact_limit,
                                  int sample_sources) {
    if (g.n <= 0) throw ContractError("empty graph");
    if (g.n == 1) throw ContractError("graph has a single node; no pairs to average");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    // Locate connected components; keep the largest (first wins ties, so the
    // choice is deterministic).
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    int best_comp = -1, best_size = 0, num_comps = 0;
    {
        std::vector<int> stack;
        for (int s = 0; s < g.n; ++s) {
            if (comp[static_cast<std::size_t>(s)] != -1) continue;
            const int c = num_comps++;
            int size = 0;
            stack.push_back(s);
            comp[static_cast<std::size_t>(s)] = c;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                size++;
                for (int v : adj[static_cast<std::size_t>(u)]) {
                    if (comp[static_cast<std::size_t>(v)] == -1) {
                        comp[static_cast<std::size_t>(v)] = c;
                        stack.push_back(v);
                    }
                }
            }
            if (size > best_size) {
                best_size = size;
                best_comp = c;
            }
        }
    }

    PathLengthStats stats;
    stats.connected = (num_comps == 1);
    stats.component_nodes = best_size;
    if (best_size < 2) throw ContractError("largest component has fewer than 2 nodes");

    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(best_size));
    for (int v = 0; v < g.n; ++v)
        if (comp[static_cast<std::size_t>(v)] == best_comp) members.push_back(v);

    BfsScratch scratch(static_cast<std::size_t>(g.n));
    long long total = 0, pairs = 0;
    if (best_size <= exact_limit) {
        stats.exact = true;
        for (int src : members) {
            const auto [sum, reached] = scratch.run(adj, src);
            total += sum;
            pairs += reached;
        }
    } else {
        stats.exact = false;
        Rng rng(kPathSampleSeed);
        rng.shuffle(members);
        const int take = std::min<int>(sample_sources, best_size);
        for (int i = 0; i < take; ++i) {
            const auto [sum, reached] = scratch.run(adj, members[static_cast<std::size_t>(i)]);
            total += sum;
            pairs += reached;
        }
    }
    stats.pairs = pairs;
    stats.avg_path = static_cast<double>(total) / static_cast<double>(pairs);
    return stats;
}

}  // namespace perrdi
