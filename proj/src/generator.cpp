#include "perrdi/generator.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "perrdi/errors.hpp"
#include "perrdi/fm.hpp"
#include "perrdi/metrics.hpp"

namespace perrdi {

void GeneratorParams::validate() const {
    if (n < 1) throw ContractError("node count must be positive");
    if (k < 2) throw ContractError("partition count must be at least 2");
    if (n < k)
        throw ContractError("cannot split " + std::to_string(n) + " nodes into " +
                            std::to_string(k) + " parts");
    if (!(rent_t > 0.0)) throw ContractError("rent_t must be positive");
    if (!(rent_p > 0.0 && rent_p < 1.0)) throw ContractError("rent_p must lie in (0, 1)");
    if (retry_limit < 1) throw ContractError("retry_limit must be at least 1");
    if (ndv.empty()) throw ContractError("net-size distribution is empty");
    if (gdv.empty()) throw ContractError("degree distribution is empty");
}

long long rent_cut_budget(int n, int k, double t, double p) {
    if (k < 1 || n < k) throw ContractError("need n >= k >= 1 for the cut budget");
    if (!(t > 0.0)) throw ContractError("rent_t must be positive");
    if (!(p > 0.0 && p < 1.0)) throw ContractError("rent_p must lie in (0, 1)");
    return std::llround(t * std::pow(static_cast<double>(n) / k, p));
}

GeneratedBenchmark generate_perrdi(const GeneratorParams& params) {
    params.validate();
    if (static_cast<double>(params.n) * params.gdv.mean() < params.ndv.mean())
        throw ContractError("degree distribution cannot supply the pins of even one "
                            "average net");

    const int n = params.n, k = params.k;
    Rng rng(params.seed);

    // Shuffle-split the nodes into k near-equal planted parts; the first
    // n % k parts hold the extra node.
    std::vector<int> part_of(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> ids(static_cast<std::size_t>(n));
        std::iota(ids.begin(), ids.end(), 0);
        rng.shuffle(ids);
        const int base = n / k, extra = n % k;
        std::size_t at = 0;
        for (int p = 0; p < k; ++p) {
            const int take = base + (p < extra ? 1 : 0);
            for (int j = 0; j < take; ++j)
                part_of[static_cast<std::size_t>(ids[at++])] = p;
        }
    }

    // Per-node degree caps, drawn in node-id order.
    std::vector<int> max_deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) max_deg[static_cast<std::size_t>(v)] = weighted_sample(params.gdv, rng);

    const long long budget = rent_cut_budget(n, k, params.rent_t, params.rent_p);

    // Free nodes (degree below cap) per part, with position maps so removal
    // and in-place partial shuffles stay O(1) per touched node.
    std::vector<std::vector<int>> free_nodes(static_cast<std::size_t>(k));
    std::vector<int> pos_in_free(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        auto& fl = free_nodes[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])];
        pos_in_free[static_cast<std::size_t>(v)] = static_cast<int>(fl.size());
        fl.push_back(v);
    }
    long long total_free = n;

    auto swap_free = [&](std::vector<int>& fl, std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(fl[i], fl[j]);
        pos_in_free[static_cast<std::size_t>(fl[i])] = static_cast<int>(i);
        pos_in_free[static_cast<std::size_t>(fl[j])] = static_cast<int>(j);
    };
    auto remove_free = [&](int v) {
        auto& fl = free_nodes[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])];
        const auto i = static_cast<std::size_t>(pos_in_free[static_cast<std::size_t>(v)]);
        swap_free(fl, i, fl.size() - 1);
        fl.pop_back();
        pos_in_free[static_cast<std::size_t>(v)] = -1;
        total_free--;
    };

    std::vector<std::vector<int>> nets;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> net;
    std::vector<int> pool;
    long long skipped = 0;
    int consecutive_failures = 0;

    while (total_free >= 2 && consecutive_failures < params.retry_limit) {
        const int net_size = weighted_sample(params.ndv, rng);
        // Under budget, the net spans parts: 1..net_size pins stay inside the
        // chosen part (net_size means it happens to stay whole). At budget,
        // nets are placed entirely within one part.
        const int span = static_cast<long long>(nets.size()) < budget
                             ? rng.uniform_int(1, net_size)
                             : net_size;
        const int pidx = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));

        auto& fl = free_nodes[static_cast<std::size_t>(pidx)];
        const long long in_avail = static_cast<long long>(fl.size());
        const long long other_avail = total_free - in_avail;
        if (in_avail < span || other_avail < net_size - span) {
            skipped++;
            consecutive_failures++;
            continue;
        }

        net.clear();
        // Pins from the chosen part: partial Fisher-Yates, parking each pick
        // at the tail so later draws can't repeat it.
        for (int j = 0; j < span; ++j) {
            const auto remaining = fl.size() - static_cast<std::size_t>(j);
            const auto idx = static_cast<std::size_t>(rng.below(remaining));
            net.push_back(fl[idx]);
            swap_free(fl, idx, remaining - 1);
        }
        // Pins from everywhere else: same trick on a scratch concatenation.
        if (net_size > span) {
            pool.clear();
            for (int q = 0; q < k; ++q) {
                if (q == pidx) continue;
                const auto& other = free_nodes[static_cast<std::size_t>(q)];
                pool.insert(pool.end(), other.begin(), other.end());
            }
            for (int j = 0; j < net_size - span; ++j) {
                const auto remaining = pool.size() - static_cast<std::size_t>(j);
                const auto idx = static_cast<std::size_t>(rng.below(remaining));
                net.push_back(pool[idx]);
                pool[idx] = pool[remaining - 1];
            }
        }

        for (int v : net) {
            deg[static_cast<std::size_t>(v)]++;
            if (deg[static_cast<std::size_t>(v)] >= max_deg[static_cast<std::size_t>(v)])
                remove_free(v);
        }
        nets.push_back(net);
        consecutive_failures = 0;
    }

    if (nets.empty())
        throw GenerationError("no nets could be placed (n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ", budget=" +
                              std::to_string(budget) + ", skipped=" +
                              std::to_string(skipped) + ")");

    GeneratedBenchmark bench;
    bench.hypergraph = Hypergraph::with_unit_weights(n);
    bench.hypergraph.nets = std::move(nets);
    bench.planted.part = std::move(part_of);
    bench.planted.k = k;
    bench.planted_cut = hyperedge_cut(bench.hypergraph, bench.planted);
    bench.budget = budget;
    bench.skipped_nets = skipped;
    bench.drawn_max_deg = std::move(max_deg);
    bench.params = params;

    if (params.refine && k == 2) {
        FmConfig fm;
        fm.seed = params.seed;
        const auto refined = fm_bipartition(bench.hypergraph, bench.planted, fm);
        bench.refined = refined.assignment;
        bench.refined_cut = refined.cut;
    }
    return bench;
}

WeightedGraph generate_erdos_renyi(int n, double p_edge, std::uint64_t seed) {
    if (n < 1) throw ContractError("node count must be positive");
    if (!(p_edge >= 0.0 && p_edge <= 1.0))
        throw ContractError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p_edge) edges.push_back({u, v, 1.0});
    return WeightedGraph::build(n, std::move(edges));
}

}  // namespace perrdi
