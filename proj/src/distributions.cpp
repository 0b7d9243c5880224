#include "perrdi/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "perrdi/errors.hpp"

namespace perrdi {

namespace {

constexpr double kSumTolerance = 1e-9;

}  // namespace

SizeDistribution::SizeDistribution(const std::map<int, double>& entries) {
    if (entries.empty()) throw ContractError("distribution has no entries");
    double sum = 0.0;
    entries_.reserve(entries.size());
    for (const auto& [size, p] : entries) {
        if (size < 2)
            throw ContractError("distribution size " + std::to_string(size) +
                                " below the minimum of 2");
        if (p < 0.0 || !std::isfinite(p))
            throw ContractError("distribution probability for size " +
                                std::to_string(size) + " is not in [0, 1]");
        sum += p;
        if (p > 0.0) entries_.emplace_back(size, p);
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw ContractError("distribution probabilities sum to " +
                            std::to_string(sum) + ", expected 1");
    if (entries_.empty()) throw ContractError("distribution has only zero entries");
    cumulative_.reserve(entries_.size());
    double acc = 0.0;
    for (const auto& [size, p] : entries_) {
        acc += p;
        cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;  // absorb rounding so sampling never falls off the end
}

SizeDistribution SizeDistribution::from_counts(const std::map<int, long long>& counts) {
    long long total = 0;
    for (const auto& [size, c] : counts) {
        if (c < 0) throw ContractError("negative count for size " + std::to_string(size));
        total += c;
    }
    if (total == 0) throw ContractError("histogram is empty");
    std::map<int, double> probs;
    for (const auto& [size, c] : counts)
        if (c > 0) probs[size] = static_cast<double>(c) / static_cast<double>(total);
    return SizeDistribution(probs);
}

double SizeDistribution::probability(int size) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), size,
                               [](const auto& e, int s) { return e.first < s; });
    return (it != entries_.end() && it->first == size) ? it->second : 0.0;
}

int SizeDistribution::max_size() const {
    if (entries_.empty()) throw ContractError("distribution has no entries");
    return entries_.back().first;
}

double SizeDistribution::mean() const {
    if (entries_.empty()) throw ContractError("distribution has no entries");
    double m = 0.0;
    for (const auto& [size, p] : entries_) m += size * p;
    return m;
}

int weighted_sample(const SizeDistribution& dist, Rng& rng) {
    if (dist.empty()) throw ContractError("cannot sample an empty distribution");
    const double u = rng.next_double();
    auto it = std::upper_bound(dist.cumulative_.begin(), dist.cumulative_.end(), u);
    if (it == dist.cumulative_.end()) --it;  // u == 1.0 cannot occur, but stay safe
    const auto idx = static_cast<std::size_t>(it - dist.cumulative_.begin());
    return dist.entries_[idx].first;
}

double l1_distance(const SizeDistribution& a, const SizeDistribution& b) {
    double dist = 0.0;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            dist += ia->second;
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            dist += ib->second;
            ++ib;
        } else {
            dist += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return dist;
}

Hypergraph cleanup_netlist(const Hypergraph& hg) {
    if (hg.n <= 0) throw EmptyDesignError("cleanup left no nodes");
    if (!hg.node_weights.empty() &&
        hg.node_weights.size() != static_cast<std::size_t>(hg.n))
        throw ContractError("node weight vector size does not match node count");

    // Pass 1: dedupe pins (first occurrence keeps its position) and drop
    // nets that end up with fewer than 2 distinct pins.
    std::vector<std::vector<int>> kept;
    kept.reserve(hg.nets.size());
    std::unordered_set<int> seen;
    for (const auto& net : hg.nets) {
        seen.clear();
        std::vector<int> pins;
        pins.reserve(net.size());
        for (int v : net) {
            if (v < 0 || v >= hg.n)
                throw ContractError("net references node " + std::to_string(v) +
                                    " out of range");
            if (seen.insert(v).second) pins.push_back(v);
        }
        if (pins.size() >= 2) kept.push_back(std::move(pins));
    }
    if (kept.empty()) throw EmptyDesignError("cleanup left no nets");

    // Pass 2: drop degree-0 nodes, renumbering survivors densely.
    std::vector<int> remap(static_cast<std::size_t>(hg.n), -1);
    for (const auto& net : kept)
        for (int v : net) remap[static_cast<std::size_t>(v)] = 0;
    int next = 0;
    for (int v = 0; v < hg.n; ++v)
        if (remap[static_cast<std::size_t>(v)] == 0) remap[static_cast<std::size_t>(v)] = next++;

    Hypergraph out;
    out.n = next;
    out.node_weights.reserve(static_cast<std::size_t>(next));
    for (int v = 0; v < hg.n; ++v)
        if (remap[static_cast<std::size_t>(v)] >= 0)
            out.node_weights.push_back(
                hg.node_weights.empty() ? 1 : hg.node_weights[static_cast<std::size_t>(v)]);
    out.nets = std::move(kept);
    for (auto& net : out.nets)
        for (int& v : net) v = remap[static_cast<std::size_t>(v)];
    return out;
}

ExtractedDistributions extract_distributions(const Hypergraph& hg) {
    hg.require_clean("extract_distributions");
    std::map<int, long long> net_sizes;
    for (const auto& net : hg.nets) net_sizes[static_cast<int>(net.size())]++;

    const auto deg = hg.degrees();
    std::map<int, long long> degree_hist;
    for (int v = 0; v < hg.n; ++v) {
        const int d = deg[static_cast<std::size_t>(v)];
        if (d < 2)
            throw ContractError("extract_distributions: node " + std::to_string(v) +
                                " has degree " + std::to_string(d) +
                                "; every gate must connect to at least 2 nets");
        degree_hist[d]++;
    }
    return {SizeDistribution::from_counts(net_sizes),
            SizeDistribution::from_counts(degree_hist)};
}

}  // namespace perrdi
