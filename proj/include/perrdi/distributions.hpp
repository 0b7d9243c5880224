// Discrete size distributions (net sizes, gate degrees), netlist cleanup,
// and extraction of both distributions from a cleaned hypergraph.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "perrdi/hypergraph.hpp"
#include "perrdi/rng.hpp"

namespace perrdi {

// A PMF over integer sizes >= 2. Entries are kept sorted ascending by size;
// probabilities are non-negative and sum to 1 (checked to 1e-9). Exact-zero
// entries are dropped on construction. Immutable once built.
class SizeDistribution {
  public:
    SizeDistribution() = default;
    explicit SizeDistribution(const std::map<int, double>& entries);

    // Normalizes a histogram of counts into a PMF.
    static SizeDistribution from_counts(const std::map<int, long long>& counts);

    const std::vector<std::pair<int, double>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    double probability(int size) const;
    int max_size() const;
    double mean() const;

  private:
    std::vector<std::pair<int, double>> entries_;  // ascending by size
    std::vector<double> cumulative_;               // same order, last = 1.0

    friend int weighted_sample(const SizeDistribution& dist, Rng& rng);
};

// Draws a size with probability proportional to its entry. Consumes exactly
// one rng.next_double() per call, so sequences are reproducible.
int weighted_sample(const SizeDistribution& dist, Rng& rng);

// Sum over the union of supports of |p_a - p_b|; ranges over [0, 2].
double l1_distance(const SizeDistribution& a, const SizeDistribution& b);

// Netlist cleanup: merge duplicate pins within each net (first occurrence
// wins the ordering), drop nets left with fewer than 2 pins, then drop nodes
// that appear on no net, renumbering the survivors densely in their original
// order. Idempotent. Throws EmptyDesignError if nothing survives.
Hypergraph cleanup_netlist(const Hypergraph& hg);

struct ExtractedDistributions {
    SizeDistribution ndv;  // net-size PMF
    SizeDistribution gdv;  // node-degree (pins per gate) PMF
};

// Histograms net sizes and node degrees of a cleaned hypergraph. Every node
// must lie on at least 2 nets: a degree-1 node would put an illegal size-1
// entry into the degree PMF, so it is reported as a precondition violation
// (run cleanup first, and treat remaining degree-1 nodes as data errors).
ExtractedDistributions extract_distributions(const Hypergraph& hg);

}  // namespace perrdi
