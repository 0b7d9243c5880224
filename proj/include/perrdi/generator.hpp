// PERRDI synthetic netlist generation: planted partitions with a Rent's-rule
// cut budget, net sizes and node degree caps drawn from NDV/GDV, optional FM
// refinement of the planted bipartition. Also the Erdős–Rényi baseline.
#pragma once

#include <cstdint>
#include <optional>

#include "perrdi/distributions.hpp"
#include "perrdi/hypergraph.hpp"

namespace perrdi {

struct GeneratorParams {
    int n = 0;
    int k = 2;
    SizeDistribution ndv;  // net sizes
    SizeDistribution gdv;  // per-node degree caps
    double rent_t = 4.0;
    double rent_p = 0.665;
    std::uint64_t seed = 0;
    bool refine = true;    // FM on the planted split; only applies when k == 2
    int retry_limit = 100; // consecutive failed net placements before stopping

    void validate() const;
};

struct GeneratedBenchmark {
    Hypergraph hypergraph;         // unit node weights, n nodes even if some end up isolated
    PartitionAssignment planted;
    long long planted_cut = 0;
    std::optional<PartitionAssignment> refined;  // k == 2 with refine only
    std::optional<long long> refined_cut;
    long long budget = 0;        // Rent cut budget used during generation
    long long skipped_nets = 0;  // placement attempts abandoned for lack of free nodes
    std::vector<int> drawn_max_deg;  // per-node degree caps as sampled (fidelity checks)
    GeneratorParams params;
};

// round(t * (n/k)^p), the number of nets the generator places across parts
// before switching to intra-part nets.
long long rent_cut_budget(int n, int k, double t, double p);

// The draw sequence per placed net is: net size from NDV; if the budget is
// not yet met, a span count uniform on [1, size]; a part index uniform on
// [0, k); then the pins (span from the chosen part, the rest from the other
// parts' free nodes). Identical params reproduce the benchmark byte for byte.
GeneratedBenchmark generate_perrdi(const GeneratorParams& params);

// Each unordered node pair becomes a unit-weight edge independently with
// probability p_edge; pairs are visited in (u, v) lexicographic order so a
// seed pins the graph exactly.
WeightedGraph generate_erdos_renyi(int n, double p_edge, std::uint64_t seed);

}  // namespace perrdi
