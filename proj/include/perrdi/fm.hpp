// Fiduccia-Mattheyses bipartition refinement with gain buckets and
// best-prefix rollback, plus a balanced random initializer and an exhaustive
// oracle for tiny instances.
#pragma once

#include <cstdint>

#include "perrdi/hypergraph.hpp"
#include "perrdi/rng.hpp"

namespace perrdi {

struct FmConfig {
    double epsilon = 0.05;  // balance slack: side sizes stay within (0.5 +/- epsilon) * n
    int max_passes = 64;
    int restarts = 1;       // restart 0 uses the caller's initial assignment
    std::uint64_t seed = 0;
    // Debug cross-check: after every move, recompute all gains from scratch
    // and compare against the incrementally maintained values. Slow.
    bool audit_gains = false;

    void validate() const;
};

// Seeded shuffle of the node ids, split into k contiguous near-equal chunks
// (the first n % k chunks get the extra node). Sizes differ by at most 1.
PartitionAssignment random_balanced_partition(int n, int k, Rng& rng);

struct FmResult {
    PartitionAssignment assignment;
    long long cut = 0;
    int passes = 0;           // improving passes in the winning run
    int winning_restart = 0;  // 0 = the caller's initial assignment
};

// Classic FM on the hypergraph (gains from net side-counts, no expansion).
// Per pass, every node is moved at most once, highest gain first (FIFO within
// a gain bucket; when both sides offer the same gain, the heavier side moves,
// ties toward side 0), subject to the balance bound; the pass then rolls back
// to its best prefix and repeats until no pass improves the cut or max_passes
// is hit. restarts > 1 reruns from fresh seeded random balanced initials and
// keeps the best result (lowest cut, then lowest restart index). The result
// never cuts worse than the initial assignment.
// Throws ContractError for k != 2 or an initial outside the balance bound.
FmResult fm_bipartition(const Hypergraph& hg, const PartitionAssignment& initial,
                        const FmConfig& cfg);

// Inclusive node-count range [lo, hi] a side may occupy under the bound
// |side| within (0.5 +/- epsilon) * n, widened just enough that the forced
// imbalance of odd n is always legal. hi == n - lo.
std::pair<int, int> bipartition_balance_bounds(int n, double epsilon);

// Same for k parts: each part must hold within (1/k +/- epsilon) * n nodes,
// widened to admit the near-equal split of any n.
std::pair<int, int> kway_balance_bounds(int n, int k, double epsilon);

struct BruteForceResult {
    PartitionAssignment assignment;  // lexicographically smallest optimum
    long long cut = 0;
    long long explored = 0;  // balanced assignments evaluated
};

// Exhaustive minimum hyperedge cut over all balanced k-way assignments,
// enumerating one canonical representative per part-relabeling class.
// Throws SizeLimitError when k^n exceeds 2^24.
BruteForceResult brute_force_min_cut(const Hypergraph& hg, int k, double epsilon);

}  // namespace perrdi
