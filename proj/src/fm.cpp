#include "perrdi/fm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "perrdi/errors.hpp"

namespace perrdi {

void FmConfig::validate() const {
    if (!(epsilon >= 0.0 && epsilon < 0.5))
        throw ContractError("balance slack must lie in [0, 0.5)");
    if (max_passes < 1) throw ContractError("max_passes must be at least 1");
    if (restarts < 1) throw ContractError("restarts must be at least 1");
}

PartitionAssignment random_balanced_partition(int n, int k, Rng& rng) {
    if (k < 2) throw ContractError("partition count must be at least 2");
    if (n < k)
        throw ContractError("cannot split " + std::to_string(n) + " nodes into " +
                            std::to_string(k) + " parts");
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    PartitionAssignment pa;
    pa.k = k;
    pa.part.assign(static_cast<std::size_t>(n), 0);
    const int base = n / k, extra = n % k;
    std::size_t at = 0;
    for (int p = 0; p < k; ++p) {
        const int take = base + (p < extra ? 1 : 0);
        for (int j = 0; j < take; ++j) pa.part[static_cast<std::size_t>(ids[at++])] = p;
    }
    return pa;
}

std::pair<int, int> kway_balance_bounds(int n, int k, double epsilon) {
    if (n < 1 || k < 2) throw ContractError("need n >= 1 and k >= 2 for balance bounds");
    const double share = 1.0 / k;
    // The 1e-9 nudges keep exact products like 0.45 * 20 from rounding to the
    // wrong integer; then widen to the near-equal split so any n is feasible.
    int lo = static_cast<int>(std::ceil((share - epsilon) * n - 1e-9));
    int hi = static_cast<int>(std::floor((share + epsilon) * n + 1e-9));
    lo = std::min(lo, n / k);
    hi = std::max(hi, (n + k - 1) / k);
    lo = std::max(lo, 0);
    hi = std::min(hi, n);
    return {lo, hi};
}

std::pair<int, int> bipartition_balance_bounds(int n, double epsilon) {
    return kway_balance_bounds(n, 2, epsilon);
}

namespace {

// Gain-indexed FIFO queues backed by intrusive doubly-linked lists, the
// classic FM bucket array. Gains live in [-max_gain, +max_gain].
class GainBuckets {
  public:
    GainBuckets(int n, int max_gain)
        : offset_(max_gain),
          head_(2 * static_cast<std::size_t>(max_gain) + 1, -1),
          tail_(2 * static_cast<std::size_t>(max_gain) + 1, -1),
          next_(static_cast<std::size_t>(n), -1),
          prev_(static_cast<std::size_t>(n), -1),
          bucket_of_(static_cast<std::size_t>(n), -1) {}

    void insert(int v, int gain) {
        const int b = gain + offset_;
        bucket_of_[static_cast<std::size_t>(v)] = b;
        prev_[static_cast<std::size_t>(v)] = tail_[static_cast<std::size_t>(b)];
        next_[static_cast<std::size_t>(v)] = -1;
        if (tail_[static_cast<std::size_t>(b)] != -1)
            next_[static_cast<std::size_t>(tail_[static_cast<std::size_t>(b)])] = v;
        else
            head_[static_cast<std::size_t>(b)] = v;
        tail_[static_cast<std::size_t>(b)] = v;
        top_ = std::max(top_, b);
    }

    void erase(int v) {
        const int b = bucket_of_[static_cast<std::size_t>(v)];
        if (b == -1) return;
        const int p = prev_[static_cast<std::size_t>(v)];
        const int nx = next_[static_cast<std::size_t>(v)];
        if (p != -1) next_[static_cast<std::size_t>(p)] = nx;
        else head_[static_cast<std::size_t>(b)] = nx;
        if (nx != -1) prev_[static_cast<std::size_t>(nx)] = p;
        else tail_[static_cast<std::size_t>(b)] = p;
        bucket_of_[static_cast<std::size_t>(v)] = -1;
    }

    // Highest gain currently queued, or INT_MIN when empty.
    int max_gain() {
        while (top_ >= 0 && head_[static_cast<std::size_t>(top_)] == -1) top_--;
        return top_ >= 0 ? top_ - offset_ : std::numeric_limits<int>::min();
    }

    // Oldest node in the highest bucket (FIFO), or -1 when empty.
    int pop_max() {
        if (max_gain() == std::numeric_limits<int>::min()) return -1;
        const int v = head_[static_cast<std::size_t>(top_)];
        erase(v);
        return v;
    }

  private:
    int offset_;
    std::vector<int> head_, tail_, next_, prev_, bucket_of_;
    int top_ = -1;
};

struct RunOutcome {
    std::vector<int> side;
    long long cut = 0;
    int passes = 0;
};

// One full FM run (all passes) from one starting assignment.
RunOutcome fm_run(const Hypergraph& hg, const std::vector<std::vector<int>>& nets_of,
                  std::vector<int> side, int lo, int max_passes, bool audit) {
    const int n = hg.n;
    const std::size_t num_nets = hg.nets.size();
    std::vector<int> cnt0(num_nets), cnt1(num_nets);
    int sizes[2] = {0, 0};
    for (int v = 0; v < n; ++v) sizes[side[static_cast<std::size_t>(v)]]++;

    long long cut = 0;
    for (std::size_t e = 0; e < num_nets; ++e) {
        int c1 = 0;
        for (int v : hg.nets[e]) c1 += side[static_cast<std::size_t>(v)];
        cnt1[e] = c1;
        cnt0[e] = static_cast<int>(hg.nets[e].size()) - c1;
        if (cnt0[e] != 0 && cnt1[e] != 0) cut++;
    }

    const auto deg = hg.degrees();
    const int maxdeg = *std::max_element(deg.begin(), deg.end());

    std::vector<int> gain(static_cast<std::size_t>(n), 0);
    std::vector<char> locked(static_cast<std::size_t>(n), 0);
    std::vector<int> move_order;
    move_order.reserve(static_cast<std::size_t>(n));

    // Gain of moving v off its current side, from the side counts of its nets.
    auto gain_from_scratch = [&](int v) {
        int g = 0;
        for (int e : nets_of[static_cast<std::size_t>(v)]) {
            const bool on0 = side[static_cast<std::size_t>(v)] == 0;
            const int f = on0 ? cnt0[static_cast<std::size_t>(e)] : cnt1[static_cast<std::size_t>(e)];
            const int t = on0 ? cnt1[static_cast<std::size_t>(e)] : cnt0[static_cast<std::size_t>(e)];
            if (f == 1) g++;   // move pulls the net entirely onto the other side
            if (t == 0) g--;   // move splits a currently uncut net
        }
        return g;
    };

    RunOutcome out;
    for (int pass = 0; pass < max_passes; ++pass) {
        std::fill(locked.begin(), locked.end(), 0);
        GainBuckets buckets[2] = {GainBuckets(n, maxdeg), GainBuckets(n, maxdeg)};
        for (int v = 0; v < n; ++v) {
            gain[static_cast<std::size_t>(v)] = gain_from_scratch(v);
            buckets[side[static_cast<std::size_t>(v)]].insert(v, gain[static_cast<std::size_t>(v)]);
        }

        auto reposition = [&](int u, int delta) {
            if (locked[static_cast<std::size_t>(u)]) return;
            buckets[side[static_cast<std::size_t>(u)]].erase(u);
            gain[static_cast<std::size_t>(u)] += delta;
            buckets[side[static_cast<std::size_t>(u)]].insert(u, gain[static_cast<std::size_t>(u)]);
        };

        // A move from side s is tentatively legal iff s can spare a node; the
        // receiving side's cap is symmetric (hi == n - lo). When the window
        // pins both sides to exactly n/2 no single move could ever run, so in
        // that case moves get the classic one-node slack and only prefixes
        // that end back inside [lo, hi] are eligible for acceptance below.
        const int move_lo = 2 * lo == n ? lo - 1 : lo;
        move_order.clear();
        long long run_sum = 0, best_sum = 0;
        std::size_t best_prefix = 0;
        for (;;) {
            const int g0 = sizes[0] - 1 >= move_lo ? buckets[0].max_gain()
                                                   : std::numeric_limits<int>::min();
            const int g1 = sizes[1] - 1 >= move_lo ? buckets[1].max_gain()
                                                   : std::numeric_limits<int>::min();
            if (g0 == std::numeric_limits<int>::min() &&
                g1 == std::numeric_limits<int>::min())
                break;
            int from;
            if (g0 != g1) from = g0 > g1 ? 0 : 1;
            else from = sizes[1] > sizes[0] ? 1 : 0;  // heavier side first, ties to 0

            const int v = buckets[from].pop_max();
            const int to = 1 - from;
            const int moved_gain = gain[static_cast<std::size_t>(v)];
            locked[static_cast<std::size_t>(v)] = 1;

            for (int e : nets_of[static_cast<std::size_t>(v)]) {
                int& fc = from == 0 ? cnt0[static_cast<std::size_t>(e)] : cnt1[static_cast<std::size_t>(e)];
                int& tc = from == 0 ? cnt1[static_cast<std::size_t>(e)] : cnt0[static_cast<std::size_t>(e)];
                // Critical-net rules, applied around the count update. v is
                // locked already, so the scans below never touch it.
                if (tc == 0) {
                    for (int u : hg.nets[static_cast<std::size_t>(e)])
                        if (!locked[static_cast<std::size_t>(u)]) reposition(u, +1);
                } else if (tc == 1) {
                    for (int u : hg.nets[static_cast<std::size_t>(e)])
                        if (!locked[static_cast<std::size_t>(u)] &&
                            side[static_cast<std::size_t>(u)] == to) {
                            reposition(u, -1);
                            break;
                        }
                }
                fc--;
                tc++;
                if (fc == 0) {
                    for (int u : hg.nets[static_cast<std::size_t>(e)])
                        if (!locked[static_cast<std::size_t>(u)]) reposition(u, -1);
                } else if (fc == 1) {
                    for (int u : hg.nets[static_cast<std::size_t>(e)])
                        if (!locked[static_cast<std::size_t>(u)] &&
                            side[static_cast<std::size_t>(u)] == from) {
                            reposition(u, +1);
                            break;
                        }
                }
            }
            side[static_cast<std::size_t>(v)] = to;
            sizes[from]--;
            sizes[to]++;

            run_sum += moved_gain;
            move_order.push_back(v);
            if (run_sum > best_sum && sizes[0] >= lo && sizes[0] <= n - lo) {
                best_sum = run_sum;
                best_prefix = move_order.size();
            }

            if (audit) {
                for (int u = 0; u < n; ++u) {
                    if (locked[static_cast<std::size_t>(u)]) continue;
                    if (gain[static_cast<std::size_t>(u)] != gain_from_scratch(u))
                        throw std::logic_error("incremental gain for node " +
                                               std::to_string(u) +
                                               " disagrees with recomputation");
                }
            }
        }

        // Keep the best prefix, undo the rest.
        for (std::size_t i = move_order.size(); i > best_prefix; --i) {
            const int v = move_order[i - 1];
            const int cur = side[static_cast<std::size_t>(v)];
            side[static_cast<std::size_t>(v)] = 1 - cur;
            sizes[cur]--;
            sizes[1 - cur]++;
            for (int e : nets_of[static_cast<std::size_t>(v)]) {
                if (cur == 0) {
                    cnt0[static_cast<std::size_t>(e)]--;
                    cnt1[static_cast<std::size_t>(e)]++;
                } else {
                    cnt1[static_cast<std::size_t>(e)]--;
                    cnt0[static_cast<std::size_t>(e)]++;
                }
            }
        }
        cut -= best_sum;
        if (best_sum <= 0) break;  // pass brought no strict improvement
        out.passes++;
    }
    out.side = std::move(side);
    out.cut = cut;
    return out;
}

}  // namespace

FmResult fm_bipartition(const Hypergraph& hg, const PartitionAssignment& initial,
                        const FmConfig& cfg) {
    cfg.validate();
    hg.validate();
    initial.validate();
    if (initial.k != 2)
        throw ContractError("FM refinement supports exactly 2 parts, got k = " +
                            std::to_string(initial.k));
    if (initial.part.size() != static_cast<std::size_t>(hg.n))
        throw ContractError("initial assignment covers " +
                            std::to_string(initial.part.size()) + " nodes, expected " +
                            std::to_string(hg.n));
    const auto [lo, hi] = bipartition_balance_bounds(hg.n, cfg.epsilon);
    {
        const auto sizes = initial.part_sizes();
        if (sizes[0] < lo || sizes[0] > hi)
            throw ContractError("initial assignment breaks the balance bound: sides " +
                                std::to_string(sizes[0]) + "/" + std::to_string(sizes[1]) +
                                ", allowed [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }

    std::vector<std::vector<int>> nets_of(static_cast<std::size_t>(hg.n));
    for (std::size_t e = 0; e < hg.nets.size(); ++e)
        for (int v : hg.nets[e]) nets_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));

    FmResult best;
    best.cut = std::numeric_limits<long long>::max();
    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<int> start;
        if (r == 0) {
            start = initial.part;
        } else {
            Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
            start = random_balanced_partition(hg.n, 2, rng).part;
        }
        auto out = fm_run(hg, nets_of, std::move(start), lo, cfg.max_passes,
                          cfg.audit_gains);
        if (out.cut < best.cut) {
            best.cut = out.cut;
            best.assignment.part = std::move(out.side);
            best.assignment.k = 2;
            best.passes = out.passes;
            best.winning_restart = r;
        }
    }
    return best;
}

BruteForceResult brute_force_min_cut(const Hypergraph& hg, int k, double epsilon) {
    hg.validate();
    if (k < 2) throw ContractError("partition count must be at least 2");
    if (k > hg.n) throw ContractError("more parts than nodes");
    if (epsilon < 0.0) throw ContractError("balance slack must be non-negative");
    {
        long long states = 1;
        for (int i = 0; i < hg.n; ++i) {
            states *= k;
            if (states > (1LL << 24))
                throw SizeLimitError("exhaustive search infeasible: " + std::to_string(k) +
                                     "^" + std::to_string(hg.n) +
                                     " assignments exceed the 2^24 bound");
        }
    }
    const auto [lo, hi] = kway_balance_bounds(hg.n, k, epsilon);
    const int n = hg.n;
    std::vector<int> part(static_cast<std::size_t>(n), 0);
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    BruteForceResult best;
    best.cut = std::numeric_limits<long long>::max();

    auto cut_of = [&]() {
        long long c = 0;
        for (const auto& net : hg.nets) {
            const int first = part[static_cast<std::size_t>(net.front())];
            for (int v : net) {
                if (part[static_cast<std::size_t>(v)] != first) {
                    c++;
                    break;
                }
            }
        }
        return c;
    };

    // Depth-first over restricted growth strings (part[0] = 0, each later
    // digit at most one past the largest used), i.e. exactly one canonical
    // representative per relabeling class, in lexicographic order — so the
    // first minimum found is the lexicographically smallest.
    std::function<void(int, int)> descend = [&](int i, int used) {
        if (i == n) {
            for (int p = 0; p < k; ++p)
                if (sizes[static_cast<std::size_t>(p)] < lo ||
                    sizes[static_cast<std::size_t>(p)] > hi)
                    return;
            best.explored++;
            const long long c = cut_of();
            if (c < best.cut) {
                best.cut = c;
                best.assignment.part = part;
                best.assignment.k = k;
            }
            return;
        }
        // Bail out when the remaining nodes cannot fill every part to lo.
        long long deficit = 0;
        for (int p = 0; p < k; ++p)
            deficit += std::max(0, lo - sizes[static_cast<std::size_t>(p)]);
        if (deficit > n - i) return;

        const int limit = std::min(used, k - 1);
        for (int d = 0; d <= limit; ++d) {
            if (sizes[static_cast<std::size_t>(d)] + 1 > hi) continue;
            part[static_cast<std::size_t>(i)] = d;
            sizes[static_cast<std::size_t>(d)]++;
            descend(i + 1, std::max(used, d + 1));
            sizes[static_cast<std::size_t>(d)]--;
        }
    };
    descend(0, 0);

    if (best.assignment.part.empty())
        throw ContractError("no assignment satisfies the balance bound");
    return best;
}

}  // namespace perrdi
