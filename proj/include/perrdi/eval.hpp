// Partition scoring records/reports, topology statistics reports, and
// invocation of an external hypergraph partitioner.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perrdi/hypergraph.hpp"
#include "perrdi/metrics.hpp"
#include "perrdi/net_models.hpp"

namespace perrdi {

struct EvalRecord {
    std::string graph_id;
    std::string partitioner;
    int k = 2;
    long long cut = 0;           // hyperedge cut
    std::optional<double> ncut;  // normalized cut on the tagged expansion
    std::string ncut_model;      // expansion name; empty when ncut is absent
    double balance = 0.0;        // fraction of nodes in the largest part
    double wall_time_ms = 0.0;
};

struct EvalReport {
    std::vector<EvalRecord> records;

    double mean_cut() const;
    double mean_balance() const;
    // Present only when every record carries an ncut of the same model.
    std::optional<double> mean_ncut() const;

    std::string to_text() const;
    std::string to_csv() const;
};

// Scores one partition of one hypergraph. The normalized cut requires an
// explicit expansion choice — there is no default model — and for the star
// model each hub node joins the majority side of its net's pins.
EvalRecord evaluate(const std::string& graph_id, const Hypergraph& hg,
                    const PartitionAssignment& pa, const std::string& partitioner,
                    std::optional<NetModel> model, double wall_time_ms = 0.0);

struct StatsReport {
    bool is_hypergraph = true;
    int nodes = 0;
    long long nets = 0;  // hyperedges, or simple edges for plain graphs
    long long pins = 0;  // total pins (0 for plain graphs)
    PathLengthStats path;
    std::map<int, double> net_sizes;  // PMF over net sizes (raw histogram)
    std::map<int, double> degrees;    // PMF over node degrees

    std::string to_text() const;
    std::string histograms_csv() const;  // columns: kind,size,probability
};

// Topology summary. For hypergraphs the average path is measured on the
// all-pairs clique expansion of each net (tolerating isolated nodes, which
// simply fall outside the measured component).
StatsReport stats_report(const Hypergraph& hg);
StatsReport stats_report(const WeightedGraph& g);

struct ExternalRunResult {
    PartitionAssignment assignment;
    double wall_time_ms = 0.0;
    std::string command;  // what actually ran
};

// Runs an external hypergraph partitioner and reads back its
// "<input>.part.<k>" output. The command template may use {input}, {k}, and
// {ub}; when empty, the binary named by $PERRDI_HMETIS (default "hmetis")
// runs as "<binary> <input> <k> <ub>", hMETIS's calling convention. A missing
// binary, nonzero exit, or unreadable output raises ExternalToolError with
// the captured tool output.
ExternalRunResult run_external_partitioner(const std::string& hgr_path, int k,
                                           int ub_factor,
                                           const std::string& command_template = "");

}  // namespace perrdi
