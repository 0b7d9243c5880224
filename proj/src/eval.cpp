#include "perrdi/eval.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <unordered_set>

#include "perrdi/errors.hpp"
#include "perrdi/io.hpp"

namespace perrdi {

double EvalReport::mean_cut() const {
    if (records.empty()) throw ContractError("report has no records");
    double sum = 0.0;
    for (const auto& r : records) sum += static_cast<double>(r.cut);
    return sum / static_cast<double>(records.size());
}

double EvalReport::mean_balance() const {
    if (records.empty()) throw ContractError("report has no records");
    double sum = 0.0;
    for (const auto& r : records) sum += r.balance;
    return sum / static_cast<double>(records.size());
}

std::optional<double> EvalReport::mean_ncut() const {
    if (records.empty()) throw ContractError("report has no records");
    double sum = 0.0;
    for (const auto& r : records) {
        if (!r.ncut || r.ncut_model != records.front().ncut_model) return std::nullopt;
        sum += *r.ncut;
    }
    return sum / static_cast<double>(records.size());
}

std::string EvalReport::to_text() const {
    std::string out = "report eval\nrecords " + std::to_string(records.size()) + "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += "record " + std::to_string(i) + "\n";
        out += "  graph_id " + r.graph_id + "\n";
        out += "  partitioner " + r.partitioner + "\n";
        out += "  k " + std::to_string(r.k) + "\n";
        out += "  cut " + std::to_string(r.cut) + "\n";
        if (r.ncut) {
            out += "  ncut_model " + r.ncut_model + "\n";
            out += "  ncut " + format_double(*r.ncut) + "\n";
        }
        out += "  balance " + format_double(r.balance) + "\n";
        out += "  wall_time_ms " + format_double(r.wall_time_ms) + "\n";
    }
    out += "aggregate\n";
    out += "  mean_cut " + format_double(mean_cut()) + "\n";
    if (const auto mn = mean_ncut())
        out += "  mean_ncut " + format_double(*mn) + "\n";
    out += "  mean_balance " + format_double(mean_balance()) + "\n";
    return out;
}

std::string EvalReport::to_csv() const {
    std::string out = "graph_id,partitioner,k,cut,ncut_model,ncut,balance,wall_time_ms\n";
    for (const auto& r : records) {
        out += r.graph_id + "," + r.partitioner + "," + std::to_string(r.k) + "," +
               std::to_string(r.cut) + ",";
        out += r.ncut ? r.ncut_model : "";
        out += ",";
        out += r.ncut ? format_double(*r.ncut) : "";
        out += "," + format_double(r.balance) + "," + format_double(r.wall_time_ms) + "\n";
    }
    return out;
}

EvalRecord evaluate(const std::string& graph_id, const Hypergraph& hg,
                    const PartitionAssignment& pa, const std::string& partitioner,
                    std::optional<NetModel> model, double wall_time_ms) {
    hg.validate();
    pa.validate();
    if (pa.part.size() != static_cast<std::size_t>(hg.n))
        throw ContractError("partition covers " + std::to_string(pa.part.size()) +
                            " nodes, the netlist has " + std::to_string(hg.n));
    EvalRecord rec;
    rec.graph_id = graph_id;
    rec.partitioner = partitioner;
    rec.k = pa.k;
    rec.cut = hyperedge_cut(hg, pa);
    rec.balance = balancedness(pa);
    rec.wall_time_ms = wall_time_ms;
    if (model) {
        const auto eg = expand(hg, *model);
        const auto extended = extend_to_expansion(hg, eg, pa);
        rec.ncut = simple_ncut(eg.graph, extended);
        rec.ncut_model = net_model_name(*model);
    }
    return rec;
}

namespace {

std::map<int, double> histogram_pmf(const std::map<int, long long>& counts) {
    long long total = 0;
    for (const auto& [size, c] : counts) total += c;
    std::map<int, double> pmf;
    if (total == 0) return pmf;
    for (const auto& [size, c] : counts)
        pmf[size] = static_cast<double>(c) / static_cast<double>(total);
    return pmf;
}

std::string path_block(const PathLengthStats& path) {
    std::string out;
    out += "avg_path " + format_double(path.avg_path) + "\n";
    out += std::string("path_exact ") + (path.exact ? "true" : "false") + "\n";
    out += std::string("path_connected ") + (path.connected ? "true" : "false") + "\n";
    out += "path_component_nodes " + std::to_string(path.component_nodes) + "\n";
    return out;
}

}  // namespace

std::string StatsReport::to_text() const {
    std::string out = "report stats\n";
    out += std::string("kind ") + (is_hypergraph ? "hypergraph" : "graph") + "\n";
    out += "nodes " + std::to_string(nodes) + "\n";
    out += (is_hypergraph ? "nets " : "edges ") + std::to_string(nets) + "\n";
    if (is_hypergraph) out += "pins " + std::to_string(pins) + "\n";
    out += path_block(path);
    return out;
}

std::string StatsReport::histograms_csv() const {
    std::string out = "kind,size,probability\n";
    for (const auto& [size, p] : net_sizes)
        out += "net_size," + std::to_string(size) + "," + format_double(p) + "\n";
    for (const auto& [size, p] : degrees)
        out += "degree," + std::to_string(size) + "," + format_double(p) + "\n";
    return out;
}

StatsReport stats_report(const Hypergraph& hg) {
    hg.validate();
    StatsReport report;
    report.is_hypergraph = true;
    report.nodes = hg.n;
    report.nets = static_cast<long long>(hg.nets.size());
    report.pins = hg.pin_count();

    std::map<int, long long> size_counts;
    for (const auto& net : hg.nets) size_counts[static_cast<int>(net.size())]++;
    report.net_sizes = histogram_pmf(size_counts);

    std::map<int, long long> degree_counts;
    for (int d : hg.degrees()) degree_counts[d]++;
    report.degrees = histogram_pmf(degree_counts);

    // All-pairs expansion of each net, built leniently (duplicate pins are
    // collapsed, isolated nodes allowed) since this is a measurement, not an
    // export. Hop counts ignore weights, so per-net weights don't matter.
    std::vector<Edge> edges;
    std::unordered_set<int> seen;
    for (const auto& net : hg.nets) {
        seen.clear();
        std::vector<int> pins;
        for (int v : net)
            if (seen.insert(v).second) pins.push_back(v);
        for (std::size_t i = 0; i < pins.size(); ++i)
            for (std::size_t j = i + 1; j < pins.size(); ++j)
                edges.push_back({pins[i], pins[j], 1.0});
    }
    const auto g = WeightedGraph::build(hg.n, std::move(edges));
    report.path = avg_shortest_path(g);
    return report;
}

StatsReport stats_report(const WeightedGraph& g) {
    StatsReport report;
    report.is_hypergraph = false;
    report.nodes = g.n;
    report.nets = static_cast<long long>(g.edges.size());
    report.pins = 0;

    std::map<int, long long> size_counts;
    if (!g.edges.empty()) size_counts[2] = static_cast<long long>(g.edges.size());
    report.net_sizes = histogram_pmf(size_counts);

    std::map<int, long long> degree_counts;
    std::vector<long long> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.edges) {
        deg[static_cast<std::size_t>(e.u)]++;
        deg[static_cast<std::size_t>(e.v)]++;
    }
    for (long long d : deg) degree_counts[static_cast<int>(d)]++;
    report.degrees = histogram_pmf(degree_counts);

    report.path = avg_shortest_path(g);
    return report;
}

namespace {

void replace_all(std::string& s, const std::string& from, const std::string& to) {
    std::string::size_type at = 0;
    while ((at = s.find(from, at)) != std::string::npos) {
        s.replace(at, from.size(), to);
        at += to.size();
    }
}

}  // namespace

ExternalRunResult run_external_partitioner(const std::string& hgr_path, int k,
                                           int ub_factor,
                                           const std::string& command_template) {
    if (k < 2) throw ContractError("partition count must be at least 2");
    std::string cmd = command_template;
    if (cmd.empty()) {
        const char* env = std::getenv("PERRDI_HMETIS");
        const std::string binary = (env && *env) ? env : "hmetis";
        cmd = binary + " {input} {k} {ub}";
    }
    replace_all(cmd, "{input}", hgr_path);
    replace_all(cmd, "{k}", std::to_string(k));
    replace_all(cmd, "{ub}", std::to_string(ub_factor));

    const std::string log_path = hgr_path + ".extlog";
    const std::string shell_cmd = cmd + " > " + log_path + " 2>&1";

    const auto t0 = std::chrono::steady_clock::now();
    const int status = std::system(shell_cmd.c_str());
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::string log;
    if (std::filesystem::exists(log_path)) {
        log = read_text_file(log_path);
        std::filesystem::remove(log_path);
    }
    if (status == -1)
        throw ExternalToolError("could not launch '" + cmd + "'");
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code == 127)
        throw ExternalToolError("external partitioner not found (command: " + cmd +
                                "); install it or set PERRDI_HMETIS");
    if (exit_code != 0)
        throw ExternalToolError("external partitioner exited with code " +
                                std::to_string(exit_code) + " (command: " + cmd +
                                ")\n" + log);

    const std::string part_path = hgr_path + ".part." + std::to_string(k);
    if (!std::filesystem::exists(part_path))
        throw ExternalToolError("external partitioner wrote no " + part_path +
                                " (command: " + cmd + ")\n" + log);
    ExternalRunResult result;
    try {
        result.assignment = parse_partition(read_text_file(part_path)).assignment;
    } catch (const ParseError& e) {
        throw ExternalToolError("could not parse " + part_path + ": " + e.what());
    }
    if (result.assignment.k > k)
        throw ExternalToolError("external partitioner used " +
                                std::to_string(result.assignment.k) +
                                " parts, requested " + std::to_string(k));
    result.assignment.k = k;
    result.wall_time_ms = ms;
    result.command = cmd;
    return result;
}

}  // namespace perrdi
