// Command-line front end. Every subcommand reads/writes the documented file
// formats (.hgr netlists, partition files, distribution files, edge lists,
// bundle metadata) and prints a key/value report that embeds the seed and
// tool version, so runs are reproducible from their own output.
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perrdi/distributions.hpp"
#include "perrdi/errors.hpp"
#include "perrdi/eval.hpp"
#include "perrdi/fm.hpp"
#include "perrdi/generator.hpp"
#include "perrdi/io.hpp"
#include "perrdi/metrics.hpp"
#include "perrdi/net_models.hpp"
#include "perrdi/rng.hpp"
#include "perrdi/softcut.hpp"
#include "perrdi/version.hpp"

namespace fs = std::filesystem;
using namespace perrdi;

namespace {

class WallTimer {
  public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

Hypergraph load_hgr(const std::string& path) { return parse_hgr(read_text_file(path)); }

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

// Resolves "name" inside --out, creating the directory on first use.
std::string out_file(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / name).string();
}

void kv(const std::string& key, const std::string& value) {
    std::cout << key << " " << value << "\n";
}

void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
void kv(const std::string& key, double value) { kv(key, format_double(value)); }

void report_header(const std::string& command, std::uint64_t seed) {
    kv("report", command);
    kv("tool_version", kToolVersion);
    kv("seed", std::to_string(seed));
}

// Shared generation knobs; `gen` fans out over --count via derived seeds.
struct GenOptions {
    GeneratorParams params;
    std::string ndv_path, gdv_path;
    std::string out_dir = ".";
    std::string stem = "bench";
    int count = 1;
    bool no_refine = false;
};

int cmd_gen(GenOptions& opt) {
    opt.params.ndv = parse_distribution(read_text_file(opt.ndv_path));
    opt.params.gdv = parse_distribution(read_text_file(opt.gdv_path));
    opt.params.refine = !opt.no_refine && opt.params.k == 2;

    report_header("gen", opt.params.seed);
    kv("count", opt.count);
    kv("out", opt.out_dir);
    if (opt.params.k > 2)
        kv("note",
           "multi-way cut budgets follow round(t*(n/k)^p) literally; published "
           "multi-way reference cuts exceed them and are intentionally not reproduced");

    for (int i = 0; i < opt.count; ++i) {
        GeneratorParams params = opt.params;
        params.seed = opt.count == 1 ? opt.params.seed : derive_seed(opt.params.seed, i);
        const std::string stem =
            opt.count == 1 ? opt.stem : opt.stem + "_" + std::to_string(i);

        WallTimer timer;
        const GeneratedBenchmark bench = generate_perrdi(params);
        const BundlePaths paths = write_bundle(bench, opt.out_dir, stem);

        kv("bundle", i);
        kv("  stem", stem);
        kv("  seed", std::to_string(params.seed));
        kv("  n", params.n);
        kv("  k", params.k);
        kv("  rent_t", params.rent_t);
        kv("  rent_p", params.rent_p);
        kv("  budget", bench.budget);
        kv("  nets", static_cast<long long>(bench.hypergraph.nets.size()));
        kv("  skipped_nets", bench.skipped_nets);
        kv("  planted_cut", bench.planted_cut);
        if (bench.refined_cut) kv("  refined_cut", *bench.refined_cut);
        kv("  wall_time_ms", timer.ms());
        kv("  files", paths.hgr + " " + paths.planted_part +
                          (bench.refined ? " " + paths.refined_part : "") + " " +
                          paths.meta);
    }
    return 0;
}

struct ErOptions {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string stem = "er";
};

int cmd_er(const ErOptions& opt) {
    WallTimer timer;
    const WeightedGraph g = generate_erdos_renyi(opt.n, opt.p, opt.seed);
    const std::string path = out_file(opt.out_dir, opt.stem + ".edges");
    write_text_file(path, emit_edge_list(g));

    report_header("er", opt.seed);
    kv("n", opt.n);
    kv("edge_probability", opt.p);
    kv("edges", static_cast<long long>(g.edges.size()));
    kv("wall_time_ms", timer.ms());
    kv("file", path);
    return 0;
}

struct ExtractOptions {
    std::string input;
    std::string out_dir = ".";
    std::string stem;  // defaults to the input stem
};

int cmd_extract(const ExtractOptions& opt) {
    const Hypergraph raw = load_hgr(opt.input);
    const Hypergraph clean = cleanup_netlist(raw);
    const ExtractedDistributions dists = extract_distributions(clean);

    const std::string stem = opt.stem.empty() ? stem_of(opt.input) : opt.stem;
    const std::string ndv_path = out_file(opt.out_dir, stem + ".ndv");
    const std::string gdv_path = out_file(opt.out_dir, stem + ".gdv");
    write_text_file(ndv_path, emit_distribution(dists.ndv));
    write_text_file(gdv_path, emit_distribution(dists.gdv));

    kv("report", "extract-dist");
    kv("tool_version", kToolVersion);
    kv("input", opt.input);
    kv("nodes_raw", raw.n);
    kv("nodes_clean", clean.n);
    kv("nets_clean", static_cast<long long>(clean.nets.size()));
    kv("ndv_mean", dists.ndv.mean());
    kv("gdv_mean", dists.gdv.mean());
    kv("ndv_file", ndv_path);
    kv("gdv_file", gdv_path);
    return 0;
}

struct ExpandOptions {
    std::string input;
    std::string model;
    std::string out_dir = ".";
    std::string stem;
};

int cmd_expand(const ExpandOptions& opt) {
    const NetModel model = net_model_from_name(opt.model);
    const Hypergraph hg = load_hgr(opt.input);
    const ExpandedGraph eg = expand(hg, model);

    const std::string stem = opt.stem.empty() ? stem_of(opt.input) : opt.stem;
    const std::string path =
        out_file(opt.out_dir, stem + "." + net_model_name(model) + ".edges");
    write_text_file(path, emit_edge_list(eg.graph));

    kv("report", "expand");
    kv("tool_version", kToolVersion);
    kv("input", opt.input);
    kv("model", net_model_name(model));
    kv("original_nodes", eg.num_original_nodes);
    kv("graph_nodes", eg.graph.n);
    kv("graph_edges", static_cast<long long>(eg.graph.edges.size()));
    kv("total_edge_weight", eg.graph.total_edge_weight());
    kv("file", path);
    return 0;
}

struct FmOptions {
    std::string input;
    std::string init_path;  // optional starting partition
    int k = 2;
    FmConfig cfg;
    std::string out_dir = ".";
    std::string stem;
};

int cmd_partition_fm(const FmOptions& opt) {
    if (opt.k != 2)
        throw ContractError("FM refinement is 2-way; use brute or an external "
                            "partitioner for k > 2");
    const Hypergraph hg = load_hgr(opt.input);

    PartitionAssignment initial;
    if (!opt.init_path.empty()) {
        const auto read = parse_partition(read_text_file(opt.init_path));
        initial = read.assignment;
        if (initial.k != 2)
            throw ContractError("initial partition uses " + std::to_string(initial.k) +
                                " parts, expected 2");
    } else {
        Rng rng(opt.cfg.seed);
        initial = random_balanced_partition(hg.n, 2, rng);
    }

    WallTimer timer;
    const FmResult res = fm_bipartition(hg, initial, opt.cfg);
    const double elapsed = timer.ms();

    const std::string stem = opt.stem.empty() ? stem_of(opt.input) : opt.stem;
    const std::string path = out_file(opt.out_dir, stem + ".part.2");
    write_text_file(path, emit_partition(res.assignment));

    report_header("partition-fm", opt.cfg.seed);
    kv("input", opt.input);
    kv("epsilon", opt.cfg.epsilon);
    kv("restarts", opt.cfg.restarts);
    kv("initial_cut", hyperedge_cut(hg, initial));
    kv("cut", res.cut);
    kv("balance", balancedness(res.assignment));
    kv("passes", res.passes);
    kv("winning_restart", res.winning_restart);
    kv("wall_time_ms", elapsed);
    kv("file", path);
    return 0;
}

struct SoftcutOptions {
    std::string input;
    std::string model;   // required for .hgr input
    bool edge_list = false;
    int k = 2;
    int seeds = 1;
    SoftcutConfig cfg;
    std::string out_dir = ".";
    std::string stem;
};

int cmd_softcut(const SoftcutOptions& opt) {
    // The graph to optimize: either a ready-made edge list, or a netlist put
    // through an explicitly chosen expansion — never a silently picked one.
    std::optional<Hypergraph> hg;
    WeightedGraph graph;
    int original_nodes = 0;
    if (opt.edge_list) {
        if (!opt.model.empty())
            throw ContractError("--model only applies to .hgr input, not --edge-list");
        graph = parse_edge_list(read_text_file(opt.input));
        original_nodes = graph.n;
    } else {
        if (opt.model.empty())
            throw ContractError("netlist input needs an explicit --model "
                                "(clique, star, or fanout)");
        hg = load_hgr(opt.input);
        const ExpandedGraph eg = expand(*hg, net_model_from_name(opt.model));
        graph = eg.graph;
        original_nodes = eg.num_original_nodes;
    }

    report_header("softcut", opt.cfg.seed);
    kv("input", opt.input);
    if (!opt.model.empty()) kv("model", opt.model);
    kv("k", opt.k);
    kv("learning_rate", opt.cfg.learning_rate);
    kv("balance_weight", opt.cfg.balance_weight);
    kv("seeds", opt.seeds);

    // Independent seeded runs, merged by (loss, run index).
    WallTimer timer;
    std::optional<SoftcutResult> best;
    int best_run = 0;
    for (int i = 0; i < opt.seeds; ++i) {
        SoftcutConfig cfg = opt.cfg;
        cfg.seed = opt.seeds == 1 ? opt.cfg.seed : derive_seed(opt.cfg.seed, i);
        const SoftcutResult res = optimize_soft(graph, opt.k, cfg);
        kv("run", i);
        kv("  seed", std::to_string(cfg.seed));
        kv("  best_loss", res.best_loss);
        kv("  best_epoch", res.best_epoch);
        kv("  epochs_run", res.epochs_run);
        if (!best || res.best_loss < best->best_loss) {
            best = res;
            best_run = i;
        }
    }
    const double elapsed = timer.ms();

    // Hardened output covers the original nodes; star hubs are auxiliary.
    PartitionAssignment hard = harden(best->assignment);
    hard.part.resize(static_cast<std::size_t>(original_nodes));

    const std::string stem = opt.stem.empty() ? stem_of(opt.input) : opt.stem;
    const std::string part_path =
        out_file(opt.out_dir, stem + ".part." + std::to_string(opt.k));
    write_text_file(part_path, emit_partition(hard));
    std::string history = "epoch,loss\n";
    for (std::size_t e = 0; e < best->loss_history.size(); ++e)
        history += std::to_string(e) + "," + format_double(best->loss_history[e]) + "\n";
    const std::string loss_path = out_file(opt.out_dir, stem + ".loss.csv");
    write_text_file(loss_path, history);

    kv("winning_run", best_run);
    kv("winning_loss", best->best_loss);
    if (hg) kv("hardened_cut", hyperedge_cut(*hg, hard));
    kv("hardened_balance", balancedness(hard));
    kv("wall_time_ms", elapsed);
    kv("partition_file", part_path);
    kv("loss_file", loss_path);
    return 0;
}

struct BruteOptions {
    std::string input;
    int k = 2;
    double epsilon = 0.05;
    std::string out_dir;  // write the optimum only when requested
    std::string stem;
};

int cmd_brute(const BruteOptions& opt) {
    const Hypergraph hg = load_hgr(opt.input);
    WallTimer timer;
    const BruteForceResult res = brute_force_min_cut(hg, opt.k, opt.epsilon);
    const double elapsed = timer.ms();

    kv("report", "brute");
    kv("tool_version", kToolVersion);
    kv("input", opt.input);
    kv("k", opt.k);
    kv("epsilon", opt.epsilon);
    kv("cut", res.cut);
    kv("balance", balancedness(res.assignment));
    kv("explored", res.explored);
    kv("wall_time_ms", elapsed);
    if (!opt.out_dir.empty()) {
        const std::string stem = opt.stem.empty() ? stem_of(opt.input) : opt.stem;
        const std::string path =
            out_file(opt.out_dir, stem + ".part." + std::to_string(opt.k));
        write_text_file(path, emit_partition(res.assignment));
        kv("file", path);
    }
    return 0;
}

struct EvalOptions {
    std::string hgr_path;
    std::vector<std::string> part_paths;
    std::string bundle;  // DIR/STEM alternative to explicit files
    std::string model;
    std::string partitioner = "file";
    bool csv = false;
};

int cmd_eval(const EvalOptions& opt) {
    std::optional<NetModel> model;
    if (!opt.model.empty()) model = net_model_from_name(opt.model);

    EvalReport report;
    if (!opt.bundle.empty()) {
        if (!opt.hgr_path.empty() || !opt.part_paths.empty())
            throw ContractError("--bundle replaces the HGR/PARTITION arguments");
        const fs::path b(opt.bundle);
        const std::string dir = b.has_parent_path() ? b.parent_path().string() : ".";
        const LoadedBundle bundle = load_bundle(bundle_paths(dir, b.filename().string()));
        report.records.push_back(evaluate(b.filename().string(), bundle.hypergraph,
                                          bundle.planted, "planted", model));
        if (bundle.refined)
            report.records.push_back(evaluate(b.filename().string(), bundle.hypergraph,
                                              *bundle.refined, "fm", model));
    } else {
        if (opt.hgr_path.empty() || opt.part_paths.empty())
            throw ContractError("eval needs an HGR file and at least one partition "
                                "(or --bundle)");
        const Hypergraph hg = load_hgr(opt.hgr_path);
        for (const auto& part_path : opt.part_paths) {
            const auto read = parse_partition(read_text_file(part_path));
            if (read.label_gaps)
                std::cerr << "warning: " << part_path
                          << " skips some part labels; k taken as highest id + 1\n";
            report.records.push_back(evaluate(stem_of(part_path), hg, read.assignment,
                                              opt.partitioner, model));
        }
    }
    std::cout << (opt.csv ? report.to_csv() : report.to_text());
    return 0;
}

struct StatsOptions {
    std::string input;
    bool edge_list = false;
    bool csv = false;
};

int cmd_stats(const StatsOptions& opt) {
    StatsReport report;
    if (opt.edge_list)
        report = stats_report(parse_edge_list(read_text_file(opt.input)));
    else
        report = stats_report(load_hgr(opt.input));
    std::cout << (opt.csv ? report.histograms_csv() : report.to_text());
    return 0;
}

struct RunExtOptions {
    std::string input;
    int k = 2;
    int ub = 5;
    std::string command;  // template with {input}, {k}, {ub}
};

int cmd_run_ext(const RunExtOptions& opt) {
    const Hypergraph hg = load_hgr(opt.input);
    const ExternalRunResult run =
        run_external_partitioner(opt.input, opt.k, opt.ub, opt.command);

    kv("report", "run-ext");
    kv("tool_version", kToolVersion);
    kv("input", opt.input);
    kv("command", run.command);
    const EvalRecord rec = evaluate(stem_of(opt.input), hg, run.assignment, "external",
                                    std::nullopt, run.wall_time_ms);
    kv("k", rec.k);
    kv("cut", rec.cut);
    kv("balance", rec.balance);
    kv("wall_time_ms", run.wall_time_ms);
    kv("partition_file", opt.input + ".part." + std::to_string(opt.k));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraph partitioning benchmark toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "Generate planted-partition netlist bundles with a Rent-rule cut budget");
    gen_cmd->add_option("--nodes", gen.params.n, "Node count")->required();
    gen_cmd->add_option("--parts", gen.params.k, "Planted part count");
    gen_cmd->add_option("--ndv", gen.ndv_path, "Net-size distribution file")->required();
    gen_cmd->add_option("--gdv", gen.gdv_path, "Degree-cap distribution file")->required();
    gen_cmd->add_option("--rent-t", gen.params.rent_t, "Rent coefficient t");
    gen_cmd->add_option("--rent-p", gen.params.rent_p, "Rent exponent p");
    gen_cmd->add_option("--seed", gen.params.seed, "Master seed");
    gen_cmd->add_option("--retry-limit", gen.params.retry_limit,
                        "Consecutive failed placements before stopping");
    gen_cmd->add_option("--count", gen.count, "Bundles to generate (seeds derived by index)")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--no-refine", gen.no_refine, "Skip FM refinement of the planted split");
    gen_cmd->add_option("--out", gen.out_dir, "Output directory");
    gen_cmd->add_option("--stem", gen.stem, "Bundle file stem");
    gen_cmd->callback([&] { exit_code = cmd_gen(gen); });

    ErOptions er;
    auto* er_cmd = app.add_subcommand("er", "Generate an Erdos-Renyi random graph");
    er_cmd->add_option("--nodes", er.n, "Node count")->required();
    er_cmd->add_option("--prob", er.p, "Edge probability")->required();
    er_cmd->add_option("--seed", er.seed, "Seed");
    er_cmd->add_option("--out", er.out_dir, "Output directory");
    er_cmd->add_option("--stem", er.stem, "Output file stem");
    er_cmd->callback([&] { exit_code = cmd_er(er); });

    ExtractOptions extract;
    auto* extract_cmd = app.add_subcommand(
        "extract-dist", "Extract net-size and degree distributions from a netlist");
    extract_cmd->add_option("input", extract.input, "Netlist (.hgr)")->required();
    extract_cmd->add_option("--out", extract.out_dir, "Output directory");
    extract_cmd->add_option("--stem", extract.stem, "Output file stem (default: input stem)");
    extract_cmd->callback([&] { exit_code = cmd_extract(extract); });

    ExpandOptions expand_opt;
    auto* expand_cmd =
        app.add_subcommand("expand", "Expand a netlist into a weighted graph");
    expand_cmd->add_option("input", expand_opt.input, "Netlist (.hgr)")->required();
    expand_cmd->add_option("--model", expand_opt.model, "clique, star, or fanout")
        ->required();
    expand_cmd->add_option("--out", expand_opt.out_dir, "Output directory");
    expand_cmd->add_option("--stem", expand_opt.stem, "Output file stem");
    expand_cmd->callback([&] { exit_code = cmd_expand(expand_opt); });

    FmOptions fm;
    auto* fm_cmd = app.add_subcommand(
        "partition-fm", "Bipartition a netlist with multi-restart FM refinement");
    fm_cmd->add_option("input", fm.input, "Netlist (.hgr)")->required();
    fm_cmd->add_option("--parts", fm.k, "Part count (must be 2)");
    fm_cmd->add_option("--epsilon", fm.cfg.epsilon, "Balance slack");
    fm_cmd->add_option("--restarts", fm.cfg.restarts, "Random restarts");
    fm_cmd->add_option("--max-passes", fm.cfg.max_passes, "Pass limit per run");
    fm_cmd->add_option("--seed", fm.cfg.seed, "Seed");
    fm_cmd->add_option("--init", fm.init_path, "Starting partition file");
    fm_cmd->add_flag("--audit", fm.cfg.audit_gains,
                     "Recompute every gain from scratch after each move (slow)");
    fm_cmd->add_option("--out", fm.out_dir, "Output directory");
    fm_cmd->add_option("--stem", fm.stem, "Output file stem");
    fm_cmd->callback([&] { exit_code = cmd_partition_fm(fm); });

    SoftcutOptions soft;
    auto* soft_cmd = app.add_subcommand(
        "softcut", "Minimize the soft normalized cut by gradient descent");
    soft_cmd->add_option("input", soft.input, "Netlist (.hgr) or edge list")->required();
    soft_cmd->add_option("--model", soft.model,
                         "Expansion for .hgr input (clique, star, fanout)");
    soft_cmd->add_flag("--edge-list", soft.edge_list, "Input is an edge-list file");
    soft_cmd->add_option("--parts", soft.k, "Soft cluster count");
    soft_cmd->add_option("--lr", soft.cfg.learning_rate, "Learning rate");
    soft_cmd->add_option("--epochs", soft.cfg.max_epochs, "Epoch limit");
    soft_cmd->add_option("--patience", soft.cfg.patience,
                         "Epochs without improvement before stopping");
    soft_cmd->add_option("--balance-weight", soft.cfg.balance_weight,
                         "Penalty on squared part-size deviation");
    soft_cmd->add_option("--init-scale", soft.cfg.init_scale, "Logit init stddev");
    soft_cmd->add_option("--seeds", soft.seeds, "Independent runs (seeds derived by index)")
        ->check(CLI::PositiveNumber);
    soft_cmd->add_option("--seed", soft.cfg.seed, "Master seed");
    soft_cmd->add_option("--out", soft.out_dir, "Output directory");
    soft_cmd->add_option("--stem", soft.stem, "Output file stem");
    soft_cmd->callback([&] { exit_code = cmd_softcut(soft); });

    BruteOptions brute;
    auto* brute_cmd = app.add_subcommand(
        "brute", "Exhaustive minimum balanced cut (small instances only)");
    brute_cmd->add_option("input", brute.input, "Netlist (.hgr)")->required();
    brute_cmd->add_option("--parts", brute.k, "Part count");
    brute_cmd->add_option("--epsilon", brute.epsilon, "Balance slack");
    brute_cmd->add_option("--out", brute.out_dir, "Write the optimum partition here");
    brute_cmd->add_option("--stem", brute.stem, "Output file stem");
    brute_cmd->callback([&] { exit_code = cmd_brute(brute); });

    EvalOptions eval_opt;
    auto* eval_cmd = app.add_subcommand(
        "eval", "Score partitions: hyperedge cut, balance, optional normalized cut");
    eval_cmd->add_option("hgr", eval_opt.hgr_path, "Netlist (.hgr)");
    eval_cmd->add_option("partitions", eval_opt.part_paths, "Partition files");
    eval_cmd->add_option("--bundle", eval_opt.bundle,
                         "Evaluate a generated bundle (DIR/STEM) instead of files");
    eval_cmd->add_option("--model", eval_opt.model,
                         "Expansion for the normalized cut; omitting it omits ncut");
    eval_cmd->add_option("--partitioner", eval_opt.partitioner, "Label for the records");
    eval_cmd->add_flag("--csv", eval_opt.csv, "Emit CSV instead of text");
    eval_cmd->callback([&] { exit_code = cmd_eval(eval_opt); });

    StatsOptions stats;
    auto* stats_cmd = app.add_subcommand(
        "stats", "Topology report: sizes, degree/net histograms, average path");
    stats_cmd->add_option("input", stats.input, "Netlist (.hgr) or edge list")->required();
    stats_cmd->add_flag("--edge-list", stats.edge_list, "Input is an edge-list file");
    stats_cmd->add_flag("--csv", stats.csv, "Emit histogram CSV instead of text");
    stats_cmd->callback([&] { exit_code = cmd_stats(stats); });

    RunExtOptions ext;
    auto* ext_cmd = app.add_subcommand(
        "run-ext", "Run an external partitioner and score its output");
    ext_cmd->add_option("input", ext.input, "Netlist (.hgr)")->required();
    ext_cmd->add_option("--parts", ext.k, "Part count");
    ext_cmd->add_option("--ub", ext.ub, "Imbalance parameter passed through");
    ext_cmd->add_option("--command", ext.command,
                        "Command template with {input}, {k}, {ub} (default: $PERRDI_HMETIS "
                        "or 'hmetis', hMETIS calling convention)");
    ext_cmd->callback([&] { exit_code = cmd_run_ext(ext); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
