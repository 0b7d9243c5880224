#include "perrdi/io.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <system_error>

#include "json.hpp"
#include "perrdi/errors.hpp"
#include "perrdi/metrics.hpp"
#include "perrdi/version.hpp"

namespace perrdi {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

// Walks a file's lines, serving content lines (with their 1-based numbers)
// and skipping blank and comment lines.
struct LineCursor {
    const std::vector<std::string>& lines;
    char comment;
    std::size_t idx = 0;

    std::optional<std::pair<const std::string*, int>> next() {
        while (idx < lines.size()) {
            const std::string& s = lines[idx];
            idx++;
            std::size_t i = 0;
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
            if (i == s.size()) continue;
            if (s[i] == comment) continue;
            return std::make_pair(&s, static_cast<int>(idx));
        }
        return std::nullopt;
    }
};

const char* skip_ws(const char* p, const char* end) {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) p++;
    return p;
}

std::string token_at(const char* p, const char* end) {
    const char* q = p;
    while (q < end && !std::isspace(static_cast<unsigned char>(*q))) q++;
    return std::string(p, q);
}

std::vector<long long> parse_int_tokens(const std::string& line, int lineno) {
    std::vector<long long> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while ((p = skip_ws(p, end)) < end) {
        long long value = 0;
        auto [np, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() ||
            (np < end && !std::isspace(static_cast<unsigned char>(*np))))
            throw ParseError(lineno, "expected an integer, got '" + token_at(p, end) + "'");
        out.push_back(value);
        p = np;
    }
    return out;
}

double parse_double_token(const char*& p, const char* end, int lineno) {
    p = skip_ws(p, end);
    double value = 0.0;
    auto [np, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() ||
        (np < end && !std::isspace(static_cast<unsigned char>(*np))))
        throw ParseError(lineno, "expected a number, got '" + token_at(p, end) + "'");
    p = np;
    return value;
}

long long parse_int_token(const char*& p, const char* end, int lineno) {
    p = skip_ws(p, end);
    long long value = 0;
    auto [np, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() ||
        (np < end && !std::isspace(static_cast<unsigned char>(*np))))
        throw ParseError(lineno, "expected an integer, got '" + token_at(p, end) + "'");
    p = np;
    return value;
}

void expect_line_end(const char* p, const char* end, int lineno) {
    if (skip_ws(p, end) < end)
        throw ParseError(lineno, "unexpected trailing token '" +
                             token_at(skip_ws(p, end), end) + "'");
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw ContractError("cannot format value");
    return std::string(buf, p);
}

Hypergraph parse_hgr(const std::string& text) {
    const auto lines = split_lines(text);
    LineCursor cur{lines, '%'};

    const auto header = cur.next();
    if (!header) throw ParseError(1, "missing header");
    const auto head = parse_int_tokens(*header->first, header->second);
    if (head.size() != 2 && head.size() != 3)
        throw ParseError(header->second,
                         "header must be 'numNets numNodes [fmt]', got " +
                             std::to_string(head.size()) + " fields");
    const long long num_nets = head[0], num_nodes = head[1];
    if (num_nets < 1 || num_nodes < 1)
        throw ParseError(header->second, "header counts must be positive");
    const long long fmt = head.size() == 3 ? head[2] : 0;
    if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11)
        throw ParseError(header->second,
                         "unknown fmt " + std::to_string(fmt) + " (expected 1, 10, or 11)");
    const bool net_weights = fmt == 1 || fmt == 11;
    const bool node_weights = fmt == 10 || fmt == 11;

    Hypergraph hg;
    hg.n = static_cast<int>(num_nodes);
    hg.nets.reserve(static_cast<std::size_t>(num_nets));
    for (long long e = 0; e < num_nets; ++e) {
        const auto line = cur.next();
        if (!line)
            throw ParseError(static_cast<int>(lines.size()),
                             "header declares " + std::to_string(num_nets) +
                                 " nets, found only " + std::to_string(e));
        auto tokens = parse_int_tokens(*line->first, line->second);
        std::size_t first_pin = 0;
        if (net_weights) {
            if (tokens.empty())
                throw ParseError(line->second, "net line is missing its weight");
            if (tokens[0] != 1)
                throw ParseError(line->second,
                                 "net weights other than 1 are not supported (got " +
                                     std::to_string(tokens[0]) + ")");
            first_pin = 1;
        }
        if (tokens.size() - first_pin < 2)
            throw ParseError(line->second, "net has fewer than 2 pins");
        std::vector<int> net;
        net.reserve(tokens.size() - first_pin);
        for (std::size_t i = first_pin; i < tokens.size(); ++i) {
            if (tokens[i] < 1 || tokens[i] > num_nodes)
                throw ParseError(line->second,
                                 "pin " + std::to_string(tokens[i]) + " outside [1, " +
                                     std::to_string(num_nodes) + "]");
            net.push_back(static_cast<int>(tokens[i] - 1));
        }
        hg.nets.push_back(std::move(net));
    }

    if (node_weights) {
        hg.node_weights.reserve(static_cast<std::size_t>(num_nodes));
        for (long long v = 0; v < num_nodes; ++v) {
            const auto line = cur.next();
            if (!line)
                throw ParseError(static_cast<int>(lines.size()),
                                 "header declares node weights, found only " +
                                     std::to_string(v) + " of " + std::to_string(num_nodes));
            const auto tokens = parse_int_tokens(*line->first, line->second);
            if (tokens.size() != 1)
                throw ParseError(line->second, "expected exactly one node weight");
            if (tokens[0] < 1)
                throw ParseError(line->second,
                                 "node weight must be positive, got " +
                                     std::to_string(tokens[0]));
            hg.node_weights.push_back(static_cast<int>(tokens[0]));
        }
    } else {
        hg.node_weights.assign(static_cast<std::size_t>(num_nodes), 1);
    }

    if (const auto extra = cur.next())
        throw ParseError(extra->second, "unexpected content after the declared nets");
    return hg;
}

std::string emit_hgr(const Hypergraph& hg) {
    hg.validate();
    bool unit = true;
    for (int w : hg.node_weights) {
        if (w < 1)
            throw ContractError("node weight " + std::to_string(w) +
                                " cannot be written; the format requires positive weights");
        if (w != 1) unit = false;
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(hg.pin_count()) * 6);
    out += std::to_string(hg.nets.size());
    out += ' ';
    out += std::to_string(hg.n);
    if (!unit) out += " 10";
    out += '\n';
    for (const auto& net : hg.nets) {
        for (std::size_t i = 0; i < net.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(net[i] + 1);
        }
        out += '\n';
    }
    if (!unit)
        for (int w : hg.node_weights) {
            out += std::to_string(w);
            out += '\n';
        }
    return out;
}

PartitionReadResult parse_partition(const std::string& text) {
    const auto lines = split_lines(text);
    LineCursor cur{lines, '#'};
    std::vector<int> ids;
    int max_id = -1;
    while (const auto line = cur.next()) {
        const auto tokens = parse_int_tokens(*line->first, line->second);
        if (tokens.size() != 1)
            throw ParseError(line->second, "expected exactly one part id per line");
        if (tokens[0] < 0)
            throw ParseError(line->second, "negative part id");
        if (tokens[0] > std::numeric_limits<int>::max())
            throw ParseError(line->second, "part id out of range");
        ids.push_back(static_cast<int>(tokens[0]));
        max_id = std::max(max_id, ids.back());
    }
    if (ids.empty()) throw ParseError(1, "empty partition file");

    PartitionReadResult result;
    result.assignment.part = std::move(ids);
    result.assignment.k = std::max(2, max_id + 1);
    std::vector<char> used(static_cast<std::size_t>(max_id + 1), 0);
    for (int id : result.assignment.part) used[static_cast<std::size_t>(id)] = 1;
    for (char u : used)
        if (!u) result.label_gaps = true;
    return result;
}

std::string emit_partition(const PartitionAssignment& pa) {
    pa.validate();
    std::string out;
    out.reserve(pa.part.size() * 2);
    for (int id : pa.part) {
        out += std::to_string(id);
        out += '\n';
    }
    return out;
}

SizeDistribution parse_distribution(const std::string& text) {
    const auto lines = split_lines(text);
    LineCursor cur{lines, '#'};
    std::map<int, double> entries;
    long long last_size = std::numeric_limits<long long>::min();
    while (const auto line = cur.next()) {
        const char* p = line->first->data();
        const char* end = p + line->first->size();
        const long long size = parse_int_token(p, end, line->second);
        const double prob = parse_double_token(p, end, line->second);
        expect_line_end(p, end, line->second);
        if (size <= last_size)
            throw ParseError(line->second, "sizes must be strictly ascending");
        last_size = size;
        if (size < 2 || size > std::numeric_limits<int>::max())
            throw ParseError(line->second,
                             "size " + std::to_string(size) + " outside the legal range");
        entries[static_cast<int>(size)] = prob;
    }
    if (entries.empty()) throw ParseError(1, "empty distribution file");
    return SizeDistribution(entries);
}

std::string emit_distribution(const SizeDistribution& dist) {
    std::string out;
    for (const auto& [size, p] : dist.entries()) {
        out += std::to_string(size);
        out += ' ';
        out += format_double(p);
        out += '\n';
    }
    return out;
}

std::string emit_edge_list(const WeightedGraph& g) {
    std::string out;
    out.reserve(g.edges.size() * 12 + static_cast<std::size_t>(g.n) * 2);
    out += std::to_string(g.n);
    out += ' ';
    out += std::to_string(g.edges.size());
    out += '\n';
    for (const auto& e : g.edges) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += format_double(e.w);
        out += '\n';
    }
    for (int w : g.node_weights) {
        out += std::to_string(w);
        out += '\n';
    }
    return out;
}

WeightedGraph parse_edge_list(const std::string& text) {
    const auto lines = split_lines(text);
    LineCursor cur{lines, '#'};
    const auto header = cur.next();
    if (!header) throw ParseError(1, "missing header");
    const auto head = parse_int_tokens(*header->first, header->second);
    if (head.size() != 2)
        throw ParseError(header->second, "header must be 'numNodes numEdges'");
    const long long n = head[0], m = head[1];
    if (n < 1 || m < 0) throw ParseError(header->second, "bad header counts");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const auto line = cur.next();
        if (!line)
            throw ParseError(static_cast<int>(lines.size()),
                             "header declares " + std::to_string(m) +
                                 " edges, found only " + std::to_string(i));
        const char* p = line->first->data();
        const char* end = p + line->first->size();
        const long long u = parse_int_token(p, end, line->second);
        const long long v = parse_int_token(p, end, line->second);
        const double w = parse_double_token(p, end, line->second);
        expect_line_end(p, end, line->second);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line->second, "edge endpoint out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    std::vector<int> weights;
    weights.reserve(static_cast<std::size_t>(n));
    for (long long v = 0; v < n; ++v) {
        const auto line = cur.next();
        if (!line)
            throw ParseError(static_cast<int>(lines.size()),
                             "expected " + std::to_string(n) +
                                 " node-weight lines, found only " + std::to_string(v));
        const auto tokens = parse_int_tokens(*line->first, line->second);
        if (tokens.size() != 1)
            throw ParseError(line->second, "expected exactly one node weight");
        if (tokens[0] < 0) throw ParseError(line->second, "negative node weight");
        weights.push_back(static_cast<int>(tokens[0]));
    }
    if (const auto extra = cur.next())
        throw ParseError(extra->second, "unexpected trailing content");
    try {
        return WeightedGraph::build(static_cast<int>(n), std::move(edges),
                                    std::move(weights));
    } catch (const ContractError& e) {
        throw ParseError(static_cast<int>(lines.size()), e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("failed while reading " + path);
    return content;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed while writing " + path);
}

namespace {

nlohmann::ordered_json dist_to_json(const SizeDistribution& dist) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [size, p] : dist.entries()) obj[std::to_string(size)] = p;
    return obj;
}

}  // namespace

BundlePaths bundle_paths(const std::string& out_dir, const std::string& stem) {
    const std::filesystem::path dir(out_dir);
    BundlePaths p;
    p.hgr = (dir / (stem + ".hgr")).string();
    p.planted_part = (dir / (stem + ".planted.part")).string();
    p.refined_part = (dir / (stem + ".refined.part")).string();
    p.meta = (dir / (stem + ".meta.json")).string();
    return p;
}

BundlePaths write_bundle(const GeneratedBenchmark& bench, const std::string& out_dir,
                         const std::string& stem) {
    std::filesystem::create_directories(out_dir);
    const auto paths = bundle_paths(out_dir, stem);
    write_text_file(paths.hgr, emit_hgr(bench.hypergraph));
    write_text_file(paths.planted_part, emit_partition(bench.planted));
    if (bench.refined) write_text_file(paths.refined_part, emit_partition(*bench.refined));

    nlohmann::ordered_json meta;
    meta["seed"] = bench.params.seed;
    meta["n"] = bench.params.n;
    meta["k"] = bench.params.k;
    meta["rent_t"] = bench.params.rent_t;
    meta["rent_p"] = bench.params.rent_p;
    meta["ndv"] = dist_to_json(bench.params.ndv);
    meta["gdv"] = dist_to_json(bench.params.gdv);
    meta["budget"] = bench.budget;
    meta["planted_cut"] = bench.planted_cut;
    if (bench.refined_cut)
        meta["refined_cut"] = *bench.refined_cut;
    else
        meta["refined_cut"] = nullptr;
    meta["net_count"] = bench.hypergraph.nets.size();
    meta["skipped_nets"] = bench.skipped_nets;
    meta["tool_version"] = kToolVersion;
    write_text_file(paths.meta, meta.dump(2) + "\n");
    return paths;
}

LoadedBundle load_bundle(const BundlePaths& paths) {
    LoadedBundle bundle;
    bundle.hypergraph = parse_hgr(read_text_file(paths.hgr));
    bundle.planted = parse_partition(read_text_file(paths.planted_part)).assignment;

    const auto meta = nlohmann::json::parse(read_text_file(paths.meta));
    bundle.meta.seed = meta.at("seed").get<std::uint64_t>();
    bundle.meta.n = meta.at("n").get<int>();
    bundle.meta.k = meta.at("k").get<int>();
    bundle.meta.rent_t = meta.at("rent_t").get<double>();
    bundle.meta.rent_p = meta.at("rent_p").get<double>();
    bundle.meta.budget = meta.at("budget").get<long long>();
    bundle.meta.planted_cut = meta.at("planted_cut").get<long long>();
    if (!meta.at("refined_cut").is_null())
        bundle.meta.refined_cut = meta.at("refined_cut").get<long long>();
    bundle.meta.net_count = meta.at("net_count").get<long long>();
    bundle.meta.skipped_nets = meta.at("skipped_nets").get<long long>();
    bundle.meta.tool_version = meta.at("tool_version").get<std::string>();

    if (bundle.hypergraph.n != bundle.meta.n)
        throw ContractError("bundle inconsistency: netlist has " +
                            std::to_string(bundle.hypergraph.n) +
                            " nodes, metadata says " + std::to_string(bundle.meta.n));
    if (static_cast<long long>(bundle.hypergraph.nets.size()) != bundle.meta.net_count)
        throw ContractError("bundle inconsistency: netlist has " +
                            std::to_string(bundle.hypergraph.nets.size()) +
                            " nets, metadata says " + std::to_string(bundle.meta.net_count));
    if (bundle.planted.part.size() != static_cast<std::size_t>(bundle.meta.n))
        throw ContractError("bundle inconsistency: planted partition covers " +
                            std::to_string(bundle.planted.part.size()) + " nodes");
    if (bundle.planted.k > bundle.meta.k)
        throw ContractError("bundle inconsistency: planted partition uses more parts "
                            "than metadata declares");
    bundle.planted.k = bundle.meta.k;

    const long long recomputed = hyperedge_cut(bundle.hypergraph, bundle.planted);
    if (recomputed != bundle.meta.planted_cut)
        throw ContractError("bundle self-consistency check failed: recorded planted "
                            "cut " + std::to_string(bundle.meta.planted_cut) +
                            ", recomputed " + std::to_string(recomputed));

    const bool have_refined_file = std::filesystem::exists(paths.refined_part);
    if (bundle.meta.refined_cut.has_value() != have_refined_file)
        throw ContractError(have_refined_file
                                ? "bundle inconsistency: refined partition on disk but "
                                  "no refined cut recorded"
                                : "bundle inconsistency: refined cut recorded but no "
                                  "refined partition on disk");
    if (have_refined_file) {
        auto refined = parse_partition(read_text_file(paths.refined_part)).assignment;
        if (refined.k > bundle.meta.k)
            throw ContractError("bundle inconsistency: refined partition uses more "
                                "parts than metadata declares");
        refined.k = bundle.meta.k;
        const long long refined_cut = hyperedge_cut(bundle.hypergraph, refined);
        if (refined_cut != *bundle.meta.refined_cut)
            throw ContractError("bundle self-consistency check failed: recorded "
                                "refined cut " + std::to_string(*bundle.meta.refined_cut) +
                                ", recomputed " + std::to_string(refined_cut));
        bundle.refined = std::move(refined);
    }
    return bundle;
}

}  // namespace perrdi
