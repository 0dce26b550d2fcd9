// Command-line front end: hashing, comparison, isomorphism testing,
// generation, and benchmarking of graphs in the line-based text format
// (see README). Exit codes: 0 success/equal/isomorphic, 1 unequal or
// non-isomorphic, 2 usage or input errors.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphid/bench.hpp"
#include "graphid/coder.hpp"
#include "graphid/graph.hpp"
#include "graphid/graph_io.hpp"
#include "graphid/iso.hpp"
#include "graphid/md5.hpp"

namespace {

using namespace graphid;

constexpr int kExitSuccess = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitError = 2;

ParsedGraph load(const std::string& path) {
    try {
        return parse_graph_file(path);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

int cmd_hash(const std::string& file, bool structural) {
    ParsedGraph parsed = load(file);
    std::cout << graph_hash(parsed.graph, !structural).hex() << "\n";
    return kExitSuccess;
}

int cmd_vertex_codes(const std::string& file) {
    ParsedGraph parsed = load(file);
    std::vector<HashCode> codes = vertex_codes(parsed.graph);
    for (std::size_t v = 0; v < codes.size(); ++v) {
        std::cout << parsed.vertex_ids[v] << "\t" << codes[v].hex() << "\n";
    }
    return kExitSuccess;
}

int cmd_eq(const std::string& file1, const std::string& file2, bool structural) {
    ParsedGraph a = load(file1);
    ParsedGraph b = load(file2);
    HashCode ha = graph_hash(a.graph, !structural);
    HashCode hb = graph_hash(b.graph, !structural);
    std::cout << ha.hex() << "  " << file1 << "\n";
    std::cout << hb.hex() << "  " << file2 << "\n";
    return ha == hb ? kExitSuccess : kExitUnequal;
}

int cmd_iso(const std::string& file1, const std::string& file2, const std::string& method) {
    ParsedGraph a = load(file1);
    ParsedGraph b = load(file2);

    IsoResult result;
    if (method == "hash") {
        result = hash_constrained_isomorphic(a.graph, b.graph);
    } else if (method == "ullmann") {
        result = ullmann_isomorphic(a.graph, b.graph);
    } else {
        result = brute_force_isomorphic(a.graph, b.graph);
    }

    if (!result.found) {
        std::cout << "not isomorphic\n";
        return kExitUnequal;
    }
    const VertexMapping& m = *result.mapping;
    for (std::size_t v = 0; v < m.size(); ++v) {
        std::cout << a.vertex_ids[v] << "->" << b.vertex_ids[m[v]] << "\n";
    }
    return kExitSuccess;
}

int cmd_gen(std::size_t vertices, std::size_t edges, bool directed,
            std::optional<std::int64_t> label_range, std::uint64_t seed) {
    Graph g = random_graph(vertices, edges, directed, label_range, seed);
    std::cout << serialize_graph(g);
    return kExitSuccess;
}

int cmd_scramble(const std::string& file, std::uint64_t seed) {
    ParsedGraph parsed = load(file);
    std::cout << serialize_graph(scramble(parsed.graph, seed));
    return kExitSuccess;
}

int cmd_dedupe(const std::vector<std::string>& files, bool structural) {
    std::vector<NamedGraph> inputs;
    bool had_failure = false;
    for (const std::string& file : files) {
        try {
            inputs.push_back(NamedGraph{file, load(file).graph});
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            had_failure = true;
        }
    }
    for (const DedupeGroup& group : dedupe_graphs(inputs, !structural)) {
        std::cout << group.hash.hex();
        for (const std::string& member : group.members) std::cout << " " << member;
        std::cout << "\n";
    }
    return had_failure ? kExitError : kExitSuccess;
}

int cmd_bench(const std::string& settings_arg, std::size_t trials, std::uint64_t seed) {
    std::vector<BenchSetting> settings;
    std::size_t pos = 0;
    while (pos < settings_arg.size()) {
        std::size_t comma = settings_arg.find(',', pos);
        std::string item = settings_arg.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = (comma == std::string::npos) ? settings_arg.size() : comma + 1;

        std::size_t slash = item.find('/');
        if (slash == std::string::npos) {
            throw std::runtime_error("bad setting '" + item + "', expected VERTICES/EDGES");
        }
        BenchSetting s;
        s.vertices = std::stoul(item.substr(0, slash));
        s.edges = std::stoul(item.substr(slash + 1));
        s.trials = trials;
        s.seed = seed;
        settings.push_back(s);
    }
    if (settings.empty()) throw std::runtime_error("no benchmark settings given");

    BenchReport report = run_benchmark(settings);
    std::cout << format_report(report);
    for (const BenchRow& row : report.rows) {
        if (row.error) return kExitError;
    }
    return kExitSuccess;
}

int cmd_tipping_point(double ullmann_ms, double hash_ms, double cmp_ms) {
    auto n = tipping_point(TippingInput{ullmann_ms, hash_ms, cmp_ms});
    if (n) {
        std::cout << *n << "\n";
    } else {
        std::cout << "never\n";
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph identification by hashing"};
    app.require_subcommand(1);

    std::string file1, file2, method = "hash", settings_arg;
    std::vector<std::string> files;
    bool structural = false, directed = false;
    std::size_t vertices = 0, edges = 0, trials = 100;
    std::uint64_t seed = 1;
    std::int64_t label_range = 0;
    double ullmann_ms = 0, hash_ms = 0, cmp_ms = 0;

    CLI::App* hash_cmd = app.add_subcommand("hash", "print a graph's hash code");
    hash_cmd->add_option("file", file1)->required();
    hash_cmd->add_flag("--structural", structural, "ignore labels");

    CLI::App* codes_cmd = app.add_subcommand("vertex-codes", "print converged structural vertex codes");
    codes_cmd->add_option("file", file1)->required();

    CLI::App* eq_cmd = app.add_subcommand("eq", "compare two graphs by hash code");
    eq_cmd->add_option("file1", file1)->required();
    eq_cmd->add_option("file2", file2)->required();
    eq_cmd->add_flag("--structural", structural, "ignore labels");

    CLI::App* iso_cmd = app.add_subcommand("iso", "find an isomorphism between two graphs");
    iso_cmd->add_option("file1", file1)->required();
    iso_cmd->add_option("file2", file2)->required();
    iso_cmd->add_option("--method", method, "hash, ullmann, or brute")
        ->check(CLI::IsMember({"hash", "ullmann", "brute"}));

    CLI::App* gen_cmd = app.add_subcommand("gen", "write a random graph to stdout");
    gen_cmd->add_option("--vertices", vertices)->required();
    gen_cmd->add_option("--edges", edges)->required();
    gen_cmd->add_flag("--directed", directed, "directed edges");
    CLI::Option* label_opt = gen_cmd->add_option("--label-range", label_range,
                                                 "label vertices and edges uniformly in [0, K)");
    gen_cmd->add_option("--seed", seed)->required();

    CLI::App* scramble_cmd = app.add_subcommand("scramble", "write an isomorphic shuffle to stdout");
    scramble_cmd->add_option("file", file1)->required();
    scramble_cmd->add_option("--seed", seed)->required();

    CLI::App* dedupe_cmd = app.add_subcommand("dedupe", "group graph files by hash code");
    dedupe_cmd->add_option("files", files)->required();
    dedupe_cmd->add_flag("--structural", structural, "ignore labels");

    CLI::App* bench_cmd = app.add_subcommand("bench", "compare Ullmann and hash comparison times");
    bench_cmd->add_option("--settings", settings_arg, "VERTICES/EDGES[,VERTICES/EDGES...]")->required();
    bench_cmd->add_option("--trials", trials, "pairs per setting");
    bench_cmd->add_option("--seed", seed);

    CLI::App* tip_cmd = app.add_subcommand("tipping-point", "library size where hashing wins");
    tip_cmd->add_option("--ullmann", ullmann_ms, "milliseconds per Ullmann comparison")->required();
    tip_cmd->add_option("--hash", hash_ms, "milliseconds to hash one graph")->required();
    tip_cmd->add_option("--cmp", cmp_ms, "milliseconds per digest comparison")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (hash_cmd->parsed()) return cmd_hash(file1, structural);
        if (codes_cmd->parsed()) return cmd_vertex_codes(file1);
        if (eq_cmd->parsed()) return cmd_eq(file1, file2, structural);
        if (iso_cmd->parsed()) return cmd_iso(file1, file2, method);
        if (gen_cmd->parsed()) {
            std::optional<std::int64_t> range;
            if (label_opt->count() > 0) range = label_range;
            return cmd_gen(vertices, edges, directed, range, seed);
        }
        if (scramble_cmd->parsed()) return cmd_scramble(file1, seed);
        if (dedupe_cmd->parsed()) return cmd_dedupe(files, structural);
        if (bench_cmd->parsed()) return cmd_bench(settings_arg, trials, seed);
        if (tip_cmd->parsed()) return cmd_tipping_point(ullmann_ms, hash_ms, cmp_ms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
