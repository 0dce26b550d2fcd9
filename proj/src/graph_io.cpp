#include "graphid/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "graphid/coder.hpp"

namespace graphid {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
        if (pos > start) tokens.push_back(line.substr(start, pos - start));
    }
    return tokens;
}

template <typename T>
T parse_int(std::string_view token, std::size_t line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    ParsedGraph parsed;
    std::unordered_map<std::uint64_t, VertexId> id_to_vertex;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string_view> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "v") {
            if (tokens.size() < 2 || tokens.size() > 3) {
                throw ParseError(line_no, "vertex line needs 'v <id> [label]'");
            }
            std::uint64_t id = parse_int<std::uint64_t>(tokens[1], line_no, "vertex id");
            if (id_to_vertex.count(id)) {
                throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
            }
            Label label;
            if (tokens.size() == 3) label = parse_int<std::int64_t>(tokens[2], line_no, "label");
            id_to_vertex[id] = parsed.graph.add_vertex(label);
            parsed.vertex_ids.push_back(id);
        } else if (tokens[0] == "e") {
            if (tokens.size() < 4 || tokens.size() > 5) {
                throw ParseError(line_no, "edge line needs 'e <src> <dst> <d|u> [label]'");
            }
            std::uint64_t src = parse_int<std::uint64_t>(tokens[1], line_no, "source id");
            std::uint64_t dst = parse_int<std::uint64_t>(tokens[2], line_no, "target id");
            auto src_it = id_to_vertex.find(src);
            auto dst_it = id_to_vertex.find(dst);
            if (src_it == id_to_vertex.end()) {
                throw ParseError(line_no, "edge references undeclared vertex " + std::to_string(src));
            }
            if (dst_it == id_to_vertex.end()) {
                throw ParseError(line_no, "edge references undeclared vertex " + std::to_string(dst));
            }
            bool directed;
            if (tokens[3] == "d") {
                directed = true;
            } else if (tokens[3] == "u") {
                directed = false;
            } else {
                throw ParseError(line_no, "edge direction must be 'd' or 'u'");
            }
            Label label;
            if (tokens.size() == 5) label = parse_int<std::int64_t>(tokens[4], line_no, "label");
            parsed.graph.add_edge(src_it->second, dst_it->second, directed, label);
        } else {
            throw ParseError(line_no, "unknown declaration '" + std::string(tokens[0]) + "'");
        }
    }
    return parsed;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& g) {
    std::string out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out += "v " + std::to_string(v);
        const Label& label = g.vertex(static_cast<VertexId>(v)).label;
        if (label) out += " " + std::to_string(*label);
        out += "\n";
    }
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.source) + " " + std::to_string(e.target) +
               (e.directed ? " d" : " u");
        if (e.label) out += " " + std::to_string(*e.label);
        out += "\n";
    }
    return out;
}

std::vector<DedupeGroup> dedupe_graphs(const std::vector<NamedGraph>& inputs, bool hash_labels) {
    std::vector<DedupeGroup> groups;
    std::map<HashCode, std::size_t> group_index;

    for (const NamedGraph& input : inputs) {
        HashCode hash = graph_hash(input.graph, hash_labels);
        auto [it, inserted] = group_index.try_emplace(hash, groups.size());
        if (inserted) groups.push_back(DedupeGroup{hash, {}});
        groups[it->second].members.push_back(input.name);
    }
    return groups;
}

}  // namespace graphid
