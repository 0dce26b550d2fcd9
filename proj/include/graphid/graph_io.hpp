#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphid/graph.hpp"
#include "graphid/md5.hpp"

namespace graphid {

// Raised on malformed graph text; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedGraph {
    Graph graph;
    // Original file ids in declaration order; graph vertex i was declared
    // as vertex_ids[i]. Ids need not be dense.
    std::vector<std::uint64_t> vertex_ids;
};

// Text format, one declaration per line:
//   v <id> [label]            vertex; id is a unique non-negative integer
//   e <src> <dst> <d|u> [label]   edge between declared vertices
// '#' starts a comment; blank lines are ignored. Labels are signed
// 64-bit integers. Throws ParseError with the offending line number; a
// failed parse never yields a partially built graph.
ParsedGraph parse_graph(std::string_view text);

// Reads and parses a file. Throws std::runtime_error if unreadable,
// ParseError on bad content.
ParsedGraph parse_graph_file(const std::string& path);

// Inverse of parse_graph up to vertex ids (dense ids are written).
// Hashes survive a serialize/parse round trip.
std::string serialize_graph(const Graph& g);

struct NamedGraph {
    std::string name;
    Graph graph;
};

struct DedupeGroup {
    HashCode hash;
    std::vector<std::string> members;  // input order
};

// Groups the inputs by graph hash. Group order is first appearance.
std::vector<DedupeGroup> dedupe_graphs(const std::vector<NamedGraph>& inputs, bool hash_labels);

}  // namespace graphid
