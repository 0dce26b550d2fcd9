#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace graphid {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Optional signed integer annotation on a vertex or edge. Absent is a
// distinct state from every present value.
using Label = std::optional<std::int64_t>;

struct Edge {
    VertexId source;
    VertexId target;
    bool directed;
    Label label;
};

struct Vertex {
    Label label;
    // Incident edge ids in insertion order. Self-loops appear once.
    std::vector<EdgeId> edges;
};

// A finite multigraph: parallel edges, self-loops, and a mix of directed
// and undirected edges are all allowed, as are isolated vertices and
// disconnected components. Vertices and edges are identified by dense
// indices in insertion order. Build with add_vertex/add_edge, then treat
// as immutable.
class Graph {
public:
    VertexId add_vertex(Label label = std::nullopt);

    // Adds an edge and records it in the incidence lists of both
    // endpoints (once for a self-loop). Throws std::out_of_range if an
    // endpoint does not exist.
    EdgeId add_edge(VertexId source, VertexId target, bool directed, Label label = std::nullopt);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    std::span<const EdgeId> incident_edges(VertexId v) const { return vertices_.at(v).edges; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    friend Graph scramble(const Graph& g, std::uint64_t seed);

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

// Returns a graph isomorphic to g with vertex order, edge order, and
// every incidence list permuted. Deterministic for a given seed; see
// README for the generator choice.
Graph scramble(const Graph& g, std::uint64_t seed);

// Returns a random multigraph: edge endpoints are drawn uniformly over
// ordered vertex pairs, so self-loops and parallel edges occur. When
// label_range is present, every vertex and edge gets a uniform label in
// [0, label_range); otherwise all labels are absent. Deterministic for a
// given seed. Throws std::invalid_argument if edges > 0 and vertices == 0.
Graph random_graph(std::size_t vertices, std::size_t edges, bool directed,
                   std::optional<std::int64_t> label_range, std::uint64_t seed);

// Complete directed graph: both arcs between every pair of distinct
// vertices, no self-loops, no labels.
Graph complete_digraph(std::size_t n);

}  // namespace graphid
