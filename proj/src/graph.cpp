#include "graphid/graph.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace graphid {

namespace {

// All randomized construction uses std::mt19937_64 with draws reduced
// modulo the bound. mt19937_64 output is pinned by the standard, so the
// same seed reproduces the same graph on every platform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace

VertexId Graph::add_vertex(Label label) {
    vertices_.push_back(Vertex{label, {}});
    return static_cast<VertexId>(vertices_.size() - 1);
}

EdgeId Graph::add_edge(VertexId source, VertexId target, bool directed, Label label) {
    if (source >= vertices_.size() || target >= vertices_.size()) {
        throw std::out_of_range("add_edge: endpoint " +
                                std::to_string(source >= vertices_.size() ? source : target) +
                                " does not exist");
    }
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{source, target, directed, label});
    vertices_[source].edges.push_back(id);
    if (target != source) vertices_[target].edges.push_back(id);
    return id;
}

Graph scramble(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);

    std::vector<VertexId> vertex_order(g.vertex_count());
    for (std::size_t i = 0; i < vertex_order.size(); ++i) vertex_order[i] = static_cast<VertexId>(i);
    shuffle_in_place(vertex_order, rng);

    // vertex_order[i] is the old id placed at new position i.
    std::vector<VertexId> new_id(g.vertex_count());
    for (std::size_t i = 0; i < vertex_order.size(); ++i) new_id[vertex_order[i]] = static_cast<VertexId>(i);

    std::vector<EdgeId> edge_order(g.edge_count());
    for (std::size_t i = 0; i < edge_order.size(); ++i) edge_order[i] = static_cast<EdgeId>(i);
    shuffle_in_place(edge_order, rng);

    Graph out;
    for (VertexId old_id : vertex_order) out.add_vertex(g.vertex(old_id).label);
    for (EdgeId old_id : edge_order) {
        const Edge& e = g.edge(old_id);
        out.add_edge(new_id[e.source], new_id[e.target], e.directed, e.label);
    }
    for (Vertex& v : out.vertices_) shuffle_in_place(v.edges, rng);
    return out;
}

Graph random_graph(std::size_t vertices, std::size_t edges, bool directed,
                   std::optional<std::int64_t> label_range, std::uint64_t seed) {
    if (vertices == 0 && edges > 0) {
        throw std::invalid_argument("random_graph: edges require at least one vertex");
    }
    if (label_range && *label_range <= 0) {
        throw std::invalid_argument("random_graph: label range must be positive");
    }

    std::mt19937_64 rng(seed);
    auto next_label = [&]() -> Label {
        if (!label_range) return std::nullopt;
        return static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(*label_range)));
    };

    Graph g;
    for (std::size_t i = 0; i < vertices; ++i) g.add_vertex(next_label());
    for (std::size_t i = 0; i < edges; ++i) {
        VertexId s = static_cast<VertexId>(draw_below(rng, vertices));
        VertexId t = static_cast<VertexId>(draw_below(rng, vertices));
        g.add_edge(s, t, directed, next_label());
    }
    return g;
}

Graph complete_digraph(std::size_t n) {
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j), true);
        }
    }
    return g;
}

}  // namespace graphid
