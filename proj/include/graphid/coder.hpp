#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "graphid/graph.hpp"
#include "graphid/md5.hpp"

namespace graphid {

// One node of the coder DAG. The root coder has no vertex; it gets one
// child per graph vertex. Every other coder stands for "vertex reached
// over parent_edge" within one root child's subtree. Coders are created
// and owned by a GraphCoder; children may be shared between parents, and
// only the creator expands a shared child.
struct VertexCoder {
    std::optional<VertexId> vertex;
    std::optional<EdgeId> parent_edge;
    HashCode code;                        // starts as the all-zero digest
    std::vector<VertexCoder*> children;
    VertexCoder* creator = nullptr;
    bool expanded = false;                // set once a recode left the code unchanged
    int generation = 0;

    // Internal bookkeeping, managed by GraphCoder.
    std::uint32_t subtree = 0;            // index of the owning root child's vertex map
    std::uint64_t seen_pass = 0;
    std::uint64_t mark_pass = 0;
};

// Computes canonical hash codes for a graph by iteratively expanding a
// neighborhood coder around every vertex.
//
// Construction builds the root and one generation-1 child per vertex.
// generate(hash_labels) then drives the convergence loop: as long as two
// root children carry equal codes and at least one of them is not yet
// expanded, the first such run of equal codes is expanded one level and
// recoded, label-blind. Expansion walks incident edges and reuses an
// existing coder when the same (vertex, edge) pair was already reached
// inside the subtree: at the same depth the coder is shared, at an
// earlier depth the walk has closed a cycle and adds nothing. Once the
// loop settles, one final recursive pass recomputes every code, folding
// vertex and edge labels in if requested; the root code hashes the sorted
// child codes and is the identity of the whole graph.
//
// A coder's code is the MD5 digest of: its vertex label (labeled pass
// only), its parent edge's label (labeled pass only), one direction byte
// for the parent edge (0 directed leaving the coder's vertex or a
// self-loop, 1 directed entering it, 2 undirected), then the codes of its
// children in ascending byte order. Equal child codes contribute
// identical bytes, so their relative order never matters.
//
// A pass recodes each distinct coder once and remembers the result;
// revisits through additional parents keep the recomputed-unchanged
// semantics (the revisited coder and everything below it is marked
// expanded) without redoing the hashing.
class GraphCoder {
public:
    explicit GraphCoder(const Graph& g);

    GraphCoder(const GraphCoder&) = delete;
    GraphCoder& operator=(const GraphCoder&) = delete;

    // Runs the full convergence loop plus the final recursive pass.
    void generate(bool hash_labels) { generate_code(*root_, hash_labels); }

    // One-level expansion of c's subtree frontier (no-op once expanded).
    void expand(VertexCoder& c);

    // Recursive recode of c's subtree; for the root this includes the
    // convergence loop. Label handling applies to this pass only.
    void generate_code(VertexCoder& c, bool hash_labels);

    const VertexCoder& root() const { return *root_; }
    VertexCoder& root() { return *root_; }
    HashCode code() const { return root_->code; }

    // Codes of the root's children keyed by their vertex.
    std::vector<HashCode> child_codes() const;

    std::size_t coder_count() const { return nodes_.size(); }
    const Graph& graph() const { return *graph_; }

private:
    // Key packs (vertex, incoming edge); the root child itself is seeded
    // under its vertex with no edge.
    using VertexMap = std::unordered_map<std::uint64_t, VertexCoder*>;

    static std::uint64_t map_key(VertexId v, std::optional<EdgeId> e) {
        return (static_cast<std::uint64_t>(v) << 32) | (e ? static_cast<std::uint64_t>(*e) + 1 : 0);
    }

    VertexCoder* new_coder();
    void recode(VertexCoder& c, bool hash_labels);
    void mark_expanded(VertexCoder& c);

    const Graph* graph_;
    std::deque<VertexCoder> nodes_;
    std::vector<std::unique_ptr<VertexMap>> maps_;  // one per root child
    VertexCoder* root_;
    std::uint64_t pass_ = 0;
    std::vector<unsigned char> content_;            // scratch for recode
};

// The canonical hash of a graph. With hash_labels, vertex and edge
// labels are folded into the final pass; without, the code depends on
// structure alone. Two runs on isomorphic graphs yield equal codes.
HashCode graph_hash(const Graph& g, bool hash_labels);

// Converged structural (label-blind) codes, indexed by vertex. Vertices
// in symmetric positions receive equal codes.
std::vector<HashCode> vertex_codes(const Graph& g);

}  // namespace graphid
