#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphid/graph.hpp"

namespace graphid {

// mapping[v] is the g2 vertex matched to g1 vertex v.
using VertexMapping = std::vector<VertexId>;

struct IsoResult {
    bool found = false;
    std::optional<VertexMapping> mapping;
    // Search effort: candidate assignments tried (mappings tested, for
    // the exhaustive matcher).
    std::uint64_t nodes_expanded = 0;
};

// Checks that mapping is a bijection carrying g1 onto g2 exactly:
// vertex labels agree pairwise and, for every vertex pair, the multiset
// of edge (direction, label) annotations agrees with the image pair's.
// Any size mismatch yields false, never an error.
bool verify_isomorphism(const Graph& g1, const Graph& g2, const VertexMapping& mapping);

// Exhaustive matcher: tries vertex permutations in lexicographic order
// and returns the first verified mapping. Intended as an oracle for
// small graphs; throws std::invalid_argument when either graph exceeds
// max_vertices rather than guessing.
IsoResult brute_force_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_vertices = 8);

// Ullmann-style matcher: a boolean candidate matrix over the simple
// projections of both graphs is refined at every search node, rows are
// assigned in order, and parallel-edge multiplicities are compared as
// assignments are made. A complete assignment is accepted only after
// verify_isomorphism passes.
IsoResult ullmann_isomorphic(const Graph& g1, const Graph& g2);

// Hash-accelerated matcher: candidate classes come from equality of the
// converged structural vertex codes. A mismatch between the two code
// multisets refutes isomorphism with no search at all; otherwise vertices
// are assigned smallest class first under incremental adjacency, label,
// and multiplicity checks, and the result is verified before returning.
IsoResult hash_constrained_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace graphid
