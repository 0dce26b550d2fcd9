#include "graphid/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "graphid/coder.hpp"

namespace graphid {

namespace {

// (directed, endpoint, endpoint, label) with undirected endpoints
// normalized to ascending order; a graph's sorted annotation list is
// invariant under relabeling of its edges.
using EdgeAnnotation = std::tuple<bool, VertexId, VertexId, Label>;

EdgeAnnotation annotate(const Edge& e, const VertexMapping* mapping) {
    VertexId a = mapping ? (*mapping)[e.source] : e.source;
    VertexId b = mapping ? (*mapping)[e.target] : e.target;
    if (!e.directed && b < a) std::swap(a, b);
    return {e.directed, a, b, e.label};
}

std::vector<EdgeAnnotation> edge_annotations(const Graph& g, const VertexMapping* mapping) {
    std::vector<EdgeAnnotation> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back(annotate(e, mapping));
    std::sort(out.begin(), out.end());
    return out;
}

bool labels_match(const Graph& g1, const Graph& g2, const VertexMapping& m) {
    for (std::size_t v = 0; v < g1.vertex_count(); ++v) {
        if (g1.vertex(static_cast<VertexId>(v)).label != g2.vertex(m[v]).label) return false;
    }
    return true;
}

std::uint64_t pair_key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Per-pair edge label multisets, kept sorted. dir is keyed by the
// ordered (source, target) pair, und by the unordered pair.
struct PairLabels {
    std::unordered_map<std::uint64_t, std::vector<Label>> dir;
    std::unordered_map<std::uint64_t, std::vector<Label>> und;

    explicit PairLabels(const Graph& g) {
        for (const Edge& e : g.edges()) {
            if (e.directed) {
                dir[pair_key(e.source, e.target)].push_back(e.label);
            } else {
                VertexId a = e.source, b = e.target;
                if (b < a) std::swap(a, b);
                und[pair_key(a, b)].push_back(e.label);
            }
        }
        for (auto& [k, v] : dir) std::sort(v.begin(), v.end());
        for (auto& [k, v] : und) std::sort(v.begin(), v.end());
    }

    static const std::vector<Label>& lookup(
        const std::unordered_map<std::uint64_t, std::vector<Label>>& m, VertexId a, VertexId b) {
        static const std::vector<Label> kEmpty;
        auto it = m.find(pair_key(a, b));
        return it == m.end() ? kEmpty : it->second;
    }

    const std::vector<Label>& directed(VertexId a, VertexId b) const { return lookup(dir, a, b); }
    const std::vector<Label>& undirected(VertexId a, VertexId b) const {
        return b < a ? lookup(und, b, a) : lookup(und, a, b);
    }
};

// Pairwise consistency of assigning u -> v given the already assigned
// pairs; compares the full annotation multisets in both directions plus
// the undirected ones.
bool pair_consistent(const PairLabels& p1, const PairLabels& p2, VertexId u, VertexId v,
                     VertexId w, VertexId mw) {
    return p1.directed(u, w) == p2.directed(v, mw) && p1.directed(w, u) == p2.directed(mw, v) &&
           p1.undirected(u, w) == p2.undirected(v, mw);
}

}  // namespace

bool verify_isomorphism(const Graph& g1, const Graph& g2, const VertexMapping& mapping) {
    std::size_t n = g1.vertex_count();
    if (g2.vertex_count() != n || mapping.size() != n) return false;
    if (g1.edge_count() != g2.edge_count()) return false;

    std::vector<bool> used(n, false);
    for (VertexId image : mapping) {
        if (image >= n || used[image]) return false;
        used[image] = true;
    }
    if (!labels_match(g1, g2, mapping)) return false;
    return edge_annotations(g1, &mapping) == edge_annotations(g2, nullptr);
}

IsoResult brute_force_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_vertices) {
    if (g1.vertex_count() > max_vertices || g2.vertex_count() > max_vertices) {
        throw std::invalid_argument(
            "brute_force_isomorphic: graph exceeds the " + std::to_string(max_vertices) +
            "-vertex cap for exhaustive search");
    }

    IsoResult result;
    std::size_t n = g1.vertex_count();
    if (g2.vertex_count() != n || g1.edge_count() != g2.edge_count()) return result;

    const std::vector<EdgeAnnotation> target = edge_annotations(g2, nullptr);

    VertexMapping perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);

    do {
        ++result.nodes_expanded;
        if (labels_match(g1, g2, perm) && edge_annotations(g1, &perm) == target) {
            result.found = true;
            result.mapping = perm;
            return result;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

namespace {

// Simple projection of a multigraph plus multiplicity tables, the ground
// the Ullmann matcher works on.
struct Projection {
    std::size_t n;
    std::vector<std::vector<std::uint32_t>> dir_mult;  // [a][b] directed a->b (loops on diagonal)
    std::vector<std::vector<std::uint32_t>> und_mult;  // symmetric (loops on diagonal)
    std::vector<std::vector<VertexId>> out_adj, in_adj, und_adj;  // loop-free neighbor lists

    explicit Projection(const Graph& g)
        : n(g.vertex_count()),
          dir_mult(n, std::vector<std::uint32_t>(n, 0)),
          und_mult(n, std::vector<std::uint32_t>(n, 0)),
          out_adj(n),
          in_adj(n),
          und_adj(n) {
        for (const Edge& e : g.edges()) {
            if (e.directed) {
                ++dir_mult[e.source][e.target];
            } else if (e.source == e.target) {
                ++und_mult[e.source][e.source];
            } else {
                ++und_mult[e.source][e.target];
                ++und_mult[e.target][e.source];
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                if (dir_mult[a][b] > 0) {
                    out_adj[a].push_back(static_cast<VertexId>(b));
                    in_adj[b].push_back(static_cast<VertexId>(a));
                }
                if (und_mult[a][b] > 0 && a < b) {
                    und_adj[a].push_back(static_cast<VertexId>(b));
                    und_adj[b].push_back(static_cast<VertexId>(a));
                }
            }
        }
    }

    // Sorted multiplicity profiles and loop counts; equality is necessary
    // for two vertices to correspond.
    std::vector<std::uint64_t> vertex_profile(VertexId v) const {
        std::vector<std::uint64_t> profile;
        profile.push_back(dir_mult[v][v]);
        profile.push_back(und_mult[v][v]);
        auto push_sorted = [&](const std::vector<std::uint32_t>& row, bool transpose) {
            std::vector<std::uint32_t> mults;
            for (std::size_t o = 0; o < n; ++o) {
                if (o == v) continue;
                std::uint32_t m = transpose ? dir_mult[o][v] : row[o];
                if (m > 0) mults.push_back(m);
            }
            std::sort(mults.begin(), mults.end());
            profile.push_back(mults.size());
            for (std::uint32_t m : mults) profile.push_back(m);
        };
        push_sorted(dir_mult[v], false);
        push_sorted(dir_mult[v], true);
        push_sorted(und_mult[v], false);
        return profile;
    }
};

class UllmannSearch {
public:
    UllmannSearch(const Graph& g1, const Graph& g2)
        : g1_(g1), g2_(g2), p1_(g1), p2_(g2), n_(g1.vertex_count()) {}

    IsoResult run() {
        IsoResult result;
        if (n_ == 0) {
            result.found = true;
            result.mapping = VertexMapping{};
            return result;
        }

        std::vector<char> m(n_ * n_, 0);
        bool feasible = true;
        {
            std::vector<std::vector<std::uint64_t>> profiles2(n_);
            for (std::size_t j = 0; j < n_; ++j) profiles2[j] = p2_.vertex_profile(static_cast<VertexId>(j));
            for (std::size_t i = 0; i < n_; ++i) {
                auto profile1 = p1_.vertex_profile(static_cast<VertexId>(i));
                bool any = false;
                for (std::size_t j = 0; j < n_; ++j) {
                    if (g1_.vertex(static_cast<VertexId>(i)).label ==
                            g2_.vertex(static_cast<VertexId>(j)).label &&
                        profile1 == profiles2[j]) {
                        m[i * n_ + j] = 1;
                        any = true;
                    }
                }
                if (!any) feasible = false;
            }
        }

        mapping_.assign(n_, 0);
        used_.assign(n_, false);
        if (feasible && refine(m) && search(0, m)) {
            result.found = true;
            result.mapping = mapping_;
        }
        result.nodes_expanded = nodes_;
        return result;
    }

private:
    // Standard refinement to a fixpoint: candidate (i, j) survives only
    // if every projected neighbor of i keeps a live candidate among the
    // corresponding neighbors of j.
    bool refine(std::vector<char>& m) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) {
                    if (!m[i * n_ + j]) continue;
                    if (!supported(m, i, j, p1_.out_adj, p2_.out_adj) ||
                        !supported(m, i, j, p1_.in_adj, p2_.in_adj) ||
                        !supported(m, i, j, p1_.und_adj, p2_.und_adj)) {
                        m[i * n_ + j] = 0;
                        changed = true;
                    }
                }
            }
        }
        for (std::size_t i = 0; i < n_; ++i) {
            bool any = false;
            for (std::size_t j = 0; j < n_; ++j) {
                if (m[i * n_ + j]) {
                    any = true;
                    break;
                }
            }
            if (!any) return false;
        }
        return true;
    }

    bool supported(const std::vector<char>& m, std::size_t i, std::size_t j,
                   const std::vector<std::vector<VertexId>>& adj1,
                   const std::vector<std::vector<VertexId>>& adj2) const {
        for (VertexId x : adj1[i]) {
            bool any = false;
            for (VertexId y : adj2[j]) {
                if (m[static_cast<std::size_t>(x) * n_ + y]) {
                    any = true;
                    break;
                }
            }
            if (!any) return false;
        }
        return true;
    }

    bool consistent(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < i; ++k) {
            VertexId mk = mapping_[k];
            if (p1_.dir_mult[i][k] != p2_.dir_mult[j][mk]) return false;
            if (p1_.dir_mult[k][i] != p2_.dir_mult[mk][j]) return false;
            if (p1_.und_mult[i][k] != p2_.und_mult[j][mk]) return false;
        }
        return true;
    }

    bool search(std::size_t depth, const std::vector<char>& m) {
        if (depth == n_) {
            return verify_isomorphism(g1_, g2_, mapping_);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (!m[depth * n_ + j] || used_[j]) continue;
            if (!consistent(depth, j)) continue;
            ++nodes_;

            std::vector<char> next = m;
            for (std::size_t c = 0; c < n_; ++c) next[depth * n_ + c] = (c == j);
            for (std::size_t r = 0; r < n_; ++r) {
                if (r != depth) next[r * n_ + j] = 0;
            }
            if (!refine(next)) continue;

            mapping_[depth] = static_cast<VertexId>(j);
            used_[j] = true;
            if (search(depth + 1, next)) return true;
            used_[j] = false;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    Projection p1_;
    Projection p2_;
    std::size_t n_;
    VertexMapping mapping_;
    std::vector<bool> used_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IsoResult ullmann_isomorphic(const Graph& g1, const Graph& g2) {
    IsoResult result;
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return result;
    UllmannSearch search(g1, g2);
    return search.run();
}

namespace {

class HashConstrainedSearch {
public:
    HashConstrainedSearch(const Graph& g1, const Graph& g2)
        : g1_(g1), g2_(g2), p1_(g1), p2_(g2), n_(g1.vertex_count()) {}

    IsoResult run() {
        IsoResult result;

        std::vector<HashCode> codes1 = vertex_codes(g1_);
        std::vector<HashCode> codes2 = vertex_codes(g2_);
        {
            std::vector<HashCode> sorted1 = codes1, sorted2 = codes2;
            std::sort(sorted1.begin(), sorted1.end());
            std::sort(sorted2.begin(), sorted2.end());
            if (sorted1 != sorted2) return result;  // refuted, no search
        }

        // Candidate classes keyed by structural code; g1 vertices are
        // assigned smallest class first.
        std::unordered_map<std::string, std::vector<VertexId>> classes;
        for (std::size_t v = 0; v < n_; ++v) {
            classes[key(codes2[v])].push_back(static_cast<VertexId>(v));
        }
        order_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) order_[v] = static_cast<VertexId>(v);
        std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
            return classes.at(key(codes1[a])).size() < classes.at(key(codes1[b])).size();
        });
        candidates_.resize(n_);
        for (std::size_t slot = 0; slot < n_; ++slot) {
            candidates_[slot] = &classes.at(key(codes1[order_[slot]]));
        }

        mapping_.assign(n_, 0);
        used_.assign(n_, false);
        if (search(0)) {
            if (verify_isomorphism(g1_, g2_, mapping_)) {
                result.found = true;
                result.mapping = mapping_;
            }
        }
        result.nodes_expanded = nodes_;
        return result;
    }

private:
    static std::string key(const HashCode& code) {
        return std::string(reinterpret_cast<const char*>(code.bytes.data()), code.bytes.size());
    }

    bool search(std::size_t slot) {
        if (slot == n_) return true;
        VertexId u = order_[slot];
        for (VertexId v : *candidates_[slot]) {
            if (used_[v]) continue;
            ++nodes_;
            if (g1_.vertex(u).label != g2_.vertex(v).label) continue;
            if (!pair_consistent(p1_, p2_, u, v, u, v)) continue;  // self-loops
            bool ok = true;
            for (std::size_t prev = 0; prev < slot; ++prev) {
                VertexId w = order_[prev];
                if (!pair_consistent(p1_, p2_, u, v, w, mapping_[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping_[u] = v;
            used_[v] = true;
            if (search(slot + 1)) return true;
            used_[v] = false;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    PairLabels p1_;
    PairLabels p2_;
    std::size_t n_;
    std::vector<VertexId> order_;
    std::vector<const std::vector<VertexId>*> candidates_;
    VertexMapping mapping_;
    std::vector<bool> used_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IsoResult hash_constrained_isomorphic(const Graph& g1, const Graph& g2) {
    IsoResult result;
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return result;
    HashConstrainedSearch search(g1, g2);
    return search.run();
}

}  // namespace graphid
