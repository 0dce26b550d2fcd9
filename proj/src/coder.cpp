#include "graphid/coder.hpp"

#include <algorithm>

namespace graphid {

namespace {

bool code_less(const VertexCoder* a, const VertexCoder* b) {
    return a->code < b->code;
}

void append_label(std::vector<unsigned char>& out, const Label& label) {
    if (!label) {
        out.push_back(0x00);
        return;
    }
    out.push_back(0x01);
    std::uint64_t v = static_cast<std::uint64_t>(*label);  // two's complement
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<unsigned char>(v >> shift));
    }
}

}  // namespace

GraphCoder::GraphCoder(const Graph& g) : graph_(&g) {
    root_ = new_coder();
    root_->generation = 0;

    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        VertexCoder* child = new_coder();
        child->vertex = static_cast<VertexId>(v);
        child->creator = root_;
        child->generation = 1;
        child->subtree = static_cast<std::uint32_t>(maps_.size());

        auto map = std::make_unique<VertexMap>();
        (*map)[map_key(*child->vertex, std::nullopt)] = child;
        maps_.push_back(std::move(map));

        root_->children.push_back(child);
    }
}

VertexCoder* GraphCoder::new_coder() {
    nodes_.emplace_back();
    return &nodes_.back();
}

void GraphCoder::expand(VertexCoder& c) {
    if (c.expanded) return;

    if (!c.children.empty()) {
        // Push the frontier one level deeper. A shared child is grown by
        // its creator alone; other parents just point at it.
        for (VertexCoder* child : c.children) {
            if (child->creator == &c) expand(*child);
        }
        return;
    }

    if (!c.vertex) return;  // childless root: empty graph

    VertexMap& map = *maps_[c.subtree];
    for (EdgeId eid : graph_->incident_edges(*c.vertex)) {
        const Edge& e = graph_->edge(eid);
        VertexId neighbor = (e.source == *c.vertex) ? e.target : e.source;

        auto [it, inserted] = map.try_emplace(map_key(neighbor, eid), nullptr);
        if (inserted) {
            VertexCoder* child = new_coder();
            child->vertex = neighbor;
            child->parent_edge = eid;
            child->creator = &c;
            child->generation = c.generation + 1;
            child->subtree = c.subtree;
            it->second = child;
            c.children.push_back(child);
        } else if (it->second->generation == c.generation + 1) {
            c.children.push_back(it->second);  // shared with another parent
        }
        // Reached at an earlier generation: a cycle, contributes nothing.
    }
}

void GraphCoder::generate_code(VertexCoder& c, bool hash_labels) {
    if (!c.vertex) {
        // Root: converge the child codes structurally before the final
        // labeled pass. Labels play no part in deciding expansion.
        for (VertexCoder* child : c.children) {
            expand(*child);
            generate_code(*child, false);
        }
        while (true) {
            bool all_expanded = true;
            for (const VertexCoder* child : c.children) {
                if (!child->expanded) {
                    all_expanded = false;
                    break;
                }
            }
            if (all_expanded) break;

            std::sort(c.children.begin(), c.children.end(), code_less);

            // Find the first adjacent equal pair that still involves an
            // unexpanded coder; equal codes between two fully expanded
            // coders are genuine symmetry and stay.
            std::size_t n = c.children.size();
            std::size_t i = 0;
            bool found = false;
            for (; i + 1 < n; ++i) {
                if ((!c.children[i]->expanded || !c.children[i + 1]->expanded) &&
                    c.children[i]->code == c.children[i + 1]->code) {
                    found = true;
                    break;
                }
            }
            if (!found) break;

            std::size_t j = i + 1;
            while (j < n && c.children[j]->code == c.children[i]->code) ++j;
            for (; i < j; ++i) {
                if (!c.children[i]->expanded) {
                    expand(*c.children[i]);
                    generate_code(*c.children[i], false);
                }
            }
        }
    }

    ++pass_;
    c.seen_pass = pass_;
    recode(c, hash_labels);
}

void GraphCoder::recode(VertexCoder& c, bool hash_labels) {
    HashCode old_code = c.code;

    for (VertexCoder* child : c.children) {
        if (child->seen_pass == pass_) {
            // Second arrival inside one pass: recomputing would change
            // nothing, which by definition expands the whole subtree.
            mark_expanded(*child);
        } else {
            child->seen_pass = pass_;
            recode(*child, hash_labels);
        }
    }

    std::sort(c.children.begin(), c.children.end(), code_less);

    content_.clear();
    if (c.vertex) {
        if (hash_labels) append_label(content_, graph_->vertex(*c.vertex).label);
        if (c.parent_edge) {
            const Edge& e = graph_->edge(*c.parent_edge);
            if (hash_labels) append_label(content_, e.label);
            if (e.directed) {
                content_.push_back(e.source == *c.vertex ? 0x00 : 0x01);
            } else {
                content_.push_back(0x02);
            }
        }
    }
    for (const VertexCoder* child : c.children) {
        content_.insert(content_.end(), child->code.bytes.begin(), child->code.bytes.end());
    }

    c.code = md5_digest(content_);
    if (old_code == c.code) c.expanded = true;
}

void GraphCoder::mark_expanded(VertexCoder& c) {
    if (c.mark_pass == pass_) return;
    c.mark_pass = pass_;
    c.expanded = true;
    for (VertexCoder* child : c.children) mark_expanded(*child);
}

std::vector<HashCode> GraphCoder::child_codes() const {
    std::vector<HashCode> codes(graph_->vertex_count());
    for (const VertexCoder* child : root_->children) codes[*child->vertex] = child->code;
    return codes;
}

HashCode graph_hash(const Graph& g, bool hash_labels) {
    GraphCoder coder(g);
    coder.generate(hash_labels);
    return coder.code();
}

std::vector<HashCode> vertex_codes(const Graph& g) {
    GraphCoder coder(g);
    coder.generate(false);
    return coder.child_codes();
}

}  // namespace graphid
