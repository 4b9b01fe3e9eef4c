#pragma once

#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace conngraph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph on the dense vertex ids 0..n-1. Adjacency is stored as
/// one bitset per vertex. Graphs built from a Complex carry a Labeling: the
/// originating set of every vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }

    std::size_t order() const noexcept { return adj_.size(); }
    bool empty() const noexcept { return adj_.empty(); }

    std::size_t size() const {
        std::size_t m = 0;
        for (const auto& row : adj_) m += row.count();
        return m / 2;
    }

    bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
    const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }

    void add_edge(std::size_t a, std::size_t b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw Error(Errc::InvalidInput, "self-loop at " + std::to_string(a));
        adj_[a].set(b);
        adj_[b].set(a);
    }

    void remove_edge(std::size_t a, std::size_t b) {
        check_vertex(a);
        check_vertex(b);
        adj_[a].reset(b);
        adj_[b].reset(a);
    }

    /// Appends a vertex joined to `nbrs` (a set over the current vertices); returns its id.
    std::size_t add_vertex(const VertexSet& nbrs) {
        const std::size_t v = adj_.size();
        for (auto& row : adj_) row.resize(v + 1);
        VertexSet row = nbrs;
        row.resize(v + 1);
        adj_.push_back(row);
        for_each_member(nbrs, [&](std::size_t u) { adj_[u].set(v); });
        if (!labels_.empty()) labels_.emplace_back();
        return v;
    }

    /// Graph with vertex v deleted; higher ids shift down by one.
    Graph without(std::size_t v) const {
        check_vertex(v);
        VertexSet keep = full_set(order());
        keep.reset(v);
        return induced(keep);
    }

    /// Subgraph induced on W; vertices keep their relative order.
    Graph induced(const VertexSet& w) const {
        if (w.size() != order()) throw Error(Errc::UnknownVertex, "vertex set size does not match graph");
        const auto ids = members(w);
        Graph g(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (adj_[ids[i]].test(ids[j])) {
                    g.adj_[i].set(j);
                    g.adj_[j].set(i);
                }
        if (!labels_.empty()) {
            g.labels_.reserve(ids.size());
            for (auto v : ids) g.labels_.push_back(labels_[v]);
        }
        return g;
    }

    Graph induced(const std::vector<std::size_t>& w) const {
        VertexSet s(order());
        for (auto v : w) {
            check_vertex(v);
            s.set(v);
        }
        return induced(s);
    }

    Graph unit_sphere(std::size_t v) const {
        check_vertex(v);
        return induced(adj_[v]);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t a = 0; a < order(); ++a)
            for (auto b = adj_[a].find_next(a); b != VertexSet::npos; b = adj_[a].find_next(b)) out.emplace_back(a, b);
        return out;
    }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(order());
        for (std::size_t v = 0; v < order(); ++v) d[v] = degree(v);
        return d;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<Simplex>& labels() const noexcept { return labels_; }
    const Simplex& label(std::size_t v) const { return labels_.at(v); }

    void set_labels(std::vector<Simplex> labels) {
        if (!labels.empty() && labels.size() != order())
            throw Error(Errc::InvalidInput, "labeling size does not match vertex count");
        labels_ = std::move(labels);
    }

    Graph unlabeled() const {
        Graph g = *this;
        g.labels_.clear();
        return g;
    }

    /// Labeled identity of the vertex/edge structure. Labels are not compared.
    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

    void check_vertex(std::size_t v) const {
        if (v >= order())
            throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in graph of order " +
                                                 std::to_string(order()));
    }

private:
    std::vector<VertexSet> adj_;
    std::vector<Simplex> labels_;
};

inline Graph unit_sphere(const Graph& a, std::size_t v) { return a.unit_sphere(v); }
inline Graph induced(const Graph& a, const VertexSet& w) { return a.induced(w); }

/// Vertices reachable from the first member of W inside W.
inline bool is_connected(const Graph& g, const VertexSet& w) {
    auto start = w.find_first();
    if (start == VertexSet::npos) return true;
    VertexSet seen(w.size());
    VertexSet frontier(w.size());
    frontier.set(start);
    seen.set(start);
    while (frontier.any()) {
        VertexSet next(w.size());
        for_each_member(frontier, [&](std::size_t v) { next |= g.neighbors(v); });
        next &= w;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == w;
}

inline bool is_connected(const Graph& g) { return is_connected(g, full_set(g.order())); }

}  // namespace conngraph
