#pragma once

#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/functors.hpp"
#include "conngraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace conngraph {

/// d(x) and δ(x) = min over neighbours y of d(y); δ is nullopt (∞) for isolated x.
struct DegreeProfile {
    std::vector<std::size_t> d;
    std::vector<std::optional<std::size_t>> delta;
};

inline DegreeProfile degree_profile(const Graph& a) {
    DegreeProfile p;
    p.d = a.degrees();
    p.delta.resize(a.order());
    for (std::size_t x = 0; x < a.order(); ++x)
        for_each_member(a.neighbors(x), [&](std::size_t y) {
            if (!p.delta[x] || p.d[y] < *p.delta[x]) p.delta[x] = p.d[y];
        });
    return p;
}

/// Strict local minima of the degree: {x : d(x) < δ(x)}. On ψ(G) these are
/// exactly the 0-dimensional sets.
inline std::vector<std::size_t> zero_dim_vertices(const Graph& a) {
    const auto p = degree_profile(a);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < a.order(); ++x)
        if (!p.delta[x] || p.d[x] < *p.delta[x]) out.push_back(x);
    return out;
}

enum class Functor { Psi, Phi };

inline std::string_view functor_name(Functor f) { return f == Functor::Psi ? "psi" : "phi"; }

struct Reconstruction {
    Complex complex;
    std::vector<Simplex> vertex_sets;  // the set represented by each graph vertex
    Functor functor = Functor::Psi;
};

namespace detail {

/// Sets spanned by the chosen 0-dimensional vertices; nullopt if the family is
/// not a complex whose ψ or φ is exactly `a` under this vertex assignment.
inline std::optional<Reconstruction> try_points(const Graph& a, const std::vector<std::size_t>& zero, Functor f) {
    const std::size_t n = a.order();
    std::vector<Simplex> sets(n);
    for (std::size_t i = 0; i < zero.size(); ++i) {
        const auto z = zero[i];
        const auto label = static_cast<Label>(i + 1);
        sets[z].push_back(label);
        for_each_member(a.neighbors(z), [&](std::size_t x) { sets[x].push_back(label); });
    }
    for (const auto& s : sets)
        if (s.empty() || s.size() > kMaxSetSize) return std::nullopt;
    Complex c;
    try {
        c = Complex::validate(sets);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (c.size() != n) return std::nullopt;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const bool rel = f == Functor::Psi ? intersects(sets[x], sets[y])
                                               : (is_subset(sets[x], sets[y]) || is_subset(sets[y], sets[x]));
            if (rel != a.adjacent(x, y)) return std::nullopt;
        }
    return Reconstruction{std::move(c), std::move(sets), f};
}

inline std::vector<std::vector<std::size_t>> components(const Graph& a) {
    std::vector<std::vector<std::size_t>> out;
    VertexSet seen(a.order());
    for (std::size_t s = 0; s < a.order(); ++s) {
        if (seen.test(s)) continue;
        std::vector<std::size_t> comp{s};
        seen.set(s);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for_each_member(a.neighbors(comp[i]), [&](std::size_t y) {
                if (!seen.test(y)) {
                    seen.set(y);
                    comp.push_back(y);
                }
            });
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Minimal elements for every transitive orientation of a connected
/// comparability graph, enumerated over its implication classes.
class OrientationSearch {
public:
    explicit OrientationSearch(const Graph& g, std::size_t max_classes = 20) : g_(g), n_(g.order()) {
        edge_id_.assign(n_ * n_, npos);
        for (auto [u, v] : g.edges()) {
            edge_id_[u * n_ + v] = edge_id_[v * n_ + u] = ends_.size();
            ends_.push_back({u, v});
        }
        parent_.resize(2 * ends_.size());
        std::iota(parent_.begin(), parent_.end(), 0);
        // u→v and u→w are forced together when v and w are not adjacent
        for (std::size_t x = 0; x < n_; ++x) {
            const auto nb = members(g.neighbors(x));
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!g.adjacent(nb[i], nb[j])) {
                        unite(arc(x, nb[i]), arc(x, nb[j]));
                        unite(arc(nb[i], x), arc(nb[j], x));
                    }
        }
        std::map<std::size_t, std::size_t> index;
        for (std::size_t e = 0; e < ends_.size(); ++e) {
            const auto fwd = find(2 * e), back = find(2 * e + 1);
            if (fwd == back) {
                comparability_ = false;
                return;
            }
            if (!index.count(fwd) && !index.count(back)) {
                index[fwd] = classes_.size();
                classes_.push_back(fwd);
            }
        }
        if (classes_.size() > max_classes)
            throw Error(Errc::SizeLimit, std::to_string(classes_.size()) + " implication classes exceed the cap");
        class_of_.resize(2 * ends_.size());
        for (std::size_t a = 0; a < 2 * ends_.size(); ++a) {
            const auto r = find(a);
            const auto it = index.find(r);
            // the arc's reverse owns the class index otherwise
            class_of_[a] = it != index.end() ? std::pair{it->second, true} : std::pair{index.at(find(a ^ 1)), false};
        }
    }

    bool comparability() const noexcept { return comparability_; }

    template <class F>
    void for_each_source_set(F&& f) const {
        if (!comparability_) return;
        const std::size_t k = classes_.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::size_t> sources;
            for (std::size_t v = 0; v < n_; ++v) {
                bool incoming = false;
                for_each_member(g_.neighbors(v), [&](std::size_t u) {
                    // arc u→v points up if its class orientation bit agrees
                    const auto [c, primary] = class_of_[arc(u, v)];
                    if (((mask >> c) & 1) == (primary ? 0u : 1u)) incoming = true;
                });
                if (!incoming) sources.push_back(v);
            }
            if (!f(sources)) return;
        }
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t arc(std::size_t u, std::size_t v) const {
        const auto e = edge_id_[u * n_ + v];
        return 2 * e + (ends_[e].first == u ? 0 : 1);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::size_t> edge_id_;
    std::vector<Edge> ends_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> classes_;
    std::vector<std::pair<std::size_t, bool>> class_of_;
    bool comparability_ = true;
};

/// φ reconstruction when the degree lemma does not single out the points:
/// per component, the lexicographically smallest valid set of minimal elements.
inline std::optional<Reconstruction> phi_by_orientation(const Graph& a) {
    std::vector<std::size_t> zero;
    for (const auto& comp : components(a)) {
        const Graph sub = a.induced(comp);
        OrientationSearch search(sub);
        std::optional<std::vector<std::size_t>> best;
        search.for_each_source_set([&](const std::vector<std::size_t>& z) {
            if ((!best || z < *best) && try_points(sub, z, Functor::Phi)) best = z;
            return true;
        });
        if (!best) return std::nullopt;
        for (auto v : *best) zero.push_back(comp[v]);
    }
    std::sort(zero.begin(), zero.end());
    return try_points(a, zero, Functor::Phi);
}

}  // namespace detail

/// Recovers G from A = ψ(G) or A = φ(G). The 0-dimensional sets of G are
/// labelled 1..k in increasing vertex id; every other vertex x becomes the set
/// of points adjacent to it. The result is checked by regenerating A exactly.
/// Without a hint ψ is tried first.
inline Reconstruction reconstruct(const Graph& a, std::optional<Functor> hint = std::nullopt) {
    if (a.empty()) throw Error(Errc::NotAConnectionGraph, "empty graph");
    const auto zero = zero_dim_vertices(a);
    if (hint != Functor::Phi)
        if (auto r = detail::try_points(a, zero, Functor::Psi)) return std::move(*r);
    if (hint != Functor::Psi) {
        if (auto r = detail::try_points(a, zero, Functor::Phi)) return std::move(*r);
        // the degree lemma can misclassify on φ, e.g. the middle point of a path
        if (auto r = detail::phi_by_orientation(a)) return std::move(*r);
    }
    throw Error(Errc::NotAConnectionGraph,
                std::string("graph is not ") + (hint ? std::string(functor_name(*hint)) : "psi or phi") +
                    " of a simplicial complex");
}

inline Complex reconstruct_complex(const Graph& a, std::optional<Functor> hint = std::nullopt) {
    return reconstruct(a, hint).complex;
}

/// Relabels the vertices of G to 1..k preserving their order.
inline Complex compact_labels(const Complex& g) {
    const auto verts = g.vertices();
    return g.relabeled([&](Label l) {
        return static_cast<Label>(std::lower_bound(verts.begin(), verts.end(), l) - verts.begin() + 1);
    });
}

}  // namespace conngraph
