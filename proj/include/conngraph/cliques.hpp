#pragma once

#include "conngraph/complex.hpp"
#include "conngraph/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace conngraph {

/// Default cap on the number of cliques an enumeration may visit.
inline constexpr std::size_t kDefaultCliqueBudget = 20'000'000;

/// Calls f(clique) for every non-empty clique of the subgraph induced on W.
/// Cliques are sorted vertex lists; each is visited exactly once. Returns false
/// if f asked to stop by returning false.
template <class F>
bool for_each_clique(const Graph& g, const VertexSet& w, F&& f) {
    std::vector<std::size_t> clique;
    auto extend = [&](auto&& self, const VertexSet& cand) -> bool {
        // only extend with larger ids so each clique is produced once
        VertexSet rest = cand;
        for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
            rest.reset(v);
            clique.push_back(v);
            if (!f(static_cast<const std::vector<std::size_t>&>(clique))) return false;
            VertexSet next = rest & g.neighbors(v);
            if (next.any() && !self(self, next)) return false;
            clique.pop_back();
        }
        return true;
    };
    return extend(extend, w);
}

/// Clique counts by cardinality on W: counts[k] = number of (k+1)-cliques.
inline std::vector<std::size_t> clique_counts(const Graph& g, const VertexSet& w,
                                              std::size_t budget = kDefaultCliqueBudget) {
    std::vector<std::size_t> counts;
    std::size_t total = 0;
    const bool done = for_each_clique(g, w, [&](const std::vector<std::size_t>& c) {
        if (counts.size() < c.size()) counts.resize(c.size(), 0);
        ++counts[c.size() - 1];
        return ++total <= budget;
    });
    if (!done) throw Error(Errc::SizeLimit, "clique enumeration exceeded budget of " + std::to_string(budget));
    return counts;
}

inline std::vector<std::size_t> clique_counts(const Graph& g, std::size_t budget = kDefaultCliqueBudget) {
    return clique_counts(g, full_set(g.order()), budget);
}

inline long long alternating_sum(const std::vector<std::size_t>& counts) {
    long long chi = 0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
    return chi;
}

/// Euler characteristic of the clique complex of the subgraph induced on W.
inline long long graph_euler(const Graph& g, const VertexSet& w, std::size_t budget = kDefaultCliqueBudget) {
    return alternating_sum(clique_counts(g, w, budget));
}

inline long long graph_euler(const Graph& g, std::size_t budget = kDefaultCliqueBudget) {
    return graph_euler(g, full_set(g.order()), budget);
}

/// χ on W, or nullopt when the enumeration would exceed `budget` cliques.
inline std::optional<long long> try_graph_euler(const Graph& g, const VertexSet& w, std::size_t budget) {
    long long chi = 0;
    std::size_t total = 0;
    const bool done = for_each_clique(g, w, [&](const std::vector<std::size_t>& c) {
        chi += (c.size() % 2 == 1) ? 1 : -1;
        return ++total <= budget;
    });
    if (!done) return std::nullopt;
    return chi;
}

inline FVector graph_f_vector(const Graph& g) { return FVector{clique_counts(g)}; }

/// The Whitney (clique) complex. Graph vertex v becomes the label v+1.
inline Complex whitney_complex(const Graph& g) {
    std::vector<Simplex> sets;
    for_each_clique(g, full_set(g.order()), [&](const std::vector<std::size_t>& c) {
        if (c.size() > kMaxSetSize)
            throw Error(Errc::SizeLimit, "clique of size " + std::to_string(c.size()) + " exceeds cardinality cap");
        Simplex s;
        s.reserve(c.size());
        for (auto v : c) s.push_back(static_cast<Label>(v + 1));
        sets.push_back(std::move(s));
        return true;
    });
    return Complex::validate(std::move(sets));
}

}  // namespace conngraph
