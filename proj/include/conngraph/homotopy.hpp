#pragma once

#include "conngraph/canonical.hpp"
#include "conngraph/cliques.hpp"
#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/functors.hpp"
#include "conngraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace conngraph {

/// Exact contractibility and sphere recognition on induced subgraphs of one
/// ambient graph, memoized by vertex subset.
///
/// A graph is contractible if it is K_1, or some vertex v has S(v) and G-v
/// both contractible. It is a d-sphere if it is empty (d = -1), or every unit
/// sphere is a (d-1)-sphere and G-v is contractible for some v.
class HomotopyOracle {
public:
    explicit HomotopyOracle(const Graph& g, std::size_t chi_budget = 200'000) : g_(g), chi_budget_(chi_budget) {}

    const Graph& graph() const noexcept { return g_; }

    bool contractible(const VertexSet& w) { return contractible_impl(w, false); }
    bool contractible() { return contractible(full_set(g_.order())); }
    bool contractible(const std::vector<std::size_t>& w) { return contractible(make_set(g_.order(), w)); }

    /// Unit sphere of v inside W.
    VertexSet sphere_in(std::size_t v, const VertexSet& w) const { return g_.neighbors(v) & w; }

    std::optional<int> sphere_dimension(const VertexSet& w) {
        if (auto it = sphere_memo_.find(w); it != sphere_memo_.end()) return it->second;
        std::optional<int> result = sphere_impl(w);
        sphere_memo_.emplace(w, result);
        return result;
    }
    std::optional<int> sphere_dimension() { return sphere_dimension(full_set(g_.order())); }

    std::size_t memo_size() const noexcept { return memo_.size() + sphere_memo_.size(); }

private:
    bool contractible_impl(const VertexSet& w, bool chi_is_one) {
        const std::size_t c = w.count();
        if (c == 0) return false;
        if (c == 1) return true;
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        const bool result = decide(w, chi_is_one);
        memo_.emplace(w, result);
        return result;
    }

    bool decide(const VertexSet& w, bool chi_is_one) {
        if (!is_connected(g_, w)) return false;
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (degree in W, vertex)
        for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v)) {
            const std::size_t d = (g_.neighbors(v) & w).count();
            if (d + 1 == w.count()) return true;  // cone
            order.emplace_back(d, v);
        }
        if (!chi_is_one) {
            auto chi = try_graph_euler(g_, w, chi_budget_);
            if (chi && *chi != 1) return false;
        }
        std::sort(order.begin(), order.end());
        for (auto [d, v] : order) {
            if (!contractible_impl(sphere_in(v, w), false)) continue;
            VertexSet rest = w;
            rest.reset(v);
            // removing v with contractible S(v) keeps χ, so rest has χ = 1 too
            if (contractible_impl(rest, true)) return true;
        }
        return false;
    }

    std::optional<int> sphere_impl(const VertexSet& w) {
        if (w.none()) return -1;
        std::optional<int> d;
        for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v)) {
            auto sd = sphere_dimension(sphere_in(v, w));
            if (!sd || (d && *d != *sd)) return std::nullopt;
            d = sd;
        }
        const int dim = *d + 1;
        if (auto chi = try_graph_euler(g_, w, chi_budget_); chi && *chi != 1 + (dim % 2 == 0 ? 1 : -1))
            return std::nullopt;
        for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v)) {
            VertexSet rest = w;
            rest.reset(v);
            if (contractible(rest)) return dim;
        }
        return std::nullopt;
    }

    const Graph& g_;
    std::size_t chi_budget_;
    std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
    std::unordered_map<VertexSet, std::optional<int>, VertexSetHash> sphere_memo_;
};

inline bool is_contractible(const Graph& a) { return HomotopyOracle(a).contractible(); }

/// Dimension d if A is a d-sphere, nullopt otherwise. The empty graph is the (-1)-sphere.
inline std::optional<int> is_sphere(const Graph& a) { return HomotopyOracle(a).sphere_dimension(); }

// ---------------------------------------------------------------------------
// Moves

enum class MoveKind { Contract, Expand, EdgeRefine, EdgeRemove };

inline std::string_view move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Contract: return "Contract";
        case MoveKind::Expand: return "Expand";
        case MoveKind::EdgeRefine: return "EdgeRefine";
        case MoveKind::EdgeRemove: return "EdgeRemove";
    }
    return "?";
}

inline std::optional<MoveKind> parse_move_kind(std::string_view s) {
    for (auto k : {MoveKind::Contract, MoveKind::Expand, MoveKind::EdgeRefine, MoveKind::EdgeRemove})
        if (move_kind_name(k) == s) return k;
    return std::nullopt;
}

/// One homotopy step.
///   Contract:   args {v}. Deletes v. Certificate: S(v).
///   Expand:     args W.   Appends a vertex joined to W. Certificate: W.
///   EdgeRefine: args {a,b}. Appends e joined to a, b and S(a)∩S(b), then drops
///               the edge ab. Certificate: {a,b} ∪ (S(a)∩S(b)).
///   EdgeRemove: args {a,b}. Drops ab when S(p) and S(p)-q are contractible for
///               a pivot p in {a,b}. Certificate: S(p).
/// Certificates are sorted vertex lists of the current graph.
struct Move {
    MoveKind kind = MoveKind::Contract;
    std::vector<std::size_t> args;
    std::vector<std::size_t> certificate;

    static Move contract(std::size_t v) { return {MoveKind::Contract, {v}, {}}; }
    static Move expand(std::vector<std::size_t> w) {
        std::sort(w.begin(), w.end());
        return {MoveKind::Expand, std::move(w), {}};
    }
    static Move edge_refine(std::size_t a, std::size_t b) { return {MoveKind::EdgeRefine, {a, b}, {}}; }
    static Move edge_remove(std::size_t a, std::size_t b) { return {MoveKind::EdgeRemove, {a, b}, {}}; }

    bool operator==(const Move&) const = default;
};

inline std::string to_string(const Move& m) {
    std::string s(move_kind_name(m.kind));
    s += '(';
    for (std::size_t i = 0; i < m.args.size(); ++i) s += (i ? "," : "") + std::to_string(m.args[i]);
    return s + ')';
}

namespace detail {

[[noreturn]] inline void illegal(const Move& m, const std::string& why) {
    throw Error(Errc::IllegalMove, to_string(m) + ": " + why);
}

inline std::vector<std::size_t> sphere_list(const Graph& g, std::size_t v) { return members(g.neighbors(v)); }

inline void require_edge(const Graph& g, const Move& m) {
    if (m.args.size() != 2) illegal(m, "expects two vertices");
    g.check_vertex(m.args[0]);
    g.check_vertex(m.args[1]);
    if (!g.adjacent(m.args[0], m.args[1])) illegal(m, "not an edge");
}

inline VertexSet refine_support(const Graph& g, std::size_t a, std::size_t b) {
    VertexSet w = g.neighbors(a) & g.neighbors(b);
    w.set(a);
    w.set(b);
    return w;
}

}  // namespace detail

/// Checks legality of m on g and returns it with its certificate filled in.
/// Throws IllegalMove naming the failed certificate.
inline Move certify(const Graph& g, Move m) {
    HomotopyOracle oracle(g);
    switch (m.kind) {
        case MoveKind::Contract: {
            if (m.args.size() != 1) detail::illegal(m, "expects one vertex");
            const auto v = m.args[0];
            g.check_vertex(v);
            if (g.order() == 1) detail::illegal(m, "cannot contract the last vertex");
            if (!oracle.contractible(g.neighbors(v)))
                detail::illegal(m, "S(" + std::to_string(v) + ") not contractible");
            m.certificate = detail::sphere_list(g, v);
            break;
        }
        case MoveKind::Expand: {
            std::sort(m.args.begin(), m.args.end());
            if (std::adjacent_find(m.args.begin(), m.args.end()) != m.args.end()) detail::illegal(m, "repeated vertex");
            for (auto v : m.args) g.check_vertex(v);
            if (!oracle.contractible(m.args)) detail::illegal(m, "attachment set not contractible");
            m.certificate = m.args;
            break;
        }
        case MoveKind::EdgeRefine: {
            detail::require_edge(g, m);
            const auto w = detail::refine_support(g, m.args[0], m.args[1]);
            // every step of the refinement attaches over or removes a cone, so
            // these checks only fail on a corrupt graph
            if (!oracle.contractible(w)) detail::illegal(m, "refinement support not contractible");
            m.certificate = members(w);
            break;
        }
        case MoveKind::EdgeRemove: {
            detail::require_edge(g, m);
            for (int side = 0; side < 2; ++side) {
                const auto p = m.args[side], q = m.args[1 - side];
                VertexSet s = g.neighbors(p);
                if (!oracle.contractible(s)) continue;
                s.reset(q);
                if (!oracle.contractible(s)) continue;
                m.certificate = detail::sphere_list(g, p);
                return m;
            }
            detail::illegal(m, "neither S(a), S(a)-b nor S(b), S(b)-a are both contractible");
        }
    }
    return m;
}

namespace detail {

inline Graph apply_certified(const Graph& g, const Move& m) {
    switch (m.kind) {
        case MoveKind::Contract: return g.without(m.args[0]);
        case MoveKind::Expand: {
            Graph out = g;
            out.add_vertex(make_set(g.order(), m.args));
            return out;
        }
        case MoveKind::EdgeRefine: {
            const auto a = m.args[0], b = m.args[1];
            Graph out = g;
            out.add_vertex(refine_support(g, a, b));
            out.remove_edge(a, b);
            return out;
        }
        case MoveKind::EdgeRemove: {
            Graph out = g;
            out.remove_edge(m.args[0], m.args[1]);
            return out;
        }
    }
    return g;
}

}  // namespace detail

/// Applies m to g. A certificate supplied with m must match the recomputed one,
/// so forged certificates are rejected.
inline Graph apply_move(const Graph& g, const Move& m) {
    const Move checked = certify(g, m);
    if (!m.certificate.empty() && m.certificate != checked.certificate) {
        // EdgeRemove may be certified by either endpoint
        bool other_ok = false;
        if (m.kind == MoveKind::EdgeRemove) {
            HomotopyOracle oracle(g);
            for (int side = 0; side < 2 && !other_ok; ++side) {
                const auto p = m.args[side], q = m.args[1 - side];
                if (m.certificate != detail::sphere_list(g, p)) continue;
                VertexSet s = g.neighbors(p);
                s.reset(q);
                other_ok = oracle.contractible(s);
            }
        }
        if (!other_ok) detail::illegal(m, "certificate does not match the current graph");
    }
    return detail::apply_certified(g, checked);
}

/// Sequence of moves from start to end.
struct HomotopyTrace {
    Graph start;
    std::vector<Move> moves;
    Graph end;

    /// Re-validates every move from start. Returns all intermediate graphs
    /// (start first). Throws IllegalMove on the first bad step.
    std::vector<Graph> replay() const {
        std::vector<Graph> states{start};
        for (const auto& m : moves) states.push_back(apply_move(states.back(), m));
        if (!(states.back() == end)) throw Error(Errc::IllegalMove, "replay does not reach the recorded end graph");
        return states;
    }

    bool verify() const {
        try {
            replay();
            return true;
        } catch (const Error&) {
            return false;
        }
    }
};

/// Records certified moves while tracking the current graph.
class TraceBuilder {
public:
    explicit TraceBuilder(Graph start) : current_(start) { trace_.start = std::move(start); }

    const Graph& current() const noexcept { return current_; }
    std::size_t moves() const noexcept { return trace_.moves.size(); }

    const Move& push(const Move& m) {
        Move c = certify(current_, m);
        current_ = detail::apply_certified(current_, c);
        trace_.moves.push_back(std::move(c));
        return trace_.moves.back();
    }

    HomotopyTrace finish() && {
        trace_.end = std::move(current_);
        return std::move(trace_);
    }

private:
    Graph current_;
    HomotopyTrace trace_;
};

// ---------------------------------------------------------------------------
// Trace constructions

/// Deforms ψ(G) into φ(G) by removing, for every intersecting but not nested
/// pair (y,z) in canonical order, the edge yz through EdgeRefine followed by
/// Contract of the new vertex. Requires S(y)∩S(z) to be contractible at that
/// point; otherwise throws LemmaCError(y,z).
inline HomotopyTrace psi_to_phi_trace(const Complex& g) {
    TraceBuilder tb(psi(g));
    for (std::size_t y = 0; y < g.size(); ++y)
        for (std::size_t z = y + 1; z < g.size(); ++z) {
            if (!intersects(g[y], g[z]) || is_subset(g[y], g[z])) continue;
            const Graph& cur = tb.current();
            HomotopyOracle oracle(cur);
            if (!oracle.contractible(cur.neighbors(y) & cur.neighbors(z)))
                throw LemmaCError(y, z,
                                  "S(" + to_string(g[y]) + ") ∩ S(" + to_string(g[z]) + ") is not contractible");
            tb.push(Move::edge_refine(y, z));
            tb.push(Move::contract(tb.current().order() - 1));
        }
    auto trace = std::move(tb).finish();
    if (!(trace.end == phi(g))) throw Error(Errc::IllegalMove, "edge removals did not produce φ(G)");
    trace.end.set_labels(g.sets());
    return trace;
}

/// Deforms A into the Barycentric refinement graph φ(Whitney(A)).
/// First every clique σ with |σ| ≥ 2 gets a new vertex, attached over σ and
/// the new vertices of its faces (canonical order, small cliques first). Then
/// each original edge is removed, by EdgeRemove when legal, else by EdgeRefine
/// and contraction of the helper vertex.
inline HomotopyTrace barycentric_trace(const Graph& a) {
    const Complex w = whitney_complex(a);
    const std::size_t n = a.order();
    TraceBuilder tb(a);
    // whitney labels vertex v as v+1; the Whitney index of every set doubles as its vertex id
    for (std::size_t i = n; i < w.size(); ++i) {
        std::vector<std::size_t> support;
        for (auto l : w[i]) support.push_back(l - 1);
        for (std::size_t j = n; j < i; ++j)
            if (is_subset(w[j], w[i])) support.push_back(j);
        tb.push(Move::expand(std::move(support)));
    }
    for (auto [x, y] : a.edges()) {
        try {
            tb.push(Move::edge_remove(x, y));
        } catch (const Error& e) {
            if (e.code() != Errc::IllegalMove) throw;
            tb.push(Move::edge_refine(x, y));
            tb.push(Move::contract(tb.current().order() - 1));
        }
    }
    auto trace = std::move(tb).finish();
    if (!(trace.end == phi(w))) throw Error(Errc::IllegalMove, "Barycentric trace did not reach φ");
    trace.end.set_labels(w.sets());
    return trace;
}

/// Lifts the homotopy step A → A +_C x to strong products with B: from A·B to
/// (A +_C x)·B by one Expand per vertex y_k of B, attached over
///   U_k = (C × B[y_k]) ∪ {(x, y_j) : j < k, y_j ~ y_k}
/// where B[y] is the closed neighbourhood. Throws CertificateError(k) at the
/// first U_k that is not contractible.
inline HomotopyTrace product_extension_trace(const Graph& a, const std::vector<std::size_t>& c, const Graph& b) {
    for (auto v : c) a.check_vertex(v);
    if (!HomotopyOracle(a).contractible(c))
        throw Error(Errc::IllegalMove, "attachment set is not contractible in A");
    const std::size_t m = b.order(), na = a.order();
    TraceBuilder tb(strong_product(a, b));
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<std::size_t> u;
        for (auto ai : c)
            for (std::size_t j = 0; j < m; ++j)
                if (j == k || b.adjacent(j, k)) u.push_back(ai * m + j);
        for (std::size_t j = 0; j < k; ++j)
            if (b.adjacent(j, k)) u.push_back(na * m + j);
        try {
            tb.push(Move::expand(std::move(u)));
        } catch (const Error& e) {
            if (e.code() != Errc::IllegalMove) throw;
            throw CertificateError(k, "U_" + std::to_string(k) + " is not contractible");
        }
    }
    auto trace = std::move(tb).finish();
    Graph ext = a;
    ext.add_vertex(make_set(na, c));
    if (!(trace.end == strong_product(ext, b))) throw Error(Errc::IllegalMove, "product extension mismatch");
    return trace;
}

// ---------------------------------------------------------------------------
// Search

/// Connected vertex subsets of size lo..hi, each reported once as a sorted list.
template <class F>
void for_each_connected_subset(const Graph& g, std::size_t lo, std::size_t hi, F&& f) {
    const std::size_t n = g.order();
    std::vector<std::size_t> cur;
    // grow from the smallest member; the frontier excludes vertices already rejected
    auto grow = [&](auto&& self, VertexSet inside, VertexSet frontier, VertexSet banned) -> bool {
        if (cur.size() >= lo) {
            auto sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            if (!f(static_cast<const std::vector<std::size_t>&>(sorted))) return false;
        }
        if (cur.size() == hi) return true;
        VertexSet options = frontier - banned;
        for (auto v = options.find_first(); v != VertexSet::npos; v = options.find_next(v)) {
            VertexSet in2 = inside;
            in2.set(v);
            VertexSet fr2 = (frontier | g.neighbors(v)) - in2;
            cur.push_back(v);
            if (!self(self, in2, fr2, banned)) return false;
            cur.pop_back();
            banned.set(v);
        }
        return true;
    };
    for (std::size_t s = 0; s < n; ++s) {
        VertexSet inside(n), banned(n);
        inside.set(s);
        for (std::size_t t = 0; t <= s; ++t) banned.set(t);
        cur = {s};
        if (!grow(grow, inside, g.neighbors(s) - banned, banned)) return;
    }
}

/// Legal moves of A: all Contract, EdgeRemove and EdgeRefine moves plus Expand
/// over connected contractible sets of size 1..max_expand.
inline std::vector<Move> legal_moves(const Graph& a, std::size_t max_expand = 3) {
    std::vector<Move> out;
    HomotopyOracle oracle(a);
    if (a.order() > 1)
        for (std::size_t v = 0; v < a.order(); ++v)
            if (oracle.contractible(a.neighbors(v))) out.push_back({MoveKind::Contract, {v}, members(a.neighbors(v))});
    for (auto [x, y] : a.edges()) {
        for (auto [p, q] : {Edge{x, y}, Edge{y, x}}) {
            VertexSet s = a.neighbors(p);
            if (!oracle.contractible(s)) continue;
            s.reset(q);
            if (!oracle.contractible(s)) continue;
            out.push_back({MoveKind::EdgeRemove, {x, y}, members(a.neighbors(p))});
            break;
        }
    }
    for (auto [x, y] : a.edges()) out.push_back({MoveKind::EdgeRefine, {x, y}, members(detail::refine_support(a, x, y))});
    for_each_connected_subset(a, 1, max_expand, [&](const std::vector<std::size_t>& w) {
        if (oracle.contractible(w)) out.push_back({MoveKind::Expand, w, w});
        return true;
    });
    return out;
}

struct ReduceBudget {
    std::size_t max_moves = 10'000;
    std::size_t max_vertices = 64;
    std::size_t max_expansions = 2;   // expansion rounds in the search
    std::size_t max_states = 2'000;   // distinct graphs explored
    std::size_t max_support = 4;      // largest attachment set tried
};

enum class ReduceStatus { Proven, Unknown };

struct ReduceResult {
    Graph reduced;
    HomotopyTrace trace;
    ReduceStatus status = ReduceStatus::Unknown;
};

namespace detail {

/// Contracts lowest-degree legal vertices (ties by id) until none is left.
inline void greedy_contract(TraceBuilder& tb, std::size_t max_moves) {
    while (tb.current().order() > 1) {
        const Graph& g = tb.current();
        HomotopyOracle oracle(g);
        std::optional<std::size_t> best;
        for (std::size_t v = 0; v < g.order(); ++v) {
            if (best && g.degree(v) >= g.degree(*best)) continue;
            if (oracle.contractible(g.neighbors(v))) best = v;
        }
        if (!best || tb.moves() >= max_moves) return;
        tb.push(Move::contract(*best));
    }
}

}  // namespace detail

/// Greedy contraction, then a breadth-first search over Expand moves (attached
/// to connected contractible sets of at most max_support vertices) each
/// followed by greedy contraction, deduplicated by canonical code. Proven
/// means the trace ends in K_1; otherwise the greedy local minimum is returned.
inline ReduceResult homotopy_reduce(const Graph& a, const ReduceBudget& budget = {}) {
    struct State {
        HomotopyTrace trace;
        std::size_t expansions;
    };
    auto finish = [](HomotopyTrace t, bool proven) {
        ReduceResult r;
        r.reduced = t.end;
        r.trace = std::move(t);
        r.status = proven ? ReduceStatus::Proven : ReduceStatus::Unknown;
        return r;
    };

    TraceBuilder tb(a);
    if (a.order() > 0) detail::greedy_contract(tb, budget.max_moves);
    HomotopyTrace first = std::move(tb).finish();
    if (first.end.order() == 1) return finish(std::move(first), true);
    if (a.order() == 0 || budget.max_expansions == 0) return finish(std::move(first), false);

    std::unordered_set<std::string> seen;
    auto key = [](const Graph& g) { return g.order() <= kCanonicalCap ? canonical_code(g) : std::string(); };
    seen.insert(key(first.end));
    std::deque<State> queue;
    queue.push_back({first, 0});

    while (!queue.empty() && seen.size() < budget.max_states) {
        State s = std::move(queue.front());
        queue.pop_front();
        if (s.expansions >= budget.max_expansions) continue;
        const Graph& g = s.trace.end;
        if (g.order() + 1 > budget.max_vertices || g.order() + 1 > kCanonicalCap) continue;
        HomotopyOracle oracle(g);
        std::optional<ReduceResult> found;
        for_each_connected_subset(g, 2, budget.max_support, [&](const std::vector<std::size_t>& w) {
            if (seen.size() >= budget.max_states) return false;
            if (!oracle.contractible(w)) return true;
            TraceBuilder next(g);
            next.push(Move::expand(w));
            detail::greedy_contract(next, budget.max_moves);
            HomotopyTrace tail = std::move(next).finish();
            if (!seen.insert(key(tail.end)).second) return true;
            HomotopyTrace joined = s.trace;
            joined.moves.insert(joined.moves.end(), tail.moves.begin(), tail.moves.end());
            joined.end = tail.end;
            if (joined.moves.size() > budget.max_moves) return true;
            if (joined.end.order() == 1) {
                found = finish(std::move(joined), true);
                return false;
            }
            queue.push_back({std::move(joined), s.expansions + 1});
            return true;
        });
        if (found) return std::move(*found);
    }
    return finish(std::move(first), false);
}

}  // namespace conngraph
