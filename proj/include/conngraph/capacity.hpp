#pragma once

#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/functors.hpp"
#include "conngraph/graph.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace conngraph {

inline constexpr std::size_t kIndependenceCap = 200;

struct IndependentSet {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // sorted
};

namespace detail {

/// Maximum clique by branch and bound with a greedy colouring bound.
class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    std::vector<std::size_t> run() {
        std::vector<std::size_t> order(g_.order());
        std::iota(order.begin(), order.end(), 0);
        // highest degree first, ties by id
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return g_.degree(a) > g_.degree(b); });
        std::vector<std::size_t> current;
        expand(current, order);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // colours candidates greedily; returns them ordered by colour with the colour bounds
    void colour(const std::vector<std::size_t>& cand, std::vector<std::size_t>& out,
                std::vector<std::size_t>& bound) const {
        std::vector<std::vector<std::size_t>> classes;
        for (auto v : cand) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool clash = false;
                for (auto u : classes[k])
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        out.clear();
        bound.clear();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (auto v : classes[k]) {
                out.push_back(v);
                bound.push_back(k + 1);
            }
    }

    void expand(std::vector<std::size_t>& current, const std::vector<std::size_t>& cand) {
        std::vector<std::size_t> ordered, bound;
        colour(cand, ordered, bound);
        for (std::size_t i = ordered.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size()) return;
            const auto v = ordered[i];
            current.push_back(v);
            std::vector<std::size_t> next;
            // vertices above i were already tried as members
            for (std::size_t j = 0; j < i; ++j)
                if (g_.adjacent(v, ordered[j])) next.push_back(ordered[j]);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
        }
    }

    const Graph& g_;
    std::vector<std::size_t> best_;
};

}  // namespace detail

/// Exact independence number with one maximum independent set.
inline IndependentSet independence_number(const Graph& a, std::size_t cap = kIndependenceCap) {
    if (a.order() > cap)
        throw Error(Errc::SizeLimit, "graph of order " + std::to_string(a.order()) + " exceeds independence cap");
    if (a.empty()) return {};
    auto w = detail::MaxClique(complement(a)).run();
    return {w.size(), std::move(w)};
}

/// A^n under the strong product.
inline Graph strong_power(const Graph& a, std::size_t n) {
    if (n == 0) return Graph(1);
    Graph p = a;
    for (std::size_t i = 1; i < n; ++i) p = strong_product(p, a);
    return p;
}

struct PowerBound {
    std::size_t power = 1;
    std::size_t independence = 0;  // i(A^n)
    double value = 0;              // i(A^n)^(1/n), a lower bound for Θ(A)
};

inline PowerBound shannon_lower(const Graph& a, std::size_t n, std::size_t cap = kIndependenceCap) {
    if (n == 0) throw Error(Errc::InvalidInput, "power must be positive");
    const auto i = independence_number(strong_power(a, n), cap).size;
    return {n, i, std::pow(static_cast<double>(i), 1.0 / static_cast<double>(n))};
}

using Rational = boost::rational<long long>;

/// Orthonormal labelling u(x) = 1_x/√|x| of ψ(G) in R^{f_0} with stick
/// c = (1,…,1)/√f_0. Vectors are kept as 0/1 indicators with their squared
/// norms so every quantity below is exact.
struct UmbrellaRep {
    std::vector<Label> coordinates;             // the points of G, one axis each
    std::vector<std::vector<int>> indicators;   // per set, over coordinates
    std::vector<Rational> cos2;                 // (u(x)·c)^2 = |x|/f_0
    Rational bound{0};                          // max_x (u(x)·c)^{-2}
    bool orthogonal = false;                    // u(x)·u(y) = 0 for every non-edge of ψ(G)
    bool unit = false;                          // ‖u(x)‖ = 1 for all x
};

inline UmbrellaRep lovasz_umbrella(const Complex& g) {
    UmbrellaRep r;
    r.coordinates = g.vertices();
    const auto f0 = static_cast<long long>(r.coordinates.size());
    if (f0 == 0) return r;
    r.indicators.assign(g.size(), std::vector<int>(r.coordinates.size(), 0));
    r.unit = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        long long dot_c = 0, norm = 0;
        for (auto l : g[i]) {
            const auto j = static_cast<std::size_t>(std::lower_bound(r.coordinates.begin(), r.coordinates.end(), l) -
                                                    r.coordinates.begin());
            r.indicators[i][j] = 1;
        }
        for (auto x : r.indicators[i]) {
            dot_c += x;
            norm += x * x;
        }
        // u = 1_x/√|x|, c = 1/√f0: (u·c)^2 = dot_c^2 / (|x| f0), ‖u‖^2 = norm/|x|
        const auto size = static_cast<long long>(g[i].size());
        if (Rational(norm, size) != Rational(1)) r.unit = false;
        const Rational c2(dot_c * dot_c, size * f0);
        r.cos2.push_back(c2);
        r.bound = std::max(r.bound, Rational(1) / c2);
    }
    r.orthogonal = true;
    for (std::size_t i = 0; i < g.size() && r.orthogonal; ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (intersects(g[i], g[j])) continue;
            long long dot = 0;
            for (std::size_t k = 0; k < r.coordinates.size(); ++k) dot += r.indicators[i][k] * r.indicators[j][k];
            if (dot != 0) {
                r.orthogonal = false;
                break;
            }
        }
    return r;
}

/// Certified interval for Θ(ψ(G)): lower from i(ψ(G)), upper from the umbrella.
struct CapacityCertificate {
    std::size_t f0 = 0;
    IndependentSet independence;
    Rational umbrella_bound{0};
    bool certified = false;  // lower == upper
    std::size_t theta = 0;   // valid when certified
};

inline CapacityCertificate certify_capacity(const Complex& g, std::size_t cap = kIndependenceCap) {
    CapacityCertificate c;
    c.f0 = g.f_vector()[0];
    c.independence = independence_number(psi(g), cap);
    const auto u = lovasz_umbrella(g);
    c.umbrella_bound = u.bound;
    c.certified = u.orthogonal && u.unit && Rational(static_cast<long long>(c.independence.size)) == u.bound;
    if (c.certified) c.theta = c.independence.size;
    return c;
}

struct PhiCapacity {
    std::size_t value = 0;
    std::vector<std::size_t> witness;  // vertices of φ(G): the points or the edges of G
};

/// max(f_0, f_1) for one-dimensional G, witnessed by an independent set of φ(G).
inline PhiCapacity phi_capacity_1d(const Complex& g) {
    if (g.dimension() > 1) throw Error(Errc::NotOneDimensional, "complex has dimension " + std::to_string(g.dimension()));
    const auto f = g.f_vector();
    const std::size_t f0 = f[0], f1 = f[1];
    PhiCapacity r;
    r.value = std::max(f0, f1);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i].size() == (f0 >= f1 ? 1u : 2u)) r.witness.push_back(i);
    return r;
}

// ---------------------------------------------------------------------------
// Connection Laplacian

using IntMatrix = std::vector<std::vector<long long>>;

inline constexpr std::size_t kDenseCap = 2000;

/// L = I + A(ψ(G)).
inline IntMatrix connection_laplacian(const Complex& g, std::size_t cap = kDenseCap) {
    if (g.size() > cap) throw Error(Errc::SizeLimit, "complex too large for dense linear algebra");
    IntMatrix l(g.size(), std::vector<long long>(g.size(), 0));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) l[i][j] = (i == j || intersects(g[i], g[j])) ? 1 : 0;
    return l;
}

inline IntMatrix graph_plus_identity(const Graph& a) {
    IntMatrix l(a.order(), std::vector<long long>(a.order(), 0));
    for (std::size_t i = 0; i < a.order(); ++i) {
        l[i][i] = 1;
        for_each_member(a.neighbors(i), [&](std::size_t j) { l[i][j] = 1; });
    }
    return l;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline boost::multiprecision::mpz_int determinant(const IntMatrix& m) {
    using Z = boost::multiprecision::mpz_int;
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Z>> a(n, std::vector<Z>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Z sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
    Eigen::MatrixXd e(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m[i][j]);
    return e;
}

/// Eigenvalues of a symmetric integer matrix, ascending.
inline std::vector<double> eigenvalues(const IntMatrix& m) {
    if (m.empty()) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

struct LaplacianReport {
    long long determinant = 0;
    std::size_t positive = 0;       // eigenvalues > 0
    std::size_t even_sets = 0;      // sets of even dimension (odd cardinality)
    bool unimodular() const { return determinant == 1 || determinant == -1; }
    bool signature_matches() const { return positive == even_sets; }
};

inline LaplacianReport laplacian_report(const Complex& g) {
    const auto l = connection_laplacian(g);
    LaplacianReport r;
    const auto det = determinant(l);
    r.determinant = (det > 1 || det < -1) ? 0 : det.convert_to<long long>();
    // unimodular L has no zero eigenvalue, so the sign split is stable under rounding
    for (double ev : eigenvalues(l))
        if (ev > 0) ++r.positive;
    for (const auto& s : g)
        if (s.size() % 2 == 1) ++r.even_sets;
    return r;
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), m = b.size();
    IntMatrix k(n * m, std::vector<long long>(n * m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q) k[i * m + p][j * m + q] = a[i][j] * b[p][q];
    return k;
}

struct SpectrumProduct {
    bool tensor_identity = false;  // L(G×H) = L(G)⊗L(H) entrywise
    double max_deviation = 0;      // between sorted spectra
    bool within(double tol) const { return tensor_identity && max_deviation <= tol; }
};

/// Compares L(G×H), built from ψ on the cell product, with L(G)⊗L(H).
inline SpectrumProduct spectrum_product_check(const Complex& g, const Complex& h) {
    if (g.size() * h.size() > kDenseCap) throw Error(Errc::SizeLimit, "product too large for dense linear algebra");
    const auto lg = connection_laplacian(g), lh = connection_laplacian(h);
    const auto lp = graph_plus_identity(psi_product(g, h));
    SpectrumProduct r;
    r.tensor_identity = lp == kronecker(lg, lh);
    const auto eg = eigenvalues(lg), eh = eigenvalues(lh);
    std::vector<double> expected;
    for (double a : eg)
        for (double b : eh) expected.push_back(a * b);
    std::sort(expected.begin(), expected.end());
    const auto actual = eigenvalues(lp);
    for (std::size_t i = 0; i < actual.size(); ++i)
        r.max_deviation = std::max(r.max_deviation, std::abs(actual[i] - expected[i]));
    return r;
}

struct CapacityRing {
    std::size_t sum_independence = 0, sum_expected = 0;
    std::size_t product_independence = 0, product_expected = 0;
    bool umbrellas_match = false;  // both umbrella bounds equal their f_0
    bool holds() const {
        return sum_independence == sum_expected && product_independence == product_expected && umbrellas_match;
    }
};

inline CapacityRing capacity_ring_check(const Complex& g, const Complex& h, std::size_t cap = kIndependenceCap) {
    const auto pg = psi(g), ph = psi(h);
    const auto f0g = g.f_vector()[0], f0h = h.f_vector()[0];
    CapacityRing r;
    r.sum_expected = f0g + f0h;
    r.product_expected = f0g * f0h;
    r.sum_independence = independence_number(disjoint_union(pg, ph), cap).size;
    r.product_independence = independence_number(strong_product(pg, ph), cap).size;
    const auto ug = lovasz_umbrella(g), uh = lovasz_umbrella(h);
    r.umbrellas_match = ug.bound == Rational(static_cast<long long>(f0g)) &&
                        uh.bound == Rational(static_cast<long long>(f0h)) && ug.orthogonal && uh.orthogonal;
    return r;
}

}  // namespace conngraph
