#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace conngraph;

namespace {

std::vector<std::size_t> true_points(const Complex& c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size() && c[i].size() == 1; ++i) out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("degree lemma on connection graphs") {
    CHECK(zero_dim_vertices(psi(catalog::c3_boundary())) == std::vector<std::size_t>{0, 1, 2});
    CHECK(zero_dim_vertices(psi(catalog::point())) == std::vector<std::size_t>{0});
    CHECK_FALSE(degree_profile(psi(catalog::point())).delta[0].has_value());
    CHECK(zero_dim_vertices(psi(catalog::figure8())).size() == 7);
    for (const auto& [name, c] : catalog::standard_complexes()) {
        INFO(name);
        CHECK(zero_dim_vertices(psi(c)) == true_points(c));
    }
    std::mt19937 rng(101);
    for (int t = 0; t < 100; ++t) {
        const auto c = testing::random_complex(rng, 10, 3, 1 + t % 7);
        CHECK(zero_dim_vertices(psi(c)) == true_points(c));
    }
}

TEST_CASE("round trips through psi and phi") {
    for (const auto& [name, c] : catalog::standard_complexes()) {
        INFO(name);
        const auto cc = compact_labels(c);
        CHECK(reconstruct_complex(psi(c), Functor::Psi) == cc);
        CHECK(reconstruct_complex(phi(c), Functor::Phi) == cc);
    }
    std::mt19937 rng(202);
    for (int t = 0; t < 100; ++t) {
        const auto c = testing::random_complex(rng, 10, 3, 1 + t % 6);
        const auto cc = compact_labels(c);
        INFO("trial " << t);
        CHECK(reconstruct_complex(psi(c), Functor::Psi) == cc);
        CHECK(reconstruct_complex(phi(c), Functor::Phi) == cc);
        const auto r = reconstruct(psi(c));
        CHECK(r.functor == Functor::Psi);
        CHECK(psi(r.complex) == psi(c));
    }
}

TEST_CASE("reconstruction reports the set of every vertex") {
    const auto c = catalog::fig1();
    const auto r = reconstruct(psi(c));
    CHECK(r.vertex_sets == c.sets());
    const auto p = reconstruct(phi(catalog::k3_simplex()), Functor::Phi);
    CHECK(p.vertex_sets == catalog::k3_simplex().sets());
}

TEST_CASE("reconstruction is invariant under vertex relabeling") {
    const auto c = catalog::figure8();
    const auto a = psi(c).unlabeled();
    std::vector<std::size_t> p(a.order());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::mt19937 rng(9);
    std::shuffle(p.begin(), p.end(), rng);
    Graph b(a.order());
    for (auto [x, y] : a.edges()) b.add_edge(p[x], p[y]);
    const auto r = reconstruct_complex(b, Functor::Psi);
    CHECK(r.f_vector() == c.f_vector());
    CHECK(isomorphic(phi(r), phi(c)));
    CHECK(isomorphic(psi(r), a));
}

TEST_CASE("graphs that are no connection graph") {
    auto check = [](const Graph& g, std::optional<Functor> hint) {
        try {
            reconstruct(g, hint);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NotAConnectionGraph);
        }
    };
    check(Graph{}, std::nullopt);
    check(catalog::cycle(5), std::nullopt);
    check(catalog::complete(2), Functor::Psi);
    check(catalog::cycle(4), Functor::Phi);
}
