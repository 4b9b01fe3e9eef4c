#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace conngraph;

TEST_CASE("independence number matches brute force") {
    std::mt19937 rng(53);
    for (int t = 0; t < 60; ++t) {
        const auto g = testing::random_graph(rng, 4 + t % 15, 0.35);
        const auto r = independence_number(g);
        CHECK(r.size == testing::brute_independence(g));
        CHECK(r.witness.size() == r.size);
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            for (std::size_t j = i + 1; j < r.witness.size(); ++j) CHECK_FALSE(g.adjacent(r.witness[i], r.witness[j]));
    }
    CHECK(independence_number(Graph{}).size == 0);
    CHECK_THROWS_AS(independence_number(Graph(kIndependenceCap + 1)), Error);
}

TEST_CASE("strong powers") {
    CHECK(shannon_lower(catalog::complete(1), 3).independence == 1);
    const auto c5 = shannon_lower(catalog::cycle(5), 2);
    CHECK(c5.independence == 5);
    CHECK(c5.value == Catch::Approx(std::sqrt(5.0)));
    const auto f1 = psi(catalog::fig1());
    CHECK(shannon_lower(f1, 2).independence == 25);
}

TEST_CASE("independence of psi equals f0 and the umbrella certifies it") {
    for (const auto& [name, c] : catalog::standard_complexes()) {
        if (c.size() > kIndependenceCap) continue;
        INFO(name);
        const auto cert = certify_capacity(c);
        CHECK(cert.independence.size == cert.f0);
        CHECK(cert.umbrella_bound == Rational(static_cast<long long>(cert.f0)));
        CHECK(cert.certified);
    }
    CHECK(certify_capacity(catalog::fig1()).theta == 5);
    CHECK(certify_capacity(catalog::figure8()).theta == 7);
    CHECK(certify_capacity(catalog::point()).umbrella_bound == Rational(1));
}

TEST_CASE("umbrella vectors") {
    const auto u = lovasz_umbrella(catalog::k3_simplex());
    CHECK(u.orthogonal);
    CHECK(u.unit);
    CHECK(u.coordinates == std::vector<Label>{1, 2, 3});
    CHECK(u.cos2.back() == Rational(1));  // the top simplex points along the stick
    CHECK(u.bound == Rational(3));
}

TEST_CASE("phi capacity of one-dimensional complexes") {
    CHECK(phi_capacity_1d(catalog::figure8()).value == 8);
    CHECK(phi_capacity_1d(catalog::point()).value == 1);
    CHECK(phi_capacity_1d(catalog::fig1()).value == 5);
    const std::vector<std::pair<std::size_t, std::size_t>> table{{8, 7}, {12, 10}, {16, 13}};
    for (std::size_t k = 2; k <= 4; ++k) {
        const auto c = catalog::bouquet(k);
        CHECK(phi_capacity_1d(c).value == table[k - 2].first);
        CHECK(independence_number(phi(c)).size == table[k - 2].first);
        CHECK(certify_capacity(c).theta == table[k - 2].second);
    }
    try {
        phi_capacity_1d(catalog::k3_simplex());
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotOneDimensional);
    }
}

TEST_CASE("capacity ring") {
    const auto f = capacity_ring_check(catalog::fig1(), catalog::fig1());
    CHECK(f.sum_independence == 10);
    CHECK(f.product_independence == 25);
    CHECK(f.holds());
    const auto p = capacity_ring_check(catalog::point(), catalog::point());
    CHECK(p.sum_independence == 2);
    CHECK(p.product_independence == 1);
    const auto e = capacity_ring_check(catalog::figure8(), catalog::edge());
    CHECK(e.sum_independence == 9);
    CHECK(e.product_independence == 14);
    CHECK(e.holds());
}

TEST_CASE("connection Laplacian") {
    const auto r = laplacian_report(catalog::c3_boundary());
    CHECK(r.unimodular());
    CHECK(r.positive == 3);
    CHECK(r.even_sets == 3);
    const auto one = laplacian_report(catalog::point());
    CHECK(connection_laplacian(catalog::point()) == IntMatrix{{1}});
    CHECK(one.determinant == 1);
    CHECK(one.positive == 1);
    std::mt19937 rng(59);
    for (int t = 0; t < 50; ++t) {
        const auto c = testing::random_complex(rng, 7, 3, 1 + t % 5);
        const auto rep = laplacian_report(c);
        CHECK(rep.unimodular());
        CHECK(rep.signature_matches());
    }
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long long> entry(-3, 3);
    auto cofactor = [](auto&& self, const IntMatrix& m) -> long long {
        if (m.size() == 1) return m[0][0];
        long long det = 0;
        for (std::size_t c = 0; c < m.size(); ++c) {
            IntMatrix minor;
            for (std::size_t r = 1; r < m.size(); ++r) {
                minor.emplace_back();
                for (std::size_t k = 0; k < m.size(); ++k)
                    if (k != c) minor.back().push_back(m[r][k]);
            }
            det += (c % 2 ? -1 : 1) * m[0][c] * self(self, minor);
        }
        return det;
    };
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 6;
        IntMatrix m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        CHECK(determinant(m) == cofactor(cofactor, m));
    }
}

TEST_CASE("Laplacian of products is the tensor product") {
    const auto iv = catalog::interval();
    CHECK(spectrum_product_check(iv, iv).within(1e-9));
    CHECK(spectrum_product_check(catalog::c3_boundary(), iv).within(1e-9));
    CHECK(spectrum_product_check(catalog::fig1(), catalog::edge()).within(1e-9));
    const auto lg = connection_laplacian(catalog::figure8());
    CHECK(graph_plus_identity(psi_product(catalog::figure8(), catalog::point())) == lg);
}
