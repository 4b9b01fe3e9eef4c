#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace conngraph;

namespace {

/// Homotopy invariants along a trace: χ always, Betti numbers when small.
void check_invariants(const HomotopyTrace& t) {
    const auto states = t.replay();
    const auto chi = graph_euler(states.front());
    const bool small = states.front().order() <= 30;
    const auto b0 = small ? betti(states.front()) : std::vector<long long>{};
    for (const auto& s : states) {
        CHECK(graph_euler(s) == chi);
        if (small && s.order() <= 30) CHECK(betti(s) == b0);
    }
}

Errc code_of(const Graph& g, const Move& m) {
    try {
        apply_move(g, m);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("move was accepted");
    return Errc::InvalidInput;
}

}  // namespace

TEST_CASE("contractibility") {
    for (std::size_t n = 1; n <= 7; ++n) CHECK(is_contractible(catalog::complete(n)));
    for (std::size_t n = 4; n <= 9; ++n) CHECK_FALSE(is_contractible(catalog::cycle(n)));
    CHECK(is_contractible(catalog::star(6)));
    CHECK(is_contractible(catalog::wheel(6)));
    CHECK_FALSE(is_contractible(Graph(0)));
    CHECK_FALSE(is_contractible(Graph(2)));
    const auto dunce = catalog::graph("dunce_hat_8").value();
    CHECK_FALSE(is_contractible(dunce));
    CHECK(graph_euler(dunce) == 1);
}

TEST_CASE("random trees are contractible and reduce to a point") {
    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 + t % 12;
        Graph tree(n);
        for (std::size_t v = 1; v < n; ++v) tree.add_edge(v, std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        CHECK(is_contractible(tree));
        const auto r = homotopy_reduce(tree);
        CHECK(r.status == ReduceStatus::Proven);
        CHECK(r.reduced.order() == 1);
        CHECK(r.trace.verify());
    }
}

TEST_CASE("sphere recognition") {
    for (std::size_t n = 4; n <= 8; ++n) CHECK(is_sphere(catalog::cycle(n)) == 1);
    CHECK(is_sphere(catalog::octahedron()) == 2);
    CHECK(is_sphere(catalog::icosahedron()) == 2);
    CHECK(is_sphere(catalog::cross_polytope(3)) == 3);
    CHECK(is_sphere(Graph(2)) == 0);
    CHECK(is_sphere(Graph(0)) == -1);
    CHECK_FALSE(is_sphere(catalog::complete(3)));
    CHECK_FALSE(is_sphere(catalog::cycle(3)));
    CHECK_FALSE(is_sphere(catalog::graph("figure8").value()));
}

TEST_CASE("joins of contractible graphs and of spheres") {
    const std::vector<Graph> contractible{catalog::complete(1), catalog::path(3), catalog::star(3), catalog::complete(3)};
    const std::vector<Graph> others{catalog::cycle(5), catalog::octahedron(), Graph(2), catalog::path(2)};
    for (const auto& h : contractible)
        for (const auto& k : others) CHECK(is_contractible(zykov_join(h, k)));
    const std::vector<std::pair<Graph, int>> spheres{{Graph(2), 0}, {catalog::cycle(4), 1}, {catalog::cycle(5), 1}};
    for (const auto& [h, p] : spheres)
        for (const auto& [k, q] : spheres) {
            const auto j = zykov_join(h, k);
            CHECK(is_sphere(j) == p + q + 1);
            CHECK(graph_euler(j) == 1 + ((p + q + 1) % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("single moves") {
    const auto k2 = apply_move(catalog::complete(2), Move::contract(1));
    CHECK(k2.order() == 1);

    const auto k3 = apply_move(catalog::complete(3), Move::edge_refine(0, 1));
    CHECK(k3.order() == 4);
    CHECK_FALSE(k3.adjacent(0, 1));
    CHECK(testing::brute_euler(k3) == 1);

    const auto c6 = catalog::cycle(6);
    const auto e = apply_move(c6, Move::expand({0, 1, 2}));
    CHECK(e.order() == 7);
    CHECK(testing::brute_euler(e) == 0);

    CHECK(code_of(c6, Move::contract(3)) == Errc::IllegalMove);
    CHECK(code_of(c6, Move::expand({0, 3})) == Errc::IllegalMove);
    CHECK(code_of(c6, Move::edge_remove(0, 1)) == Errc::IllegalMove);
    CHECK(code_of(c6, Move::edge_refine(0, 2)) == Errc::IllegalMove);
    CHECK(code_of(c6, Move::contract(9)) == Errc::UnknownVertex);
    CHECK(code_of(catalog::complete(1), Move::contract(0)) == Errc::IllegalMove);
}

TEST_CASE("illegal Contract names the failed certificate") {
    try {
        certify(catalog::cycle(6), Move::contract(3));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("S(3) not contractible") != std::string::npos);
    }
}

TEST_CASE("forged certificates are rejected") {
    const auto k3 = catalog::complete(3);
    auto m = Move::contract(0);
    m.certificate = {1};
    CHECK(code_of(k3, m) == Errc::IllegalMove);
    m.certificate = {1, 2};
    CHECK(apply_move(k3, m).order() == 2);

    HomotopyTrace t{k3, {certify(k3, Move::contract(0))}, catalog::complete(2)};
    CHECK(t.verify());
    t.moves[0].certificate = {2};
    CHECK_FALSE(t.verify());
    t.moves[0] = Move::contract(0);
    t.end = catalog::complete(1);
    CHECK_FALSE(t.verify());
}

TEST_CASE("EdgeRemove accepts either valid pivot") {
    // in K_4 both S(0) - 1 and S(1) - 0 are edges
    const auto k4 = catalog::complete(4);
    for (std::size_t p : {0u, 1u}) {
        auto m = Move::edge_remove(0, 1);
        m.certificate = members(k4.neighbors(p));
        CHECK(apply_move(k4, m).size() == 5);
    }
}

TEST_CASE("Euler characteristic is invariant under random legal moves") {
    std::mt19937 rng(23);
    for (int t = 0; t < 15; ++t) {
        Graph g = testing::random_graph(rng, 7, 0.5);
        const auto chi = testing::brute_euler(g);
        for (int step = 0; step < 6 && g.order() < 14; ++step) {
            const auto moves = legal_moves(g, 3);
            if (moves.empty()) break;
            const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
            g = apply_move(g, m);
            CHECK(testing::brute_euler(g) == chi);
        }
    }
}

TEST_CASE("legal move enumeration") {
    const auto c6 = legal_moves(catalog::cycle(6));
    CHECK(std::none_of(c6.begin(), c6.end(), [](const Move& m) { return m.kind == MoveKind::Contract; }));
    CHECK(std::any_of(c6.begin(), c6.end(), [](const Move& m) { return m.kind == MoveKind::Expand; }));
    const auto k3 = legal_moves(catalog::complete(3));
    CHECK(std::count_if(k3.begin(), k3.end(), [](const Move& m) { return m.kind == MoveKind::Contract; }) == 3);
    for (const auto& m : k3) CHECK(apply_move(catalog::complete(3), m).order() >= 2);
}

TEST_CASE("psi to phi traces") {
    for (const auto& c : {catalog::point(), catalog::interval(), catalog::c3_boundary(), catalog::k3_simplex(),
                          catalog::figure8()}) {
        const auto b = barycentric_refine(c);
        const auto t = psi_to_phi_trace(b);
        CHECK(t.start == psi(b));
        CHECK(t.end == phi(b));
        if (b.size() <= 30) check_invariants(t);
        else CHECK(t.verify());
    }
    CHECK(psi_to_phi_trace(barycentric_refine(catalog::point())).moves.empty());
    const auto c12 = psi_to_phi_trace(barycentric_refine(catalog::c3_boundary()));
    CHECK(testing::brute_isomorphic(phi(catalog::c3_boundary()), catalog::cycle(6)));
    CHECK(c12.end.order() == 12);
    CHECK(graph_euler(c12.end) == 0);
    try {
        psi_to_phi_trace(catalog::c3_boundary());
        FAIL("non-Barycentric triangle accepted");
    } catch (const LemmaCError& e) {
        CHECK(e.code() == Errc::LemmaCViolation);
    }
}

TEST_CASE("Barycentric traces") {
    CHECK(barycentric_trace(catalog::complete(1)).moves.empty());
    const auto k3 = barycentric_trace(catalog::complete(3));
    CHECK(testing::brute_isomorphic(k3.end, catalog::wheel(6)));
    check_invariants(k3);
    const auto c5 = barycentric_trace(catalog::cycle(5));
    CHECK(c5.end.order() == 10);
    CHECK(is_sphere(c5.end) == 1);
    check_invariants(c5);
    check_invariants(barycentric_trace(catalog::octahedron()));
}

TEST_CASE("product extension traces") {
    // C_5 expanded over one edge, times K_2
    const auto t1 = product_extension_trace(catalog::cycle(5), {0, 1}, catalog::complete(2));
    CHECK(t1.moves.size() == 2);
    check_invariants(t1);
    const auto t2 = product_extension_trace(catalog::cycle(5), {0, 1}, catalog::complete(1));
    CHECK(t2.moves.size() == 1);
    CHECK(t2.moves[0].kind == MoveKind::Expand);
    const auto t3 = product_extension_trace(catalog::path(2), {1}, catalog::cycle(4));
    CHECK(t3.moves.size() == 4);
    check_invariants(t3);
}

TEST_CASE("homotopy_reduce") {
    const auto c7 = homotopy_reduce(catalog::cycle(7));
    CHECK(c7.status == ReduceStatus::Unknown);
    CHECK(c7.reduced == catalog::cycle(7));
    const auto k5 = homotopy_reduce(catalog::complete(5));
    CHECK(k5.status == ReduceStatus::Proven);
    CHECK(k5.trace.moves.size() == 4);
    ReduceBudget small;
    small.max_states = 50;
    const auto dunce = homotopy_reduce(catalog::graph("dunce_hat_8").value(), small);
    CHECK(dunce.status == ReduceStatus::Unknown);
    CHECK(dunce.trace.verify());
}
