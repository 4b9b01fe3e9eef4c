#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace conngraph;

namespace {

Errc parse_error(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("input accepted");
    return Errc::InvalidInput;
}

}  // namespace

TEST_CASE(".scx round trip") {
    for (const auto& [name, c] : catalog::standard_complexes()) {
        INFO(name);
        CHECK(io::parse_scx(io::to_scx(c)) == c);
        CHECK(io::parse_complex(io::complex_to_json(c).dump()) == c);
    }
    CHECK(io::parse_scx("# comment\n1,2\n\n 2 , 3 \n", true) == catalog::interval());
    CHECK(io::parse_complex(R"({"facets": [[1,2],[2,3]]})") == catalog::interval());
    CHECK(parse_error([] { io::parse_scx("1,x\n"); }) == Errc::Parse);
    CHECK(parse_error([] { io::parse_scx("1,-2\n"); }) == Errc::Parse);
    CHECK(parse_error([] { io::parse_scx("1,2\n"); }) == Errc::MissingFace);
    CHECK(parse_error([] { io::parse_complex("{\"sets\": 3}"); }) == Errc::Parse);
}

TEST_CASE("graph formats round trip") {
    for (const auto& name : catalog::graph_names()) {
        const auto g = catalog::graph(name).value();
        INFO(name);
        CHECK(io::parse_edg(io::to_edg(g)) == g);
        CHECK(io::parse_graph(io::graph_to_json(g).dump()) == g);
    }
    const auto p = psi(catalog::fig1());
    const auto back = io::graph_from_json(io::graph_to_json(p));
    CHECK(back == p);
    CHECK(back.labels() == p.labels());
    CHECK(parse_error([] { io::parse_edg("3\n0 1\n"); }) == Errc::Parse);
    CHECK(parse_error([] { io::parse_edg("n 3\n0 1 2\n"); }) == Errc::Parse);
    CHECK(parse_error([] { io::parse_edg("n 2\n0 5\n"); }) == Errc::UnknownVertex);
    CHECK(parse_error([] { io::parse_graph(R"({"n": 2, "edges": [[0]]})"); }) == Errc::Parse);
}

TEST_CASE("DOT export") {
    const auto dot = io::to_dot(psi(catalog::interval()));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("label=\"{1,2}\"") != std::string::npos);
    CHECK(dot.find("0 -- 3;") != std::string::npos);
}

TEST_CASE("moves and traces as JSON") {
    const auto m = io::move_from_json(io::json::parse(R"({"kind": "Expand", "vertices": [2, 0]})"));
    CHECK(m == Move::expand({0, 2}));
    CHECK(io::move_from_json(io::json::parse(R"({"kind": "Contract", "v": 3})")) == Move::contract(3));
    CHECK(io::move_from_json(io::json::parse(R"({"kind": "EdgeRemove", "a": 1, "b": 4})")) == Move::edge_remove(1, 4));
    CHECK(parse_error([] { io::move_from_json(io::json::parse(R"({"kind": "Jump", "v": 1})")); }) == Errc::Parse);
    CHECK(parse_error([] { io::move_from_json(io::json::parse(R"({"kind": "Contract"})")); }) == Errc::Parse);

    const auto t = barycentric_trace(catalog::complete(3));
    const auto back = io::trace_from_json(io::json::parse(io::trace_to_json(t).dump()));
    CHECK(back.moves == t.moves);
    CHECK(back.start == t.start);
    CHECK(back.verify());
}

TEST_CASE("catalog lookups") {
    CHECK(io::load_graph("@C_6") == catalog::cycle(6));
    CHECK(io::load_complex("@fig1") == catalog::fig1());
    CHECK(io::load_complex("@C_5").size() == 10);
    CHECK(parse_error([] { io::load_graph("@nonsense"); }) == Errc::InvalidInput);
    CHECK(parse_error([] { io::load_complex("/nonexistent/file.scx"); }) == Errc::InvalidInput);
    for (const auto& name : catalog::complex_names()) CHECK(catalog::complex(name).has_value());
    CHECK_THROWS_AS(catalog::cycle(2), Error);
}
