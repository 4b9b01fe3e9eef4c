// conngraph command-line tool. JSON goes to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 domain error, 2 usage error.

#include "conngraph/conngraph.hpp"
#include "conngraph/server.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <variant>

using namespace conngraph;
using io::json;

namespace {

struct GraphOut {
    bool dot = false;
    bool edg = false;

    void add_to(CLI::App* cmd) {
        auto* d = cmd->add_flag("--dot", dot, "emit Graphviz DOT");
        cmd->add_flag("--edg", edg, "emit the .edg edge list")->excludes(d);
    }

    void emit(const Graph& g) const {
        if (dot) std::cout << io::to_dot(g);
        else if (edg) std::cout << io::to_edg(g);
        else std::cout << io::graph_to_json(g).dump() << '\n';
    }
};

/// A file or @name holding either a complex or a graph.
std::variant<Complex, Graph> load_any(const std::string& spec, bool facets, bool prefer_graph) {
    if (!spec.empty() && spec.front() == '@') {
        if (prefer_graph) return io::load_graph(spec);
        if (auto c = catalog::complex(spec.substr(1))) return *c;
        return io::load_graph(spec);
    }
    const auto text = io::read_file(spec);
    const auto body = io::detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        const auto j = json::parse(body);
        if (j.contains("n")) return io::graph_from_json(j);
        return io::complex_from_json(j, facets);
    }
    // .edg starts with its header once comments are skipped
    std::istringstream in{std::string(body)};
    for (std::string line; std::getline(in, line);) {
        auto t = io::detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == 'n') return io::parse_edg(text);
        break;
    }
    return io::parse_scx(text, facets);
}

json fvector_json(const FVector& f) { return f.counts; }

json rational_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json group_json(const PermutationGroup& g) {
    return json{{"order", g.order.str()}, {"degree", g.degree}, {"generators", g.generators}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connection graphs, Barycentric refinements and discrete homotopy"};
    app.require_subcommand(1);

    std::string input, second;
    bool facets = false;
    GraphOut out;

    auto complex_arg = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "complex file (.scx or JSON) or @catalog-name")->required();
        cmd->add_flag("--facets", facets, "treat the listed sets as facets and close downward");
    };
    auto graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "graph file (.edg or JSON) or @catalog-name")->required();
    };

    auto* psi_cmd = app.add_subcommand("psi", "connection graph of a complex");
    complex_arg(psi_cmd);
    out.add_to(psi_cmd);
    auto* phi_cmd = app.add_subcommand("phi", "Barycentric refinement graph of a complex");
    complex_arg(phi_cmd);
    out.add_to(phi_cmd);

    std::string functor;
    bool recon_json = false;
    auto* recon = app.add_subcommand("reconstruct", "recover the complex from psi(G) or phi(G)");
    graph_arg(recon);
    recon->add_option("--functor", functor, "psi or phi (default: detect)")->check(CLI::IsMember({"psi", "phi"}));
    recon->add_flag("--json", recon_json, "emit JSON instead of .scx");

    bool as_graph = false;
    auto* inv = app.add_subcommand("invariants", "f-vector, Euler characteristic, Betti numbers, curvature");
    complex_arg(inv);
    inv->add_flag("--graph", as_graph, "resolve @names as catalog graphs");

    auto* contr = app.add_subcommand("contractible", "decide contractibility of a graph");
    graph_arg(contr);
    auto* sph = app.add_subcommand("sphere", "recognise d-spheres");
    graph_arg(sph);

    ReduceBudget budget;
    auto* reduce = app.add_subcommand("homotopy-reduce", "greedy contraction plus bounded expansion search");
    graph_arg(reduce);
    reduce->add_option("--max-moves", budget.max_moves);
    reduce->add_option("--max-vertices", budget.max_vertices);
    reduce->add_option("--max-expansions", budget.max_expansions);
    reduce->add_option("--max-states", budget.max_states);
    reduce->add_option("--max-support", budget.max_support);

    bool refine_first = false;
    auto* p2p = app.add_subcommand("psi2phi", "homotopy trace from psi(G) to phi(G)");
    complex_arg(p2p);
    p2p->add_flag("--refine", refine_first, "apply Barycentric refinement to the input first");

    auto* bary = app.add_subcommand("barycentric", "homotopy trace from a graph to its Barycentric refinement");
    graph_arg(bary);

    std::string kind = "strong";
    auto* prod = app.add_subcommand("product", "graph products");
    prod->add_option("a", input, "first factor")->required();
    prod->add_option("b", second, "second factor")->required();
    prod->add_option("--kind", kind, "strong|phi|psi|join|union")
        ->check(CLI::IsMember({"strong", "phi", "psi", "join", "union"}));
    prod->add_flag("--facets", facets, "close complex inputs downward");
    out.add_to(prod);

    std::size_t power = 0;
    bool cap_phi = false;
    std::size_t indep_cap = kIndependenceCap;
    auto* cap = app.add_subcommand("capacity", "certified Shannon capacity of psi(G)");
    complex_arg(cap);
    cap->add_option("--power", power, "also compute i(psi(G)^n)");
    cap->add_flag("--phi", cap_phi, "report the one-dimensional phi capacity");
    cap->add_option("--cap", indep_cap, "largest graph for exact independence search");

    auto* spec_cmd = app.add_subcommand("spectrum", "connection Laplacian determinant, signature and products");
    complex_arg(spec_cmd);
    spec_cmd->add_option("--with", second, "second factor for the tensor-product check");

    std::size_t aut_cap = kAutomorphismCap;
    auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
    complex_arg(aut);
    aut->add_flag("--graph", as_graph, "resolve @names as catalog graphs");
    aut->add_option("--cap", aut_cap, "vertex cap for the search");

    std::string name;
    bool want_complex = false;
    auto* cat = app.add_subcommand("catalog", "list or print builtin graphs and complexes");
    cat->add_option("name", name);
    cat->add_flag("--complex", want_complex, "print the complex instead of the graph");
    out.add_to(cat);

    int port = 8080;
    std::string host = "127.0.0.1", journal;
    auto* serve = app.add_subcommand("serve", "JSON session API for the homotopy puzzle");
    serve->add_option("--port", port);
    serve->add_option("--host", host);
    serve->add_option("--journal", journal, "append-only session journal (NDJSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*psi_cmd) out.emit(psi(io::load_complex(input, facets)));
        else if (*phi_cmd) out.emit(phi(io::load_complex(input, facets)));
        else if (*recon) {
            std::optional<Functor> hint;
            if (functor == "psi") hint = Functor::Psi;
            if (functor == "phi") hint = Functor::Phi;
            const auto r = reconstruct(io::load_graph(input), hint);
            if (recon_json) {
                auto j = io::complex_to_json(r.complex);
                j["functor"] = functor_name(r.functor);
                j["vertex_sets"] = r.vertex_sets;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "# reconstructed from " << functor_name(r.functor) << "\n" << io::to_scx(r.complex);
            }
        } else if (*inv) {
            const auto in = load_any(input, facets, as_graph);
            json j;
            if (const auto* c = std::get_if<Complex>(&in)) {
                j = {{"kind", "complex"}, {"f_vector", fvector_json(c->f_vector())}, {"chi", c->euler_characteristic()},
                     {"betti", betti(*c)}};
            } else {
                const auto& g = std::get<Graph>(in);
                json curv = json::array();
                for (const auto& k : curvature(g)) curv.push_back(rational_json(k));
                const auto d = is_sphere(g);
                j = {{"kind", "graph"},       {"f_vector", fvector_json(graph_f_vector(g))},
                     {"chi", graph_euler(g)}, {"betti", betti(g)},
                     {"curvature", curv},     {"sphere_dim", d ? json(*d) : json(nullptr)}};
            }
            std::cout << j.dump() << '\n';
        } else if (*contr) {
            std::cout << json{{"contractible", is_contractible(io::load_graph(input))}}.dump() << '\n';
        } else if (*sph) {
            const auto d = is_sphere(io::load_graph(input));
            std::cout << json{{"sphere", d.has_value()}, {"dimension", d ? json(*d) : json(nullptr)}}.dump() << '\n';
        } else if (*reduce) {
            const auto r = homotopy_reduce(io::load_graph(input), budget);
            std::cout << json{{"status", r.status == ReduceStatus::Proven ? "Proven" : "Unknown"},
                              {"reduced", io::graph_to_json(r.reduced)},
                              {"trace", io::trace_to_json(r.trace)}}
                             .dump()
                      << '\n';
        } else if (*p2p) {
            auto c = io::load_complex(input, facets);
            if (refine_first) c = barycentric_refine(c);
            std::cout << io::trace_to_json(psi_to_phi_trace(c)).dump() << '\n';
        } else if (*bary) {
            std::cout << io::trace_to_json(barycentric_trace(io::load_graph(input))).dump() << '\n';
        } else if (*prod) {
            if (kind == "psi" || kind == "phi") {
                const auto a = io::load_complex(input, facets), b = io::load_complex(second, facets);
                out.emit(kind == "psi" ? psi_product(a, b) : phi_product(a, b));
            } else {
                const auto a = io::load_graph(input), b = io::load_graph(second);
                out.emit(kind == "strong" ? strong_product(a, b) : kind == "join" ? zykov_join(a, b) : disjoint_union(a, b));
            }
        } else if (*cap) {
            const auto c = io::load_complex(input, facets);
            const auto cert = certify_capacity(c, indep_cap);
            json j{{"f0", cert.f0},
                   {"independence", cert.independence.size},
                   {"witness", cert.independence.witness},
                   {"umbrella_bound", rational_json(cert.umbrella_bound)}};
            if (cert.certified) j["certified_theta"] = cert.theta;
            json powers = json::array();
            powers.push_back({{"power", 1}, {"independence", cert.independence.size}});
            if (power >= 2) {
                const auto pb = shannon_lower(psi(c), power, indep_cap);
                powers.push_back({{"power", pb.power}, {"independence", pb.independence}, {"lower_bound", pb.value}});
            }
            j["power_bounds"] = powers;
            if (cap_phi) {
                const auto pc = phi_capacity_1d(c);
                j["phi"] = {{"value", pc.value},
                            {"independence", independence_number(phi(c), indep_cap).size},
                            {"witness", pc.witness}};
            }
            std::cout << j.dump() << '\n';
        } else if (*spec_cmd) {
            const auto c = io::load_complex(input, facets);
            const auto r = laplacian_report(c);
            json j{{"determinant", r.determinant},
                   {"positive_eigenvalues", r.positive},
                   {"even_dimensional_sets", r.even_sets},
                   {"eigenvalues", eigenvalues(connection_laplacian(c))}};
            if (!second.empty()) {
                const auto sp = spectrum_product_check(c, io::load_complex(second, facets));
                j["product"] = {{"tensor_identity", sp.tensor_identity}, {"max_deviation", sp.max_deviation}};
            }
            std::cout << j.dump() << '\n';
        } else if (*aut) {
            const auto in = load_any(input, facets, as_graph);
            if (const auto* c = std::get_if<Complex>(&in)) {
                std::cout << json{{"complex", group_json(complex_automorphisms(*c))},
                                  {"psi", group_json(automorphism_group(psi(*c), aut_cap))}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << group_json(automorphism_group(std::get<Graph>(in), aut_cap)).dump() << '\n';
            }
        } else if (*cat) {
            if (name.empty()) {
                std::cout << json{{"graphs", catalog::graph_names()}, {"complexes", catalog::complex_names()}}.dump()
                          << '\n';
            } else if (want_complex) {
                auto c = catalog::complex(name);
                if (!c) throw Error(Errc::InvalidInput, "unknown catalog complex " + name);
                std::cout << io::to_scx(*c);
            } else {
                auto g = catalog::graph(name);
                if (!g) throw Error(Errc::InvalidInput, "unknown catalog graph " + name);
                out.emit(*g);
            }
        } else if (*serve) {
            SessionStore store(journal);
            httplib::Server server;
            register_routes(server, store);
            std::cerr << "listening on " << host << ":" << port << '\n';
            if (!server.listen(host, port)) {
                std::cerr << "cannot listen on " << host << ":" << port << '\n';
                return 1;
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "Parse: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
