#pragma once

#include "conngraph/catalog.hpp"
#include "conngraph/io.hpp"
#include "conngraph/session.hpp"

#include "httplib.h"

#include <string>

namespace conngraph {

namespace detail {

inline void send_json(httplib::Response& res, int status, const io::json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

inline void send_error(httplib::Response& res, int status, std::string_view kind, const std::string& message) {
    send_json(res, status, io::json{{"error", kind}, {"message", message}});
}

inline int status_for(const Error& e) {
    switch (e.code()) {
        case Errc::IllegalMove: return 409;
        case Errc::SizeLimit: return 413;
        default: return 400;
    }
}

inline std::size_t query_number(const httplib::Request& req, const char* key, std::size_t fallback) {
    if (!req.has_param(key)) return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(req.get_param_value(key)));
    } catch (const std::exception&) {
        return fallback;
    }
}

}  // namespace detail

/// JSON session API for the homotopy puzzle:
///   POST /session                    {catalog | graph, goal}
///   GET  /session/{id}
///   GET  /session/{id}/legal-moves   ?offset=&limit=
///   POST /session/{id}/move          {kind, args | v | a,b | vertices, certificate?}
///   POST /session/{id}/undo
///   GET  /catalog
inline void register_routes(httplib::Server& server, SessionStore& store) {
    using httplib::Request;
    using httplib::Response;

    // every handler maps library errors to JSON; illegal moves are 409
    auto guarded = [](auto handler) {
        return [handler](const Request& req, Response& res) {
            try {
                handler(req, res);
            } catch (const Error& e) {
                detail::send_error(res, detail::status_for(e), errc_name(e.code()), e.what());
            } catch (const io::json::exception& e) {
                detail::send_error(res, 400, "Parse", e.what());
            }
        };
    };

    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Options(R"(/.*)", [](const Request&, Response& res) { res.status = 204; });

    server.Post("/session", guarded([&store](const Request& req, Response& res) {
        const auto body = req.body.empty() ? io::json::object() : io::json::parse(req.body);
        Graph start;
        if (body.contains("catalog")) {
            const auto name = body.at("catalog").get<std::string>();
            auto g = catalog::graph(name);
            if (!g) throw Error(Errc::InvalidInput, "unknown catalog graph " + name);
            start = std::move(*g);
        } else if (body.contains("graph")) {
            start = io::graph_from_json(body.at("graph"));
        } else {
            throw Error(Errc::InvalidInput, "request needs \"catalog\" or \"graph\"");
        }
        if (start.empty()) throw Error(Errc::InvalidInput, "start graph is empty");
        auto goal = Goal::from_json(body.contains("goal") ? body.at("goal") : io::json("point"));
        auto s = store.create(std::move(start), std::move(goal));
        detail::send_json(res, 201, s->snapshot());
    }));

    auto with_session = [&store, guarded](auto handler) {
        return guarded([&store, handler](const Request& req, Response& res) {
            auto s = store.find(req.matches[1]);
            if (!s) return detail::send_error(res, 404, "UnknownSession", "no session " + std::string(req.matches[1]));
            handler(*s, req, res);
        });
    };

    server.Get(R"(/session/([0-9a-f]+))", with_session([](Session& s, const Request&, Response& res) {
        detail::send_json(res, 200, s.details());
    }));

    server.Get(R"(/session/([0-9a-f]+)/legal-moves)", with_session([](Session& s, const Request& req, Response& res) {
        const auto offset = detail::query_number(req, "offset", 0);
        const auto limit = detail::query_number(req, "limit", 50);
        detail::send_json(res, 200, s.legal_moves(offset, limit));
    }));

    server.Post(R"(/session/([0-9a-f]+)/move)", with_session([&store](Session& s, const Request& req, Response& res) {
        const auto move = io::move_from_json(io::json::parse(req.body));
        const auto accepted = store.move(s, move);
        auto body = s.snapshot();
        body["move"] = io::move_to_json(accepted);
        detail::send_json(res, 200, body);
    }));

    server.Post(R"(/session/([0-9a-f]+)/undo)", with_session([&store](Session& s, const Request&, Response& res) {
        store.undo(s);
        detail::send_json(res, 200, s.snapshot());
    }));

    server.Get("/catalog", [](const Request&, Response& res) {
        detail::send_json(res, 200, io::json{{"graphs", catalog::graph_names()}, {"complexes", catalog::complex_names()}});
    });
}

}  // namespace conngraph
