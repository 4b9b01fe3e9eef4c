#pragma once

#include "conngraph/canonical.hpp"
#include "conngraph/catalog.hpp"
#include "conngraph/cliques.hpp"
#include "conngraph/error.hpp"
#include "conngraph/homotopy.hpp"
#include "conngraph/io.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

namespace conngraph {

/// What a puzzle asks for: shrink to K_1, or reach a graph isomorphic to a target.
struct Goal {
    std::optional<Graph> target;  // empty means "point"

    bool reached(const Graph& g) const {
        if (!target) return g.order() == 1;
        if (g.order() != target->order() || g.size() != target->size()) return false;
        return isomorphic(g, *target);
    }

    io::json to_json() const {
        if (!target) return "point";
        return io::json{{"target", io::graph_to_json(*target)}};
    }

    /// "point", {"catalog": name}, {"target": graph}, or {"graph": graph}.
    static Goal from_json(const io::json& j) {
        Goal g;
        if (j.is_null() || (j.is_string() && j.get<std::string>() == "point")) return g;
        if (j.is_string()) {
            auto t = catalog::graph(j.get<std::string>());
            if (!t) throw Error(Errc::InvalidInput, "unknown goal " + j.dump());
            g.target = std::move(*t);
        } else if (j.contains("catalog")) {
            auto t = catalog::graph(j.at("catalog").get<std::string>());
            if (!t) throw Error(Errc::InvalidInput, "unknown goal graph " + j.dump());
            g.target = std::move(*t);
        } else if (j.contains("target")) {
            g.target = io::graph_from_json(j.at("target"));
        } else if (j.contains("graph")) {
            g.target = io::graph_from_json(j.at("graph"));
        } else {
            throw Error(Errc::InvalidInput, "goal must be \"point\" or name a target graph");
        }
        return g;
    }
};

/// One puzzle game. Every stored move carries the certificate computed when it
/// was accepted; replaying the history from start reproduces current.
class Session {
public:
    Session(std::string id, Graph start, Goal goal)
        : id_(std::move(id)), start_(start.unlabeled()), current_(start_), goal_(std::move(goal)) {}

    const std::string& id() const noexcept { return id_; }

    io::json snapshot() const {
        std::shared_lock lock(mu_);
        return snapshot_locked();
    }

    io::json details() const {
        std::shared_lock lock(mu_);
        auto j = snapshot_locked();
        io::json moves = io::json::array();
        for (const auto& m : history_) moves.push_back(io::move_to_json(m));
        j["history"] = std::move(moves);
        j["start"] = io::graph_to_json(start_);
        return j;
    }

    /// Validates and applies a move; throws IllegalMove and leaves the state untouched.
    Move apply(const Move& m) {
        std::unique_lock lock(mu_);
        Move certified = certify(current_, m);
        // apply_move rejects a client certificate that does not match the board
        Graph next = apply_move(current_, m.certificate.empty() ? certified : m);
        if (!m.certificate.empty()) certified.certificate = m.certificate;
        current_ = std::move(next);
        history_.push_back(certified);
        return certified;
    }

    /// Drops the last move by replaying the rest of the history from start.
    void undo() {
        std::unique_lock lock(mu_);
        if (history_.empty()) throw Error(Errc::IllegalMove, "nothing to undo");
        history_.pop_back();
        Graph g = start_;
        for (const auto& m : history_) g = apply_move(g, m);
        current_ = std::move(g);
    }

    io::json legal_moves(std::size_t offset, std::size_t limit) const {
        std::shared_lock lock(mu_);
        const auto all = conngraph::legal_moves(current_, 3);
        io::json moves = io::json::array();
        for (std::size_t i = offset; i < all.size() && i < offset + limit; ++i) moves.push_back(io::move_to_json(all[i]));
        return io::json{{"total", all.size()}, {"offset", offset}, {"limit", limit}, {"moves", std::move(moves)}};
    }

    Graph current() const {
        std::shared_lock lock(mu_);
        return current_;
    }

    io::json goal_json() const { return goal_.to_json(); }
    const Graph& start() const noexcept { return start_; }

private:
    io::json snapshot_locked() const {
        io::json j{{"id", id_},
                   {"graph", io::graph_to_json(current_)},
                   {"history_length", history_.size()},
                   {"goal", goal_.to_json()},
                   {"solved", goal_.reached(current_)}};
        if (auto chi = try_graph_euler(current_, full_set(current_.order()), 1'000'000)) j["chi"] = *chi;
        else j["chi"] = nullptr;
        return j;
    }

    std::string id_;
    Graph start_;
    Graph current_;
    std::vector<Move> history_;
    Goal goal_;
    mutable std::shared_mutex mu_;
};

/// Sessions by id, optionally journaled as newline-delimited JSON.
class SessionStore {
public:
    explicit SessionStore(std::string journal = {}) : journal_(std::move(journal)), rng_(std::random_device{}()) {
        if (!journal_.empty()) restore();
    }

    std::shared_ptr<Session> create(Graph start, Goal goal) {
        std::unique_lock lock(mu_);
        auto id = fresh_id();
        auto s = std::make_shared<Session>(id, std::move(start), std::move(goal));
        sessions_[id] = s;
        log({{"op", "create"}, {"id", id}, {"start", io::graph_to_json(s->start())}, {"goal", s->goal_json()}});
        return s;
    }

    std::shared_ptr<Session> find(const std::string& id) const {
        std::unique_lock lock(mu_);
        auto it = sessions_.find(id);
        return it == sessions_.end() ? nullptr : it->second;
    }

    Move move(Session& s, const Move& m) {
        auto c = s.apply(m);
        std::unique_lock lock(mu_);
        log({{"op", "move"}, {"id", s.id()}, {"move", io::move_to_json(c)}});
        return c;
    }

    void undo(Session& s) {
        s.undo();
        std::unique_lock lock(mu_);
        log({{"op", "undo"}, {"id", s.id()}});
    }

    std::size_t size() const {
        std::unique_lock lock(mu_);
        return sessions_.size();
    }

private:
    std::string fresh_id() {
        static constexpr char hex[] = "0123456789abcdef";
        for (;;) {
            std::string id;
            auto bits = rng_();
            for (int i = 0; i < 16; ++i, bits >>= 4) id += hex[bits & 15];
            if (!sessions_.count(id)) return id;
        }
    }

    void log(const io::json& entry) {
        if (journal_.empty() || replaying_) return;
        std::ofstream out(journal_, std::ios::app);
        out << entry.dump() << '\n';
    }

    // moves in the journal are re-validated like any client move
    void restore() {
        std::ifstream in(journal_);
        replaying_ = true;
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) continue;
            const auto j = io::json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            const auto op = j.value("op", "");
            const auto id = j.value("id", "");
            if (op == "create") {
                sessions_[id] = std::make_shared<Session>(id, io::graph_from_json(j.at("start")),
                                                          Goal::from_json(j.at("goal")));
            } else if (auto it = sessions_.find(id); it != sessions_.end()) {
                if (op == "move") it->second->apply(io::move_from_json(j.at("move")));
                if (op == "undo") it->second->undo();
            }
        }
        replaying_ = false;
    }

    std::string journal_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::mt19937_64 rng_;
    bool replaying_ = false;
    mutable std::mutex mu_;
};

}  // namespace conngraph
