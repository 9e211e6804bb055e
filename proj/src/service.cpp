#include "jg/service.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <iostream>

namespace jg {

std::string_view to_string(EngineRole r) noexcept {
    switch (r) {
        case EngineRole::first: return "first";
        case EngineRole::second: return "second";
        case EngineRole::none: return "none";
    }
    return "none";
}

int resolve_n_limit(std::optional<int> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("JG_N_LIMIT")) {
        int value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
            throw DomainError("JG_N_LIMIT must be a positive integer, got '" + std::string(text) + "'");
        return value;
    }
    return kDefaultNLimit;
}

namespace {

Response error(int status, const std::string& message) { return {status, Json{{"error", message}}}; }

std::string iso_time(std::chrono::system_clock::time_point t) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json parse_body(std::string_view body) {
    Json doc;
    try {
        doc = Json::parse(body);
    } catch (const Json::parse_error&) {
        throw MalformedDocument("request body is not valid JSON");
    }
    if (!doc.is_object()) throw MalformedDocument("request body must be a JSON object");
    return doc;
}

/// Maps the error taxonomy onto status codes.
template <class Fn>
Response guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const MalformedDocument& e) {
        return error(422, e.what());
    } catch (const IllegalMove& e) {
        return error(409, e.what());
    } catch (const PlanRefused& e) {
        std::cerr << "jg-service: internal error: " << e.what() << '\n';
        return error(500, e.what());
    } catch (const BrokenInvariant& e) {
        std::cerr << "jg-service: engine invariant broken: " << e.what() << '\n';
        return error(500, e.what());
    } catch (const DomainError& e) {
        return error(422, e.what());
    } catch (const std::exception& e) {
        std::cerr << "jg-service: internal error: " << e.what() << '\n';
        return error(500, e.what());
    }
}

}  // namespace

GameService::GameService(ServiceConfig config) : config_(config), id_rng_(std::random_device{}()) {}

std::optional<int> GameService::parse_n(std::string_view text) const {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    if (n < 1 || n > config_.n_limit) return std::nullopt;
    return n;
}

std::shared_ptr<const GameService::Prepared> GameService::prepared(int n) {
    {
        std::lock_guard lock(cache_mu_);
        if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    auto fresh = std::make_shared<Prepared>();
    fresh->graph = build_divisibility_graph(n);
    fresh->dec = decompose(fresh->graph);
    std::lock_guard lock(cache_mu_);
    return cache_.emplace(n, std::move(fresh)).first->second;
}

std::shared_ptr<GameService::Slot> GameService::find(const std::string& id) const {
    std::lock_guard lock(registry_mu_);
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::size_t GameService::session_count() const {
    std::lock_guard lock(registry_mu_);
    return sessions_.size();
}

Response GameService::decomposition(std::string_view n_text) {
    return guarded([&] {
        const auto n = parse_n(n_text);
        if (!n) return error(404, "n must be an integer in 1.." + std::to_string(config_.n_limit));
        return Response{200, decomposition_json(*n, prepared(*n)->dec)};
    });
}

Response GameService::openings(std::string_view n_text, std::string_view constraint_text) {
    return guarded([&] {
        const auto n = parse_n(n_text);
        if (!n) return error(404, "n must be an integer in 1.." + std::to_string(config_.n_limit));
        OpeningConstraint c = OpeningConstraint::none;
        if (!constraint_text.empty()) {
            try {
                c = parse_constraint(constraint_text);
            } catch (const DomainError& e) {
                throw MalformedDocument(e.what());
            }
        }
        const auto prep = prepared(*n);
        return Response{200, openings_json(*n, c, winning_openings(prep->graph, prep->dec, c))};
    });
}

Json GameService::session_json(const GameSession& s) const {
    return Json{{"id", s.id},
                {"engine_role", to_string(s.engine_role)},
                {"state", state_json(s.state)},
                {"engine_plan", s.plan ? plan_json(*s.plan) : Json(nullptr)},
                {"created_at", iso_time(s.created_at)},
                {"updated_at", iso_time(s.updated_at)}};
}

std::optional<Label> GameService::engine_turn(GameSession& s) {
    if (s.engine_role == EngineRole::none || s.state.is_over()) return std::nullopt;
    const Player side = s.engine_role == EngineRole::first ? Player::first : Player::second;
    if (s.state.to_move() != side) return std::nullopt;

    const auto prep = prepared(s.state.n());
    const Graph& g = prep->graph;
    if (!s.plan) {
        const auto history = s.state.history();
        if (history.empty()) {
            const auto winning = winning_openings(g, prep->dec, s.state.ruleset().constraint);
            if (!winning.empty()) s.plan = plan_first_player(g, winning.front());
        } else if (history.size() == 1 && side == Player::second && !prep->dec.in_d(history.front())) {
            s.plan = plan_second_player(g, history.front());
        }
    }

    Label move = 0;
    if (s.plan) {
        move = engine_move(*s.plan, s.state);
    } else {
        // Theoretically lost from the start; take any win the human hands over.
        const PositionEval eval = evaluate_position(g, s.state);
        move = eval.winning_moves.empty() ? s.state.legal_moves().front() : eval.winning_moves.front();
    }
    s.state = s.state.apply_move(move);
    return move;
}

Response GameService::create_game(std::string_view body) {
    return guarded([&] {
        const Json doc = parse_body(body);
        if (!doc.contains("n") || !doc["n"].is_number_integer()) throw MalformedDocument("'n' must be an integer");
        const auto n_raw = doc["n"].get<long long>();
        if (n_raw < 1 || n_raw > config_.n_limit)
            return error(404, "n must be in 1.." + std::to_string(config_.n_limit));

        Ruleset rules{static_cast<int>(n_raw), OpeningConstraint::none};
        if (doc.contains("constraint")) {
            if (!doc["constraint"].is_string()) throw MalformedDocument("'constraint' must be a string");
            try {
                rules.constraint = parse_constraint(doc["constraint"].get<std::string>());
            } catch (const DomainError& e) {
                throw MalformedDocument(e.what());
            }
        }
        EngineRole role = EngineRole::none;
        if (doc.contains("engine_role")) {
            const Json& r = doc["engine_role"];
            if (!r.is_string()) throw MalformedDocument("'engine_role' must be a string");
            const std::string text = r.get<std::string>();
            if (text == "first") role = EngineRole::first;
            else if (text == "second") role = EngineRole::second;
            else if (text != "none") throw MalformedDocument("'engine_role' must be first, second or none");
        }

        auto slot = std::make_shared<Slot>();
        GameSession& s = slot->session;
        s.state = new_game(rules);
        s.engine_role = role;
        s.created_at = s.updated_at = std::chrono::system_clock::now();
        engine_turn(s);

        std::lock_guard lock(registry_mu_);
        do {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(id_rng_()));
            s.id = buf;
        } while (sessions_.count(s.id));
        sessions_.emplace(s.id, slot);
        return Response{201, session_json(s)};
    });
}

Response GameService::get_game(const std::string& id) {
    return guarded([&] {
        const auto slot = find(id);
        if (!slot) return error(404, "unknown session " + id);
        std::lock_guard lock(slot->mu);
        return Response{200, session_json(slot->session)};
    });
}

Response GameService::play_move(const std::string& id, std::string_view body) {
    return guarded([&] {
        const auto slot = find(id);
        if (!slot) return error(404, "unknown session " + id);
        const Json doc = parse_body(body);
        if (!doc.contains("move") || !doc["move"].is_number_integer())
            throw MalformedDocument("'move' must be an integer");
        const auto raw = doc["move"].get<long long>();

        std::lock_guard lock(slot->mu);
        GameSession& s = slot->session;
        const Player engine_side = s.engine_role == EngineRole::first ? Player::first : Player::second;
        if (!s.state.is_over() && s.engine_role != EngineRole::none && s.state.to_move() == engine_side)
            return error(409, "it is the engine's turn");
        if (raw < 1 || raw > s.state.n())
            throw IllegalMove(IllegalMove::Reason::out_of_range, "move " + std::to_string(raw) + " is outside 1..n");
        const Label human = static_cast<Label>(raw);

        // Work on a copy so a failing engine reply leaves the session untouched.
        GameSession next = s;
        next.state = next.state.apply_move(human);
        const auto reply = engine_turn(next);
        next.updated_at = std::chrono::system_clock::now();
        s = std::move(next);

        return Response{200, Json{{"id", s.id},
                                  {"human_move", human},
                                  {"engine_move", reply ? Json(*reply) : Json(nullptr)},
                                  {"state", state_json(s.state)}}};
    });
}

Response GameService::hint(const std::string& id) {
    return guarded([&] {
        const auto slot = find(id);
        if (!slot) return error(404, "unknown session " + id);
        GameState state;
        {
            std::lock_guard lock(slot->mu);
            state = slot->session.state;
        }
        if (state.is_over()) return error(409, "game is over");
        const PositionEval eval = evaluate_position(prepared(state.n())->graph, state);
        return Response{200, Json{{"winning_moves", eval.winning_moves}, {"exact", true}}};
    });
}

Response GameService::delete_game(const std::string& id) {
    return guarded([&] {
        std::lock_guard lock(registry_mu_);
        if (sessions_.erase(id) == 0) return error(404, "unknown session " + id);
        return Response{200, Json{{"deleted", id}}};
    });
}

}  // namespace jg
