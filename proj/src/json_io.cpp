#include "jg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace jg {

Json decomposition_json(int n, const Decomposition& dec) {
    return Json{{"n", n}, {"d", dec.d}, {"a", dec.a}, {"c", dec.c}};
}

Json openings_json(int n, OpeningConstraint c, const std::vector<Label>& winning) {
    return Json{{"n", n}, {"constraint", to_string(c)}, {"winning", winning}};
}

Json solve_report_json(const SolveReport& report) {
    Json doc = openings_json(report.n, report.constraint, report.winning_openings);
    doc["states_visited"] = report.states_visited;
    return doc;
}

Json transcript_json(const GameState& s) {
    return Json{{"n", s.n()},
                {"constraint", to_string(s.ruleset().constraint)},
                {"moves", std::vector<Label>(s.history().begin(), s.history().end())},
                {"result", result_string(s.status())}};
}

Json state_json(const GameState& s) {
    Json doc = transcript_json(s);
    doc["current"] = s.current() ? Json(*s.current()) : Json(nullptr);
    doc["to_move"] = s.to_move() == Player::first ? "player1" : "player2";
    doc["legal_moves"] = s.legal_moves();
    return doc;
}

Json plan_json(const EnginePlan& plan) {
    Json pairs = Json::array();
    for (const Edge& e : plan.matching.pairs()) pairs.push_back({e.u, e.v});
    return Json{{"role", to_string(plan.role)}, {"opening", plan.opening}, {"matching", pairs}};
}

GameState load_transcript(const Json& doc) {
    if (!doc.is_object()) throw MalformedDocument("transcript must be an object");
    for (const char* key : {"n", "constraint", "moves", "result"})
        if (!doc.contains(key)) throw MalformedDocument(std::string("transcript is missing '") + key + "'");
    if (!doc["n"].is_number_integer()) throw MalformedDocument("'n' must be an integer");
    if (!doc["constraint"].is_string()) throw MalformedDocument("'constraint' must be a string");
    if (!doc["moves"].is_array()) throw MalformedDocument("'moves' must be an array");
    if (!doc["result"].is_string()) throw MalformedDocument("'result' must be a string");

    const auto n = doc["n"].get<long long>();
    if (n < 1 || n > 1'000'000) throw MalformedDocument("'n' out of range");
    Ruleset rules{static_cast<int>(n), OpeningConstraint::none};
    try {
        rules.constraint = parse_constraint(doc["constraint"].get<std::string>());
    } catch (const DomainError& e) {
        throw MalformedDocument(e.what());
    }
    std::vector<Label> moves;
    for (const auto& m : doc["moves"]) {
        if (!m.is_number_integer()) throw MalformedDocument("moves must be integers");
        const auto k = m.get<long long>();
        if (k < 1 || k > n) throw MalformedDocument("move " + std::to_string(k) + " is outside 1..n");
        moves.push_back(static_cast<Label>(k));
    }
    GameState s = new_game(rules);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        try {
            s = s.apply_move(moves[i]);
        } catch (const IllegalMove& e) {
            throw MalformedDocument("move " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (doc["result"].get<std::string>() != result_string(s.status()))
        throw MalformedDocument("recorded result '" + doc["result"].get<std::string>() + "' does not match the moves ('" +
                                std::string(result_string(s.status())) + "')");
    return s;
}

GameState load_transcript_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedDocument(std::string("transcript is not valid JSON: ") + e.what());
    }
    return load_transcript(doc);
}

GameState load_transcript_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MalformedDocument("cannot read transcript " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_transcript_text(ss.str());
}

}  // namespace jg
