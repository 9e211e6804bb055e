#pragma once

#include <filesystem>

#include <json.hpp>

#include "jg/decomposition.hpp"
#include "jg/engine.hpp"
#include "jg/game.hpp"
#include "jg/solver.hpp"

namespace jg {

using Json = nlohmann::ordered_json;

/// Raised for transcripts and request bodies that do not parse or do not
/// satisfy the game invariants.
class MalformedDocument : public DomainError {
public:
    using DomainError::DomainError;
};

/// {"n":..,"d":[..],"a":[..],"c":[..]}
Json decomposition_json(int n, const Decomposition& dec);

/// {"n":..,"constraint":..,"winning":[..]}
Json openings_json(int n, OpeningConstraint c, const std::vector<Label>& winning);

/// {"n":..,"constraint":..,"winning":[..],"states_visited":..}
Json solve_report_json(const SolveReport& report);

/// {"n":..,"constraint":..,"moves":[..],"result":"player1|player2|ongoing"}
Json transcript_json(const GameState& s);

/// Transcript fields plus current, to_move and legal_moves.
Json state_json(const GameState& s);

Json plan_json(const EnginePlan& plan);

/// Parses and replays a transcript, checking every move and the recorded
/// result. Extra fields (as written by state_json) are ignored.
GameState load_transcript(const Json& doc);
GameState load_transcript_text(std::string_view text);
GameState load_transcript_file(const std::filesystem::path& path);

}  // namespace jg
