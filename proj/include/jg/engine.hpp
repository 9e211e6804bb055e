#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "jg/decomposition.hpp"
#include "jg/game.hpp"
#include "jg/graph.hpp"
#include "jg/matching.hpp"

namespace jg {

enum class Role { first_mover, second_mover };

std::string_view to_string(Role r) noexcept;

/// A side to play plus the maximum matching it follows for the whole game.
///
/// first_mover: `matching` is maximum on G_n and leaves `opening` exposed.
/// second_mover: `matching` is maximum on G_n and covers `opening`.
struct EnginePlan {
    Role role;
    Matching matching;
    Label opening;
};

/// Plan requested for an opening on the losing side of the theory.
class PlanRefused : public DomainError {
public:
    using DomainError::DomainError;
};

/// The engine's plan no longer yields a move. Never a game situation;
/// it means the plan or the engine is wrong.
class BrokenInvariant : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// D(g) restricted to the openings the constraint allows, ascending.
std::vector<Label> winning_openings(const Graph& g, OpeningConstraint constraint);
std::vector<Label> winning_openings(const Graph& g, const Decomposition& dec, OpeningConstraint constraint);

/// Maximum matching of g - opening, which has size nu(g) exactly when the
/// opening is inessential. Throws PlanRefused for essential openings.
EnginePlan plan_first_player(const Graph& g, Label opening);

/// Any maximum matching of g; covers the opening because it is essential.
/// Throws PlanRefused for inessential openings.
EnginePlan plan_second_player(const Graph& g, Label opening);

/// The plan's move in `s`: the opening on an empty board for a first-mover
/// plan, otherwise the matching partner of the current number.
/// Throws BrokenInvariant when that move does not exist or is not legal,
/// and DomainError when it is not the plan-holder's turn.
Label engine_move(const EnginePlan& plan, const GameState& s);

struct PositionEval {
    bool player_to_move_wins = false;
    std::vector<Label> winning_moves;
};

/// Exact evaluation of a live position. After used set U, the rest of the
/// game is snake-in-the-box on g restricted to the unused vertices, started
/// at the next move; a legal move w wins iff w is inessential there.
/// Throws DomainError on a finished game.
PositionEval evaluate_position(const Graph& g, const GameState& s);

}  // namespace jg
