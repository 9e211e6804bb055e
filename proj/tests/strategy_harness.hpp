#pragma once

// Exhaustive checks that pit the matching engine against the game-tree
// solver. Shared by the engine unit tests and the acceptance suite.

#include <functional>
#include <set>
#include <utility>

#include "jg/engine.hpp"
#include "jg/solver.hpp"

namespace jg::harness {

struct AdversaryStats {
    std::size_t games = 0;
    std::size_t engine_losses = 0;
    std::size_t broken_invariants = 0;
    std::size_t adversary_had_win = 0;  // solver found a win for the adversary somewhere
};

/// Plays the theoretically winning side of `opening` with the engine and
/// lets the adversary try every legal reply at every turn. The solver
/// double-checks that the adversary is lost at each of its turns.
inline AdversaryStats adversarial_games(const Graph& g, Solver& solver, Label opening, bool opening_in_d) {
    AdversaryStats stats;
    const int n = static_cast<int>(g.vertex_count());
    const GameState start = new_game({n, OpeningConstraint::none});
    const EnginePlan plan = opening_in_d ? plan_first_player(g, opening) : plan_second_player(g, opening);

    std::function<void(const GameState&)> engine_turn;
    std::function<void(const GameState&)> adversary_turn = [&](const GameState& s) {
        if (s.is_over()) {
            ++stats.games;  // adversary is stuck
            return;
        }
        if (solver.solve_state(s)) ++stats.adversary_had_win;
        for (Label r : s.legal_moves()) engine_turn(s.apply_move(r));
    };
    engine_turn = [&](const GameState& s) {
        if (s.is_over()) {
            ++stats.games;
            ++stats.engine_losses;
            return;
        }
        Label move = 0;
        try {
            move = engine_move(plan, s);
        } catch (const BrokenInvariant&) {
            ++stats.games;
            ++stats.broken_invariants;
            return;
        }
        adversary_turn(s.apply_move(move));
    };

    if (opening_in_d) {
        if (engine_move(plan, start) != opening) ++stats.broken_invariants;
        adversary_turn(start.apply_move(opening));
    } else {
        engine_turn(start.apply_move(opening));
    }
    return stats;
}

struct EvaluatorStats {
    std::size_t states = 0;
    std::size_t value_mismatches = 0;
    std::size_t move_set_mismatches = 0;
};

/// Compares evaluate_position with the solver on every distinct reachable
/// (used, current) position of G_n, plus the empty board for each
/// opening constraint.
inline EvaluatorStats evaluator_vs_solver(int n) {
    const Graph g = build_divisibility_graph(n);
    Solver solver(n);
    EvaluatorStats stats;
    auto compare = [&](const GameState& s) {
        ++stats.states;
        const PositionEval eval = evaluate_position(g, s);
        const std::vector<Label> truth = solver.winning_moves(s);
        if (eval.player_to_move_wins != !truth.empty()) ++stats.value_mismatches;
        if (eval.winning_moves != truth) ++stats.move_set_mismatches;
    };

    std::set<std::pair<std::uint32_t, Label>> seen;
    std::function<void(const GameState&)> walk = [&](const GameState& s) {
        const SolverKey key = Solver::key_of(s);
        if (!seen.insert({key.used, key.current}).second) return;
        if (s.is_over()) return;
        compare(s);
        for (Label k : s.legal_moves()) walk(s.apply_move(k));
    };

    for (auto c : {OpeningConstraint::none, OpeningConstraint::even, OpeningConstraint::composite}) {
        const GameState empty = new_game({n, c});
        if (!empty.is_over()) compare(empty);
    }
    const GameState empty = new_game({n, OpeningConstraint::none});
    for (Label k : empty.legal_moves()) walk(empty.apply_move(k));
    return stats;
}

}  // namespace jg::harness
