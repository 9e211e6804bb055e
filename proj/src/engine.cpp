#include "jg/engine.hpp"

#include <algorithm>

namespace jg {

std::string_view to_string(Role r) noexcept { return r == Role::first_mover ? "first" : "second"; }

std::vector<Label> winning_openings(const Graph& g, const Decomposition& dec, OpeningConstraint constraint) {
    std::vector<Label> out;
    for (Label v : dec.d)
        if (is_legal_opening(g.max_label(), constraint, v)) out.push_back(v);
    return out;
}

std::vector<Label> winning_openings(const Graph& g, OpeningConstraint constraint) {
    return winning_openings(g, decompose(g), constraint);
}

EnginePlan plan_first_player(const Graph& g, Label opening) {
    const std::size_t nu = matching_number(g);
    const Matching without = maximum_matching(remove_vertex(g, opening));
    if (without.size() != nu)
        throw PlanRefused("opening " + std::to_string(opening) + " is essential; the first player cannot force a win");
    // Re-home the partner map onto g's label range.
    return {Role::first_mover, Matching::from_pairs(g.max_label(), without.pairs()), opening};
}

EnginePlan plan_second_player(const Graph& g, Label opening) {
    if (is_inessential(g, opening))
        throw PlanRefused("opening " + std::to_string(opening) +
                          " is inessential; the second player cannot force a win");
    Matching m = maximum_matching(g);
    if (m.is_exposed(opening)) throw BrokenInvariant("maximum matching misses an essential vertex");
    return {Role::second_mover, std::move(m), opening};
}

Label engine_move(const EnginePlan& plan, const GameState& s) {
    if (s.is_over()) throw DomainError("game is over");
    const Player side = plan.role == Role::first_mover ? Player::first : Player::second;
    if (s.to_move() != side) throw DomainError("it is not the engine's turn");
    if (s.history().empty()) {
        if (!s.is_legal(plan.opening)) throw BrokenInvariant("planned opening is not legal");
        return plan.opening;
    }
    if (s.history().front() != plan.opening) throw BrokenInvariant("game was not opened with the planned vertex");
    const Label current = *s.current();
    const auto reply = plan.matching.partner(current);
    if (!reply) throw BrokenInvariant("opponent reached " + std::to_string(current) + ", which the plan leaves exposed");
    if (!s.is_legal(*reply))
        throw BrokenInvariant("planned reply " + std::to_string(*reply) + " to " + std::to_string(current) +
                              " is not available");
    return *reply;
}

PositionEval evaluate_position(const Graph& g, const GameState& s) {
    if (s.is_over()) throw DomainError("cannot evaluate a finished game");
    const std::vector<Label> legal = s.legal_moves();
    const Graph rest = induced_subgraph(g, s.unused());
    const Decomposition dec = decompose(rest);

    PositionEval out;
    for (Label w : legal)
        if (dec.in_d(w)) out.winning_moves.push_back(w);
    out.player_to_move_wins = !out.winning_moves.empty();
    return out;
}

}  // namespace jg
