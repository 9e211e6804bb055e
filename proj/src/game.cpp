#include "jg/game.hpp"

namespace jg {

std::string_view to_string(OpeningConstraint c) noexcept {
    switch (c) {
        case OpeningConstraint::none: return "none";
        case OpeningConstraint::even: return "even";
        case OpeningConstraint::composite: return "composite";
    }
    return "none";
}

OpeningConstraint parse_constraint(std::string_view s) {
    if (s == "none") return OpeningConstraint::none;
    if (s == "even") return OpeningConstraint::even;
    if (s == "composite") return OpeningConstraint::composite;
    throw DomainError("unknown opening constraint '" + std::string(s) + "'");
}

bool is_legal_opening(int n, OpeningConstraint c, Label k) noexcept {
    if (k < 1 || k > n) return false;
    switch (c) {
        case OpeningConstraint::none: return true;
        case OpeningConstraint::even: return k % 2 == 0;
        case OpeningConstraint::composite:
            for (int d = 2; d * d <= k; ++d)
                if (k % d == 0) return true;
            return false;
    }
    return false;
}

std::vector<Label> legal_openings(int n, OpeningConstraint c) {
    std::vector<Label> out;
    for (Label k = 1; k <= n; ++k)
        if (is_legal_opening(n, c, k)) out.push_back(k);
    return out;
}

Player opponent(Player p) noexcept { return p == Player::first ? Player::second : Player::first; }

std::string_view result_string(GameStatus s) noexcept {
    switch (s) {
        case GameStatus::won_by_first: return "player1";
        case GameStatus::won_by_second: return "player2";
        case GameStatus::ongoing: return "ongoing";
    }
    return "ongoing";
}

std::optional<Label> GameState::current() const noexcept {
    if (history_.empty()) return std::nullopt;
    return history_.back();
}

bool GameState::is_used(Label k) const noexcept {
    return k >= 1 && k <= rules_.n && used_[static_cast<std::size_t>(k)] != 0;
}

std::vector<Label> GameState::unused() const {
    std::vector<Label> out;
    for (Label k = 1; k <= rules_.n; ++k)
        if (!used_[static_cast<std::size_t>(k)]) out.push_back(k);
    return out;
}

bool GameState::is_legal(Label k) const noexcept {
    if (k < 1 || k > rules_.n || is_used(k)) return false;
    if (history_.empty()) return is_legal_opening(rules_.n, rules_.constraint, k);
    const Label c = history_.back();
    return k % c == 0 || c % k == 0;
}

std::vector<Label> GameState::compute_legal() const {
    std::vector<Label> out;
    if (history_.empty()) {
        for (Label k = 1; k <= rules_.n; ++k)
            if (is_legal_opening(rules_.n, rules_.constraint, k)) out.push_back(k);
        return out;
    }
    // Divisors of c below c, then multiples above it; both ascending.
    const Label c = history_.back();
    for (Label d = 1; d < c; ++d)
        if (c % d == 0 && !is_used(d)) out.push_back(d);
    for (Label m = 2 * c; m <= rules_.n; m += c)
        if (!is_used(m)) out.push_back(m);
    return out;
}

std::vector<Label> GameState::legal_moves() const {
    if (is_over()) return {};
    return compute_legal();
}

void GameState::refresh_status() {
    if (!compute_legal().empty()) {
        status_ = GameStatus::ongoing;
        return;
    }
    // Player to move is stuck and loses.
    status_ = to_move() == Player::first ? GameStatus::won_by_second : GameStatus::won_by_first;
}

GameState GameState::apply_move(Label k) const {
    using R = IllegalMove::Reason;
    if (is_over()) throw IllegalMove(R::game_over, "game is already over");
    if (k < 1 || k > rules_.n)
        throw IllegalMove(R::out_of_range, std::to_string(k) + " is outside 1.." + std::to_string(rules_.n));
    if (is_used(k)) throw IllegalMove(R::used, std::to_string(k) + " has already been used");
    if (history_.empty()) {
        if (!is_legal_opening(rules_.n, rules_.constraint, k))
            throw IllegalMove(R::constraint, std::to_string(k) + " violates the '" +
                                                 std::string(to_string(rules_.constraint)) + "' opening constraint");
    } else {
        const Label c = history_.back();
        if (k % c != 0 && c % k != 0)
            throw IllegalMove(R::not_adjacent,
                              std::to_string(k) + " is neither a factor nor a multiple of " + std::to_string(c));
    }
    GameState next = *this;
    next.history_.push_back(k);
    next.used_[static_cast<std::size_t>(k)] = 1;
    next.refresh_status();
    return next;
}

GameState new_game(const Ruleset& rules) {
    if (rules.n < 1) throw DomainError("game needs n >= 1, got " + std::to_string(rules.n));
    GameState s;
    s.rules_ = rules;
    s.used_.assign(static_cast<std::size_t>(rules.n) + 1, 0);
    s.refresh_status();
    return s;
}

GameState replay(const Ruleset& rules, std::span<const Label> moves) {
    GameState s = new_game(rules);
    for (Label k : moves) s = s.apply_move(k);
    return s;
}

}  // namespace jg
