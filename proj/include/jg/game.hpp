#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jg/graph.hpp"

namespace jg {

enum class OpeningConstraint { none, even, composite };

std::string_view to_string(OpeningConstraint c) noexcept;
/// Parses "none" / "even" / "composite"; throws DomainError otherwise.
OpeningConstraint parse_constraint(std::string_view s);

/// Whether `k` may open a game on 1..n. Composite means "has a divisor
/// other than 1 and itself", so 1 is never composite.
bool is_legal_opening(int n, OpeningConstraint c, Label k) noexcept;
std::vector<Label> legal_openings(int n, OpeningConstraint c);

struct Ruleset {
    int n = 1;
    OpeningConstraint constraint = OpeningConstraint::none;
    friend bool operator==(const Ruleset&, const Ruleset&) = default;
};

enum class Player { first, second };
enum class GameStatus { ongoing, won_by_first, won_by_second };

Player opponent(Player p) noexcept;

class IllegalMove : public DomainError {
public:
    enum class Reason { game_over, out_of_range, used, not_adjacent, constraint };
    IllegalMove(Reason reason, const std::string& what) : DomainError(what), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// Immutable Juniper Green position. Legality is computed arithmetically
/// from the divisibility relation, so a state needs no graph.
class GameState {
public:
    const Ruleset& ruleset() const noexcept { return rules_; }
    int n() const noexcept { return rules_.n; }
    std::span<const Label> history() const noexcept { return history_; }
    std::optional<Label> current() const noexcept;
    Player to_move() const noexcept { return history_.size() % 2 == 0 ? Player::first : Player::second; }
    GameStatus status() const noexcept { return status_; }
    bool is_over() const noexcept { return status_ != GameStatus::ongoing; }

    bool is_used(Label k) const noexcept;
    std::vector<Label> unused() const;
    /// Ascending. Empty iff the game is over.
    std::vector<Label> legal_moves() const;
    bool is_legal(Label k) const noexcept;

    /// Plays k for the player to move. Throws IllegalMove naming the rule.
    GameState apply_move(Label k) const;

    friend bool operator==(const GameState&, const GameState&) = default;

private:
    friend GameState new_game(const Ruleset& rules);

    std::vector<Label> compute_legal() const;
    void refresh_status();

    Ruleset rules_;
    std::vector<char> used_;  // index = label
    std::vector<Label> history_;
    GameStatus status_ = GameStatus::ongoing;
};

/// Fresh game. With no legal opening under the constraint the state is
/// already over and won by the second player.
GameState new_game(const Ruleset& rules);

/// Replays `moves` from the initial position, validating each one.
GameState replay(const Ruleset& rules, std::span<const Label> moves);

std::string_view result_string(GameStatus s) noexcept;  // player1 | player2 | ongoing

}  // namespace jg
