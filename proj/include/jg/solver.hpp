#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jg/game.hpp"

namespace jg {

inline constexpr int kSolverMaxN = 20;

/// Position key: which numbers are used and which one was played last.
/// Bit (k - 1) of `used` stands for number k.
struct SolverKey {
    std::uint32_t used = 0;
    Label current = 0;
};

struct SolveReport {
    int n = 0;
    OpeningConstraint constraint = OpeningConstraint::none;
    std::vector<Label> winning_openings;
    std::size_t states_visited = 0;
};

/// Exhaustive memoized game-tree search over (used, current). Works purely
/// from divisibility; it never looks at matchings.
class Solver {
public:
    /// Throws DomainError unless 1 <= n <= kSolverMaxN.
    explicit Solver(int n);

    int n() const noexcept { return n_; }

    /// True iff the player to move from `key` wins with perfect play.
    bool solve_state(SolverKey key);
    bool solve_state(const GameState& s);

    /// Same value without the memo table. Exponential; for cross-checks.
    bool solve_state_unmemoized(SolverKey key) const;

    /// Moves from `key` that leave the opponent lost, ascending.
    std::vector<Label> winning_moves(SolverKey key);
    std::vector<Label> winning_moves(const GameState& s);

    SolveReport solve_openings(OpeningConstraint constraint);

    /// Distinct positions solved so far.
    std::size_t states_visited() const noexcept { return visited_; }

    static SolverKey key_of(const GameState& s);

private:
    bool search(std::uint32_t used, int current);
    void check_key(SolverKey key) const;

    int n_;
    std::vector<std::uint32_t> neighbors_;  // index = label - 1
    std::vector<std::uint8_t> memo_;        // 0 unknown, 1 loss, 2 win
    std::size_t visited_ = 0;
};

}  // namespace jg
