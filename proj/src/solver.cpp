#include "jg/solver.hpp"

#include <bit>

namespace jg {

Solver::Solver(int n) : n_(n) {
    if (n < 1 || n > kSolverMaxN)
        throw DomainError("solver handles 1 <= n <= " + std::to_string(kSolverMaxN) + ", got " + std::to_string(n));
    neighbors_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && (i % j == 0 || j % i == 0)) neighbors_[static_cast<std::size_t>(i - 1)] |= 1u << (j - 1);
    memo_.assign(static_cast<std::size_t>(n) << n, 0);
}

void Solver::check_key(SolverKey key) const {
    if (key.current < 1 || key.current > n_) throw DomainError("solver key has current outside 1..n");
    if (n_ < 32 && (key.used >> n_) != 0) throw DomainError("solver key marks numbers above n");
    if (!(key.used & (1u << (key.current - 1)))) throw DomainError("solver key: current number must be marked used");
}

bool Solver::search(std::uint32_t used, int current) {
    const std::size_t slot = (static_cast<std::size_t>(current - 1) << n_) | used;
    if (memo_[slot] != 0) return memo_[slot] == 2;
    ++visited_;
    bool win = false;
    std::uint32_t moves = neighbors_[static_cast<std::size_t>(current - 1)] & ~used;
    while (moves) {
        const int bit = std::countr_zero(moves);
        moves &= moves - 1;
        if (!search(used | (1u << bit), bit + 1)) {
            win = true;
            break;
        }
    }
    memo_[slot] = win ? 2 : 1;
    return win;
}

bool Solver::solve_state(SolverKey key) {
    check_key(key);
    return search(key.used, key.current);
}

bool Solver::solve_state_unmemoized(SolverKey key) const {
    check_key(key);
    std::uint32_t moves = neighbors_[static_cast<std::size_t>(key.current - 1)] & ~key.used;
    while (moves) {
        const int bit = std::countr_zero(moves);
        moves &= moves - 1;
        if (!solve_state_unmemoized({key.used | (1u << bit), bit + 1})) return true;
    }
    return false;
}

std::vector<Label> Solver::winning_moves(SolverKey key) {
    check_key(key);
    std::vector<Label> out;
    std::uint32_t moves = neighbors_[static_cast<std::size_t>(key.current - 1)] & ~key.used;
    while (moves) {
        const int bit = std::countr_zero(moves);
        moves &= moves - 1;
        if (!search(key.used | (1u << bit), bit + 1)) out.push_back(bit + 1);
    }
    return out;
}

SolverKey Solver::key_of(const GameState& s) {
    SolverKey key;
    for (Label k : s.history()) key.used |= 1u << (k - 1);
    key.current = s.current().value_or(0);
    return key;
}

std::vector<Label> Solver::winning_moves(const GameState& s) {
    if (s.n() != n_) throw DomainError("state belongs to a different n");
    if (s.is_over()) return {};
    if (s.history().empty()) {
        std::vector<Label> out;
        for (Label v : s.legal_moves())
            if (!search(1u << (v - 1), v)) out.push_back(v);
        return out;
    }
    return winning_moves(key_of(s));
}

bool Solver::solve_state(const GameState& s) { return !winning_moves(s).empty(); }

SolveReport Solver::solve_openings(OpeningConstraint constraint) {
    SolveReport report;
    report.n = n_;
    report.constraint = constraint;
    for (Label v : legal_openings(n_, constraint))
        if (!search(1u << (v - 1), v)) report.winning_openings.push_back(v);
    report.states_visited = visited_;
    return report;
}

}  // namespace jg
