// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jg/analysis.hpp"
#include "jg/decomposition.hpp"
#include "jg/engine.hpp"
#include "jg/matching.hpp"
#include "jg/solver.hpp"
#include "oracles.hpp"
#include "strategy_harness.hpp"

using namespace jg;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool pass = r.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s  %-34s %8.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", name, secs, limit_s, r.detail.c_str(),
                in_time ? "" : "  [too slow]");
    std::fflush(stdout);
}

std::string join(const std::vector<Label>& xs) {
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
    return s.str();
}

std::vector<Label> filter_legal(int n, OpeningConstraint c, const std::vector<Label>& xs) {
    std::vector<Label> out;
    for (Label v : xs)
        if (is_legal_opening(n, c, v)) out.push_back(v);
    return out;
}

bool prime(int k) {
    if (k < 2) return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

Outcome g16_fixture() {
    const Decomposition dec = decompose(build_divisibility_graph(16));
    const Decomposition want{{4, 6, 8, 9, 10, 11, 13, 15, 16}, {1, 2, 3, 5, 12}, {7, 14}};
    return {dec == want, "D {" + join(dec.d) + "} A {" + join(dec.a) + "} C {" + join(dec.c) + "}"};
}

Outcome main_result() {
    int checked = 0;
    for (int n = 1; n <= 16; ++n) {
        const Decomposition dec = decompose(build_divisibility_graph(n));
        Solver solver(n);
        for (auto c : {OpeningConstraint::none, OpeningConstraint::even, OpeningConstraint::composite}) {
            const auto got = solver.solve_openings(c).winning_openings;
            const auto want = filter_legal(n, c, dec.d);
            if (got != want)
                return {false, "n=" + std::to_string(n) + " " + std::string(to_string(c)) + ": solver {" + join(got) +
                                   "} vs D {" + join(want) + "}"};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (n, constraint) pairs agree"};
}

Outcome hundred() {
    const Decomposition dec = decompose(build_divisibility_graph(100));
    const bool ok = dec.in_d(58) && dec.in_d(62);
    return {ok, std::string("58 ") + class_letter(dec.class_of(58)) + ", 62 " + class_letter(dec.class_of(62))};
}

Outcome oracle_equivalence() {
    for (int n = 1; n <= 200; ++n) {
        const Graph g = build_divisibility_graph(n);
        if (decompose(g) != decompose_naive(g)) return {false, "G_" + std::to_string(n) + " differs from naive"};
    }

    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.8);
    int random_graphs = 0;
    for (; random_graphs < 600; ++random_graphs) {
        const Graph g = oracle::random_graph(rng, size(rng), density(rng));
        const Decomposition fast = decompose(g);
        if (fast != decompose_naive(g)) return {false, "random graph " + std::to_string(random_graphs) + " differs"};
        // D is also checked against the subset-recursion oracle, which shares no code with the blossom.
        const auto iness = oracle::SubsetMatcher(g).inessential();
        std::vector<Label> d;
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            if (iness[i]) d.push_back(g.label(i));
        if (d != fast.d) return {false, "random graph " + std::to_string(random_graphs) + " D disagrees with subset oracle"};
    }

    auto size_ok = [](const Graph& g) {
        const Matching m = maximum_matching(g);
        const auto all = enumerate_maximum_matchings(g);
        return verify_matching(g, m) && !all.empty() && m.size() == all.front().size();
    };
    for (int n = 1; n <= 10; ++n)
        if (!size_ok(build_divisibility_graph(n))) return {false, "matching size wrong on G_" + std::to_string(n)};
    int enumerated = 0;
    for (; enumerated < 500; ++enumerated) {
        const Graph g = oracle::random_graph_capped(rng, size(rng), density(rng), kEnumerationEdgeLimit);
        if (!size_ok(g)) return {false, "matching size wrong on capped random graph " + std::to_string(enumerated)};
    }
    return {true, "G_1..G_200, " + std::to_string(random_graphs) + " random decompositions, G_1..G_10 and " +
                      std::to_string(enumerated) + " random graphs (<= 24 edges) enumerated"};
}

Outcome adversarial() {
    std::size_t games = 0, losses = 0, broken = 0, adversary_wins = 0, openings = 0;
    for (int n = 1; n <= 12; ++n) {
        const Graph g = build_divisibility_graph(n);
        const Decomposition dec = decompose(g);
        Solver solver(n);
        for (Label v = 1; v <= n; ++v) {
            const auto s = harness::adversarial_games(g, solver, v, dec.in_d(v));
            games += s.games;
            losses += s.engine_losses;
            broken += s.broken_invariants;
            adversary_wins += s.adversary_had_win;
            ++openings;
        }
    }
    const bool ok = losses == 0 && broken == 0 && adversary_wins == 0 && games > 0;
    return {ok, std::to_string(openings) + " openings, " + std::to_string(games) + " games, " + std::to_string(losses) +
                    " losses, " + std::to_string(broken) + " broken invariants, " + std::to_string(adversary_wins) +
                    " adversary wins"};
}

Outcome evaluator() {
    std::size_t states = 0, value = 0, moves = 0;
    for (int n = 1; n <= 12; ++n) {
        const auto s = harness::evaluator_vs_solver(n);
        states += s.states;
        value += s.value_mismatches;
        moves += s.move_set_mismatches;
    }
    return {value == 0 && moves == 0 && states > 0, std::to_string(states) + " positions, " + std::to_string(value) +
                                                        " value mismatches, " + std::to_string(moves) +
                                                        " move-set mismatches"};
}

Outcome lemoine() {
    std::vector<int> missing;
    for (int n = 120; n <= 300; ++n) {
        const Decomposition dec = decompose(build_divisibility_graph(n));
        if (std::none_of(dec.d.begin(), dec.d.end(), [](Label v) { return v % 2 == 0; })) missing.push_back(n);
    }
    const auto rows = lemoine_check(120, 300);
    const bool tool_agrees = rows.size() == 181 &&
                             std::all_of(rows.begin(), rows.end(), [](const LemoineRow& r) { return r.even_witness.has_value(); });
    return {missing.empty() && tool_agrees,
            missing.empty() ? "even member of D for all 181 n" : "no even member at n=" + join(missing)};
}

Outcome large_primes() {
    int applicable = 0;
    std::string bad;
    for (int n = 1; n <= 300; ++n) {
        std::vector<Label> ps;
        for (int p = n / 2 + 1; p < n; ++p)
            if (2 * p > n && prime(p)) ps.push_back(p);
        if (ps.size() < 2) continue;
        ++applicable;
        const Decomposition dec = decompose(build_divisibility_graph(n));
        for (Label p : ps)
            if (!dec.in_d(p)) bad += " (" + std::to_string(n) + "," + std::to_string(p) + ")";
    }
    const bool tool_agrees = large_prime_check(300).empty();
    return {bad.empty() && tool_agrees, std::to_string(applicable) + " applicable n" + (bad.empty() ? "" : "; violations" + bad)};
}

Outcome berge_tutte() {
    for (int n = 1; n <= 300; ++n) {
        const Graph g = build_divisibility_graph(n);
        const Matching m = maximum_matching(g);
        if (!verify_matching(g, m) || find_augmenting_path(g, m))
            return {false, "augmenting path on G_" + std::to_string(n)};
        if (n <= 200) {
            const long deficiency = static_cast<long>(g.vertex_count()) - 2 * static_cast<long>(m.size());
            if (deficiency != oracle::odd_components_minus(g, decompose(g).a))
                return {false, "Tutte-Berge fails on G_" + std::to_string(n)};
        }
    }
    return {true, "no augmenting path n<=300; deficiency = odd(G-A) - |A| n<=200"};
}

Outcome decompose_thousand() {
    const auto t0 = std::chrono::steady_clock::now();
    const Decomposition dec = decompose(build_divisibility_graph(1000));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = dec.d.size() + dec.a.size() + dec.c.size() == 1000 && secs < 10.0;
    return {ok, "|D|=" + std::to_string(dec.d.size()) + " |A|=" + std::to_string(dec.a.size()) +
                    " |C|=" + std::to_string(dec.c.size())};
}

const std::filesystem::path& sweep_dir() {
    static const std::filesystem::path dir = std::filesystem::temp_directory_path() / "jg_acceptance_sweep";
    return dir;
}

AnalysisOutput sweep_result;

Outcome sweep() {
    std::filesystem::remove_all(sweep_dir());
    sweep_result = write_analysis(sweep_dir(), 300);
    int present = 0;
    for (const char* f : {"sweep.csv", "membership.csv", "bands.csv", "lemoine.csv"}) {
        const auto p = sweep_dir() / f;
        if (std::filesystem::exists(p) && std::filesystem::file_size(p) > 0) ++present;
    }
    return {present == 4, std::to_string(present) + "/4 CSVs written"};
}

Outcome bands() {
    std::ifstream in(sweep_dir() / "bands.csv");
    if (!in) return {false, "bands.csv missing"};
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    const BandSummary& b = sweep_result.bands;
    std::string status = b.a_gap_holds ? "observation holds" : "observation fails at " + std::to_string(b.a_gap_violations.size()) + " n";
    // Reported only; the pass condition is that the file and the summary exist.
    return {lines == 301 && b.n_max == 300,
            "no A in (n/3, n/2) for n<=300: " + status + "; A <= n/3: " + std::to_string(b.a_at_most_third) + "/" +
                std::to_string(b.a_total)};
}

}  // namespace

int main() {
    criterion("G_16 fixture", 1, g16_fixture);
    criterion("main result n=1..16", 120, main_result);
    criterion("58 and 62 in D(G_100)", 1, hundred);
    criterion("oracle equivalence", 300, oracle_equivalence);
    criterion("adversarial engine soundness", 300, adversarial);
    criterion("mid-game evaluator exactness", 600, evaluator);
    criterion("even winner for n in [120,300]", 120, lemoine);
    criterion("large-prime openings n<=300", 120, large_primes);
    criterion("Berge and Tutte-Berge", 300, berge_tutte);
    criterion("decompose(G_1000) under 10 s", 10, decompose_thousand);
    criterion("analysis sweep to 300", 300, sweep);
    criterion("band observations reported", 60, bands);
    std::filesystem::remove_all(sweep_dir());
    std::printf("%s: %d failing\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failures);
    return failures ? 1 : 0;
}
