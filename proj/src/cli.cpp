#include "jg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jg/analysis.hpp"
#include "jg/http_server.hpp"
#include "jg/json_io.hpp"
#include "jg/service.hpp"

namespace jg {

namespace {

constexpr int kCliMaxN = 5000;

void check_n(int n, int max = kCliMaxN) {
    if (n < 1 || n > max)
        throw DomainError("n must be in 1.." + std::to_string(max) + ", got " + std::to_string(n));
}

void print_list(std::ostream& out, const std::vector<Label>& xs) {
    if (xs.empty()) {
        out << "none\n";
        return;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    out << '\n';
}

/// Reply for the side the engine is not playing: exact winning moves when
/// there are any, otherwise the first legal move.
Label adversary_move(const Graph& g, const GameState& s, std::optional<Solver>& solver) {
    const std::vector<Label> wins = solver ? solver->winning_moves(s) : evaluate_position(g, s).winning_moves;
    return wins.empty() ? s.legal_moves().front() : wins.front();
}

int selfplay(int n, OpeningConstraint constraint, Label opening, std::ostream& out) {
    check_n(n);
    if (!is_legal_opening(n, constraint, opening))
        throw DomainError(std::to_string(opening) + " is not a legal opening under '" +
                          std::string(to_string(constraint)) + "'");
    const Graph g = build_divisibility_graph(n);
    const bool engine_first = decompose(g).in_d(opening);
    const EnginePlan plan = engine_first ? plan_first_player(g, opening) : plan_second_player(g, opening);
    std::optional<Solver> solver;
    if (n <= kSolverMaxN) solver.emplace(n);

    const Player engine_side = engine_first ? Player::first : Player::second;
    GameState s = new_game({n, constraint}).apply_move(opening);
    while (!s.is_over()) {
        const Label move = s.to_move() == engine_side ? engine_move(plan, s) : adversary_move(g, s, solver);
        s = s.apply_move(move);
    }
    out << transcript_json(s).dump() << '\n';
    const bool engine_won = s.status() == (engine_side == Player::first ? GameStatus::won_by_first : GameStatus::won_by_second);
    out << "engine played " << (engine_first ? "player1" : "player2") << " and " << (engine_won ? "won" : "LOST") << '\n';
    return engine_won ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Juniper Green solver: Gallai-Edmonds decompositions, perfect play and analysis sweeps", "jg"};
    app.require_subcommand(1);

    int n = 0;
    bool naive = false;
    bool json = false;
    std::string constraint_text = "none";
    auto add_constraint = [&](CLI::App* sub) {
        sub->add_option("--constraint", constraint_text, "Opening constraint")
            ->check(CLI::IsMember({"none", "even", "composite"}));
    };

    auto* decompose_cmd = app.add_subcommand("decompose", "Gallai-Edmonds decomposition of G_n as JSON");
    decompose_cmd->add_option("--n", n, "Size of the board")->required();
    decompose_cmd->add_flag("--naive", naive, "Use the vertex-deletion oracle");

    auto* openings_cmd = app.add_subcommand("openings", "Winning first moves");
    openings_cmd->add_option("--n", n, "Size of the board")->required();
    add_constraint(openings_cmd);
    openings_cmd->add_flag("--json", json, "Print a JSON document");

    auto* solve_cmd = app.add_subcommand("solve", "Winning first moves by exhaustive search (n <= 20)");
    solve_cmd->add_option("--n", n, "Size of the board")->required();
    add_constraint(solve_cmd);
    solve_cmd->add_flag("--json", json, "Print the full solve report as JSON");

    int n_max = 0;
    std::string out_dir;
    auto* analyze_cmd = app.add_subcommand("analyze", "Write sweep, membership, bands and lemoine CSVs");
    analyze_cmd->add_option("--n-max", n_max, "Largest n to decompose")->required();
    analyze_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto* layout_cmd = app.add_subcommand("layout", "Write circular layout and edge CSVs for G_n");
    layout_cmd->add_option("--n", n, "Size of the board")->required();
    layout_cmd->add_option("--out", out_dir, "Output directory")->required();

    std::string transcript;
    auto* bestmove_cmd = app.add_subcommand("bestmove", "Winning moves in a recorded position");
    bestmove_cmd->add_option("--transcript", transcript, "Transcript JSON file")->required();

    int opening = 0;
    auto* selfplay_cmd = app.add_subcommand("selfplay", "Engine plays the winning side against an exact adversary");
    selfplay_cmd->add_option("--n", n, "Size of the board")->required();
    selfplay_cmd->add_option("--opening", opening, "First move of the game")->required();
    add_constraint(selfplay_cmd);

    int port = 8080;
    std::optional<int> n_limit;
    std::string host = "127.0.0.1";
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP/JSON service");
    serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--host", host, "Bind address");
    serve_cmd->add_option("--n-limit", n_limit, "Largest n served (default JG_N_LIMIT or 1000)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OpeningConstraint constraint = parse_constraint(constraint_text);
        if (*decompose_cmd) {
            check_n(n);
            const Graph g = build_divisibility_graph(n);
            out << decomposition_json(n, naive ? decompose_naive(g) : decompose(g)).dump() << '\n';
        } else if (*openings_cmd) {
            check_n(n);
            const auto winning = winning_openings(build_divisibility_graph(n), constraint);
            if (json) out << openings_json(n, constraint, winning).dump() << '\n';
            else print_list(out, winning);
        } else if (*solve_cmd) {
            check_n(n, kSolverMaxN);
            Solver solver(n);
            const SolveReport report = solver.solve_openings(constraint);
            if (json) out << solve_report_json(report).dump() << '\n';
            else print_list(out, report.winning_openings);
        } else if (*analyze_cmd) {
            check_n(n_max);
            const AnalysisOutput res = write_analysis(out_dir, n_max);
            for (const auto& f : res.files) out << "wrote " << f.string() << '\n';
            const BandSummary& b = res.bands;
            out << "A between n/3 and n/2 for n <= " << b.n_max << ": "
                << (b.a_gap_holds ? "none (observation holds)" : "present (observation fails)") << '\n';
            if (!b.a_gap_holds) {
                out << "  at n =";
                for (int v : b.a_gap_violations) out << ' ' << v;
                out << '\n';
            }
            out << "A elements at most n/3: " << b.a_at_most_third << " of " << b.a_total << '\n';
            out << "1 in A for every n from: " << (res.one_in_a_from ? std::to_string(*res.one_in_a_from) : "never")
                << '\n';
        } else if (*layout_cmd) {
            check_n(n);
            std::filesystem::create_directories(out_dir);
            std::ofstream(std::filesystem::path(out_dir) / "layout.csv") << layout_csv(circular_layout(n));
            std::ofstream(std::filesystem::path(out_dir) / "edges.csv") << edges_csv(build_divisibility_graph(n));
            out << "wrote layout.csv and edges.csv to " << out_dir << '\n';
        } else if (*bestmove_cmd) {
            const GameState s = load_transcript_file(transcript);
            if (s.is_over()) throw DomainError("the game in the transcript is already over");
            print_list(out, evaluate_position(build_divisibility_graph(s.n()), s).winning_moves);
        } else if (*selfplay_cmd) {
            return selfplay(n, constraint, opening, out);
        } else if (*serve_cmd) {
            GameService service({resolve_n_limit(n_limit)});
            HttpServer server(service);
            out << "serving on http://" << host << ':' << port << " (n-limit " << service.config().n_limit << ")"
                << std::endl;
            if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace jg
