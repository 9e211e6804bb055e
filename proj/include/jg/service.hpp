#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>

#include "jg/decomposition.hpp"
#include "jg/engine.hpp"
#include "jg/json_io.hpp"

namespace jg {

inline constexpr int kDefaultNLimit = 1000;

/// `--n-limit` beats `JG_N_LIMIT`, which beats the default.
int resolve_n_limit(std::optional<int> flag);

struct ServiceConfig {
    int n_limit = kDefaultNLimit;
};

struct Response {
    int status = 200;
    Json body;
};

enum class EngineRole { none, first, second };

struct GameSession {
    std::string id;
    GameState state;
    EngineRole engine_role = EngineRole::none;
    std::optional<EnginePlan> plan;
    std::chrono::system_clock::time_point created_at;
    std::chrono::system_clock::time_point updated_at;
};

/// Decompositions, openings and live games behind the HTTP routes.
/// Every method is safe to call concurrently. Session mutations are
/// serialized per session id; the registry has its own lock.
class GameService {
public:
    explicit GameService(ServiceConfig config = {});

    const ServiceConfig& config() const noexcept { return config_; }

    Response decomposition(std::string_view n_text);
    Response openings(std::string_view n_text, std::string_view constraint_text);
    Response create_game(std::string_view body);
    Response get_game(const std::string& id);
    Response play_move(const std::string& id, std::string_view body);
    Response hint(const std::string& id);
    Response delete_game(const std::string& id);

    std::size_t session_count() const;

private:
    struct Prepared {
        Graph graph;
        Decomposition dec;
    };
    struct Slot {
        std::mutex mu;
        GameSession session;
    };

    std::shared_ptr<const Prepared> prepared(int n);
    std::shared_ptr<Slot> find(const std::string& id) const;
    std::optional<int> parse_n(std::string_view text) const;

    /// Plays the engine's turn if it has one; returns the move made.
    std::optional<Label> engine_turn(GameSession& s);
    Json session_json(const GameSession& s) const;

    ServiceConfig config_;

    mutable std::mutex cache_mu_;
    std::map<int, std::shared_ptr<const Prepared>> cache_;

    mutable std::mutex registry_mu_;
    std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
    std::mt19937_64 id_rng_;
};

std::string_view to_string(EngineRole r) noexcept;

}  // namespace jg
