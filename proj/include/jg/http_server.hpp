#pragma once

#include <memory>
#include <string>

#include "jg/service.hpp"

namespace httplib {
class Server;
}

namespace jg {

/// cpp-httplib front end for GameService under /api/v1.
class HttpServer {
public:
    explicit HttpServer(GameService& service);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds and serves until stop(); returns false if binding fails.
    bool listen(const std::string& host, int port);
    /// Binds to an ephemeral port; returns it, or -1 on failure.
    int bind_any(const std::string& host);
    /// Serves on a socket bound by bind_any.
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

private:
    GameService& service_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace jg
