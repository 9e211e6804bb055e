#include "jg/http_server.hpp"

#include <httplib.h>

namespace jg {

namespace {

void send(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(GameService& service) : service_(service), server_(std::make_unique<httplib::Server>()) {
    auto& s = *server_;
    s.Get(R"(/api/v1/decomposition/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, service_.decomposition(req.matches[1].str()));
    });
    s.Get(R"(/api/v1/openings/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string constraint = req.has_param("constraint") ? req.get_param_value("constraint") : "";
        send(res, service_.openings(req.matches[1].str(), constraint));
    });
    s.Post("/api/v1/games", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, service_.create_game(req.body));
    });
    s.Get(R"(/api/v1/games/([^/]+)/hint)", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, service_.hint(req.matches[1].str()));
    });
    s.Post(R"(/api/v1/games/([^/]+)/moves)", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, service_.play_move(req.matches[1].str(), req.body));
    });
    s.Get(R"(/api/v1/games/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, service_.get_game(req.matches[1].str()));
    });
    s.Delete(R"(/api/v1/games/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, service_.delete_game(req.matches[1].str()));
    });
    s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) res.set_content(Json{{"error", "not found"}}.dump(), "application/json");
    });
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int HttpServer::bind_any(const std::string& host) { return server_->bind_to_any_port(host); }

bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace jg
