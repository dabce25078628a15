#include "paracook/session/server.hpp"

#include <list>
#include <mutex>
#include <regex>
#include <sstream>

#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

namespace paracook::session {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace asio = boost::asio;
using tcp = asio::ip::tcp;

namespace {

using Request = http::request<http::string_body>;
using Response = http::response<http::string_body>;

Response json_response(const Request& req, http::status status, const json& body) {
  Response res{status, req.version()};
  res.set(http::field::content_type, "application/json");
  res.set(http::field::access_control_allow_origin, "*");
  res.keep_alive(req.keep_alive());
  res.body() = body.dump();
  res.prepare_payload();
  return res;
}

Response error_response(const Request& req, int status, const std::string& code, const std::string& message) {
  return json_response(req, static_cast<http::status>(status), {{"error", {{"code", code}, {"message", message}}}});
}

std::string query_param(const std::string& target, const std::string& key) {
  const auto q = target.find('?');
  if (q == std::string::npos) return {};
  std::istringstream rest(target.substr(q + 1));
  for (std::string pair; std::getline(rest, pair, '&');) {
    const auto eq = pair.find('=');
    if (eq != std::string::npos && pair.compare(0, eq, key) == 0 && eq == key.size()) return pair.substr(eq + 1);
  }
  return {};
}

std::string bearer(const Request& req) {
  const auto it = req.find(http::field::authorization);
  if (it != req.end()) {
    std::string_view v(it->value().data(), it->value().size());
    constexpr std::string_view prefix = "Bearer ";
    if (v.substr(0, prefix.size()) == prefix) return std::string(v.substr(prefix.size()));
  }
  return query_param(std::string(req.target()), "token");
}

json parse_body(const Request& req, bool allow_empty) {
  if (req.body().empty()) {
    if (allow_empty) return json::object();
    throw SessionError(400, "schema", "request body is required");
  }
  try {
    return json::parse(req.body());
  } catch (const json::parse_error& e) {
    throw SessionError(400, "schema", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

struct Server::Impl {
  SessionManager& manager;
  asio::io_context ioc{1};
  tcp::acceptor acceptor{ioc};
  std::atomic<bool> stopping{false};
  std::thread accept_thread;

  std::mutex conn_mutex;
  std::list<std::shared_ptr<tcp::socket>> sockets;
  std::list<std::thread> workers;

  explicit Impl(SessionManager& m) : manager(m) {}

  Response route(const Request& req, const std::string& path);
  void serve(std::shared_ptr<tcp::socket> socket);
  void stream_events(std::shared_ptr<tcp::socket> socket, Request req, const std::string& id);
  void accept_loop();
};

Response Server::Impl::route(const Request& req, const std::string& path) {
  static const std::regex session_route(R"(^/sessions/([0-9a-f]+)/(state|actions|finalize|start)$)");
  if (req.method() == http::verb::options) {
    Response res{http::status::no_content, req.version()};
    res.set(http::field::access_control_allow_origin, "*");
    res.set(http::field::access_control_allow_headers, "Authorization, Content-Type");
    res.set(http::field::access_control_allow_methods, "GET, POST, OPTIONS");
    res.keep_alive(req.keep_alive());
    res.prepare_payload();
    return res;
  }
  if (path == "/sessions") {
    if (req.method() != http::verb::post) return error_response(req, 405, "method", "use POST");
    auto c = manager.create(parse_body(req, false));
    return json_response(req, http::status::created,
                         {{"id", c.id}, {"token", c.token}, {"status", "lobby"}, {"session", c.session->describe()}});
  }
  std::smatch m;
  if (!std::regex_match(path, m, session_route)) return error_response(req, 404, "not-found", "no such route");
  const std::string id = m[1];
  const std::string op = m[2];
  const std::string token = bearer(req);

  if (op == "state") {
    if (req.method() != http::verb::get) return error_response(req, 405, "method", "use GET");
    return json_response(req, http::status::ok, manager.authorize(id, token)->describe());
  }
  if (req.method() != http::verb::post) return error_response(req, 405, "method", "use POST");
  if (op == "start") return json_response(req, http::status::ok, manager.authorize(id, token)->start());
  if (op == "finalize") {
    const json body = parse_body(req, true);
    const bool abandon = body.is_object() && body.value("abandon", false);
    return json_response(req, http::status::ok, manager.finalize(id, token, abandon));
  }
  // actions
  auto s = manager.authorize(id, token);
  const json body = parse_body(req, false);
  if (!body.is_object() || !body.contains("agent") || !body.at("agent").is_string() || !body.contains("action"))
    throw SessionError(400, "schema", "expected {\"agent\": \"agentN\", \"action\": {...}}");
  sim::Action action;
  try {
    action = sim::action_from_json(body.at("action"));
  } catch (const std::exception& e) {
    throw SessionError(400, "schema", std::string("invalid action: ") + e.what());
  }
  return json_response(req, http::status::ok, s->submit(body.at("agent").get<std::string>(), action));
}

void Server::Impl::stream_events(std::shared_ptr<tcp::socket> socket, Request req, const std::string& id) {
  std::shared_ptr<Session> s;
  try {
    s = manager.authorize(id, bearer(req));
  } catch (const SessionError& e) {
    beast::error_code ec;
    http::write(*socket, error_response(req, e.http_status(), e.code(), e.what()), ec);
    return;
  }
  websocket::stream<tcp::socket&> ws(*socket);
  beast::error_code ec;
  ws.accept(req, ec);
  if (ec) return;
  ws.text(true);
  auto sub = s->subscribe();
  while (!stopping) {
    auto frame = sub->next(std::chrono::milliseconds(500));
    if (!frame) {
      if (sub->closed()) break;
      continue;
    }
    ws.write(asio::buffer(frame->dump()), ec);
    if (ec) return;  // client went away
  }
  ws.close(websocket::close_code::normal, ec);
}

void Server::Impl::serve(std::shared_ptr<tcp::socket> socket) {
  beast::flat_buffer buffer;
  beast::error_code ec;
  while (!stopping) {
    Request req;
    http::read(*socket, buffer, req, ec);
    if (ec) break;
    const std::string target(req.target());
    const std::string path = target.substr(0, target.find('?'));

    static const std::regex events_route(R"(^/sessions/([0-9a-f]+)/events$)");
    std::smatch m;
    if (websocket::is_upgrade(req)) {
      if (std::regex_match(path, m, events_route)) stream_events(socket, std::move(req), m[1]);
      break;
    }

    Response res;
    try {
      res = route(req, path);
    } catch (const SessionError& e) {
      res = error_response(req, e.http_status(), e.code(), e.what());
    } catch (const std::exception& e) {
      res = error_response(req, 500, "internal", e.what());
    }
    const bool keep = res.keep_alive();
    http::write(*socket, res, ec);
    if (ec || !keep) break;
  }
  socket->shutdown(tcp::socket::shutdown_both, ec);
  std::lock_guard lock(conn_mutex);
  sockets.remove(socket);
}

void Server::Impl::accept_loop() {
  while (!stopping) {
    auto socket = std::make_shared<tcp::socket>(ioc);
    beast::error_code ec;
    acceptor.accept(*socket, ec);
    if (ec) {
      if (stopping) break;
      continue;
    }
    std::lock_guard lock(conn_mutex);
    sockets.push_back(socket);
    workers.emplace_back([this, socket] { serve(socket); });
  }
}

Server::Server(SessionManager& manager, const std::string& address, unsigned short port)
    : impl_(std::make_unique<Impl>(manager)) {
  const tcp::endpoint ep(asio::ip::make_address(address), port);
  impl_->acceptor.open(ep.protocol());
  impl_->acceptor.set_option(asio::socket_base::reuse_address(true));
  impl_->acceptor.bind(ep);
  impl_->acceptor.listen();
}

Server::~Server() { stop(); }

unsigned short Server::port() const { return impl_->acceptor.local_endpoint().port(); }

void Server::start() {
  impl_->accept_thread = std::thread([this] { impl_->accept_loop(); });
}

void Server::run() {
  start();
  impl_->accept_thread.join();
}

void Server::stop() {
  if (impl_->stopping.exchange(true)) return;
  beast::error_code ec;
  impl_->acceptor.cancel(ec);
  // Blocking accept() is not woken by cancel on every platform; shutting the descriptor is.
  ::shutdown(impl_->acceptor.native_handle(), SHUT_RDWR);
  impl_->acceptor.close(ec);
  if (impl_->accept_thread.joinable() && impl_->accept_thread.get_id() != std::this_thread::get_id())
    impl_->accept_thread.join();
  std::list<std::thread> workers;
  {
    std::lock_guard lock(impl_->conn_mutex);
    for (auto& s : impl_->sockets) s->shutdown(tcp::socket::shutdown_both, ec);
    workers.swap(impl_->workers);
  }
  for (auto& t : workers) t.join();
}

}  // namespace paracook::session
