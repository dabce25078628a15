#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include "paracook/session/session.hpp"

namespace paracook::session {

/// HTTP + WebSocket facade over a SessionManager.
///
///   POST /sessions                  create (201, returns id and bearer token)
///   POST /sessions/{id}/start       lobby -> running
///   GET  /sessions/{id}/state       snapshot, legal actions for idle human agents
///   POST /sessions/{id}/actions     {"agent": "agent1", "action": {...}}
///   POST /sessions/{id}/finalize    optional {"abandon": true}
///   GET  /sessions/{id}/events      WebSocket: snapshot, then event/state frames in order
///
/// Every route except creation needs "Authorization: Bearer <token>" (or ?token= for the
/// WebSocket, which browsers cannot give headers).
class Server {
 public:
  Server(SessionManager& manager, const std::string& address, unsigned short port);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  unsigned short port() const;

  /// Accept loop on a background thread.
  void start();
  /// Blocks the caller until stop().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace paracook::session
