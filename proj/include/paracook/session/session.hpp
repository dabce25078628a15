#pragma once

#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracook/harness/result_row.hpp"
#include "paracook/sim/interactive.hpp"

namespace paracook::session {

using json = nlohmann::json;

enum class Status { Lobby, Running, Finished };
std::string_view to_string(Status s);

/// Carries the HTTP status the facade should answer with.
class SessionError : public std::runtime_error {
 public:
  SessionError(int http_status, std::string code, const std::string& message)
      : std::runtime_error(message), http_status_(http_status), code_(std::move(code)) {}
  int http_status() const { return http_status_; }
  const std::string& code() const { return code_; }

 private:
  int http_status_;
  std::string code_;
};

/// Ordered frame queue for one subscriber. Frames carry a per-session sequence number.
class Subscription {
 public:
  /// Blocks up to `timeout`; nullopt on timeout or once closed and drained.
  std::optional<json> next(std::chrono::milliseconds timeout);
  bool closed() const;

 private:
  friend class Session;
  void push(json frame);
  void close();

  mutable std::mutex mutex_;
  std::condition_variable cv_;
  std::deque<json> frames_;
  bool closed_ = false;
};

struct CreateOptions {
  std::vector<sim::Controller> controllers;        // empty: every agent human
  std::vector<std::vector<sim::Action>> scripts;   // for scripted agents
};

/// One live kitchen. Every operation takes the session mutex, so commands are applied in one
/// order and all subscribers see the same frame sequence.
class Session {
 public:
  Session(std::string id, std::string token, std::shared_ptr<const world::TaskBundle> bundle, CreateOptions opts);

  const std::string& id() const { return id_; }
  bool authorized(std::string_view token) const;
  Status status() const;

  json start();
  /// {"event": Event, "state": WorldState}. Rejected actions are reported, not thrown.
  json submit(std::string_view agent, const sim::Action& action);
  /// Idempotent once finished. Without `abandon` the run must already be over.
  sim::RunRecord finalize(bool abandon, bool& newly_finished);

  json describe() const;  // id, status, state, legal actions, record when finished
  std::shared_ptr<Subscription> subscribe();  // first frame is a full snapshot

  const world::TaskBundle& bundle() const { return *bundle_; }

 private:
  json state_locked() const;
  void publish_new_events_locked();
  void finish_locked();

  const std::string id_;
  const std::string token_;
  std::shared_ptr<const world::TaskBundle> bundle_;
  mutable std::mutex mutex_;
  Status status_ = Status::Lobby;
  sim::InteractiveRun run_;
  std::optional<sim::RunRecord> record_;
  std::size_t published_ = 0;  // events already broadcast
  std::uint64_t frame_seq_ = 0;
  std::vector<std::weak_ptr<Subscription>> subscribers_;
};

/// Session registry. Finalized human runs are appended to the shared results store.
class SessionManager {
 public:
  explicit SessionManager(std::optional<std::filesystem::path> results = std::nullopt);

  struct Created {
    std::string id;
    std::string token;
    std::shared_ptr<Session> session;
  };
  /// Body: a bundle, or {"bundle": ..., "controllers": {"agent2": "scripted"}, "scripts": {"agent2": [...]}}.
  Created create(const json& body);

  /// Throws SessionError 404.
  std::shared_ptr<Session> get(std::string_view id) const;
  /// Throws SessionError 401 when the token does not match.
  std::shared_ptr<Session> authorize(std::string_view id, std::string_view token) const;

  json finalize(std::string_view id, std::string_view token, bool abandon);

  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::optional<harness::ResultStore> store_;
};

/// 128 random bits as hex.
std::string random_token();

}  // namespace paracook::session
