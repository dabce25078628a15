#include "paracook/session/session.hpp"

#include <algorithm>
#include <random>

#include "paracook/taskgen/bundle_io.hpp"
#include "paracook/world/json_io.hpp"

namespace paracook::session {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Lobby: return "lobby";
    case Status::Running: return "running";
    case Status::Finished: return "finished";
  }
  return "?";
}

std::string random_token() {
  static std::mutex m;
  static std::random_device rd;
  std::lock_guard lock(m);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 4; ++i) {
    std::uint32_t v = rd();
    for (int k = 0; k < 8; ++k, v >>= 4) out.push_back(hex[v & 0xF]);
  }
  return out;
}

// --- Subscription ---------------------------------------------------------------------------

std::optional<json> Subscription::next(std::chrono::milliseconds timeout) {
  std::unique_lock lock(mutex_);
  cv_.wait_for(lock, timeout, [&] { return !frames_.empty() || closed_; });
  if (frames_.empty()) return std::nullopt;
  json f = std::move(frames_.front());
  frames_.pop_front();
  return f;
}

bool Subscription::closed() const {
  std::lock_guard lock(mutex_);
  return closed_ && frames_.empty();
}

void Subscription::push(json frame) {
  {
    std::lock_guard lock(mutex_);
    if (closed_) return;
    frames_.push_back(std::move(frame));
  }
  cv_.notify_all();
}

void Subscription::close() {
  {
    std::lock_guard lock(mutex_);
    closed_ = true;
  }
  cv_.notify_all();
}

// --- Session --------------------------------------------------------------------------------

Session::Session(std::string id, std::string token, std::shared_ptr<const world::TaskBundle> bundle,
                 CreateOptions opts)
    : id_(std::move(id)),
      token_(std::move(token)),
      bundle_(bundle),
      run_(std::move(bundle), std::move(opts.controllers), std::move(opts.scripts)) {
  published_ = run_.sim().events().size();
}

bool Session::authorized(std::string_view token) const {
  // Length check first, then a constant-time compare.
  if (token.size() != token_.size()) return false;
  unsigned diff = 0;
  for (std::size_t i = 0; i < token.size(); ++i) diff |= static_cast<unsigned char>(token[i] ^ token_[i]);
  return diff == 0;
}

Status Session::status() const {
  std::lock_guard lock(mutex_);
  return status_;
}

json Session::state_locked() const { return sim::to_json(run_.state(), run_.sim()); }

void Session::publish_new_events_locked() {
  const auto& events = run_.sim().events();
  std::vector<json> frames;
  for (; published_ < events.size(); ++published_)
    frames.push_back({{"type", "event"}, {"seq", frame_seq_++}, {"event", sim::to_json(events[published_])}});
  frames.push_back({{"type", "state"}, {"seq", frame_seq_++}, {"status", to_string(status_)}, {"state", state_locked()}});
  subscribers_.erase(std::remove_if(subscribers_.begin(), subscribers_.end(),
                                    [](const auto& w) { return w.expired(); }),
                     subscribers_.end());
  for (const auto& w : subscribers_)
    if (auto s = w.lock())
      for (const auto& f : frames) s->push(f);
}

void Session::finish_locked() {
  record_ = run_.record("human");
  status_ = Status::Finished;
  publish_new_events_locked();
  json done = {{"type", "finished"}, {"seq", frame_seq_++}, {"record", sim::to_json(*record_)}};
  for (const auto& w : subscribers_)
    if (auto s = w.lock()) {
      s->push(done);
      s->close();
    }
  subscribers_.clear();
}

json Session::start() {
  std::lock_guard lock(mutex_);
  if (status_ != Status::Lobby)
    throw SessionError(409, "wrong-state", "session is " + std::string(to_string(status_)) + ", not lobby");
  status_ = Status::Running;
  publish_new_events_locked();
  return {{"id", id_}, {"status", to_string(status_)}, {"state", state_locked()}};
}

json Session::submit(std::string_view agent, const sim::Action& action) {
  std::lock_guard lock(mutex_);
  if (status_ != Status::Running)
    throw SessionError(409, "wrong-state", "session is " + std::string(to_string(status_)) + ", not running");
  const auto idx = world::parse_agent_name(agent);
  if (!idx || *idx >= run_.sim().agent_count())
    throw SessionError(404, "unknown-agent", "no agent '" + std::string(agent) + "' in this session");
  if (run_.controller(*idx) != sim::Controller::Human)
    throw SessionError(403, "unauthorized-agent", std::string(agent) + " is not controlled by this client");
  const sim::Event ev = run_.step(*idx, action);
  publish_new_events_locked();
  return {{"event", sim::to_json(ev)}, {"status", to_string(status_)}, {"over", run_.over()},
          {"state", state_locked()}};
}

sim::RunRecord Session::finalize(bool abandon, bool& newly_finished) {
  std::lock_guard lock(mutex_);
  newly_finished = false;
  if (status_ == Status::Finished) return *record_;
  if (status_ == Status::Lobby) throw SessionError(409, "wrong-state", "a session in the lobby cannot be finalized");
  if (!run_.over()) {
    if (!abandon)
      throw SessionError(409, "not-over", "orders remain and t_max has not been reached; pass {\"abandon\": true}");
    run_.abandon();
  }
  finish_locked();
  newly_finished = true;
  return *record_;
}

json Session::describe() const {
  std::lock_guard lock(mutex_);
  json legal = json::object();
  for (world::AgentIndex a = 0; a < run_.sim().agent_count(); ++a) {
    if (run_.controller(a) != sim::Controller::Human) continue;
    const sim::LegalActions la = sim::legal_actions(run_.sim(), a);
    json actions = json::array();
    for (const auto& act : la.actions) actions.push_back(sim::to_json(act));
    json reach = json::array();
    for (const auto& c : la.reachable) reach.push_back(world::to_json(c));
    legal[world::agent_name(a)] = {{"actions", actions}, {"reachable", reach}};
  }
  json controllers = json::object();
  for (world::AgentIndex a = 0; a < run_.sim().agent_count(); ++a)
    controllers[world::agent_name(a)] = run_.controller(a) == sim::Controller::Human ? "human" : "scripted";
  json j = {{"id", id_},
            {"bundle_id", bundle_->id},
            {"status", to_string(status_)},
            {"controllers", controllers},
            {"awaiting_input", run_.awaiting_input()},
            {"state", state_locked()},
            {"legal", legal}};
  if (record_) j["record"] = sim::to_json(*record_);
  return j;
}

std::shared_ptr<Subscription> Session::subscribe() {
  std::lock_guard lock(mutex_);
  auto sub = std::make_shared<Subscription>();
  json events = json::array();
  const auto& log = run_.sim().events();
  for (std::size_t i = 0; i < published_; ++i) events.push_back(sim::to_json(log[i]));
  sub->push({{"type", "snapshot"},
             {"seq", frame_seq_},
             {"status", to_string(status_)},
             {"events", events},
             {"state", state_locked()}});
  if (status_ == Status::Finished) {
    sub->push({{"type", "finished"}, {"seq", frame_seq_}, {"record", sim::to_json(*record_)}});
    sub->close();
  } else {
    subscribers_.push_back(sub);
  }
  return sub;
}

// --- SessionManager -------------------------------------------------------------------------

SessionManager::SessionManager(std::optional<std::filesystem::path> results) {
  if (results) store_.emplace(*results);
}

SessionManager::Created SessionManager::create(const json& body) {
  if (!body.is_object()) throw SessionError(400, "schema", "request body must be a JSON object");
  const json& bj = body.contains("bundle") ? body.at("bundle") : body;
  std::shared_ptr<const world::TaskBundle> bundle;
  try {
    bundle = std::make_shared<const world::TaskBundle>(taskgen::bundle_from_json(bj));
  } catch (const std::exception& e) {
    throw SessionError(400, "schema", std::string("invalid bundle: ") + e.what());
  }

  CreateOptions opts;
  const auto n = static_cast<std::size_t>(bundle->n_agents);
  if (body.contains("controllers")) {
    opts.controllers.assign(n, sim::Controller::Human);
    opts.scripts.resize(n);
    const json& cj = body.at("controllers");
    if (!cj.is_object()) throw SessionError(400, "schema", "'controllers' must map agent ids to human|scripted");
    for (const auto& [name, kind] : cj.items()) {
      const auto idx = world::parse_agent_name(name);
      if (!idx || *idx >= n) throw SessionError(400, "schema", "unknown agent '" + name + "'");
      if (kind == "scripted") opts.controllers[*idx] = sim::Controller::Scripted;
      else if (kind != "human") throw SessionError(400, "schema", "controller must be human or scripted");
    }
    if (body.contains("scripts")) {
      try {
        const sim::Plan plan = sim::plan_from_json(json{{"plan", body.at("scripts")}});
        if (plan.per_agent.size() > n) throw SessionError(400, "schema", "scripts name more agents than the bundle has");
        for (std::size_t a = 0; a < plan.per_agent.size(); ++a) opts.scripts[a] = plan.per_agent[a];
      } catch (const SessionError&) {
        throw;
      } catch (const std::exception& e) {
        throw SessionError(400, "schema", std::string("invalid scripts: ") + e.what());
      }
    }
  }

  Created c{random_token(), random_token(), nullptr};
  c.session = std::make_shared<Session>(c.id, c.token, std::move(bundle), std::move(opts));
  std::lock_guard lock(mutex_);
  sessions_.emplace(c.id, c.session);
  return c;
}

std::shared_ptr<Session> SessionManager::get(std::string_view id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionError(404, "not-found", "no session '" + std::string(id) + "'");
  return it->second;
}

std::shared_ptr<Session> SessionManager::authorize(std::string_view id, std::string_view token) const {
  auto s = get(id);
  if (!s->authorized(token)) throw SessionError(401, "unauthorized", "missing or wrong bearer token");
  return s;
}

json SessionManager::finalize(std::string_view id, std::string_view token, bool abandon) {
  auto s = authorize(id, token);
  bool fresh = false;
  const sim::RunRecord rec = s->finalize(abandon, fresh);
  if (fresh && store_) {
    harness::ResultRow row = harness::row_for(s->bundle(), "human", "live");
    row.record = rec;
    row.timestamp = harness::utc_timestamp();
    store_->append(row);
  }
  return {{"id", s->id()}, {"status", "finished"}, {"record", sim::to_json(rec)}};
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace paracook::session
