#include "paracook/sched/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <unordered_map>

namespace paracook::sched {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

Ticks makespan_of(const AbstractInstance& inst, const Schedule& s) {
  Ticks ms = 0;
  for (std::size_t i = 0; i < inst.t.size(); ++i) ms = std::max(ms, s.start[i] + inst.t[i]);
  return ms;
}

}  // namespace

Validation validate(const AbstractInstance& inst, const Schedule& s) {
  auto invalid = [](std::string reason, std::string detail) { return Validation{false, std::move(reason), std::move(detail)}; };
  const std::size_t n = inst.t.size();
  if (s.agent.size() != n || s.start.size() != n) return invalid("incomplete", "schedule does not cover every task");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.agent[i] < 0) return invalid("incomplete", "task " + id_text(inst.ids[i]) + " is unassigned");
    if (s.agent[i] >= inst.m) return invalid("bad-agent", "task " + id_text(inst.ids[i]) + " uses an unknown agent");
    if (s.start[i] < 0) return invalid("negative-start", "task " + id_text(inst.ids[i]) + " starts before 0");
  }
  for (const Edge& e : inst.edges) {
    const Ticks earliest = s.start[idx(e.u)] + inst.t[idx(e.u)] + e.d;
    if (s.start[idx(e.v)] < earliest)
      return invalid("precedence", "task " + id_text(inst.ids[idx(e.v)]) + " starts at " +
                                       std::to_string(s.start[idx(e.v)]) + " but may not start before " +
                                       std::to_string(earliest));
  }
  std::vector<std::vector<int>> per_agent(static_cast<std::size_t>(inst.m));
  for (std::size_t i = 0; i < n; ++i) per_agent[idx(s.agent[i])].push_back(static_cast<int>(i));
  for (auto& tasks : per_agent) {
    std::sort(tasks.begin(), tasks.end(), [&](int a, int b) {
      return std::pair(s.start[idx(a)], a) < std::pair(s.start[idx(b)], b);
    });
    for (std::size_t k = 1; k < tasks.size(); ++k) {
      const int a = tasks[k - 1], b = tasks[k];
      if (s.start[idx(b)] < s.start[idx(a)] + inst.t[idx(a)] + inst.setup)
        return invalid("agent-overlap", "tasks " + id_text(inst.ids[idx(a)]) + " and " + id_text(inst.ids[idx(b)]) +
                                            " overlap on agent " + std::to_string(s.agent[idx(a)]));
    }
  }
  if (s.makespan != makespan_of(inst, s))
    return invalid("makespan-mismatch", "stated makespan " + std::to_string(s.makespan) + " differs from " +
                                            std::to_string(makespan_of(inst, s)));
  return {};
}

std::optional<Schedule> schedule_from_sequences(const AbstractInstance& inst,
                                                const std::vector<std::vector<int>>& sequences) {
  const int n = inst.n();
  Schedule s;
  s.agent.assign(idx(n), -1);
  for (std::size_t k = 0; k < sequences.size(); ++k)
    for (int v : sequences[k]) {
      if (v < 0 || v >= n || s.agent[idx(v)] != -1) throw InstanceError("sequences must list every task exactly once");
      s.agent[idx(v)] = static_cast<int>(k);
    }
  if (std::count(s.agent.begin(), s.agent.end(), -1) != 0) throw InstanceError("sequences must list every task");

  std::vector<Edge> graph = inst.edges;
  std::vector<std::vector<std::pair<int, Ticks>>> in(idx(n));
  for (const Edge& e : inst.edges) in[idx(e.v)].push_back({e.u, inst.t[idx(e.u)] + e.d});
  for (const auto& seq : sequences)
    for (std::size_t k = 1; k < seq.size(); ++k) {
      graph.push_back({seq[k - 1], seq[k], 0});
      in[idx(seq[k])].push_back({seq[k - 1], inst.t[idx(seq[k - 1])] + inst.setup});
    }
  const auto order = topological_order(n, graph);
  if (!order) return std::nullopt;
  s.start.assign(idx(n), 0);
  for (int v : *order)
    for (auto [u, w] : in[idx(v)]) s.start[idx(v)] = std::max(s.start[idx(v)], s.start[idx(u)] + w);
  s.makespan = makespan_of(inst, s);
  return s;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const AbstractInstance& inst, std::optional<double> budget)
      : inst_(inst), n_(inst.n()), m_(inst.m), preds_(idx(n_)), succs_(idx(n_)), tail_(idx(n_), 0) {
    if (n_ > 63) throw InstanceError("exact search supports at most 63 tasks");
    for (const Edge& e : inst.edges) {
      preds_[idx(e.v)].push_back({e.u, e.d});
      succs_[idx(e.u)].push_back({e.v, e.d});
    }
    pred_mask_.resize(idx(n_), 0);
    for (const Edge& e : inst.edges) pred_mask_[idx(e.v)] |= bit(e.u);
    order_ = *topological_order(n_, inst.edges);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      Ticks best = 0;
      for (auto [s, d] : succs_[idx(*it)]) best = std::max(best, d + tail_[idx(s)]);
      tail_[idx(*it)] = inst.t[idx(*it)] + best;
    }
    if (budget) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*budget));
    start_.assign(idx(n_), 0);
    agent_.assign(idx(n_), -1);
    last_end_.assign(idx(m_), -1);
  }

  SolveResult run() {
    best_ = list_schedule(inst_);
    best_ms_ = best_.makespan;
    const Ticks floor = critical_path(inst_);
    if (best_ms_ > floor) dfs(0, 0);
    return {best_, best_ms_, !timed_out_, nodes_};
  }

 private:
  using Clock = std::chrono::steady_clock;

  struct Signature {
    std::vector<Ticks> ready;     // sorted effective ready times
    std::vector<Ticks> frontier;  // end times of scheduled tasks with unscheduled successors
    Ticks partial = 0;

    bool dominates(const Signature& o) const {
      if (partial > o.partial) return false;
      for (std::size_t i = 0; i < ready.size(); ++i)
        if (ready[i] > o.ready[i]) return false;
      for (std::size_t i = 0; i < frontier.size(); ++i)
        if (frontier[i] > o.frontier[i]) return false;
      return true;
    }
  };

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  Ticks effective_ready(int k) const {
    return last_end_[idx(k)] < 0 ? 0 : last_end_[idx(k)] + inst_.setup;
  }

  Ticks release(int v) const {
    Ticks r = 0;
    for (auto [u, d] : preds_[idx(v)]) r = std::max(r, start_[idx(u)] + inst_.t[idx(u)] + d);
    return r;
  }

  Ticks lower_bound(std::uint64_t mask, Ticks partial) const {
    Ticks min_ready = effective_ready(0), load = 0;
    for (int k = 0; k < m_; ++k) {
      min_ready = std::min(min_ready, effective_ready(k));
      load += std::max<Ticks>(0, last_end_[idx(k)]);
    }
    Ticks lb = partial;
    std::vector<Ticks> head(idx(n_), 0);
    for (int v : order_) {
      if (mask & bit(v)) continue;
      Ticks h = min_ready;
      for (auto [u, d] : preds_[idx(v)])
        h = std::max(h, (mask & bit(u)) ? start_[idx(u)] + inst_.t[idx(u)] + d : head[idx(u)] + inst_.t[idx(u)] + d);
      head[idx(v)] = h;
      lb = std::max(lb, h + tail_[idx(v)]);
      load += inst_.t[idx(v)];
    }
    return std::max(lb, (load + m_ - 1) / m_);
  }

  bool dominated(std::uint64_t mask, Ticks partial) {
    Signature sig;
    sig.partial = partial;
    for (int k = 0; k < m_; ++k) sig.ready.push_back(effective_ready(k));
    std::sort(sig.ready.begin(), sig.ready.end());
    for (int v = 0; v < n_; ++v) {
      if (!(mask & bit(v))) continue;
      for (auto [s, d] : succs_[idx(v)])
        if (!(mask & bit(s))) {
          sig.frontier.push_back(start_[idx(v)] + inst_.t[idx(v)]);
          break;
        }
    }
    auto& seen = memo_[mask];
    for (const Signature& old : seen)
      if (old.dominates(sig)) return true;
    seen.erase(std::remove_if(seen.begin(), seen.end(), [&](const Signature& old) { return sig.dominates(old); }),
               seen.end());
    if (seen.size() < kMemoPerMask) seen.push_back(std::move(sig));
    return false;
  }

  void dfs(std::uint64_t mask, Ticks partial) {
    if (timed_out_) return;
    if ((++nodes_ & 1023) == 0 && deadline_ && Clock::now() > *deadline_) {
      timed_out_ = true;
      return;
    }
    if (mask == (n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1)) {
      if (partial < best_ms_) {
        best_ms_ = partial;
        best_.agent = agent_;
        best_.start = start_;
        best_.makespan = partial;
      }
      return;
    }
    if (lower_bound(mask, partial) >= best_ms_) return;
    if (dominated(mask, partial)) return;

    struct Move {
      Ticks est;
      Ticks neg_tail;
      int v;
      int k;
    };
    std::vector<Move> moves;
    for (int v = 0; v < n_; ++v) {
      if ((mask & bit(v)) || (pred_mask_[idx(v)] & ~mask)) continue;
      const Ticks rel = release(v);
      std::vector<Ticks> tried;
      for (int k = 0; k < m_; ++k) {
        const Ticks ready = effective_ready(k);
        // Agents with equal effective ready times are interchangeable from here on.
        if (std::find(tried.begin(), tried.end(), ready) != tried.end()) continue;
        tried.push_back(ready);
        moves.push_back({std::max(rel, ready), -tail_[idx(v)], v, k});
      }
    }
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      return std::tie(a.est, a.neg_tail, a.v, a.k) < std::tie(b.est, b.neg_tail, b.v, b.k);
    });
    for (const Move& mv : moves) {
      const Ticks end = mv.est + inst_.t[idx(mv.v)];
      if (std::max(partial, mv.est + tail_[idx(mv.v)]) >= best_ms_) continue;
      const Ticks saved = last_end_[idx(mv.k)];
      start_[idx(mv.v)] = mv.est;
      agent_[idx(mv.v)] = mv.k;
      last_end_[idx(mv.k)] = end;
      dfs(mask | bit(mv.v), std::max(partial, end));
      last_end_[idx(mv.k)] = saved;
      agent_[idx(mv.v)] = -1;
      if (timed_out_) return;
    }
  }

  static constexpr std::size_t kMemoPerMask = 48;

  const AbstractInstance& inst_;
  int n_;
  int m_;
  std::vector<std::vector<std::pair<int, Ticks>>> preds_, succs_;
  std::vector<std::uint64_t> pred_mask_;
  std::vector<Ticks> tail_;
  std::vector<int> order_;
  std::optional<Clock::time_point> deadline_;
  std::vector<Ticks> start_;
  std::vector<int> agent_;
  std::vector<Ticks> last_end_;
  std::unordered_map<std::uint64_t, std::vector<Signature>> memo_;
  Schedule best_;
  Ticks best_ms_ = 0;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Schedule list_schedule(const AbstractInstance& inst) {
  check_instance(inst);
  const int n = inst.n();
  std::vector<Ticks> tail(idx(n), 0);
  std::vector<std::vector<std::pair<int, Ticks>>> preds(idx(n)), succs(idx(n));
  for (const Edge& e : inst.edges) {
    preds[idx(e.v)].push_back({e.u, e.d});
    succs[idx(e.u)].push_back({e.v, e.d});
  }
  const auto order = *topological_order(n, inst.edges);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Ticks best = 0;
    for (auto [s, d] : succs[idx(*it)]) best = std::max(best, d + tail[idx(s)]);
    tail[idx(*it)] = inst.t[idx(*it)] + best;
  }
  Schedule s;
  s.agent.assign(idx(n), -1);
  s.start.assign(idx(n), 0);
  std::vector<Ticks> last_end(static_cast<std::size_t>(inst.m), -1);
  for (int placed = 0; placed < n; ++placed) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (s.agent[idx(v)] != -1) continue;
      bool ready = true;
      for (auto [u, d] : preds[idx(v)]) ready = ready && s.agent[idx(u)] != -1;
      if (ready && (pick < 0 || tail[idx(v)] > tail[idx(pick)])) pick = v;
    }
    Ticks rel = 0;
    for (auto [u, d] : preds[idx(pick)]) rel = std::max(rel, s.start[idx(u)] + inst.t[idx(u)] + d);
    int best_k = 0;
    Ticks best_est = -1;
    for (int k = 0; k < inst.m; ++k) {
      const Ticks ready = last_end[idx(k)] < 0 ? 0 : last_end[idx(k)] + inst.setup;
      const Ticks est = std::max(rel, ready);
      if (best_est < 0 || est < best_est) {
        best_est = est;
        best_k = k;
      }
    }
    s.agent[idx(pick)] = best_k;
    s.start[idx(pick)] = best_est;
    last_end[idx(best_k)] = best_est + inst.t[idx(pick)];
  }
  s.makespan = makespan_of(inst, s);
  return s;
}

SolveResult optimal_makespan(const AbstractInstance& inst, std::optional<double> budget_seconds) {
  check_instance(inst);
  if (inst.n() == 0) return {Schedule{}, 0, true, 0};
  BranchAndBound bb(inst, budget_seconds);
  return bb.run();
}

PlanScore score_plan(const AbstractInstance& inst, const Schedule& s, Ticks optimum) {
  if (optimum <= 0) throw std::invalid_argument("optimum must be positive");
  PlanScore score;
  score.valid = validate(inst, s).valid;
  if (score.valid) {
    score.noct = static_cast<double>(s.makespan) / static_cast<double>(optimum);
    score.poct = static_cast<double>(s.makespan);
  } else {
    // 6/5 keeps the penalty exact: 6 * optimum is exact and the division rounds once.
    score.poct = static_cast<double>(optimum) * 6.0 / 5.0;
  }
  return score;
}

}  // namespace paracook::sched
