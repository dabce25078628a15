#pragma once

// Exhaustive reference solver for tiny scheduling instances. Deliberately shares no code with the
// branch-and-bound: it enumerates every split of the tasks into ordered per-agent sequences
// (agent labels canonicalised) and times each one by longest path over the disjunctive graph.

#include <algorithm>
#include <limits>
#include <vector>

#include "paracook/sched/instance.hpp"

namespace oracle {

using paracook::Ticks;
using paracook::sched::AbstractInstance;

class BruteForce {
 public:
  explicit BruteForce(const AbstractInstance& inst) : inst_(inst), seqs_(static_cast<std::size_t>(inst.m)) {}

  Ticks solve() {
    best_ = std::numeric_limits<Ticks>::max();
    place(0);
    return best_;
  }

 private:
  void place(int v) {
    const int n = static_cast<int>(inst_.t.size());
    if (v == n) {
      evaluate();
      return;
    }
    for (std::size_t k = 0; k < seqs_.size(); ++k) {
      auto& seq = seqs_[k];
      const bool empty = seq.empty();
      for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), v);
        place(v + 1);
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pos));
      }
      if (empty) break;  // later empty agents are relabelings of this one
    }
  }

  void evaluate() {
    const std::size_t n = inst_.t.size();
    // Relax to a fixed point; with n passes a positive cycle is detected by a further change.
    std::vector<Ticks> start(n, 0);
    for (std::size_t round = 0; round <= n + 1; ++round) {
      bool changed = false;
      auto relax = [&](int u, int v, Ticks w) {
        if (start[static_cast<std::size_t>(u)] + w > start[static_cast<std::size_t>(v)]) {
          start[static_cast<std::size_t>(v)] = start[static_cast<std::size_t>(u)] + w;
          changed = true;
        }
      };
      for (const auto& e : inst_.edges) relax(e.u, e.v, inst_.t[static_cast<std::size_t>(e.u)] + e.d);
      for (const auto& seq : seqs_)
        for (std::size_t i = 1; i < seq.size(); ++i)
          relax(seq[i - 1], seq[i], inst_.t[static_cast<std::size_t>(seq[i - 1])] + inst_.setup);
      if (!changed) {
        Ticks ms = 0;
        for (std::size_t v = 0; v < n; ++v) ms = std::max(ms, start[v] + inst_.t[v]);
        best_ = std::min(best_, ms);
        return;
      }
    }
    // Still changing: the agent order contradicts a dependency.
  }

  const AbstractInstance& inst_;
  std::vector<std::vector<int>> seqs_;
  Ticks best_ = 0;
};

inline Ticks brute_force_makespan(const AbstractInstance& inst) { return BruteForce(inst).solve(); }

}  // namespace oracle
