#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace pfd {

/// Dinic max-flow on integer capacities. Deterministic for a fixed
/// construction order.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1) {}

  // Returns an id usable with flow_on(). Adds the reverse arc internally.
  int add_edge(int u, int v, long long cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = id;
    to_.push_back(u);
    cap_.push_back(0);
    next_.push_back(head_[v]);
    head_[v] = id + 1;
    return id;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    s_ = s;
    return total;
  }

  long long flow_on(int id) const { return cap_[id ^ 1]; }

  /// Vertices reachable from the source in the residual graph (minimal min cut).
  std::vector<char> source_side() const {
    std::vector<char> in(head_.size(), 0);
    std::queue<int> q;
    q.push(s_);
    in[s_] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && !in[to_[e]]) {
          in[to_[e]] = 1;
          q.push(to_[e]);
        }
    }
    return in;
  }

  /// Vertices that can reach `t` in the residual graph. Complement = source
  /// side of the maximal min cut.
  std::vector<char> sink_coreachable(int t) const {
    std::vector<char> in(head_.size(), 0);
    std::queue<int> q;
    q.push(t);
    in[t] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      // residual arc w -> u exists iff cap of (w->u) side > 0; scan u's list,
      // arc e goes u -> to_[e], its pair e^1 goes to_[e] -> u.
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e ^ 1] > 0 && !in[to_[e]]) {
          in[to_[e]] = 1;
          q.push(to_[e]);
        }
    }
    return in;
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long lim) {
    if (u == t) return lim;
    for (int& e = iter_[u]; e >= 0; e = next_[e]) {
      int v = to_[e];
      if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
        long long got = dfs(v, t, std::min(lim, cap_[e]));
        if (got > 0) {
          cap_[e] -= got;
          cap_[e ^ 1] += got;
          return got;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<int> head_, next_, to_, level_, iter_;
  std::vector<long long> cap_;
  int s_ = 0;
};

}  // namespace pfd
