#pragma once

#include <stdexcept>
#include <vector>

#include "pfd/multigraph.hpp"

namespace pfd {

/// Mutable red-blue state: every edge is either a directed blue arc or an
/// undirected red edge. Invariants maintained by the augmentation engine:
/// each active vertex has exactly k blue out-arcs, blue arcs leaving active
/// vertices stay in the active region, red edges touch only active vertices,
/// and the red class is a pseudoforest. Value-copyable for scratch simulation.
class RedBlueColouring {
 public:
  RedBlueColouring() = default;
  RedBlueColouring(const MultiGraph* g, int k, std::vector<char> active)
      : g_(g), k_(k), active_(std::move(active)), red_(g->edge_count(), 0),
        tail_(g->edge_count(), -1) {}

  const MultiGraph& graph() const { return *g_; }
  int k() const { return k_; }
  int n() const { return g_->n; }
  bool is_active(int v) const { return active_[v] != 0; }
  const std::vector<char>& active() const { return active_; }

  bool is_red(int e) const { return red_[e] != 0; }
  int blue_tail(int e) const { return tail_[e]; }
  int blue_head(int e) const { return g_->other_end(e, tail_[e]); }

  void set_red(int e) {
    red_[e] = 1;
    tail_[e] = -1;
  }
  void set_blue(int e, int tail) {
    auto [u, v] = g_->edges[e];
    if (tail != u && tail != v) throw std::invalid_argument("set_blue: tail not an endpoint");
    red_[e] = 0;
    tail_[e] = tail;
  }

  int blue_outdeg(int v) const {
    int c = 0;
    for (int e = 0; e < g_->edge_count(); ++e)
      if (!is_red(e) && tail_[e] == v) ++c;
    return c;
  }

  std::vector<int> red_edges() const {
    std::vector<int> out;
    for (int e = 0; e < g_->edge_count(); ++e)
      if (is_red(e)) out.push_back(e);
    return out;
  }

  /// Throws std::logic_error naming the broken invariant.
  void check_invariants() const;

 private:
  const MultiGraph* g_ = nullptr;
  int k_ = 0;
  std::vector<char> active_;
  std::vector<char> red_;
  std::vector<int> tail_;
};

}  // namespace pfd
