#include "pfd/orientation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "pfd/maxflow.hpp"

namespace pfd {

OrientResult orient_bounded(const MultiGraph& g, int c) {
  const int m = g.edge_count(), n = g.n;
  const int s = m + n, t = m + n + 1;
  MaxFlow mf(m + n + 2);
  std::vector<std::pair<int, int>> endpoint_arc(m, {-1, -1});  // flow ids toward (u, v)
  for (int e = 0; e < m; ++e) {
    mf.add_edge(s, e, 1);
    auto [u, v] = g.edges[e];
    endpoint_arc[e].first = mf.add_edge(e, m + u, 1);
    if (v != u) endpoint_arc[e].second = mf.add_edge(e, m + v, 1);
  }
  for (int v = 0; v < n; ++v) mf.add_edge(m + v, t, c);
  long long flow = mf.run(s, t);
  if (flow == m) {
    Orientation o;
    o.tail.resize(m);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edges[e];
      o.tail[e] = mf.flow_on(endpoint_arc[e].first) > 0 ? u : v;
    }
    return o;
  }
  auto side = mf.source_side();
  InfeasibleWitness w;
  std::vector<char> in(n, 0);
  for (int v = 0; v < n; ++v)
    if (side[m + v]) {
      in[v] = 1;
      w.vertices.push_back(v);
    }
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges[e];
    if (in[u] && in[v]) w.edges.push_back(e);
  }
  if (w.edges.size() <= static_cast<size_t>(c) * w.vertices.size())
    throw std::logic_error("orient_bounded: cut does not certify infeasibility");
  return w;
}

namespace {

// Multi-source BFS along arcs from all surplus vertices; returns the arc path
// to the first deficient vertex reached, or empty if none is reachable.
std::vector<int> surplus_to_deficiency_path(const MultiGraph& g, const Orientation& o, int k) {
  auto deg = o.outdegrees(g);
  std::vector<std::vector<int>> out(g.n);
  for (int e = 0; e < g.edge_count(); ++e) out[o.tail[e]].push_back(e);
  std::vector<int> via(g.n, -1);
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] == k + 1) {
      seen[v] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (deg[u] < k) {
      std::vector<int> path;
      for (int x = u; via[x] >= 0; x = o.tail[via[x]]) path.push_back(via[x]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int e : out[u]) {
      int w = o.head(g, e);
      if (!seen[w]) {
        seen[w] = 1;
        via[w] = e;
        q.push(w);
      }
    }
  }
  return {};
}

}  // namespace

std::pair<Orientation, RegionSplit> repair_and_split(const MultiGraph& g, Orientation o, int k) {
  for (int d : o.outdegrees(g))
    if (d > k + 1) throw std::invalid_argument("repair_and_split: outdegree above k+1");
  for (;;) {
    auto path = surplus_to_deficiency_path(g, o, k);
    if (path.empty()) break;
    for (int e : path) o.tail[e] = o.head(g, e);
  }
  // passive = can reach a vertex of outdegree < k along arcs
  auto deg = o.outdegrees(g);
  std::vector<std::vector<int>> in_nbr(g.n);
  for (int e = 0; e < g.edge_count(); ++e) in_nbr[o.head(g, e)].push_back(o.tail[e]);
  std::vector<char> passive(g.n, 0);
  std::queue<int> q;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] < k) {
      passive[v] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : in_nbr[u])
      if (!passive[w]) {
        passive[w] = 1;
        q.push(w);
      }
  }
  RegionSplit split;
  split.active.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    split.active[v] = passive[v] ? 0 : 1;
    if (!passive[v] && deg[v] < k)
      throw std::logic_error("repair_and_split: active vertex below k");
    if (passive[v] && deg[v] > k)
      throw std::logic_error("repair_and_split: passive vertex above k");
  }
  return {std::move(o), std::move(split)};
}

RedBlueColouring initial_colouring(const MultiGraph& g, const Orientation& o,
                                   const RegionSplit& split, int k) {
  RedBlueColouring f(&g, k, split.active);
  for (int e = 0; e < g.edge_count(); ++e) f.set_blue(e, o.tail[e]);
  auto deg = o.outdegrees(g);
  for (int v = 0; v < g.n; ++v) {
    if (!split.is_active(v) || deg[v] != k + 1) continue;
    for (int e = 0; e < g.edge_count(); ++e)
      if (o.tail[e] == v) {  // lowest out-edge index goes red
        f.set_red(e);
        break;
      }
  }
  f.check_invariants();
  return f;
}

void RedBlueColouring::check_invariants() const {
  const MultiGraph& g = *g_;
  std::vector<int> blue_out(g.n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (is_red(e)) {
      auto [u, v] = g.edges[e];
      if (!is_active(u) || !is_active(v))
        throw std::logic_error("colouring: red edge touches a passive vertex");
    } else {
      if (tail_[e] < 0) throw std::logic_error("colouring: blue arc without direction");
      ++blue_out[tail_[e]];
      if (is_active(tail_[e]) && !is_active(blue_head(e)))
        throw std::logic_error("colouring: blue arc leaves the active region");
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (is_active(v) && blue_out[v] != k_)
      throw std::logic_error("colouring: active vertex without exactly k blue out-arcs");
    if (!is_active(v) && blue_out[v] > k_)
      throw std::logic_error("colouring: passive vertex above k out-arcs");
  }
  // red class is a pseudoforest
  EdgeSubgraph reds;
  reds.parent = &g;
  for (int e = 0; e < g.edge_count(); ++e)
    if (is_red(e)) reds.members.push_back(e);
  for (const Component& c : components(reds))
    if (c.edge_count > c.vertex_count())
      throw std::logic_error("colouring: red class is not a pseudoforest");
}

}  // namespace pfd
