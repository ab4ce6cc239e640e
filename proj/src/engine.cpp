#include "pfd/engine.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "pfd/orientation.hpp"

namespace pfd {

BadClass classify_component(bool cyclic, int edge_count, int diam, const Params& p) {
  if (cyclic) return {BadKind::Bad1, 0};
  if (edge_count > p.d) return {BadKind::Bad2, 0};
  if (diam > 2 * p.ell + 2) return {BadKind::Bad3, 0};
  if (p.d % (p.k + 1) == 1 && diam == 2 * p.ell + 2) return {BadKind::Bad4, 0};
  for (int z = 1; z <= p.ell; ++z)
    if (edge_count >= p.d - z * (p.k - 1) + 1 && diam > 2 * z) return {BadKind::Bad5, z};
  return {BadKind::NotBad, 0};
}

bool is_small(bool cyclic, int edge_count, const Params& p) {
  return !cyclic && edge_count <= p.ell;
}

namespace {

int local_diameter(const MultiGraph& g, const std::vector<int>& vertices,
                   const std::vector<int>& edges) {
  if (vertices.size() <= 1) return 0;
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(vertices.size());
  for (int e : edges) {
    auto [u, v] = g.edges[e];
    adj[pos[u]].push_back(pos[v]);
    if (u != v) adj[pos[v]].push_back(pos[u]);
  }
  auto far = [&](int s) {
    std::vector<int> dist(vertices.size(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    int best = s;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] > dist[best]) best = u;
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    return std::pair<int, int>(best, dist[best]);
  };
  return far(far(0).first).second;
}

}  // namespace

RedCompIndex red_components(const RedBlueColouring& f, const Params& p) {
  const MultiGraph& g = f.graph();
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (nbr, edge) over red edges
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!f.is_red(e)) continue;
    auto [u, v] = g.edges[e];
    adj[u].emplace_back(v, e);
    if (u != v) adj[v].emplace_back(u, e);
  }
  RedCompIndex idx;
  idx.comp_of.assign(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (!f.is_active(root) || idx.comp_of[root] >= 0) continue;
    RedComp c;
    int id = static_cast<int>(idx.comps.size());
    std::queue<int> q;
    q.push(root);
    idx.comp_of[root] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      c.vertices.push_back(u);
      for (auto [w, e] : adj[u]) {
        c.edges.push_back(e);
        if (idx.comp_of[w] < 0) {
          idx.comp_of[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    c.cyclic = c.edge_count() >= c.vertex_count();
    c.diam = c.cyclic ? 0 : local_diameter(g, c.vertices, c.edges);
    c.bad = classify_component(c.cyclic, c.edge_count(), c.diam, p);
    c.small = is_small(c.cyclic, c.edge_count(), p);
    idx.comps.push_back(std::move(c));
  }
  return idx;
}

bool RedCompIndex::any_bad() const {
  for (const RedComp& c : comps)
    if (c.bad.kind != BadKind::NotBad) return true;
  return false;
}

int RedCompIndex::worst_bad() const {
  int best = -1;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    const RedComp& c = comps[i];
    if (c.bad.kind == BadKind::NotBad) continue;
    if (best < 0) {
      best = i;
      continue;
    }
    const RedComp& b = comps[best];
    auto key = [](const RedComp& r) {
      return std::make_tuple(static_cast<int>(r.bad.kind), -r.edge_count(), r.min_vertex());
    };
    if (key(c) < key(b)) best = i;
  }
  return best;
}

ExplorationSubgraph exploration_subgraph(const RedBlueColouring& f, const RedCompIndex& idx,
                                         int root_comp) {
  const MultiGraph& g = f.graph();
  std::vector<std::vector<int>> blue_out(g.n), red_adj(g.n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.is_red(e)) {
      auto [u, v] = g.edges[e];
      red_adj[u].push_back(v);
      if (u != v) red_adj[v].push_back(u);
    } else {
      blue_out[f.blue_tail(e)].push_back(f.blue_head(e));
    }
  }
  ExplorationSubgraph h;
  h.root_comp = root_comp;
  h.in.assign(g.n, 0);
  std::queue<int> q;
  for (int v : idx.comps[root_comp].vertices) {
    h.in[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : blue_out[u])
      if (!h.in[w]) {
        h.in[w] = 1;
        q.push(w);
      }
    for (int w : red_adj[u])
      if (!h.in[w]) {
        h.in[w] = 1;
        q.push(w);
      }
  }
  std::set<int> cids;
  for (int v = 0; v < g.n; ++v)
    if (h.in[v]) {
      h.vertices.push_back(v);
      if (idx.comp_of[v] >= 0) cids.insert(idx.comp_of[v]);
    }
  h.comp_ids.assign(cids.begin(), cids.end());
  return h;
}

LegalOrder smallest_legal_order(const RedBlueColouring& f, const RedCompIndex& idx,
                                const ExplorationSubgraph& h) {
  const MultiGraph& g = f.graph();
  const int t = static_cast<int>(h.comp_ids.size());
  std::vector<int> local(idx.comps.size(), -1);
  for (int i = 0; i < t; ++i) local[h.comp_ids[i]] = i;
  int root_local = local[h.root_comp];

  // component-level arcs from blue arcs inside H
  std::vector<std::set<int>> preds(t), succs(t);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.is_red(e)) continue;
    int u = f.blue_tail(e), v = f.blue_head(e);
    if (!h.in[u] || !h.in[v]) continue;
    int cu = idx.comp_of[u], cv = idx.comp_of[v];
    if (cu < 0 || cv < 0 || cu == cv) continue;
    preds[local[cv]].insert(local[cu]);
    succs[local[cu]].insert(local[cv]);
  }

  // Lexicographically smallest value sequence over all legal orders. The
  // next value is always the minimum over currently available components;
  // ties can unlock different futures, so all optimal prefixes are kept as a
  // deduplicated front of placed-sets. Tied components whose unplaced
  // successor sets coincide are interchangeable (availability is monotone,
  // so swapping them in any completion preserves the value string); only the
  // lowest-id representative of each group is branched on.
  auto key_of = [t](const std::vector<char>& s) { return std::string(s.begin(), s.end()); };
  std::vector<char> start(t, 0);
  start[root_local] = 1;
  std::map<std::string, std::pair<std::string, int>> level;  // key -> (prev key, comp placed)
  level[key_of(start)] = {"", root_local};
  std::vector<std::map<std::string, std::pair<std::string, int>>> levels{level};
  LegalOrder out;
  out.sigma.push_back(idx.comps[h.root_comp].edge_count());

  for (int placed = 1; placed < t; ++placed) {
    int u = -1;
    for (const auto& [key, src] : levels.back()) {
      for (int x = 0; x < t; ++x) {
        if (key[x]) continue;
        bool avail = false;
        for (int pr : preds[x])
          if (key[pr]) {
            avail = true;
            break;
          }
        if (avail) {
          int val = idx.comps[h.comp_ids[x]].edge_count();
          if (u < 0 || val < u) u = val;
        }
      }
    }
    if (u < 0) throw std::logic_error("smallest_legal_order: unreachable component in H");
    std::map<std::string, std::pair<std::string, int>> next;
    for (const auto& [key, src] : levels.back()) {
      std::set<std::vector<int>> groups_seen;
      for (int x = 0; x < t; ++x) {
        if (key[x] || idx.comps[h.comp_ids[x]].edge_count() != u) continue;
        bool avail = false;
        for (int pr : preds[x])
          if (key[pr]) {
            avail = true;
            break;
          }
        if (!avail) continue;
        std::vector<int> sig;
        for (int sc : succs[x])
          if (!key[sc]) sig.push_back(sc);
        if (!groups_seen.insert(sig).second) continue;  // interchangeable with an earlier tie
        std::string nk = key;
        nk[x] = 1;
        if (!next.count(nk)) next[nk] = {key, x};
      }
    }
    if (next.size() > 200000)
      throw std::runtime_error("smallest_legal_order: tie front exploded");
    out.sigma.push_back(u);
    levels.push_back(std::move(next));
  }

  // extract one witnessing order by walking back through the levels
  std::string cur = levels.back().begin()->first;
  std::vector<int> rev;
  for (int lvl = t - 1; lvl >= 0; --lvl) {
    auto [prev, comp] = levels[lvl].at(cur);
    rev.push_back(h.comp_ids[comp]);
    cur = prev;
  }
  out.comp_ids.assign(rev.rbegin(), rev.rend());
  return out;
}

Potential potential(const RedBlueColouring& f, const RedCompIndex& idx, int root_comp) {
  Potential pot;
  for (auto& hval : pot.hist) hval.assign(f.n() + 1, 0);
  for (const RedComp& c : idx.comps) {
    if (c.bad.kind == BadKind::NotBad) continue;
    int i = static_cast<int>(c.bad.kind) - 1;
    pot.hist[i][c.edge_count()] += 1;
  }
  ExplorationSubgraph h = exploration_subgraph(f, idx, root_comp);
  pot.sigma = smallest_legal_order(f, idx, h).sigma;
  return pot;
}

int compare(const Potential& a, const Potential& b) {
  for (int i = 0; i < 5; ++i) {
    size_t len = std::max(a.hist[i].size(), b.hist[i].size());
    for (size_t jj = len; jj-- > 0;) {
      int av = jj < a.hist[i].size() ? a.hist[i][jj] : 0;
      int bv = jj < b.hist[i].size() ? b.hist[i][jj] : 0;
      if (av != bv) return av < bv ? -1 : 1;
    }
  }
  size_t len = std::max(a.sigma.size(), b.sigma.size());
  for (size_t j = 0; j < len; ++j) {
    int av = j < a.sigma.size() ? a.sigma[j] : 0;
    int bv = j < b.sigma.size() ? b.sigma[j] : 0;
    if (av != bv) return av < bv ? -1 : 1;
  }
  return 0;
}

namespace {

// red component of `start` as (vertices, edges), over the current colouring
std::pair<std::set<int>, std::set<int>> red_comp_around(const RedBlueColouring& f, int start) {
  const MultiGraph& g = f.graph();
  std::set<int> vs, es;
  std::queue<int> q;
  q.push(start);
  vs.insert(start);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!f.is_red(e)) continue;
      auto [a, b] = g.edges[e];
      if (a != u && b != u) continue;
      es.insert(e);
      int w = g.other_end(e, u);
      if (!vs.count(w)) {
        vs.insert(w);
        q.push(w);
      }
    }
  }
  return {vs, es};
}

}  // namespace

void apply_move(RedBlueColouring& f, const Move& m) {
  const MultiGraph& g = f.graph();
  if (m.arcs.empty()) throw std::invalid_argument("move: no arcs");
  for (int a : m.arcs)
    if (f.is_red(a)) throw std::invalid_argument("move: arc not blue");
  for (size_t i = 1; i < m.arcs.size(); ++i)
    if (f.blue_head(m.arcs[i]) != f.blue_tail(m.arcs[i - 1]))
      throw std::invalid_argument("move: arcs do not form a directed path");
  const int x = f.blue_tail(m.arcs[0]);
  const int y = f.blue_head(m.arcs[0]);
  std::vector<int> path_vertices{y};
  for (int a : m.arcs) path_vertices.push_back(f.blue_tail(a));
  {
    std::set<int> uniq(path_vertices.begin(), path_vertices.end());
    if (uniq.size() != path_vertices.size())
      throw std::invalid_argument("move: path vertices not distinct");
  }
  for (int v : path_vertices)
    if (!f.is_active(v)) throw std::invalid_argument("move: touches a passive vertex");
  const int xr = f.blue_tail(m.arcs.back());
  if (m.red_edge < 0 || !f.is_red(m.red_edge))
    throw std::invalid_argument("move: red edge not red");
  {
    auto [a, b] = g.edges[m.red_edge];
    if (a != xr && b != xr)
      throw std::invalid_argument("move: red edge not incident to the chain end");
  }
  auto [yvs, yes] = red_comp_around(f, y);
  if (yes.size() >= yvs.size())
    throw std::invalid_argument("move: target component not acyclic");
  if (yvs.count(x)) throw std::invalid_argument("move: endpoints in the same red component");
  for (size_t i = 1; i + 1 < m.arcs.size(); ++i) {
    int mid = f.blue_tail(m.arcs[i]);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!f.is_red(e)) continue;
      auto [a, b] = g.edges[e];
      if (a == mid || b == mid)
        throw std::invalid_argument("move: intermediate vertex has red edges");
    }
  }

  std::vector<int> new_tails;  // reversal targets, captured before mutation
  for (size_t i = 1; i < m.arcs.size(); ++i) new_tails.push_back(f.blue_head(m.arcs[i]));
  f.set_red(m.arcs[0]);
  for (size_t i = 1; i < m.arcs.size(); ++i) f.set_blue(m.arcs[i], new_tails[i - 1]);
  f.set_blue(m.red_edge, xr);
}

namespace {

struct MoveSearch {
  const RedBlueColouring& f;
  const RedCompIndex& idx;
  const ExplorationSubgraph& h;
  const Params& p;
  Potential cur;

  bool improves(const Move& cand) const {
    RedBlueColouring scratch = f;
    apply_move(scratch, cand);
    scratch.check_invariants();
    RedCompIndex idx2 = red_components(scratch, p);
    int worst = idx2.worst_bad();
    if (worst < 0) return true;  // all defects gone
    Potential pot2 = potential(scratch, idx2, worst);
    return compare(pot2, cur) < 0;
  }
};

}  // namespace

std::optional<Move> find_improving_move(const RedBlueColouring& f, const RedCompIndex& idx,
                                        int root_comp, const Params& p) {
  const MultiGraph& g = f.graph();
  ExplorationSubgraph h = exploration_subgraph(f, idx, root_comp);
  MoveSearch search{f, idx, h, p, potential(f, idx, root_comp)};

  std::vector<std::vector<int>> red_at(g.n), blue_in(g.n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.is_red(e)) {
      auto [u, v] = g.edges[e];
      red_at[u].push_back(e);
      if (u != v) red_at[v].push_back(e);
    } else {
      blue_in[f.blue_head(e)].push_back(e);
    }
  }

  auto arc_eligible = [&](int a, int& x, int& y) {
    if (f.is_red(a)) return false;
    x = f.blue_tail(a);
    y = f.blue_head(a);
    if (!h.in[x] || !h.in[y]) return false;
    int cx = idx.comp_of[x], cy = idx.comp_of[y];
    if (cx < 0 || cy < 0 || cx == cy) return false;
    return !idx.comps[cy].cyclic;
  };

  // pass 1: plain exchanges
  for (int a = 0; a < g.edge_count(); ++a) {
    int x, y;
    if (!arc_eligible(a, x, y)) continue;
    for (int e : red_at[x]) {
      Move cand{{a}, e};
      if (search.improves(cand)) return cand;
    }
  }

  // pass 2: chain reversals walking backward from x through zero-edge components
  for (int a = 0; a < g.edge_count(); ++a) {
    int x, y;
    if (!arc_eligible(a, x, y)) continue;
    std::vector<int> arcs{a};
    std::vector<char> on_path(g.n, 0);
    on_path[x] = on_path[y] = 1;
    std::optional<Move> found;
    auto dfs = [&](auto&& self, int cur) -> void {
      if (found) return;
      for (int b : blue_in[cur]) {
        if (found) return;
        int w = f.blue_tail(b);
        if (!h.in[w] || on_path[w] || idx.comp_of[w] < 0) continue;
        arcs.push_back(b);
        if (!red_at[w].empty()) {
          for (int e : red_at[w]) {
            Move cand{arcs, e};
            if (search.improves(cand)) {
              found = cand;
              break;
            }
          }
        } else {
          on_path[w] = 1;
          self(self, w);
          on_path[w] = 0;
        }
        arcs.pop_back();
      }
    };
    dfs(dfs, x);
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> split_blue(const RedBlueColouring& f) {
  const MultiGraph& g = f.graph();
  std::vector<std::vector<int>> classes(f.k());
  for (int v = 0; v < g.n; ++v) {
    int label = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (f.is_red(e) || f.blue_tail(e) != v) continue;
      if (label >= f.k()) throw std::logic_error("split_blue: vertex above k blue out-arcs");
      classes[label++].push_back(e);
    }
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

namespace {

Certificate build_certificate(const RedBlueColouring& f, const RedCompIndex& idx, int root_comp,
                              const Params& p) {
  const MultiGraph& g = f.graph();
  ExplorationSubgraph h = exploration_subgraph(f, idx, root_comp);
  LegalOrder order = smallest_legal_order(f, idx, h);

  std::vector<int> pos(idx.comps.size(), -1);
  for (size_t i = 0; i < order.comp_ids.size(); ++i) pos[order.comp_ids[i]] = static_cast<int>(i);

  // parent relation under the smallest legal order
  std::set<std::pair<int, int>> comp_arcs;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.is_red(e)) continue;
    int u = f.blue_tail(e), v = f.blue_head(e);
    if (!h.in[u] || !h.in[v]) continue;
    int cu = idx.comp_of[u], cv = idx.comp_of[v];
    if (cu < 0 || cv < 0 || cu == cv) continue;
    if (pos[cu] < pos[cv]) comp_arcs.insert({cu, cv});
  }

  if (idx.comps[root_comp].small)
    throw std::logic_error("certificate: root component is small");
  std::map<int, std::vector<int>> children_of;  // non-small comp -> assigned small comps
  for (int cid : h.comp_ids) {
    if (!idx.comps[cid].small) {
      children_of.emplace(cid, std::vector<int>{});
      continue;
    }
    int parent = -1;
    for (auto [a, b] : comp_arcs)
      if (b == cid && !idx.comps[a].small && (parent < 0 || a < parent)) parent = a;
    if (parent < 0)
      throw std::logic_error("certificate: small component without a non-small parent");
    children_of[parent].push_back(cid);
  }

  Certificate cert;
  cert.kind = Certificate::Kind::Stuck;
  cert.vertices = h.vertices;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.is_red(e)) {
      auto [u, v] = g.edges[e];
      if (h.in[u] || h.in[v]) {
        if (!h.in[u] || !h.in[v]) throw std::logic_error("certificate: red edge crosses H");
        cert.red_edges.push_back(e);
      }
    } else if (h.in[f.blue_tail(e)]) {
      if (!h.in[f.blue_head(e)]) throw std::logic_error("certificate: blue arc leaves H");
      cert.blue_arcs.emplace_back(e, f.blue_tail(e));
    }
  }

  long long er_total = 0, v_total = 0;
  for (auto& [kcid, kids] : children_of) {
    Certificate::Cell cell;
    cell.k.vertices = idx.comps[kcid].vertices;
    cell.k.edges = idx.comps[kcid].edges;
    cell.k_is_bad = idx.comps[kcid].bad.kind != BadKind::NotBad;
    long long ce = idx.comps[kcid].edge_count(), cv = idx.comps[kcid].vertex_count();
    for (int kid : kids) {
      CertComp child;
      child.vertices = idx.comps[kid].vertices;
      child.edges = idx.comps[kid].edges;
      ce += idx.comps[kid].edge_count();
      cv += idx.comps[kid].vertex_count();
      cell.children.push_back(std::move(child));
    }
    long long lhs = ce * (p.d + p.k + 1), rhs = static_cast<long long>(p.d) * cv;
    if (cell.k_is_bad ? lhs <= rhs : lhs < rhs)
      throw std::logic_error("certificate: cell density below d/(d+k+1)");
    er_total += ce;
    v_total += cv;
    cert.cells.push_back(std::move(cell));
  }
  if (v_total != static_cast<long long>(h.vertices.size()))
    throw std::logic_error("certificate: cells do not partition V(H)");
  if (er_total * (p.d + p.k + 1) <= static_cast<long long>(p.d) * v_total)
    throw std::logic_error("certificate: red density not above d/(d+k+1)");
  return cert;
}

}  // namespace

DecomposeResult decompose(const MultiGraph& g, const Params& p, long long iteration_cap) {
  DecomposeResult res;
  OrientResult orient = orient_bounded(g, p.k + 1);
  if (std::holds_alternative<InfeasibleWitness>(orient)) {
    auto& w = std::get<InfeasibleWitness>(orient);
    Certificate cert;
    cert.kind = Certificate::Kind::Infeasible;
    cert.vertices = w.vertices;
    cert.edges = w.edges;
    res.outcome = DecomposeResult::Outcome::Refuted;
    res.certificate = std::move(cert);
    return res;
  }
  auto [o, split] = repair_and_split(g, std::move(std::get<Orientation>(orient)), p.k);
  RedBlueColouring f = initial_colouring(g, o, split, p.k);

  std::optional<Potential> prev;
  for (;;) {
    RedCompIndex idx = red_components(f, p);
    int worst = idx.worst_bad();
    if (worst < 0) {
      Decomposition dec;
      dec.k = p.k;
      dec.classes = split_blue(f);
      dec.red = f.red_edges();
      res.outcome = DecomposeResult::Outcome::Success;
      res.decomposition = std::move(dec);
      return res;
    }
    Potential cur = potential(f, idx, worst);
    if (prev && compare(cur, *prev) >= 0)
      throw std::logic_error("decompose: potential did not strictly decrease");
    prev = std::move(cur);
    if (res.iterations >= iteration_cap) {
      res.outcome = DecomposeResult::Outcome::IterationCap;
      return res;
    }
    std::optional<Move> mv = find_improving_move(f, idx, worst, p);
    if (!mv) {
      res.certificate = build_certificate(f, idx, worst, p);
      res.outcome = DecomposeResult::Outcome::Refuted;
      return res;
    }
    apply_move(f, *mv);
    f.check_invariants();
    ++res.iterations;
  }
}

}  // namespace pfd
