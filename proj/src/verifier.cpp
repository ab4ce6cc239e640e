#include "pfd/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>

namespace pfd {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// diameter of one component, cyclic allowed (all-pairs BFS)
int general_diameter(const MultiGraph& g, const std::vector<int>& vertices,
                     const std::vector<int>& edges) {
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(vertices.size());
  for (int e : edges) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    adj[pos[u]].push_back(pos[v]);
    adj[pos[v]].push_back(pos[u]);
  }
  int best = 0;
  for (size_t s = 0; s < vertices.size(); ++s) {
    std::vector<int> dist(vertices.size(), -1);
    std::queue<int> q;
    q.push(static_cast<int>(s));
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      best = std::max(best, dist[u]);
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
  }
  return best;
}

}  // namespace

Report verify_decomposition(const MultiGraph& g, const Decomposition& dec, const Params& p) {
  Report r;
  const int m = g.edge_count();

  std::vector<int> owner(m, -1);
  bool dup = false, out_of_range = false;
  auto take = [&](int e) {
    if (e < 0 || e >= m) {
      out_of_range = true;
      return;
    }
    if (owner[e] != -1) dup = true;
    owner[e] = 1;
  };
  for (auto& cls : dec.classes)
    for (int e : cls) take(e);
  for (int e : dec.red) take(e);
  bool covered = !out_of_range && std::none_of(owner.begin(), owner.end(),
                                               [](int o) { return o == -1; });
  r.partition_ok = !dup && covered && static_cast<int>(dec.classes.size()) == p.k;
  if (!r.partition_ok) r.notes.push_back("edge classes do not partition the edge set");

  r.classes_pseudoforest_ok = true;
  for (size_t i = 0; i < dec.classes.size(); ++i) {
    EdgeSubgraph sub{&g, sorted_copy(dec.classes[i])};
    if (class_kind(sub) == ClassKind::Neither) {
      r.classes_pseudoforest_ok = false;
      r.notes.push_back("class " + std::to_string(i + 1) + " is not a pseudoforest");
    }
  }

  EdgeSubgraph reds{&g, sorted_copy(dec.red)};
  r.red_forest_ok = class_kind(reds) == ClassKind::Forest;
  if (!r.red_forest_ok) r.notes.push_back("red class is not a forest");

  r.size_ok = r.diam_ok = r.zclause_ok = true;
  r.star_ok = true;
  const int diam_bound = p.d % (p.k + 1) == 1 ? 2 * p.ell + 1 : 2 * p.ell + 2;
  for (const Component& c : components(reds)) {
    bool fail = false;
    if (c.is_cyclic) {
      fail = true;  // covered by the red-forest verdict; still report the component
    } else {
      int dm = tree_diameter(g, c);
      if (c.edge_count > p.d) {
        r.size_ok = false;
        fail = true;
      }
      if (dm > diam_bound) {
        r.diam_ok = false;
        fail = true;
      }
      for (int z = 1; z <= p.ell; ++z)
        if (c.edge_count >= p.d - z * (p.k - 1) + 1 && dm > 2 * z) {
          r.zclause_ok = false;
          fail = true;
          r.notes.push_back("component at vertex " + std::to_string(c.min_vertex()) +
                            " breaks the z=" + std::to_string(z) + " clause");
        }
      if (p.d <= p.k + 1 && dm > 2) {
        r.star_ok = false;
        fail = true;
      }
    }
    if (fail) r.failing_components.push_back(c.min_vertex());
  }
  return r;
}

bool verify_certificate(const MultiGraph& g, const Certificate& cert, const Params& p) {
  std::vector<char> in(g.n, 0);
  for (int v : cert.vertices) {
    if (v < 0 || v >= g.n || in[v]) return false;
    in[v] = 1;
  }
  const long long hv = static_cast<long long>(cert.vertices.size());
  if (hv == 0) return false;

  long long induced = 0;
  for (auto [u, v] : g.edges)
    if (in[u] && in[v]) ++induced;

  if (cert.kind == Certificate::Kind::Infeasible) {
    // e(H) > (k+1) v(H) already defeats every hypothesis bound
    return induced > static_cast<long long>(p.k + 1) * hv;
  }

  // listed edges must be exactly the induced edges, each endpoint inside H
  std::set<int> listed;
  for (int e : cert.red_edges) listed.insert(e);
  for (auto [e, tail] : cert.blue_arcs) listed.insert(e);
  if (static_cast<long long>(listed.size()) !=
      static_cast<long long>(cert.red_edges.size() + cert.blue_arcs.size()))
    return false;
  if (static_cast<long long>(listed.size()) != induced) return false;
  for (int e : listed) {
    if (e < 0 || e >= g.edge_count()) return false;
    auto [u, v] = g.edges[e];
    if (!in[u] || !in[v]) return false;
  }

  // every vertex of H carries exactly k blue out-arcs inside H
  std::vector<int> blue_out(g.n, 0);
  for (auto [e, tail] : cert.blue_arcs) {
    auto [u, v] = g.edges[e];
    if (tail != u && tail != v) return false;
    ++blue_out[tail];
  }
  for (int v : cert.vertices)
    if (blue_out[v] != p.k) return false;

  // red components recomputed from scratch
  EdgeSubgraph reds{&g, sorted_copy(cert.red_edges)};
  auto comps = components(reds, cert.vertices);
  std::map<int, const Component*> by_min;
  for (auto& c : comps) by_min[c.min_vertex()] = &c;

  auto matches = [&](const CertComp& cc, const Component*& out) {
    if (cc.vertices.empty()) return false;
    auto it = by_min.find(*std::min_element(cc.vertices.begin(), cc.vertices.end()));
    if (it == by_min.end()) return false;
    out = it->second;
    return sorted_copy(cc.vertices) == out->vertices && sorted_copy(cc.edges) == out->edge_indices;
  };

  std::set<int> seen_comps;
  long long er_total = 0, v_total = 0;
  for (const auto& cell : cert.cells) {
    const Component* kc = nullptr;
    if (!matches(cell.k, kc)) return false;
    if (!seen_comps.insert(kc->min_vertex()).second) return false;
    int kdiam = kc->is_cyclic ? 0 : tree_diameter(g, *kc);
    bool kbad = classify_component(kc->is_cyclic, kc->edge_count, kdiam, p).kind != BadKind::NotBad;
    if (kbad != cell.k_is_bad) return false;
    if (is_small(kc->is_cyclic, kc->edge_count, p)) return false;  // cells root at non-small comps
    long long ce = kc->edge_count, cv = kc->vertex_count();
    for (const auto& child : cell.children) {
      const Component* cc = nullptr;
      if (!matches(child, cc)) return false;
      if (!seen_comps.insert(cc->min_vertex()).second) return false;
      if (!is_small(cc->is_cyclic, cc->edge_count, p)) return false;
      ce += cc->edge_count;
      cv += cc->vertex_count();
    }
    long long lhs = ce * (p.d + p.k + 1), rhs = static_cast<long long>(p.d) * cv;
    if (cell.k_is_bad ? lhs <= rhs : lhs < rhs) return false;
    er_total += ce;
    v_total += cv;
  }
  if (seen_comps.size() != comps.size()) return false;  // cells must partition the red components
  if (v_total != hv) return false;
  if (er_total * (p.d + p.k + 1) <= static_cast<long long>(p.d) * hv) return false;

  // tie back to the graph: H itself is denser than the hypothesis bound
  long long bound_num = static_cast<long long>(p.k) * (p.d + p.k + 1) + p.d;
  return induced * (p.d + p.k + 1) > bound_num * hv;
}

bool verify_lb_witness(const MultiGraph& g, const Decomposition& dec, int k, int max_red_degree,
                       int diam_strict_bound, std::optional<int> size_floor) {
  const int m = g.edge_count();
  std::vector<int> owner(m, -1);
  if (static_cast<int>(dec.classes.size()) != k) return false;
  for (auto& cls : dec.classes)
    for (int e : cls) {
      if (e < 0 || e >= m || owner[e] != -1) return false;
      owner[e] = 0;
    }
  for (int e : dec.red) {
    if (e < 0 || e >= m || owner[e] != -1) return false;
    owner[e] = 1;
  }
  for (int o : owner)
    if (o == -1) return false;

  for (auto& cls : dec.classes) {
    EdgeSubgraph sub{&g, sorted_copy(cls)};
    if (class_kind(sub) == ClassKind::Neither) return false;
  }
  EdgeSubgraph reds{&g, sorted_copy(dec.red)};
  if (class_kind(reds) == ClassKind::Neither) return false;
  std::vector<int> deg(g.n, 0);
  for (int e : dec.red) {
    deg[g.edges[e].first]++;
    deg[g.edges[e].second]++;
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] > max_red_degree) return false;
  for (const Component& c : components(reds)) {
    int dm = general_diameter(g, c.vertices, c.edge_indices);
    bool sz = !size_floor || c.edge_count >= *size_floor;
    if (sz && dm >= diam_strict_bound) return false;
  }
  return true;
}

namespace {

struct ClassDsu {
  std::vector<int> parent, sz;
  std::vector<char> cyc;

  void init(int n) {
    parent.resize(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    sz.assign(n, 1);
    cyc.assign(n, 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

// shared backtracking engine for brute_force_search and check_lower_bound
struct ColourSearch {
  const MultiGraph& g;
  int total_classes;  // red class index = total_classes - 1
  bool red_forest = false;
  std::optional<int> max_component_edges;
  std::optional<int> max_red_degree;
  std::optional<int> forbid_diam_ge;  // forbidden: diam >= this (with size_floor if set)
  std::optional<int> size_floor;
  bool use_propagation = false;
  std::vector<int> order;
  long long node_cap = -1;
  std::chrono::steady_clock::time_point deadline{};
  bool use_deadline = false;

  int red;
  std::vector<ClassDsu> dsu;
  std::vector<int> assign;
  std::vector<int> deg_red, red_ecnt;
  std::vector<std::vector<int>> red_verts, red_adj;
  std::vector<std::vector<int>> incident;  // vertex -> edge ids
  long long nodes = 0;
  bool timed_out = false;

  enum OpType { OpAssign, OpUnion, OpCyc, OpDeg, OpAdj, OpEcnt };
  struct Op {
    OpType t;
    int a = 0, b = 0, c = 0, d = 0;
  };
  std::vector<Op> ops;

  explicit ColourSearch(const MultiGraph& graph) : g(graph) {}

  void init() {
    red = total_classes - 1;
    dsu.resize(total_classes);
    for (auto& d : dsu) d.init(g.n);
    assign.assign(g.edge_count(), -1);
    deg_red.assign(g.n, 0);
    red_ecnt.assign(g.n, 0);
    red_verts.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) red_verts[v] = {v};
    red_adj.assign(g.n, {});
    incident.assign(g.n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges[e];
      incident[u].push_back(e);
      if (u != v) incident[v].push_back(e);
    }
  }

  size_t mark() const { return ops.size(); }

  void undo_to(size_t m) {
    while (ops.size() > m) {
      Op op = ops.back();
      ops.pop_back();
      switch (op.t) {
        case OpAssign:
          assign[op.a] = -1;
          break;
        case OpUnion: {  // a=class, b=kept, c=absorbed, d=old cyc of kept
          ClassDsu& D = dsu[op.a];
          D.parent[op.c] = op.c;
          D.sz[op.b] -= D.sz[op.c];
          D.cyc[op.b] = static_cast<char>(op.d);
          if (op.a == red) {
            red_ecnt[op.b] -= red_ecnt[op.c];
            red_verts[op.b].resize(red_verts[op.b].size() - red_verts[op.c].size());
          }
          break;
        }
        case OpCyc:
          dsu[op.a].cyc[op.b] = 0;
          break;
        case OpDeg:
          --deg_red[op.a];
          break;
        case OpAdj:
          red_adj[op.a].pop_back();
          break;
        case OpEcnt:
          --red_ecnt[op.a];
          break;
      }
    }
  }

  int red_comp_diameter(int root) {
    const std::vector<int>& vs = red_verts[root];
    std::vector<int> dist(g.n, -1);
    int best = 0;
    for (int s : vs) {
      for (int v : vs) dist[v] = -1;
      std::queue<int> q;
      q.push(s);
      dist[s] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        best = std::max(best, dist[u]);
        for (int w : red_adj[u])
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
      }
    }
    return best;
  }

  bool size_cond(int root) const { return !size_floor || red_ecnt[root] >= *size_floor; }

  bool red_comp_closed(int root) {
    for (int v : red_verts[root])
      for (int e : incident[v])
        if (assign[e] < 0) return false;
    return true;
  }

  // the diameter constraint can only be refuted soundly when it can no longer
  // improve: cyclic components (and all red components under red_forest) only
  // stretch under future merges; otherwise wait until the component is closed
  bool diam_violation(int root) {
    if (!forbid_diam_ge) return false;
    if (!size_cond(root)) return false;
    bool frozen = red_forest || dsu[red].cyc[root];
    if (!frozen && !red_comp_closed(root)) return false;
    return red_comp_diameter(root) >= *forbid_diam_ge;
  }

  bool try_assign(int e, int cls) {
    ops.push_back({OpAssign, e});
    assign[e] = cls;
    auto [u, v] = g.edges[e];
    ClassDsu& D = dsu[cls];
    int ru = D.find(u), rv = D.find(v);
    if (ru == rv) {
      if (D.cyc[ru]) return false;
      if (cls == red && red_forest) return false;
      D.cyc[ru] = 1;
      ops.push_back({OpCyc, cls, ru});
    } else {
      if (D.sz[ru] < D.sz[rv]) std::swap(ru, rv);
      int old_cyc = D.cyc[ru];
      D.parent[rv] = ru;
      D.sz[ru] += D.sz[rv];
      if (cls == red) {
        red_ecnt[ru] += red_ecnt[rv];
        red_verts[ru].insert(red_verts[ru].end(), red_verts[rv].begin(), red_verts[rv].end());
      }
      ops.push_back({OpUnion, cls, ru, rv, old_cyc});
      if (D.cyc[ru] && D.cyc[rv]) return false;
      D.cyc[ru] = D.cyc[ru] | D.cyc[rv];
    }
    if (cls != red) {
      // a blue assignment can close red components at its endpoints
      if (forbid_diam_ge) {
        int r1 = dsu[red].find(u);
        if (diam_violation(r1)) return false;
        int r2 = dsu[red].find(v);
        if (r2 != r1 && diam_violation(r2)) return false;
      }
      return true;
    }
    ++deg_red[u];
    ops.push_back({OpDeg, u});
    ++deg_red[v];
    ops.push_back({OpDeg, v});
    if (max_red_degree && (deg_red[u] > *max_red_degree || deg_red[v] > *max_red_degree))
      return false;
    if (u != v) {
      red_adj[u].push_back(v);
      ops.push_back({OpAdj, u});
      red_adj[v].push_back(u);
      ops.push_back({OpAdj, v});
    }
    int r = dsu[red].find(u);
    ++red_ecnt[r];
    ops.push_back({OpEcnt, r});
    if (max_component_edges && red_ecnt[r] > *max_component_edges) return false;
    return !diam_violation(r);
  }

  // sound impossibility test without commitment, for unit propagation
  bool quick_impossible(int e, int cls) {
    auto [u, v] = g.edges[e];
    ClassDsu& D = dsu[cls];
    int ru = D.find(u), rv = D.find(v);
    if (ru == rv && D.cyc[ru]) return true;
    if (ru != rv && D.cyc[ru] && D.cyc[rv]) return true;
    if (cls == red) {
      if (ru == rv && red_forest) return true;
      if (max_red_degree) {
        int need_u = u == v ? 2 : 1;
        if (deg_red[u] + need_u > *max_red_degree) return true;
        if (u != v && deg_red[v] + 1 > *max_red_degree) return true;
      }
    }
    return false;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (assign[e] >= 0) continue;
        int allowed = -1, count = 0;
        for (int c = 0; c < total_classes; ++c)
          if (!quick_impossible(e, c)) {
            allowed = c;
            ++count;
            if (count > 1) break;
          }
        if (count == 0) return false;
        if (count == 1) {
          if (!try_assign(e, allowed)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool out_of_budget() {
    if (node_cap >= 0 && nodes > node_cap) {
      timed_out = true;
      return true;
    }
    if (use_deadline && (nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return true;
    }
    return false;
  }

  // exact re-check of a full assignment, independent of the incremental state
  bool leaf_valid() {
    for (int c = 0; c < total_classes; ++c) {
      EdgeSubgraph sub{&g, {}};
      for (int e = 0; e < g.edge_count(); ++e)
        if (assign[e] == c) sub.members.push_back(e);
      auto kind = class_kind(sub);
      if (kind == ClassKind::Neither) return false;
      if (c == red) {
        if (red_forest && kind != ClassKind::Forest) return false;
        if (max_red_degree) {
          std::vector<int> deg(g.n, 0);
          for (int e : sub.members) {
            deg[g.edges[e].first]++;
            deg[g.edges[e].second]++;
          }
          for (int v = 0; v < g.n; ++v)
            if (deg[v] > *max_red_degree) return false;
        }
        for (const Component& comp : components(sub)) {
          if (max_component_edges && comp.edge_count > *max_component_edges) return false;
          if (forbid_diam_ge) {
            int dm = general_diameter(g, comp.vertices, comp.edge_indices);
            bool sz = !size_floor || comp.edge_count >= *size_floor;
            if (sz && dm >= *forbid_diam_ge) return false;
          }
        }
      }
    }
    return true;
  }

  bool search(size_t pos) {
    ++nodes;
    if (out_of_budget()) return false;
    if (pos == order.size()) return leaf_valid();
    int e = order[pos];
    if (assign[e] >= 0) return search(pos + 1);  // fixed by propagation
    for (int c = 0; c < total_classes; ++c) {
      size_t m = mark();
      if (try_assign(e, c) && (!use_propagation || propagate()) && search(pos + 1)) return true;
      if (timed_out) return false;
      undo_to(m);
    }
    return false;
  }

  Decomposition extract(int k_blue) {
    Decomposition dec;
    dec.k = k_blue;
    dec.classes.resize(k_blue);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (assign[e] == red)
        dec.red.push_back(e);
      else
        dec.classes[assign[e]].push_back(e);
    }
    return dec;
  }
};

}  // namespace

BruteResult brute_force_search(const MultiGraph& g, int k, const BruteConstraints& c,
                               int edge_cap) {
  BruteResult res;
  if (g.edge_count() > edge_cap) {
    res.outcome = BruteResult::Outcome::CapExceeded;
    return res;
  }
  ColourSearch s(g);
  s.total_classes = k + 1;
  s.red_forest = c.red_forest;
  s.max_component_edges = c.max_component_edges;
  s.max_red_degree = c.max_red_degree;
  if (c.max_diam) s.forbid_diam_ge = *c.max_diam + 1;
  s.use_propagation = false;
  s.order.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) s.order[e] = e;
  s.init();
  bool found = s.search(0);
  res.nodes = s.nodes;
  if (found) {
    res.outcome = BruteResult::Outcome::Found;
    res.dec = s.extract(k);
  } else {
    res.outcome = BruteResult::Outcome::Unsat;
  }
  return res;
}

LowerBoundResult check_lower_bound(const MultiGraph& g, int k, int max_red_degree,
                                   int diam_strict_bound, std::optional<int> size_floor,
                                   long long timeout_ms, int edge_cap) {
  LowerBoundResult res;
  if (g.edge_count() > edge_cap) {
    res.outcome = LowerBoundResult::Outcome::CapExceeded;
    return res;
  }
  ColourSearch s(g);
  s.total_classes = k + 1;
  s.red_forest = false;
  s.max_red_degree = max_red_degree;
  s.forbid_diam_ge = diam_strict_bound;
  s.size_floor = size_floor;
  s.use_propagation = true;
  s.use_deadline = true;
  s.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  // branch on hub-like (high-degree) vertices' edges first
  std::vector<int> gdeg(g.n, 0);
  for (auto [u, v] : g.edges) {
    gdeg[u]++;
    gdeg[v]++;
  }
  s.order.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) s.order[e] = e;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    int da = std::max(gdeg[g.edges[a].first], gdeg[g.edges[a].second]);
    int db = std::max(gdeg[g.edges[b].first], gdeg[g.edges[b].second]);
    if (da != db) return da > db;
    return a < b;
  });
  s.init();
  bool found = s.search(0);
  res.nodes = s.nodes;
  if (found) {
    res.outcome = LowerBoundResult::Outcome::Found;
    res.dec = s.extract(k);
  } else if (s.timed_out) {
    res.outcome = LowerBoundResult::Outcome::Timeout;
  } else {
    res.outcome = LowerBoundResult::Outcome::Unsat;
  }
  return res;
}

}  // namespace pfd
