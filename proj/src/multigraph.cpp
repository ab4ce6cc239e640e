#include "pfd/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

namespace pfd {

namespace {

bool data_line(const std::string& s) {
  for (char c : s) {
    if (c == '#') return false;
    if (!isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& s, int line_no, size_t want) {
  std::istringstream iss(s);
  std::vector<long long> out;
  long long x;
  while (iss >> x) out.push_back(x);
  std::string rest;
  if (!iss.eof() && (iss >> rest, !rest.empty()))
    throw ParseError(line_no, "malformed line: non-integer token '" + rest + "'");
  if (out.size() != want)
    throw ParseError(line_no, "malformed line: expected " + std::to_string(want) +
                                  " integers, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  MultiGraph g;
  while (std::getline(in, line)) {
    ++line_no;
    if (!data_line(line)) continue;
    if (n < 0) {
      auto hdr = parse_ints(line, line_no, 2);
      n = hdr[0];
      m = hdr[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "malformed header: negative count");
      g.n = static_cast<int>(n);
      g.edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (g.edge_count() == m)
      throw ParseError(line_no, "edge count mismatch: more than " + std::to_string(m) + " edges");
    auto uv = parse_ints(line, line_no, 2);
    for (long long v : uv)
      if (v < 0 || v >= n)
        throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(n) + ")");
    g.edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  if (n < 0) throw ParseError(line_no, "missing header line \"n m\"");
  if (g.edge_count() != m)
    throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(m) +
                                  ", file has " + std::to_string(g.edge_count()));
  return g;
}

MultiGraph parse_graph(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph(iss);
}

std::string serialize_graph(const MultiGraph& g) {
  std::ostringstream oss;
  oss << g.n << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges) oss << u << " " << v << "\n";
  return oss.str();
}

std::vector<int> EdgeSubgraph::induced_vertices() const {
  std::vector<int> vs;
  for (int e : members) {
    vs.push_back(parent->edges[e].first);
    vs.push_back(parent->edges[e].second);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

EdgeSubgraph whole_graph(const MultiGraph& g) {
  EdgeSubgraph s;
  s.parent = &g;
  s.members.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) s.members[e] = e;
  return s;
}

std::vector<Component> components(const EdgeSubgraph& s, const std::vector<int>& isolated) {
  const MultiGraph& g = *s.parent;
  // adjacency restricted to member edges
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbour, edge)
  for (int e : s.members) {
    auto [u, v] = g.edges[e];
    adj[u].emplace_back(v, e);
    if (u != v) adj[v].emplace_back(u, e);
  }
  std::vector<int> seeds = s.induced_vertices();
  for (int v : isolated) seeds.push_back(v);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::vector<char> seen(g.n, 0);
  std::vector<Component> out;
  for (int root : seeds) {
    if (seen[root]) continue;
    Component c;
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    std::vector<char> edge_taken;  // lazily sized
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      c.vertices.push_back(u);
      for (auto [w, e] : adj[u]) {
        c.edge_indices.push_back(e);
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(c.edge_indices.begin(), c.edge_indices.end());
    c.edge_indices.erase(std::unique(c.edge_indices.begin(), c.edge_indices.end()),
                         c.edge_indices.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edge_count = static_cast<int>(c.edge_indices.size());
    c.is_cyclic = c.edge_count >= c.vertex_count();
    out.push_back(std::move(c));
  }
  // BFS from ascending seeds already yields min-vertex order, but make it explicit.
  std::sort(out.begin(), out.end(),
            [](const Component& a, const Component& b) { return a.min_vertex() < b.min_vertex(); });
  return out;
}

namespace {

// BFS over a component's edges; returns (farthest vertex, distance).
std::pair<int, int> bfs_far(const MultiGraph& g, const Component& k, int src) {
  std::vector<std::vector<int>> adj_idx;  // local adjacency: vertex position -> neighbours
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < k.vertices.size(); ++i) pos[k.vertices[i]] = static_cast<int>(i);
  adj_idx.resize(k.vertices.size());
  for (int e : k.edge_indices) {
    auto [u, v] = g.edges[e];
    adj_idx[pos[u]].push_back(pos[v]);
    if (u != v) adj_idx[pos[v]].push_back(pos[u]);
  }
  std::vector<int> dist(k.vertices.size(), -1);
  std::queue<int> q;
  q.push(pos[src]);
  dist[pos[src]] = 0;
  int best = pos[src];
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] > dist[best] || (dist[u] == dist[best] && u < best)) best = u;
    for (int w : adj_idx[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return {k.vertices[best], dist[best]};
}

}  // namespace

int tree_diameter(const MultiGraph& g, const Component& k) {
  if (k.is_cyclic) throw std::invalid_argument("tree_diameter: component is cyclic");
  if (k.vertex_count() <= 1) return 0;
  auto [far, d1] = bfs_far(g, k, k.min_vertex());
  (void)d1;
  return bfs_far(g, k, far).second;
}

ClassKind class_kind(const EdgeSubgraph& s) {
  bool forest = true;
  bool pseudo = true;
  for (const Component& c : components(s)) {
    if (c.is_cyclic) forest = false;
    if (c.edge_count > c.vertex_count()) pseudo = false;
  }
  if (forest) return ClassKind::Forest;
  return pseudo ? ClassKind::PseudoforestNotForest : ClassKind::Neither;
}

}  // namespace pfd
