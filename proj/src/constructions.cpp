#include "pfd/constructions.hpp"

#include <stdexcept>

namespace pfd {

Decomposition ExampleColouring::to_decomposition() const {
  Decomposition dec;
  dec.k = k;
  dec.classes.resize(k);
  for (int e = 0; e < static_cast<int>(colour.size()); ++e) {
    if (colour[e] == 0)
      dec.red.push_back(e);
    else
      dec.classes[colour[e] - 1].push_back(e);
  }
  return dec;
}

namespace {

struct Builder {
  MultiGraph g;
  ExampleColouring ex;
  std::vector<std::vector<char>> out_used;  // per vertex, per colour 1..k

  explicit Builder(int k) {
    ex.k = k;
    for (int i = 0; i < k; ++i) ex.s_vertices.push_back(add_vertex());
  }

  int add_vertex() {
    out_used.emplace_back(ex.k + 1, 0);
    return g.n++;
  }

  int add_edge(int u, int v, int colour, int tail) {
    g.edges.push_back({u, v});
    ex.colour.push_back(colour);
    ex.tail.push_back(tail);
    if (colour > 0) out_used[tail][colour] = 1;
    return g.edge_count() - 1;
  }

  // path of `len` new vertices whose edges all point toward `t`
  std::vector<int> add_red_leg(int t, int len) {
    std::vector<int> edges;
    int prev = t;
    for (int i = 0; i < len; ++i) {
      int w = add_vertex();
      edges.push_back(add_edge(w, prev, 0, w));
      prev = w;
    }
    return edges;
  }

  void add_s_edges(int first_vertex) {
    for (int v = first_vertex; v < g.n; ++v)
      for (int c = 1; c <= ex.k; ++c)
        if (!out_used[v][c]) add_edge(v, ex.s_vertices[c - 1], c, v);
  }

  // the shared T skeleton: 1-coloured path of length delta from the root,
  // k-1 extra out-edges (colours 2..k) at each even-depth path vertex
  ExampleColouring::CopyInfo add_t_skeleton(int delta) {
    ExampleColouring::CopyInfo ci;
    ci.first_vertex = g.n;
    std::vector<int> pathv(delta + 1);
    for (int j = 0; j <= delta; ++j) pathv[j] = add_vertex();
    ci.root = pathv[0];
    for (int j = 0; j < delta; ++j) add_edge(pathv[j], pathv[j + 1], 1, pathv[j]);
    for (int j = 0; j <= delta; ++j) {
      ci.t_vertices.push_back(pathv[j]);
      ci.t_depth.push_back(j);
    }
    for (int j = 0; j < delta; j += 2)
      for (int c = 2; c <= ex.k; ++c) {
        int leaf = add_vertex();
        add_edge(pathv[j], leaf, c, pathv[j]);
        ci.t_vertices.push_back(leaf);
        ci.t_depth.push_back(j + 1);
      }
    return ci;
  }
};

std::vector<int> leg_lengths(int budget, int cap) {
  std::vector<int> out;
  while (budget > 0) {
    int take = std::min(cap, budget);
    out.push_back(take);
    budget -= take;
  }
  return out;
}

}  // namespace

std::pair<MultiGraph, ExampleColouring> build_diameter_example(const DiamSpec& s) {
  if (s.k < 1) throw std::invalid_argument("diameter example: k must be >= 1");
  if (s.ell < 0) throw std::invalid_argument("diameter example: ell must be >= 0");
  if (s.alpha != 0 && s.alpha != 1) throw std::invalid_argument("diameter example: alpha in {0,1}");
  if (s.delta < 1 || s.delta % 2 == 0)
    throw std::invalid_argument("diameter example: delta must be odd and >= 1");
  if (s.p < 1) throw std::invalid_argument("diameter example: p must be >= 1");

  Builder b(s.k);
  for (int copy = 0; copy < s.p; ++copy) {
    auto ci = b.add_t_skeleton(s.delta);
    for (size_t i = 0; i < ci.t_vertices.size(); ++i) {
      int t = ci.t_vertices[i], depth = ci.t_depth[i];
      ExampleRedComp comp;
      comp.anchor = t;
      if (depth == 0) {
        comp.size_class = 2 * s.ell + 1 + s.alpha;
        // the root sits in the middle: two arms, both of length >= ell
        int arm1 = (comp.size_class + 1) / 2, arm2 = comp.size_class / 2;
        for (int e : b.add_red_leg(t, arm1)) comp.edges.push_back(e);
        for (int e : b.add_red_leg(t, arm2)) comp.edges.push_back(e);
      } else {
        comp.size_class = depth % 2 == 0 ? s.ell + s.alpha : s.ell;
        comp.edges = b.add_red_leg(t, comp.size_class);
      }
      b.ex.red_comps.push_back(std::move(comp));
    }
    b.add_s_edges(ci.first_vertex);
    ci.last_vertex = b.g.n - 1;
    b.ex.copies.push_back(std::move(ci));
  }
  return {std::move(b.g), std::move(b.ex)};
}

std::pair<MultiGraph, ExampleColouring> build_z_example(const ZSpec& s) {
  if (s.k < 2) throw std::invalid_argument("z example: k must be >= 2");
  if (s.d < 1) throw std::invalid_argument("z example: d must be >= 1");
  if (s.z < 1 || s.z > (s.d - 1) / (s.k + 1))
    throw std::invalid_argument("z example: need 1 <= z <= floor((d-1)/(k+1))");
  if (s.delta < 1 || s.delta % 2 == 0)
    throw std::invalid_argument("z example: delta must be odd and >= 1");
  if (s.p < 1) throw std::invalid_argument("z example: p must be >= 1");

  const int even_size = s.d - s.z * s.k;            // >= z+1 since d > z(k+1)
  const int root_size = s.d - s.z * (s.k - 1) + 1;  // even_size + (z+1)
  Builder b(s.k);
  for (int copy = 0; copy < s.p; ++copy) {
    auto ci = b.add_t_skeleton(s.delta);
    for (size_t i = 0; i < ci.t_vertices.size(); ++i) {
      int t = ci.t_vertices[i], depth = ci.t_depth[i];
      ExampleRedComp comp;
      comp.anchor = t;
      std::vector<int> legs;
      if (depth == 0) {
        comp.size_class = root_size;
        // two opposite (z+1)-legs realize diameter 2(z+1)
        legs = {s.z + 1, s.z + 1};
        for (int l : leg_lengths(root_size - 2 * (s.z + 1), s.z + 1)) legs.push_back(l);
      } else if (depth % 2 == 0) {
        comp.size_class = even_size;
        legs = {s.z + 1};  // the first leg is Q_t
        for (int l : leg_lengths(even_size - (s.z + 1), s.z + 1)) legs.push_back(l);
      } else {
        comp.size_class = s.z;
        legs = {s.z};
      }
      for (int l : legs)
        for (int e : b.add_red_leg(t, l)) comp.edges.push_back(e);
      b.ex.red_comps.push_back(std::move(comp));
    }
    b.add_s_edges(ci.first_vertex);
    ci.last_vertex = b.g.n - 1;
    b.ex.copies.push_back(std::move(ci));
  }
  return {std::move(b.g), std::move(b.ex)};
}

Rational predicted_density(const DiamSpec& s) {
  Rational t(BigInt(2 * (s.ell + 1)), BigInt(s.delta + 1));
  Rational beta = (Rational(s.ell * (s.k + 1) + s.alpha) + t) /
                  (Rational((s.ell + 1) * (s.k + 1) + s.alpha) + t);
  return Rational(s.k) + beta;
}

Rational predicted_density(const ZSpec& s) {
  Rational t(BigInt(2 * (s.z + 1)), BigInt(s.delta + 1));
  Rational beta = (Rational(s.d) + t) / (Rational(s.d + s.k + 1) + t);
  return Rational(s.k) + beta;
}

ConstructionValidity check_validity(const DiamSpec& s) {
  ConstructionValidity v;
  v.delta_odd = s.delta >= 1 && s.delta % 2 == 1;
  if (s.eps)  // delta >= 2(ell+1)/eps - 1
    v.delta_large_enough = *s.eps * Rational(s.delta + 1) >= Rational(2 * (s.ell + 1));
  if (s.big_d) v.p_large_enough = s.p >= s.k * *s.big_d + s.k * s.k + 1;
  return v;
}

ConstructionValidity check_validity(const ZSpec& s) {
  ConstructionValidity v;
  v.delta_odd = s.delta >= 1 && s.delta % 2 == 1;
  if (s.eps)  // strict: delta > 2(z+1)/eps - 1
    v.delta_large_enough = *s.eps * Rational(s.delta + 1) > Rational(2 * (s.z + 1));
  return v;
}

RedBlueColouring example_red_blue(const MultiGraph& g, const ExampleColouring& ex) {
  std::vector<char> active(g.n, 1);
  for (int sv : ex.s_vertices) active[sv] = 0;
  RedBlueColouring f(&g, ex.k, std::move(active));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (ex.colour[e] == 0)
      f.set_red(e);
    else
      f.set_blue(e, ex.tail[e]);
  }
  return f;
}

}  // namespace pfd
