#include "pfd/density.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pfd/maxflow.hpp"

namespace pfd {

namespace {

struct ClosureResult {
  long long value;
  std::vector<int> xset;  // maximal optimizer, sorted
};

long long induced_edge_count(const MultiGraph& g, const std::vector<char>& in) {
  long long c = 0;
  for (auto [u, v] : g.edges)
    if (in[u] && in[v]) ++c;
  return c;
}

// Maximize q*e(X) - p*|X \ {forced_a}| over X containing both forced vertices
// (each may be -1 for "none"). Selecting an edge requires both endpoints.
// Returns the maximal optimizer.
ClosureResult closure_max(const MultiGraph& g, long long q, long long p, int forced_a = -1,
                          int forced_b = -1) {
  const int m = g.edge_count(), n = g.n;
  const int s = m + n, t = m + n + 1;
  const long long inf = q * (m + 1) + p * (n + 1) + 1;
  MaxFlow mf(m + n + 2);
  auto is_forced = [&](int v) { return v == forced_a || v == forced_b; };
  for (int e = 0; e < m; ++e) {
    mf.add_edge(s, e, q);
    auto [u, v] = g.edges[e];
    if (!is_forced(u)) mf.add_edge(e, m + u, inf);
    if (v != u && !is_forced(v)) mf.add_edge(e, m + v, inf);
  }
  for (int v = 0; v < n; ++v)
    if (!is_forced(v)) mf.add_edge(m + v, t, p);
  long long flow = mf.run(s, t);
  long long value = q * m - flow - (forced_b >= 0 ? p : 0);

  auto coreach = mf.sink_coreachable(t);
  std::vector<char> in(n, 0);
  for (int v = 0; v < n; ++v)
    if (is_forced(v) || !coreach[m + v]) in[v] = 1;
  ClosureResult res;
  res.value = value;
  for (int v = 0; v < n; ++v)
    if (in[v]) res.xset.push_back(v);
  // cross-check the reported optimum against a recount on the extracted set
  long long cost_members = 0;
  for (int v : res.xset)
    if (v != forced_a) ++cost_members;
  long long recount = q * induced_edge_count(g, in) - p * cost_members;
  if (recount != value) throw std::logic_error("closure_max: cut/recount disagreement");
  return res;
}

struct Frac {
  long long p, q;
};

// Exact maximum ratio with denominator <= qmax, located by walking the
// Stern-Brocot tree with the strict-exceedance oracle.
Frac stern_brocot_max(const std::function<bool(long long, long long)>& exceeds, long long qmax) {
  Frac lo{-1, 1}, hi{1, 0};
  for (int iter = 0; iter < 2000000; ++iter) {
    Frac med{lo.p + hi.p, lo.q + hi.q};
    if (hi.q != 0 && med.q > qmax) return hi;  // nothing admissible strictly inside (lo, hi)
    if (exceeds(med.p, med.q))
      lo = med;
    else
      hi = med;
  }
  throw std::logic_error("stern_brocot_max: did not converge");
}

EdgeSubgraph induced_subgraph(const MultiGraph& g, const std::vector<int>& xs) {
  std::vector<char> in(g.n, 0);
  for (int v : xs) in[v] = 1;
  EdgeSubgraph s;
  s.parent = &g;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (in[u] && in[v]) s.members.push_back(e);
  }
  return s;
}

}  // namespace

DensityWitness max_density(const MultiGraph& g) {
  if (g.n == 0) throw std::invalid_argument("max_density: empty graph");
  if (g.edge_count() == 0) {
    DensityWitness w;
    w.value = Rational(0);
    w.vertices = {0};
    w.subgraph = induced_subgraph(g, w.vertices);
    return w;
  }
  auto exceeds = [&](long long p, long long q) {
    if (p < 0) return true;
    return closure_max(g, q, p).value > 0;
  };
  Frac best = stern_brocot_max(exceeds, g.n);
  ClosureResult res = closure_max(g, best.q, best.p);
  if (res.value != 0 || res.xset.empty())
    throw std::logic_error("max_density: witness extraction failed");
  DensityWitness w;
  w.value = Rational(BigInt(best.p), BigInt(best.q));
  w.vertices = res.xset;
  w.subgraph = induced_subgraph(g, res.xset);
  return w;
}

DensityWitness fractional_arboricity(const MultiGraph& g) {
  if (g.n < 2) throw std::invalid_argument("fractional_arboricity: need at least 2 vertices");
  if (g.edge_count() < 1) throw std::invalid_argument("fractional_arboricity: need at least 1 edge");
  auto exceeds = [&](long long p, long long q) {
    if (p < 0) return true;
    for (int r = 0; r < g.n; ++r)
      for (int w = r + 1; w < g.n; ++w)
        if (closure_max(g, q, p, r, w).value > 0) return true;
    return false;
  };
  Frac best = stern_brocot_max(exceeds, g.n - 1);
  for (int r = 0; r < g.n; ++r)
    for (int w = r + 1; w < g.n; ++w) {
      ClosureResult res = closure_max(g, best.q, best.p, r, w);
      if (res.value == 0) {
        DensityWitness out;
        out.value = Rational(BigInt(best.p), BigInt(best.q));
        out.vertices = res.xset;
        out.subgraph = induced_subgraph(g, res.xset);
        if (out.vertices.size() < 2)
          throw std::logic_error("fractional_arboricity: degenerate witness");
        return out;
      }
    }
  throw std::logic_error("fractional_arboricity: no tight witness found");
}

std::optional<int> minimal_valid_d(const Rational& density, int k) {
  Rational c = density - Rational(k);
  if (c <= Rational(0)) return 1;
  if (c >= Rational(1)) return std::nullopt;
  // d/(d+k+1) >= c  <=>  d >= c(k+1)/(1-c)
  Rational need = c * Rational(k + 1) / (Rational(1) - c);
  BigInt d = (need.num() + need.den() - 1) / need.den();  // ceil, positive
  if (d < 1) d = 1;
  return d.convert_to<int>();
}

HypothesisResult hypothesis_check(const MultiGraph& g, int k, int d) {
  HypothesisResult r;
  r.bound = Rational(k) + Rational(BigInt(d), BigInt(d + k + 1));
  if (g.n == 0) {  // vacuous: no nonempty subgraph
    r.density = Rational(0);
  } else {
    r.density = max_density(g).value;
  }
  r.holds = r.density <= r.bound;
  r.margin = r.bound - r.density;
  return r;
}

}  // namespace pfd
