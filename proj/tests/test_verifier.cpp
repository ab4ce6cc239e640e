#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfd/constructions.hpp"
#include "pfd/density.hpp"
#include "pfd/verifier.hpp"

using namespace pfd;

namespace {

MultiGraph make(int n, std::vector<std::pair<int, int>> es) {
  MultiGraph g;
  g.n = n;
  g.edges = std::move(es);
  return g;
}

MultiGraph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// plain enumeration over all (k+1)^m assignments, checked exactly; the
// pruning-soundness oracle for the backtracking searches
bool plain_enumeration_sat(const MultiGraph& g, int k, int max_red_degree, int diam_strict_bound,
                           std::optional<int> size_floor) {
  const int m = g.edge_count();
  std::vector<int> assign(m, 0);
  const int classes = k + 1;
  long long total = 1;
  for (int e = 0; e < m; ++e) total *= classes;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int e = 0; e < m; ++e) {
      assign[e] = static_cast<int>(c % classes);
      c /= classes;
    }
    bool ok = true;
    for (int cls = 0; cls < classes && ok; ++cls) {
      EdgeSubgraph sub{&g, {}};
      for (int e = 0; e < m; ++e)
        if (assign[e] == cls) sub.members.push_back(e);
      if (class_kind(sub) == ClassKind::Neither) ok = false;
      if (ok && cls == k) {
        std::vector<int> deg(g.n, 0);
        for (int e : sub.members) {
          deg[g.edges[e].first]++;
          deg[g.edges[e].second]++;
        }
        for (int v = 0; v < g.n && ok; ++v)
          if (deg[v] > max_red_degree) ok = false;
        for (const Component& comp : components(sub)) {
          if (!ok) break;
          // all-pairs BFS diameter, cyclic components included
          int best = 0;
          for (int s : comp.vertices) {
            std::vector<int> dist(g.n, -1);
            std::vector<int> q{s};
            dist[s] = 0;
            for (size_t qi = 0; qi < q.size(); ++qi) {
              int u = q[qi];
              best = std::max(best, dist[u]);
              for (int e : comp.edge_indices) {
                auto [a, b] = g.edges[e];
                if (a == b) continue;
                int w = a == u ? b : (b == u ? a : -1);
                if (w >= 0 && dist[w] < 0) {
                  dist[w] = dist[u] + 1;
                  q.push_back(w);
                }
              }
            }
          }
          bool sz = !size_floor || comp.edge_count >= *size_floor;
          if (sz && best >= diam_strict_bound) ok = false;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("verify_decomposition: engine output on K4 passes") {
  MultiGraph g = k4();
  auto res = decompose(g, Params(1, 2));
  REQUIRE(res.outcome == DecomposeResult::Outcome::Success);
  Report rep = verify_decomposition(g, *res.decomposition, Params(1, 2));
  CHECK(rep.pass());
  CHECK(rep.failing_components.empty());
}

TEST_CASE("verify_decomposition: a red triangle fails the forest check with its id") {
  MultiGraph g = make(3, {{0, 1}, {1, 2}, {2, 0}});
  Decomposition dec;
  dec.k = 1;
  dec.classes = {{}};
  dec.red = {0, 1, 2};
  Report rep = verify_decomposition(g, dec, Params(1, 3));
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.red_forest_ok);
  REQUIRE(rep.failing_components.size() == 1);
  CHECK(rep.failing_components[0] == 0);
}

TEST_CASE("verify_decomposition: z-clause arithmetic at k=2, d=7") {
  // spider with 7 edges and diameter 4: z=1 demands diameter <= 2
  MultiGraph g = make(8, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}});
  Decomposition dec;
  dec.k = 2;
  dec.classes = {{}, {}};
  dec.red = {0, 1, 2, 3, 4, 5, 6};
  Report rep = verify_decomposition(g, dec, Params(2, 7));
  CHECK(rep.size_ok);
  CHECK(rep.diam_ok);
  CHECK_FALSE(rep.zclause_ok);
  CHECK_FALSE(rep.pass());
  REQUIRE_FALSE(rep.failing_components.empty());
  CHECK(rep.failing_components[0] == 0);
}

TEST_CASE("verify_decomposition: star shape enforced only when d <= k+1") {
  MultiGraph g = make(4, {{0, 1}, {1, 2}, {2, 3}});
  Decomposition dec;
  dec.k = 2;
  dec.classes = {{}, {}};
  dec.red = {0, 1, 2};  // path of 3 edges, diameter 3
  Report low = verify_decomposition(g, dec, Params(2, 3));  // d = k+1: stars required
  CHECK_FALSE(low.star_ok);
  CHECK_FALSE(low.pass());
  Report high = verify_decomposition(g, dec, Params(2, 4));  // d > k+1: no star clause
  CHECK(high.star_ok);
  CHECK(high.pass());
}

TEST_CASE("verify_decomposition: non-partition input is reported") {
  MultiGraph g = make(2, {{0, 1}});
  Decomposition dec;
  dec.k = 1;
  dec.classes = {{0}};
  dec.red = {0};  // duplicated edge
  CHECK_FALSE(verify_decomposition(g, dec, Params(1, 1)).partition_ok);
  dec.red = {};
  CHECK(verify_decomposition(g, dec, Params(1, 1)).partition_ok);
}

TEST_CASE("verify_certificate: engine certificate on K4 plus a parallel edge") {
  MultiGraph g = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1}});
  auto res = decompose(g, Params(1, 2));
  REQUIRE(res.outcome == DecomposeResult::Outcome::Refuted);
  REQUIRE(res.certificate.has_value());
  CHECK(verify_certificate(g, *res.certificate, Params(1, 2)));

  SUBCASE("tampering breaks it") {
    Certificate broken = *res.certificate;
    REQUIRE_FALSE(broken.blue_arcs.empty());
    broken.blue_arcs.pop_back();  // blue out-counts and induced counts now disagree
    CHECK_FALSE(verify_certificate(g, broken, Params(1, 2)));

    Certificate wrong_flag = *res.certificate;
    REQUIRE_FALSE(wrong_flag.cells.empty());
    wrong_flag.cells[0].k_is_bad = !wrong_flag.cells[0].k_is_bad;
    CHECK_FALSE(verify_certificate(g, wrong_flag, Params(1, 2)));
  }
}

TEST_CASE("verify_certificate: infeasible-orientation witness") {
  MultiGraph g = make(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}});
  auto res = decompose(g, Params(1, 1));
  REQUIRE(res.outcome == DecomposeResult::Outcome::Refuted);
  REQUIRE(res.certificate->kind == Certificate::Kind::Infeasible);
  CHECK(verify_certificate(g, *res.certificate, Params(1, 1)));
}

TEST_CASE("brute_force_search: K4 under the theorem constraints") {
  BruteConstraints cons;
  cons.red_forest = true;
  cons.max_component_edges = 2;
  cons.max_diam = 2;
  auto res = brute_force_search(k4(), 1, cons);
  REQUIRE(res.outcome == BruteResult::Outcome::Found);
  Report rep = verify_decomposition(k4(), *res.dec, Params(1, 2));
  CHECK(rep.pass());
}

TEST_CASE("brute_force_search: a triangle cannot be a red forest alone (k=0)") {
  MultiGraph g = make(3, {{0, 1}, {1, 2}, {2, 0}});
  BruteConstraints cons;
  cons.red_forest = true;
  auto res = brute_force_search(g, 0, cons);
  CHECK(res.outcome == BruteResult::Outcome::Unsat);
}

TEST_CASE("brute_force_search: edge cap") {
  MultiGraph g;
  g.n = 2;
  for (int i = 0; i < 15; ++i) g.edges.push_back({0, 1});
  CHECK(brute_force_search(g, 1, {}).outcome == BruteResult::Outcome::CapExceeded);
}

TEST_CASE("check_lower_bound: trivially satisfiable and unsatisfiable instances") {
  MultiGraph path = make(3, {{0, 1}, {1, 2}});
  auto found = check_lower_bound(path, 1, 0, 1);  // red must stay empty; blue path is fine
  REQUIRE(found.outcome == LowerBoundResult::Outcome::Found);
  CHECK(verify_lb_witness(path, *found.dec, 1, 0, 1, {}));
  CHECK(found.dec->red.empty());

  // doubled triangle: six edges on three vertices cannot be one pseudoforest,
  // and with diam < 1 the red class must stay empty
  MultiGraph dbl = make(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}});
  auto unsat = check_lower_bound(dbl, 1, 2, 1);
  CHECK(unsat.outcome == LowerBoundResult::Outcome::Unsat);
}

TEST_CASE("check_lower_bound: a second theorem instance at delta = 5") {
  // p = 3 >= kD + k^2 + 1 forces a red component of diameter >= 2, which a
  // degree-1 red class cannot provide: unsatisfiable
  auto [g, ex] = build_diameter_example({1, 0, 1, 5, 3});
  auto res = check_lower_bound(g, 1, 1, 2, {}, 300000, 64);
  CHECK(res.outcome == LowerBoundResult::Outcome::Unsat);
}

TEST_CASE("check_lower_bound pruning is sound against plain enumeration") {
  std::mt19937_64 rng(60601);
  int done = 0;
  for (int it = 0; it < 200 && done < 40; ++it) {
    MultiGraph g;
    g.n = 2 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % 8);  // keep (k+1)^m tame for the oracle
    for (int e = 0; e < m; ++e)
      g.edges.push_back({static_cast<int>(rng() % g.n), static_cast<int>(rng() % g.n)});
    int k = 1 + static_cast<int>(rng() % 2);
    int D = static_cast<int>(rng() % 4);
    int bound = 1 + static_cast<int>(rng() % 4);
    std::optional<int> floor;
    if (rng() % 2) floor = static_cast<int>(rng() % 4);
    auto fast = check_lower_bound(g, k, D, bound, floor);
    bool slow = plain_enumeration_sat(g, k, D, bound, floor);
    REQUIRE(fast.outcome != LowerBoundResult::Outcome::Timeout);
    CHECK((fast.outcome == LowerBoundResult::Outcome::Found) == slow);
    if (fast.outcome == LowerBoundResult::Outcome::Found)
      CHECK(verify_lb_witness(g, *fast.dec, k, D, bound, floor));
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("engine success implies the oracle finds a decomposition too") {
  std::mt19937_64 rng(7171);
  int done = 0;
  for (int it = 0; it < 120 && done < 25; ++it) {
    MultiGraph g;
    g.n = 2 + static_cast<int>(rng() % 6);
    int m = 1 + static_cast<int>(rng() % 10);
    for (int e = 0; e < m; ++e)
      g.edges.push_back({static_cast<int>(rng() % g.n), static_cast<int>(rng() % g.n)});
    int k = 1 + static_cast<int>(rng() % 2);
    auto dmin = minimal_valid_d(max_density(g).value, k);
    if (!dmin) continue;
    Params p(k, *dmin);
    auto res = decompose(g, p);
    REQUIRE(res.outcome == DecomposeResult::Outcome::Success);
    REQUIRE(verify_decomposition(g, *res.decomposition, p).pass());
    BruteConstraints cons;
    cons.red_forest = true;
    cons.max_component_edges = p.d;
    cons.max_diam = p.d % (p.k + 1) == 1 ? 2 * p.ell + 1 : 2 * p.ell + 2;
    auto oracle = brute_force_search(g, k, cons);
    CHECK(oracle.outcome == BruteResult::Outcome::Found);
    ++done;
  }
  CHECK(done == 25);
}
