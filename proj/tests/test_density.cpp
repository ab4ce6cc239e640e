#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfd/density.hpp"

using namespace pfd;

namespace {

MultiGraph make(int n, std::vector<std::pair<int, int>> es) {
  MultiGraph g;
  g.n = n;
  g.edges = std::move(es);
  return g;
}

MultiGraph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
MultiGraph c5() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

int induced_edges(const MultiGraph& g, unsigned mask) {
  int c = 0;
  for (auto [u, v] : g.edges)
    if ((mask >> u & 1) && (mask >> v & 1)) ++c;
  return c;
}

// exhaustive-subset oracles, n <= 20ish
Rational oracle_max_density(const MultiGraph& g) {
  Rational best(0);
  bool any = false;
  for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
    Rational r(BigInt(induced_edges(g, mask)), BigInt(__builtin_popcount(mask)));
    if (!any || r > best) best = r;
    any = true;
  }
  return best;
}

Rational oracle_arboricity(const MultiGraph& g) {
  Rational best(0);
  bool any = false;
  for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz < 2) continue;
    Rational r(BigInt(induced_edges(g, mask)), BigInt(sz - 1));
    if (!any || r > best) best = r;
    any = true;
  }
  return best;
}

MultiGraph random_graph(std::mt19937_64& rng, int nmax, int mmax) {
  MultiGraph g;
  g.n = 1 + static_cast<int>(rng() % nmax);
  int m = static_cast<int>(rng() % (mmax + 1));
  for (int e = 0; e < m; ++e)
    g.edges.push_back({static_cast<int>(rng() % g.n), static_cast<int>(rng() % g.n)});
  return g;
}

}  // namespace

TEST_CASE("max_density on the named small graphs") {
  // oracle first: brute force over all vertex subsets of K4 gives 3/2
  CHECK(oracle_max_density(k4()) == frac(3, 2));
  CHECK(max_density(k4()).value == frac(3, 2));
  CHECK(max_density(c5()).value == Rational(1));
  CHECK(max_density(make(2, {{0, 1}})).value == frac(1, 2));
}

TEST_CASE("fractional_arboricity on the named small graphs") {
  CHECK(oracle_arboricity(k4()) == Rational(2));
  CHECK(fractional_arboricity(k4()).value == Rational(2));
  CHECK(fractional_arboricity(make(2, {{0, 1}})).value == Rational(1));
  auto w = fractional_arboricity(c5());
  CHECK(w.value == frac(5, 4));
  CHECK(w.vertices == std::vector<int>{0, 1, 2, 3, 4});  // whole cycle, unique maximizer
}

TEST_CASE("density rejects out-of-contract graphs") {
  CHECK_THROWS_AS(max_density(make(0, {})), std::invalid_argument);
  CHECK_THROWS_AS(fractional_arboricity(make(1, {{0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(fractional_arboricity(make(3, {})), std::invalid_argument);
}

TEST_CASE("edgeless and loop-heavy cases") {
  CHECK(max_density(make(3, {})).value == Rational(0));
  CHECK(max_density(make(1, {{0, 0}, {0, 0}})).value == Rational(2));
  // loop counts toward e(X) for |X| >= 2 but a singleton is never a candidate
  CHECK(fractional_arboricity(make(2, {{0, 0}})).value == Rational(1));
}

TEST_CASE("flow values equal exhaustive-subset values on a random corpus") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 150; ++it) {
    MultiGraph g = random_graph(rng, 7, 14);
    CHECK(max_density(g).value == oracle_max_density(g));
    if (g.n >= 2 && g.edge_count() >= 1)
      CHECK(fractional_arboricity(g).value == oracle_arboricity(g));
  }
}

TEST_CASE("witness consistency: recomputing the ratio reproduces the value") {
  std::mt19937_64 rng(88);
  for (int it = 0; it < 100; ++it) {
    MultiGraph g = random_graph(rng, 8, 16);
    auto w = max_density(g);
    CHECK(Rational(BigInt(static_cast<int>(w.subgraph.members.size())),
                   BigInt(static_cast<int>(w.vertices.size()))) == w.value);
    if (g.n >= 2 && g.edge_count() >= 1) {
      auto a = fractional_arboricity(g);
      REQUIRE(a.vertices.size() >= 2);
      CHECK(Rational(BigInt(static_cast<int>(a.subgraph.members.size())),
                     BigInt(static_cast<int>(a.vertices.size()) - 1)) == a.value);
    }
  }
}

TEST_CASE("adding an edge never decreases either density") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 80; ++it) {
    MultiGraph g = random_graph(rng, 6, 10);
    if (g.n < 2 || g.edge_count() < 1) continue;
    MultiGraph h = g;
    h.edges.push_back({static_cast<int>(rng() % g.n), static_cast<int>(rng() % g.n)});
    CHECK(max_density(h).value >= max_density(g).value);
    CHECK(fractional_arboricity(h).value >= fractional_arboricity(g).value);
  }
}

TEST_CASE("hypothesis_check knife edges") {
  auto r = hypothesis_check(k4(), 1, 2);
  CHECK(r.holds);
  CHECK(r.margin == Rational(0));  // 3/2 = 1 + 2/4 exactly

  CHECK(hypothesis_check(c5(), 1, 1).holds);  // 1 <= 4/3

  MultiGraph k4p = k4();
  k4p.edges.push_back({0, 1});
  auto r2 = hypothesis_check(k4p, 1, 2);
  CHECK_FALSE(r2.holds);
  CHECK(r2.density == frac(7, 4));
}
