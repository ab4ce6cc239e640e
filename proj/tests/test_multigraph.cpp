#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <random>

#include "pfd/multigraph.hpp"

using namespace pfd;

namespace {

MultiGraph make(int n, std::vector<std::pair<int, int>> es) {
  MultiGraph g;
  g.n = n;
  g.edges = std::move(es);
  return g;
}

// all-pairs BFS diameter, the independent oracle for double-BFS
int oracle_diameter(const MultiGraph& g, const Component& k) {
  int best = 0;
  for (int s : k.vertices) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e : k.edge_indices) {
        auto [a, b] = g.edges[e];
        if (a != u && b != u) continue;
        int w = a == u ? b : a;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    for (int v : k.vertices) best = std::max(best, dist[v]);
  }
  return best;
}

}  // namespace

TEST_CASE("parse: triangle, loop, parallel pair") {
  MultiGraph tri = parse_graph("3 3\n0 1\n1 2\n2 0");
  CHECK(tri.n == 3);
  CHECK(tri.edge_count() == 3);
  MultiGraph loop = parse_graph("1 1\n0 0");
  CHECK(loop.edge_count() == 1);
  CHECK(loop.is_loop(0));
  MultiGraph par = parse_graph("2 2\n0 1\n0 1");
  CHECK(par.edge_count() == 2);
}

TEST_CASE("parse: comments and blank lines ignored") {
  MultiGraph g = parse_graph("# a triangle\n3 3\n\n0 1\n# middle\n1 2\n2 0\n");
  CHECK(g.edge_count() == 3);
}

TEST_CASE("parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 x"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 5"), doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("2 2\n0 1"), doctest::Contains("mismatch"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1\n1 0"), doctest::Contains("mismatch"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("serialize round-trips, preserving edge order") {
  MultiGraph g = make(4, {{0, 1}, {1, 1}, {0, 1}, {3, 2}});
  MultiGraph h = parse_graph(serialize_graph(g));
  CHECK(h.n == g.n);
  CHECK(h.edges == g.edges);
}

TEST_CASE("components: triangle is one cyclic component") {
  MultiGraph g = make(3, {{0, 1}, {1, 2}, {2, 0}});
  auto cs = components(whole_graph(g));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].is_cyclic);
  CHECK(cs[0].edge_count == 3);
}

TEST_CASE("components: explicit isolated vertices become zero-edge components") {
  // path 0-1-2 with the middle vertex's edges removed
  MultiGraph g = make(3, {{0, 1}, {1, 2}});
  EdgeSubgraph s{&g, {}};
  auto cs = components(s, {0, 1, 2});
  REQUIRE(cs.size() == 3);
  for (auto& c : cs) {
    CHECK(c.edge_count == 0);
    CHECK_FALSE(c.is_cyclic);
  }
}

TEST_CASE("components: two disjoint edges") {
  MultiGraph g = make(4, {{0, 1}, {2, 3}});
  auto cs = components(whole_graph(g));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].edge_count == 1);
  CHECK(cs[1].edge_count == 1);
  CHECK(cs[0].min_vertex() == 0);
  CHECK(cs[1].min_vertex() == 2);
}

TEST_CASE("components: loops and parallels count toward cyclicity") {
  MultiGraph g = make(3, {{0, 0}, {1, 2}, {1, 2}});
  auto cs = components(whole_graph(g));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].is_cyclic);  // single loop vertex
  CHECK(cs[0].edge_count == 1);
  CHECK(cs[1].is_cyclic);  // parallel pair
}

TEST_CASE("tree_diameter basics") {
  MultiGraph single = make(1, {});
  auto cs = components(whole_graph(single), {0});
  CHECK(tree_diameter(single, cs[0]) == 0);

  MultiGraph path = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(tree_diameter(path, components(whole_graph(path))[0]) == 5);

  std::vector<std::pair<int, int>> star;
  for (int i = 1; i <= 7; ++i) star.push_back({0, i});
  MultiGraph st = make(8, star);
  CHECK(tree_diameter(st, components(whole_graph(st))[0]) == 2);

  MultiGraph tri = make(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(tree_diameter(tri, components(whole_graph(tri))[0]), std::invalid_argument);
}

TEST_CASE("tree_diameter agrees with all-pairs BFS on random trees") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + static_cast<int>(rng() % 50);
    MultiGraph g;
    g.n = n;
    for (int v = 1; v < n; ++v) g.edges.push_back({static_cast<int>(rng() % v), v});
    auto cs = components(whole_graph(g), {0});
    REQUIRE(cs.size() == 1);
    CHECK(tree_diameter(g, cs[0]) == oracle_diameter(g, cs[0]));
  }
}

TEST_CASE("components output partitions the edge set") {
  std::mt19937_64 rng(999);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 10);
    int m = static_cast<int>(rng() % 16);
    MultiGraph g;
    g.n = n;
    for (int e = 0; e < m; ++e)
      g.edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    auto cs = components(whole_graph(g));
    std::vector<int> all;
    for (auto& c : cs) all.insert(all.end(), c.edge_indices.begin(), c.edge_indices.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want(m);
    for (int e = 0; e < m; ++e) want[e] = e;
    CHECK(all == want);
  }
}

TEST_CASE("class_kind basics") {
  MultiGraph tri = make(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(class_kind(whole_graph(tri)) == ClassKind::PseudoforestNotForest);
  MultiGraph chord = make(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  CHECK(class_kind(whole_graph(chord)) == ClassKind::Neither);
  MultiGraph matching = make(4, {{0, 1}, {2, 3}});
  CHECK(class_kind(whole_graph(matching)) == ClassKind::Forest);
}

TEST_CASE("class_kind: deleting an edge never moves forest to non-forest") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    int m = static_cast<int>(rng() % 12);
    MultiGraph g;
    g.n = n;
    for (int e = 0; e < m; ++e)
      g.edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    EdgeSubgraph full = whole_graph(g);
    if (class_kind(full) != ClassKind::Forest) continue;
    for (int drop = 0; drop < m; ++drop) {
      EdgeSubgraph sub{&g, {}};
      for (int e = 0; e < m; ++e)
        if (e != drop) sub.members.push_back(e);
      CHECK(class_kind(sub) == ClassKind::Forest);
    }
  }
}
