#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfd {

/// Multigraph as an indexed edge list. Loops (u == v) and parallel edges are
/// allowed; edge indices are stable for the lifetime of the object.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return n; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }
  int other_end(int e, int v) const {
    auto [a, b] = edges[e];
    return a == v ? b : a;
  }
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

/// Text format: header "n m", then m lines "u v". Lines starting with '#'
/// and blank lines are skipped and do not count toward m.
MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph(const std::string& text);
std::string serialize_graph(const MultiGraph& g);

/// A subset of the edges of a parent graph, addressed by edge index.
struct EdgeSubgraph {
  const MultiGraph* parent = nullptr;
  std::vector<int> members;  // sorted, unique

  std::vector<int> induced_vertices() const;
};

EdgeSubgraph whole_graph(const MultiGraph& g);

struct Component {
  std::vector<int> vertices;      // sorted
  std::vector<int> edge_indices;  // sorted
  int edge_count = 0;
  bool is_cyclic = false;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int min_vertex() const { return vertices.front(); }
};

/// Connected components of the subgraph. Vertices touched by no member edge
/// appear only if listed in `isolated`, as zero-edge components. Ordered by
/// minimum vertex id.
std::vector<Component> components(const EdgeSubgraph& s, const std::vector<int>& isolated = {});

/// Edge length of a longest path, by double BFS (exact on trees).
/// Rejects cyclic components.
int tree_diameter(const MultiGraph& g, const Component& k);

enum class ClassKind { Forest, PseudoforestNotForest, Neither };

ClassKind class_kind(const EdgeSubgraph& s);

}  // namespace pfd
