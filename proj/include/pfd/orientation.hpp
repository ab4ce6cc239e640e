#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "pfd/colouring.hpp"
#include "pfd/multigraph.hpp"

namespace pfd {

/// Per-edge direction. Loops are oriented trivially (tail = head).
struct Orientation {
  std::vector<int> tail;  // tail[e] is one endpoint of edge e

  int head(const MultiGraph& g, int e) const { return g.other_end(e, tail[e]); }
  std::vector<int> outdegrees(const MultiGraph& g) const {
    std::vector<int> d(g.n, 0);
    for (int t : tail) ++d[t];
    return d;
  }
};

/// Subgraph with e > c * v, certifying that no orientation with max
/// outdegree <= c exists. Edges are the induced edges of `vertices`.
struct InfeasibleWitness {
  std::vector<int> vertices;
  std::vector<int> edges;
};

using OrientResult = std::variant<Orientation, InfeasibleWitness>;

/// Orientation with max outdegree <= c via a unit-supply flow, or a density
/// witness when none exists.
OrientResult orient_bounded(const MultiGraph& g, int c);

struct RegionSplit {
  std::vector<char> active;

  bool is_active(int v) const { return active[v] != 0; }
};

/// Reverses surplus-to-deficiency paths until every vertex of outdegree k+1
/// has no directed path to a vertex of outdegree < k; then splits vertices
/// into passive (can reach a deficiency) and active (outdegree k or k+1).
/// Requires max outdegree <= k+1 on input.
std::pair<Orientation, RegionSplit> repair_and_split(const MultiGraph& g, Orientation o, int k);

/// Blue everywhere, except one red out-edge (lowest edge index) per active
/// vertex of outdegree k+1. The red class has red-outdegree <= 1 per vertex,
/// hence is a pseudoforest.
RedBlueColouring initial_colouring(const MultiGraph& g, const Orientation& o,
                                   const RegionSplit& split, int k);

}  // namespace pfd
