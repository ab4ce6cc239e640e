#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pfd/colouring.hpp"
#include "pfd/decomposition.hpp"
#include "pfd/multigraph.hpp"

namespace pfd {

struct Params {
  int k, d, ell;

  Params(int k_, int d_) : k(k_), d(d_), ell((d_ - 1) / (k_ + 1)) {
    if (k < 1 || d < 1) throw std::invalid_argument("Params: need k >= 1 and d >= 1");
  }
};

/// Red-component defect classes, checked in order; a component gets the first
/// clause it satisfies. Clause 4 applies only when d = 1 mod (k+1); clause 5
/// scans z in [1, ell] and reports the minimal witness.
enum class BadKind { Bad1 = 1, Bad2, Bad3, Bad4, Bad5, NotBad };

struct BadClass {
  BadKind kind = BadKind::NotBad;
  int z = 0;  // minimal witnessing z for Bad5
};

BadClass classify_component(bool cyclic, int edge_count, int diam, const Params& p);

/// Acyclic with at most ell edges; equivalently density below d/(d+k+1).
bool is_small(bool cyclic, int edge_count, const Params& p);

struct RedComp {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted
  bool cyclic = false;
  int diam = 0;  // meaningful when acyclic
  BadClass bad;
  bool small = false;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int min_vertex() const { return vertices.front(); }
};

/// Red components over the active region; every active vertex belongs to one
/// (zero-edge singletons included). Ordered by minimum vertex id.
struct RedCompIndex {
  std::vector<RedComp> comps;
  std::vector<int> comp_of;  // per vertex, -1 for passive

  bool any_bad() const;
  int worst_bad() const;  // min clause, then max edge count, then min vertex; -1 if none
};

RedCompIndex red_components(const RedBlueColouring& f, const Params& p);

/// Vertices reachable from the root component along blue arcs (forward) and
/// red edges; the induced subgraph is closed under both.
struct ExplorationSubgraph {
  std::vector<int> vertices;  // sorted
  std::vector<char> in;       // size n
  std::vector<int> comp_ids;  // red components inside, ascending
  int root_comp = -1;
};

ExplorationSubgraph exploration_subgraph(const RedBlueColouring& f, const RedCompIndex& idx,
                                         int root_comp);

/// A legal order lists the red components of H starting at the root, each
/// later one receiving a blue arc from an earlier one. sigma is the
/// lexicographically smallest edge-count tuple over all legal orders.
struct LegalOrder {
  std::vector<int> comp_ids;
  std::vector<int> sigma;
};

LegalOrder smallest_legal_order(const RedBlueColouring& f, const RedCompIndex& idx,
                                const ExplorationSubgraph& h);

/// Termination measure: per-clause histograms of bad components (indexed by
/// edge count, compared from large to small), then sigma of the root's
/// exploration subgraph. Compared lexicographically. A move is accepted only
/// if the tuple, re-evaluated at the post-move worst root, strictly drops;
/// since values come from a finite well-ordered set, the loop terminates even
/// though the root may change between iterations.
struct Potential {
  std::array<std::vector<int>, 5> hist;
  std::vector<int> sigma;
};

Potential potential(const RedBlueColouring& f, const RedCompIndex& idx, int root_comp);
int compare(const Potential& a, const Potential& b);  // -1 / 0 / 1

/// arcs[0] = blue arc (x, y) to recolour red; arcs[1..] = blue path walked
/// backward from x through zero-edge components, reversed on application;
/// red_edge = red edge at the far endpoint, recoloured blue and oriented away
/// from it. A single-arc move is a plain exchange.
struct Move {
  std::vector<int> arcs;
  int red_edge = -1;
};

/// Validates the move's preconditions (throws std::invalid_argument naming
/// the violated clause), then rewires. Blue out-degrees are unchanged and the
/// red class stays a pseudoforest.
void apply_move(RedBlueColouring& f, const Move& m);

/// First candidate in canonical edge-index order (all exchanges, then all
/// chain reversals inside H) whose application strictly decreases the
/// potential. nullopt when no candidate improves.
std::optional<Move> find_improving_move(const RedBlueColouring& f, const RedCompIndex& idx,
                                        int root_comp, const Params& p);

struct CertComp {
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// Refutation evidence: an exploration subgraph whose red density exceeds
/// d/(d+k+1), partitioned into cells (a non-small component plus its assigned
/// small children); or, for inputs that are not (k+1)-orientable, a subgraph
/// with e > (k+1) v.
struct Certificate {
  enum class Kind { Stuck, Infeasible };
  Kind kind = Kind::Stuck;
  std::vector<int> vertices;  // V(H)

  // Stuck payload: the colouring restricted to H, and the cell partition.
  std::vector<int> red_edges;
  std::vector<std::pair<int, int>> blue_arcs;  // (edge index, tail)
  struct Cell {
    CertComp k;
    std::vector<CertComp> children;
    bool k_is_bad = false;
  };
  std::vector<Cell> cells;

  // Infeasible payload: induced edges with e > (k+1) v.
  std::vector<int> edges;
};

struct DecomposeResult {
  enum class Outcome { Success, Refuted, IterationCap };
  Outcome outcome = Outcome::Success;
  std::optional<Decomposition> decomposition;
  std::optional<Certificate> certificate;
  long long iterations = 0;
};

/// Labels each vertex's blue out-arcs 1..k (lowest edge index first); every
/// class has outdegree <= 1 per vertex, hence is a pseudoforest.
std::vector<std::vector<int>> split_blue(const RedBlueColouring& f);

/// The full pipeline: orient with bound k+1, repair, split, colour, then
/// augment worst-first until no red component is bad (Decomposition) or no
/// move improves the potential (Certificate).
DecomposeResult decompose(const MultiGraph& g, const Params& p,
                          long long iteration_cap = 1000000);

}  // namespace pfd
