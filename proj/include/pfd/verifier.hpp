#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfd/decomposition.hpp"
#include "pfd/engine.hpp"
#include "pfd/multigraph.hpp"

namespace pfd {

/// Per-check verdicts for a claimed decomposition. Non-partition input is
/// reported, not rejected.
struct Report {
  bool partition_ok = false;
  bool classes_pseudoforest_ok = false;
  bool red_forest_ok = false;
  bool size_ok = false;
  bool diam_ok = false;
  bool zclause_ok = false;
  bool star_ok = true;  // only constrained when d <= k+1
  std::vector<int> failing_components;  // min-vertex ids of red components failing a check
  std::vector<std::string> notes;

  bool pass() const {
    return partition_ok && classes_pseudoforest_ok && red_forest_ok && size_ok && diam_ok &&
           zclause_ok && star_ok;
  }
};

Report verify_decomposition(const MultiGraph& g, const Decomposition& dec, const Params& p);

/// Re-derives every claim of the certificate from the graph: induced edge
/// counts, per-vertex blue out-arcs, cell partition and densities, and the
/// final integer inequality e_r(H) (d+k+1) > d v(H).
bool verify_certificate(const MultiGraph& g, const Certificate& cert, const Params& p);

struct BruteConstraints {
  bool red_forest = false;
  std::optional<int> max_component_edges;
  std::optional<int> max_diam;
  std::optional<int> max_red_degree;
};

struct BruteResult {
  enum class Outcome { Found, Unsat, CapExceeded };
  Outcome outcome = Outcome::Unsat;
  std::optional<Decomposition> dec;
  long long nodes = 0;
};

/// Exhaustive search over (k+1)^e class assignments with sound pruning;
/// classes are pseudoforests, the red class obeys the constraints. First
/// valid assignment in deterministic order.
BruteResult brute_force_search(const MultiGraph& g, int k, const BruteConstraints& c,
                               int edge_cap = 14);

struct LowerBoundResult {
  enum class Outcome { Found, Unsat, Timeout, CapExceeded };
  Outcome outcome = Outcome::Unsat;
  std::optional<Decomposition> dec;
  long long nodes = 0;
};

/// Independent check of a lower-bound search witness: partition, every class
/// a pseudoforest, red degree bound, and no forbidden-diameter component.
bool verify_lb_witness(const MultiGraph& g, const Decomposition& dec, int k, int max_red_degree,
                       int diam_strict_bound, std::optional<int> size_floor = {});

/// Backtracking over per-edge colours {1..k, red} with unit propagation.
/// Constraints: every colour class a pseudoforest, red degree <= max_red_degree,
/// and no red component may end with diam >= diam_strict_bound (when
/// size_floor is given, the forbidden shape is e >= size_floor AND
/// diam >= diam_strict_bound). Unsat confirms the lower-bound claim.
LowerBoundResult check_lower_bound(const MultiGraph& g, int k, int max_red_degree,
                                   int diam_strict_bound, std::optional<int> size_floor = {},
                                   long long timeout_ms = 300000, int edge_cap = 40);

}  // namespace pfd
