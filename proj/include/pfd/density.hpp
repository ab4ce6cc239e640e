#pragma once

#include <optional>

#include "pfd/multigraph.hpp"
#include "pfd/rational.hpp"

namespace pfd {

struct DensityWitness {
  Rational value;
  std::vector<int> vertices;  // maximizing vertex set X, sorted
  EdgeSubgraph subgraph;      // induced edges of X
};

/// Exact max over nonempty X of e(X)/|X| (this is mad(G)/2), with witness.
/// Rejects the empty graph.
DensityWitness max_density(const MultiGraph& g);

/// Exact max over X with |X| >= 2 of e(X)/(|X|-1), with witness.
/// Requires v(G) >= 2 and e(G) >= 1.
DensityWitness fractional_arboricity(const MultiGraph& g);

struct HypothesisResult {
  bool holds;
  Rational margin;  // bound - density
  Rational density;
  Rational bound;  // k + d/(d+k+1)
};

/// Does max_density(G) <= k + d/(d+k+1)? Exact comparison.
HypothesisResult hypothesis_check(const MultiGraph& g, int k, int d);

/// Smallest d >= 1 with density <= k + d/(d+k+1); nullopt when density >= k+1.
std::optional<int> minimal_valid_d(const Rational& density, int k);

}  // namespace pfd
