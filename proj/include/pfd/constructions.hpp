#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfd/colouring.hpp"
#include "pfd/decomposition.hpp"
#include "pfd/multigraph.hpp"
#include "pfd/rational.hpp"

namespace pfd {

/// Parameters of the diameter lower-bound family: p copies of a colourful
/// tree (a 1-coloured path of odd depth delta with k-1 extra out-edges at
/// even depths, plus hanging red paths) sharing k hub vertices.
struct DiamSpec {
  int k = 1;
  int ell = 0;
  int alpha = 0;  // 0 or 1
  int delta = 1;  // odd
  int p = 1;
  std::optional<int> big_d;    // degree bound the instance is meant to defeat
  std::optional<Rational> eps;
};

/// Parameters of the big-component lower-bound family: red spiders of
/// controlled size replace the hanging paths.
struct ZSpec {
  int k = 2;
  int d = 1;
  int z = 1;  // 1 <= z <= floor((d-1)/(k+1))
  int delta = 1;
  int p = 1;
  std::optional<Rational> eps;
};

struct ExampleRedComp {
  int anchor;              // the T vertex the component hangs from
  std::vector<int> edges;  // edge indices
  int size_class;          // nominal e(P_t) of the construction
};

/// The construction's canonical colouring: colour 0 is red, 1..k are the
/// blue classes; every edge carries an orientation (red edges point toward
/// their anchor).
struct ExampleColouring {
  int k = 0;
  std::vector<int> colour;
  std::vector<int> tail;
  std::vector<int> s_vertices;
  struct CopyInfo {
    int root = -1;
    std::vector<int> t_vertices;  // T vertices in creation order
    std::vector<int> t_depth;
    int first_vertex = -1, last_vertex = -1;  // vertex id block, inclusive
  };
  std::vector<CopyInfo> copies;
  std::vector<ExampleRedComp> red_comps;

  Decomposition to_decomposition() const;
};

struct ConstructionValidity {
  bool delta_odd = false;
  std::optional<bool> delta_large_enough;  // vs eps
  std::optional<bool> p_large_enough;      // vs big_d (diameter family)
};

std::pair<MultiGraph, ExampleColouring> build_diameter_example(const DiamSpec& s);
std::pair<MultiGraph, ExampleColouring> build_z_example(const ZSpec& s);

/// Closed form for e(G)/|V(G) \ S| of the family, exact.
Rational predicted_density(const DiamSpec& s);
Rational predicted_density(const ZSpec& s);

ConstructionValidity check_validity(const DiamSpec& s);
ConstructionValidity check_validity(const ZSpec& s);

/// The example colouring as engine state: copy vertices active, hubs passive.
RedBlueColouring example_red_blue(const MultiGraph& g, const ExampleColouring& ex);

}  // namespace pfd
