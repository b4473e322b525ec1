#pragma once

#include <utility>
#include <vector>

#include "chromlag/intpoly.hpp"
#include "chromlag/ribbon.hpp"

namespace chromlag {

// Undirected multigraph; loops and parallel edges are allowed.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Dual of a ribbon graph: one vertex per face, one edge per edge of the map
// joining the faces on its two sides.
Multigraph dual_graph(const RibbonGraph& g);

bool has_loop(const Multigraph& g);
bool is_simple(const Multigraph& g);

// Chromatic polynomial, exact. Deletion-contraction with shortcuts for
// loops, parallel edges, components, trees, cycles, and simplicial vertices,
// plus memoization on relabeled subproblems.
IntPoly chromatic_polynomial(const Multigraph& g);

// Number of point configurations on the projective line over the q-element
// field attached to the map (one point per face, distinct across each edge,
// up to projective equivalence), as a polynomial in q. Equals
// P_dual(q + 1) / (q^3 - q), which is always an exact division.
IntPoly moduli_count_poly(const RibbonGraph& g);

// The same count at one prime power, via the polynomial.
Int moduli_count(const RibbonGraph& g, const Int& q);

// Independent oracle: enumerate all configurations directly and divide by
// the order of the projective group. Throws TooLarge when (q+1)^faces
// exceeds the enumeration budget.
Int brute_force_moduli_count(const RibbonGraph& g, long long q);

// Certificate that the associated surface admits no exact filling of the
// torus-counting type: the subleading coefficient of the count polynomial
// is -2g, strictly below the -g any such filling would force. Requires the
// dual graph to be simple (NotSimple otherwise).
struct FillabilityReport {
  int genus = 0;
  IntPoly moduli_poly;
  bool shape_ok = false;  // degree == genus and monic
  Int subleading;         // coefficient of q^(genus-1), 0 when genus == 0
  Int torus_subleading;   // -genus
  bool obstructed = false;
};

FillabilityReport fillability_obstruction(const RibbonGraph& g);

} // namespace chromlag
