#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromlag/intmat.hpp"
#include "chromlag/ribbon.hpp"

namespace chromlag {

// Antisymmetric pairing on the edge lattice Z^e: entry (i, j) counts darts of
// edge i whose counterclockwise successor lies on edge j, minus the reverse.
IntMat intersection_form(const RibbonGraph& g);

// Face relations: row per face, entry (f, e) counts darts of edge e on face f.
IntMat face_relation_matrix(const RibbonGraph& g);

// First homology of the associated genus-g surface, presented as the edge
// lattice modulo the face relations. The presentation is verified: the
// relations are independent, they lie in the radical of the pairing, and the
// induced form on the rank-2g free quotient is unimodular. Because every edge
// carries exactly two darts, the face rows always sum to twice the all-ones
// vector, so the quotient carries one order-two class alongside the free
// part; its representative is kept in `torsion`. The monomial of a radical
// class is constant on every chart, equal to +1 on the face-row span and to
// a graph-dependent sign on the torsion representative.
struct H1Presentation {
  int genus = 0;
  IntMat edge_form;   // e x e intersection form
  IntMat relations;   // f x e face relations
  IntMat basis;       // 2g x e, rows represent a basis of the free quotient
  IntMat coords_map;  // 2g x e, class coordinates of x are coords_map * x
  IntMat induced;     // 2g x 2g pairing in that basis, det 1
  IntMat torsion;     // 1 x e, representative of the order-two class
};

H1Presentation h1_presentation(const RibbonGraph& g);

std::vector<Int> h1_coords(const H1Presentation& pres, const std::vector<Int>& x);

// Pairing of two edge-lattice vectors under the intersection form.
Int edge_pairing(const H1Presentation& pres, const std::vector<Int>& x, const std::vector<Int>& y);

// A phase: g distinguished classes nu_i (the cycles that will bound) with
// lifts mu_i, all given as edge-lattice vectors. `usign` optionally dresses
// the exponential coordinate of each lift, U_i = usign_i * (-x^{mu_i}); it is
// needed on graphs whose torsion monomial is +1, where no change of class
// representative can absorb a sign. Empty means all +1.
struct Phase {
  std::string name;
  std::vector<std::vector<Int>> nu;
  std::vector<std::vector<Int>> mu;
  std::vector<int> usign;
};

// Validates a phase against a graph: both spans isotropic, each nu primitive
// and nonzero in homology, and <mu_i, nu_j> = epsilon * delta_ij with one
// uniform sign epsilon for the whole phase. Returns epsilon.
int validate_phase(const RibbonGraph& g, const H1Presentation& pres, const Phase& ph);

// Built-in phases for the built-in graphs (by graph name).
std::optional<Phase> builtin_phase(const std::string& graph_name);

} // namespace chromlag
