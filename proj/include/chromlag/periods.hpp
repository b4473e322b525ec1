#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chromlag/ratfunc.hpp"
#include "chromlag/ribbon.hpp"

namespace chromlag {

// Point of the projective line with rational-function coordinates [p : q].
struct ProjPoint {
  RatFunc p, q;
};

ProjPoint proj_const(int nvars, const Rat& p, const Rat& q);
ProjPoint proj_infinity(int nvars);

// p_a q_b - p_b q_a.
RatFunc proj_det(const ProjPoint& a, const ProjPoint& b);

// The edge coordinate attached to four points: -(D(b,a) D(d,c)) / (D(c,b) D(a,d)).
// Throws DegenerateConfiguration when a required determinant vanishes.
RatFunc cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                    const ProjPoint& d);

// Faces entering the coordinate of the edge of dart d, in cross_ratio slot
// order: the face of d, the face before the opposite dart, the face of the
// opposite dart, and the face before d (counterclockwise "before").
std::array<int, 4> cross_ratio_faces(const RibbonGraph& g, int dart);

// One coordinate per edge from an arbitrary assignment of points to faces.
std::vector<RatFunc> edge_cross_ratios(const RibbonGraph& g, const std::vector<ProjPoint>& pts);

// A rational chart on the configuration space: three distinct faces pinned
// to 0, 1, infinity and a free variable for each remaining face. The edge
// coordinates are verified to multiply to 1 around every face. The default
// gauge picks the first pairwise-adjacent face triple; an explicit triple
// need not be adjacent (the chart then covers a dense open subset).
struct Chart {
  RibbonGraph graph;
  std::array<int, 3> gauge{};         // faces sent to 0, 1, infinity
  std::vector<int> free_faces;        // remaining faces, increasing
  std::vector<std::string> var_names; // one per free face
  std::vector<ProjPoint> points;      // per face
  std::vector<RatFunc> x;             // per edge
};

Chart build_chart(const RibbonGraph& g,
                  std::optional<std::array<int, 3>> gauge = std::nullopt);

// Whether the three gauge faces pairwise share an edge.
bool gauge_pairwise_adjacent(const RibbonGraph& g, const std::array<int, 3>& gauge);

// prod_e x_e^(c_e) for an edge-lattice vector.
RatFunc monomial_of_class(const Chart& chart, const std::vector<Int>& cls);

} // namespace chromlag
