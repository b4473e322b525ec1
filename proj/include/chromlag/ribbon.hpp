#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chromlag/intmat.hpp"

namespace chromlag {

// Oriented trivalent planar map, encoded by permutations of darts (directed
// half-edges). `alpha` swaps the two darts of each edge; `sigma` rotates the
// darts around each vertex counterclockwise. Faces are the orbits of
// sigma(alpha(d)); the face of a dart lies to its right.
struct RibbonGraph {
  std::string name;
  std::vector<int> alpha;
  std::vector<int> sigma;
  // Optional display names, one per face in face-index order.
  std::vector<std::string> face_labels;

  int ndarts() const { return static_cast<int>(alpha.size()); }
};

// Throws MalformedPermutation, NotCubic, or NotPlanar. A valid graph is a
// connected trivalent map of a sphere.
void validate(const RibbonGraph& g);

// Orbits of sigma, each rotated to start at its smallest dart, sorted by
// that dart.
std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g);

// Orbits of the face permutation d -> sigma(alpha(d)), same normalization.
std::vector<std::vector<int>> face_cycles(const RibbonGraph& g);

int nvertices(const RibbonGraph& g);
int nedges(const RibbonGraph& g);
int nfaces(const RibbonGraph& g);

// Edge index of a dart: edges are numbered by their smaller dart.
std::vector<int> edge_of_darts(const RibbonGraph& g);
// Dart pair of each edge, smaller dart first.
std::vector<std::array<int, 2>> edge_darts(const RibbonGraph& g);

// Vertex / face index of each dart (indices into the cycle lists).
std::vector<int> vertex_of_darts(const RibbonGraph& g);
std::vector<int> face_of_darts(const RibbonGraph& g);

// Genus of the associated surface: v/2 - 1 for a valid graph.
int surface_genus(const RibbonGraph& g);

// Label of a face, falling back to "f<k>" when no labels are attached.
std::string face_label(const RibbonGraph& g, int face);

// Replace one vertex by a small triangle. The three darts d0 < d1 < d2 at
// the vertex keep their edges; three exceptional edges are appended, and
// the new inner triangle becomes an extra face. The lattice map sends an
// old edge class to itself minus the exceptional edge opposite each of its
// ends at the replaced vertex; exceptional classes are a direct complement.
struct BlowUpResult {
  RibbonGraph graph;
  int vertex = 0;
  std::array<int, 3> base_darts{};         // d0, d1, d2 around the old vertex
  std::array<int, 3> exceptional_edges{};  // new edge ids, in dart order
  std::array<int, 3> opposite{};           // opposite[i]: exceptional edge not touching base_darts[i]
  IntMat lattice_map;                      // (e+3) x e, old edge class -> new lattice
};

BlowUpResult blow_up(const RibbonGraph& g, int vertex);

// Slide the two neighbor darts across an edge (the trivalent flip). Throws
// LoopEdge when the edge has both ends at one vertex.
RibbonGraph edge_move(const RibbonGraph& g, int edge);

// Canonical relabeling: the lexicographically least (sigma, alpha) pair over
// breadth-first relabelings started from every dart. Two valid graphs are
// isomorphic as oriented maps exactly when their canonical forms coincide.
RibbonGraph canonical_form(const RibbonGraph& g);
bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

// Built-in graphs.
RibbonGraph theta_graph();
RibbonGraph tetrahedron_graph();
RibbonGraph prism_graph();
RibbonGraph cube_graph();
std::optional<RibbonGraph> builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

} // namespace chromlag
