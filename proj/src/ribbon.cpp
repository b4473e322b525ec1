#include "chromlag/ribbon.hpp"

#include <algorithm>
#include <map>

#include "chromlag/errors.hpp"

namespace chromlag {

namespace {

void check_permutation(const std::vector<int>& p, const std::string& which) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : p) {
    require(v >= 0 && v < n, errc::malformed_permutation, which + " entry out of range");
    require(!seen[static_cast<std::size_t>(v)], errc::malformed_permutation, which + " repeats a value");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Orbits of a permutation, each rotated to start at its least element,
// sorted by that element.
std::vector<std::vector<int>> orbits(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    std::vector<int> cyc;
    int d = s;
    do {
      cyc.push_back(d);
      used[static_cast<std::size_t>(d)] = 1;
      d = p[static_cast<std::size_t>(d)];
    } while (d != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> face_permutation(const RibbonGraph& g) {
  std::vector<int> phi(static_cast<std::size_t>(g.ndarts()));
  for (int d = 0; d < g.ndarts(); ++d)
    phi[static_cast<std::size_t>(d)] = g.sigma[static_cast<std::size_t>(g.alpha[static_cast<std::size_t>(d)])];
  return phi;
}

std::vector<int> index_of_darts(const std::vector<std::vector<int>>& cycles, int ndarts) {
  std::vector<int> idx(static_cast<std::size_t>(ndarts), -1);
  for (std::size_t k = 0; k < cycles.size(); ++k)
    for (int d : cycles[k]) idx[static_cast<std::size_t>(d)] = static_cast<int>(k);
  return idx;
}

void set_cycle(std::vector<int>& sigma, const std::vector<int>& cyc) {
  for (std::size_t i = 0; i < cyc.size(); ++i)
    sigma[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
}

} // namespace

void validate(const RibbonGraph& g) {
  const int n = g.ndarts();
  require(n > 0, errc::malformed_permutation, "graph has no darts");
  require(static_cast<int>(g.sigma.size()) == n, errc::malformed_permutation,
          "alpha and sigma must have the same length");
  check_permutation(g.alpha, "alpha");
  check_permutation(g.sigma, "sigma");
  for (int d = 0; d < n; ++d) {
    int a = g.alpha[static_cast<std::size_t>(d)];
    require(a != d, errc::malformed_permutation, "alpha fixes a dart");
    require(g.alpha[static_cast<std::size_t>(a)] == d, errc::malformed_permutation,
            "alpha is not an involution");
  }
  for (const auto& cyc : orbits(g.sigma))
    require(cyc.size() == 3, errc::not_cubic, "every vertex must have exactly three darts");

  // Connectivity under the group generated by alpha and sigma.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    ++count;
    for (int nb : {g.sigma[static_cast<std::size_t>(d)], g.alpha[static_cast<std::size_t>(d)]}) {
      if (!seen[static_cast<std::size_t>(nb)]) {
        seen[static_cast<std::size_t>(nb)] = 1;
        stack.push_back(nb);
      }
    }
  }
  require(count == n, errc::not_planar, "the map is not connected");

  int v = nvertices(g), e = nedges(g), f = nfaces(g);
  require(v - e + f == 2, errc::not_planar, "the map is not a sphere map");
}

std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g) { return orbits(g.sigma); }

std::vector<std::vector<int>> face_cycles(const RibbonGraph& g) { return orbits(face_permutation(g)); }

int nvertices(const RibbonGraph& g) { return static_cast<int>(vertex_cycles(g).size()); }

int nedges(const RibbonGraph& g) { return g.ndarts() / 2; }

int nfaces(const RibbonGraph& g) { return static_cast<int>(face_cycles(g).size()); }

std::vector<int> edge_of_darts(const RibbonGraph& g) {
  std::vector<int> mins;
  for (int d = 0; d < g.ndarts(); ++d)
    if (d < g.alpha[static_cast<std::size_t>(d)]) mins.push_back(d);
  std::vector<int> idx(static_cast<std::size_t>(g.ndarts()), -1);
  for (std::size_t k = 0; k < mins.size(); ++k) {
    idx[static_cast<std::size_t>(mins[k])] = static_cast<int>(k);
    idx[static_cast<std::size_t>(g.alpha[static_cast<std::size_t>(mins[k])])] = static_cast<int>(k);
  }
  return idx;
}

std::vector<std::array<int, 2>> edge_darts(const RibbonGraph& g) {
  std::vector<std::array<int, 2>> out;
  for (int d = 0; d < g.ndarts(); ++d)
    if (d < g.alpha[static_cast<std::size_t>(d)]) out.push_back({d, g.alpha[static_cast<std::size_t>(d)]});
  return out;
}

std::vector<int> vertex_of_darts(const RibbonGraph& g) {
  return index_of_darts(vertex_cycles(g), g.ndarts());
}

std::vector<int> face_of_darts(const RibbonGraph& g) {
  return index_of_darts(face_cycles(g), g.ndarts());
}

int surface_genus(const RibbonGraph& g) { return nvertices(g) / 2 - 1; }

std::string face_label(const RibbonGraph& g, int face) {
  if (face >= 0 && face < static_cast<int>(g.face_labels.size()) &&
      !g.face_labels[static_cast<std::size_t>(face)].empty())
    return g.face_labels[static_cast<std::size_t>(face)];
  return "f" + std::to_string(face);
}

BlowUpResult blow_up(const RibbonGraph& g, int vertex) {
  auto verts = vertex_cycles(g);
  require(vertex >= 0 && vertex < static_cast<int>(verts.size()), errc::vertex_out_of_range,
          "vertex index out of range");
  const auto& cyc = verts[static_cast<std::size_t>(vertex)];
  const int n = g.ndarts();
  const int e = nedges(g);

  BlowUpResult res;
  res.vertex = vertex;
  for (int i = 0; i < 3; ++i) res.base_darts[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>(i)];

  RibbonGraph h;
  h.name = g.name.empty() ? "blowup" : g.name + "/blowup" + std::to_string(vertex);
  h.alpha = g.alpha;
  h.sigma = g.sigma;
  h.alpha.resize(static_cast<std::size_t>(n + 6));
  h.sigma.resize(static_cast<std::size_t>(n + 6));
  auto p = [&](int i) { return n + 2 * i; };
  auto q = [&](int i) { return n + 2 * i + 1; };
  for (int i = 0; i < 3; ++i) {
    h.alpha[static_cast<std::size_t>(p(i))] = q(i);
    h.alpha[static_cast<std::size_t>(q(i))] = p(i);
  }
  for (int i = 0; i < 3; ++i)
    set_cycle(h.sigma, {cyc[static_cast<std::size_t>(i)], p(i), q((i + 2) % 3)});

  if (!g.face_labels.empty()) {
    h.face_labels = g.face_labels;
    h.face_labels.push_back("exc" + std::to_string(vertex));
  }

  for (int i = 0; i < 3; ++i) {
    res.exceptional_edges[static_cast<std::size_t>(i)] = e + i;
    res.opposite[static_cast<std::size_t>(i)] = e + (i + 1) % 3;
  }

  auto eod = edge_of_darts(g);
  res.lattice_map = IntMat(e + 3, e);
  for (int j = 0; j < e; ++j) res.lattice_map.at(j, j) = 1;
  for (int i = 0; i < 3; ++i) {
    int j = eod[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])];
    res.lattice_map.at(res.opposite[static_cast<std::size_t>(i)], j) -= 1;
  }

  res.graph = std::move(h);
  validate(res.graph);
  return res;
}

RibbonGraph edge_move(const RibbonGraph& g, int edge) {
  auto ed = edge_darts(g);
  require(edge >= 0 && edge < static_cast<int>(ed.size()), errc::edge_out_of_range,
          "edge index out of range");
  int d = ed[static_cast<std::size_t>(edge)][0];
  int db = ed[static_cast<std::size_t>(edge)][1];
  auto vod = vertex_of_darts(g);
  require(vod[static_cast<std::size_t>(d)] != vod[static_cast<std::size_t>(db)], errc::loop_edge,
          "cannot slide across a loop edge");
  int x1 = g.sigma[static_cast<std::size_t>(d)];
  int x2 = g.sigma[static_cast<std::size_t>(x1)];
  int y1 = g.sigma[static_cast<std::size_t>(db)];
  int y2 = g.sigma[static_cast<std::size_t>(y1)];
  RibbonGraph h;
  h.name = g.name.empty() ? "move" : g.name + "/move" + std::to_string(edge);
  h.alpha = g.alpha;
  h.sigma = g.sigma;
  set_cycle(h.sigma, {d, y2, x1});
  set_cycle(h.sigma, {db, x2, y1});
  validate(h);
  return h;
}

namespace {

// Breadth-first relabeling from a start dart; returns the relabeled pair.
std::pair<std::vector<int>, std::vector<int>> bfs_encoding(const RibbonGraph& g, int start) {
  const int n = g.ndarts();
  std::vector<int> newid(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  newid[static_cast<std::size_t>(start)] = 0;
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int d = order[head];
    for (int nb : {g.sigma[static_cast<std::size_t>(d)], g.alpha[static_cast<std::size_t>(d)]}) {
      if (newid[static_cast<std::size_t>(nb)] < 0) {
        newid[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
  }
  std::vector<int> s(static_cast<std::size_t>(n)), a(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    s[static_cast<std::size_t>(newid[static_cast<std::size_t>(d)])] =
        newid[static_cast<std::size_t>(g.sigma[static_cast<std::size_t>(d)])];
    a[static_cast<std::size_t>(newid[static_cast<std::size_t>(d)])] =
        newid[static_cast<std::size_t>(g.alpha[static_cast<std::size_t>(d)])];
  }
  return {std::move(s), std::move(a)};
}

} // namespace

RibbonGraph canonical_form(const RibbonGraph& g) {
  validate(g);
  std::pair<std::vector<int>, std::vector<int>> best;
  bool have = false;
  for (int s = 0; s < g.ndarts(); ++s) {
    auto enc = bfs_encoding(g, s);
    if (!have || enc < best) {
      best = std::move(enc);
      have = true;
    }
  }
  RibbonGraph h;
  h.name = g.name;
  h.sigma = std::move(best.first);
  h.alpha = std::move(best.second);
  return h;
}

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.ndarts() != b.ndarts()) return false;
  RibbonGraph ca = canonical_form(a), cb = canonical_form(b);
  return ca.sigma == cb.sigma && ca.alpha == cb.alpha;
}

RibbonGraph theta_graph() {
  RibbonGraph g;
  g.name = "theta";
  g.alpha = {1, 0, 3, 2, 5, 4};
  g.sigma = {4, 3, 0, 5, 2, 1};
  return g;
}

RibbonGraph tetrahedron_graph() {
  RibbonGraph g;
  g.name = "tetrahedron";
  g.alpha = {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10};
  g.sigma = {6, 2, 10, 4, 9, 0, 5, 11, 7, 3, 1, 8};
  g.face_labels = {"z0", "z1", "z3", "z2"};
  return g;
}

RibbonGraph prism_graph() {
  RibbonGraph g;
  g.name = "prism";
  g.alpha = {1, 0,  3,  2,  5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 17, 16};
  g.sigma = {2, 11, 9, 5, 1, 6, 3, 15, 17, 0, 13, 4, 8, 14, 10, 16, 7, 12};
  g.face_labels = {"z1", "x", "z2", "z3", "y"};
  return g;
}

RibbonGraph cube_graph() {
  RibbonGraph g;
  g.name = "cube";
  g.alpha = {1,  0,  3,  2,  5,  4,  7,  6,  9,  8,  11, 10,
             13, 12, 15, 14, 17, 16, 19, 18, 21, 20, 23, 22};
  g.sigma = {7,  19, 1,  21, 3,  23, 5,  17, 16, 10, 18, 12,
             20, 14, 22, 8,  15, 0,  9,  2,  11, 4,  13, 6};
  g.face_labels = {"w", "u", "x", "y", "z", "v"};
  return g;
}

std::optional<RibbonGraph> builtin_graph(const std::string& name) {
  if (name == "theta") return theta_graph();
  if (name == "tetrahedron") return tetrahedron_graph();
  if (name == "prism") return prism_graph();
  if (name == "cube") return cube_graph();
  return std::nullopt;
}

std::vector<std::string> builtin_graph_names() {
  return {"theta", "tetrahedron", "prism", "cube"};
}

} // namespace chromlag
