#include "chromlag/chromatic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "chromlag/errors.hpp"

namespace chromlag {

Multigraph dual_graph(const RibbonGraph& g) {
  validate(g);
  auto fod = face_of_darts(g);
  Multigraph d;
  d.n = nfaces(g);
  for (const auto& [a, b] : edge_darts(g))
    d.edges.emplace_back(fod[static_cast<std::size_t>(a)], fod[static_cast<std::size_t>(b)]);
  return d;
}

bool has_loop(const Multigraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(),
                     [](const auto& e) { return e.first == e.second; });
}

bool is_simple(const Multigraph& g) {
  if (has_loop(g)) return false;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) return false;
  }
  return true;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Normalized simple edge list: endpoints sorted within each edge, loops kept,
// parallels removed, list sorted.
EdgeList dedupe(const EdgeList& edges) {
  std::set<std::pair<int, int>> s;
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    s.emplace(a, b);
  }
  return EdgeList(s.begin(), s.end());
}

std::string memo_key(int n, const EdgeList& edges) {
  // Vertices relabeled by first appearance in the sorted edge list, so equal
  // labeled subproblems coincide even after different contraction orders.
  std::map<int, int> relabel;
  std::string key = std::to_string(n) + ";";
  for (auto [a, b] : edges) {
    for (int v : {a, b})
      if (!relabel.count(v)) {
        int id = static_cast<int>(relabel.size());
        relabel[v] = id;
      }
    key += std::to_string(relabel[a]) + "," + std::to_string(relabel[b]) + ";";
  }
  return key;
}

class ChromaticSolver {
 public:
  IntPoly solve_component(int isolated_plus, EdgeList edges);

 private:
  std::map<std::string, IntPoly> memo_;
};

IntPoly x_poly() { return IntPoly::x(); }

// Connected components of an edge list over the vertices that appear in it.
std::vector<EdgeList> split_components(const EdgeList& edges) {
  std::map<int, int> comp;
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int v) -> int {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) {
      parent[v] = v;
      return v;
    }
    int r = find(it->second);
    parent[v] = r;
    return r;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::map<int, EdgeList> groups;
  for (auto [a, b] : edges) groups[find(a)].emplace_back(a, b);
  std::vector<EdgeList> out;
  for (auto& [root, list] : groups) out.push_back(std::move(list));
  return out;
}

IntPoly ChromaticSolver::solve_component(int isolated_plus, EdgeList edges) {
  // `isolated_plus` counts vertices not touched by any edge; each contributes
  // a free factor of x.
  edges = dedupe(edges);
  if (std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; }))
    return IntPoly(); // a loop kills every proper coloring

  std::set<int> verts;
  for (auto [a, b] : edges) {
    verts.insert(a);
    verts.insert(b);
  }
  IntPoly free_part = IntPoly::constant(1);
  for (int i = 0; i < isolated_plus; ++i) free_part = free_part * x_poly();
  if (edges.empty()) return free_part;

  auto comps = split_components(edges);
  if (comps.size() > 1) {
    IntPoly prod = free_part;
    for (auto& c : comps) prod = prod * solve_component(0, std::move(c));
    return prod;
  }

  const int n = static_cast<int>(verts.size());
  const int m = static_cast<int>(edges.size());

  // Tree.
  if (m == n - 1) {
    IntPoly p = x_poly() * free_part;
    IntPoly xm1 = x_poly() - IntPoly::constant(1);
    for (int i = 0; i < n - 1; ++i) p = p * xm1;
    return p;
  }
  // Cycle: connected with every degree 2.
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (m == n && std::all_of(adj.begin(), adj.end(),
                            [](const auto& kv) { return kv.second.size() == 2; })) {
    IntPoly xm1 = x_poly() - IntPoly::constant(1);
    IntPoly p = IntPoly::constant(1);
    for (int i = 0; i < n; ++i) p = p * xm1;
    p = p + IntPoly::constant(n % 2 == 0 ? 1 : -1) * xm1;
    return p * free_part;
  }

  // Simplicial vertex: neighborhood is a clique, so it contributes (x - deg).
  std::set<std::pair<int, int>> eset(edges.begin(), edges.end());
  auto connected = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return eset.count({a, b}) > 0;
  };
  for (const auto& [v, nbrs] : adj) {
    bool clique = true;
    for (std::size_t i = 0; i < nbrs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < nbrs.size() && clique; ++j)
        if (!connected(nbrs[i], nbrs[j])) clique = false;
    if (!clique) continue;
    EdgeList rest;
    for (auto [a, b] : edges)
      if (a != v && b != v) rest.emplace_back(a, b);
    IntPoly factor = x_poly() - IntPoly::constant(static_cast<int>(nbrs.size()));
    return factor * solve_component(0, std::move(rest)) * free_part;
  }

  std::string key = memo_key(n, edges);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second * free_part;

  // Deletion-contraction on an edge with the largest combined degree.
  std::size_t pick = 0;
  int best = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int score = static_cast<int>(adj[edges[i].first].size() + adj[edges[i].second].size());
    if (score > best) {
      best = score;
      pick = i;
    }
  }
  auto [u, w] = edges[pick];
  EdgeList del = edges;
  del.erase(del.begin() + static_cast<std::ptrdiff_t>(pick));
  EdgeList con;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == pick) continue;
    auto [a, b] = edges[i];
    if (a == w) a = u;
    if (b == w) b = u;
    if (a == b) continue; // parallel edge to the contracted one
    con.emplace_back(a, b);
  }
  // Deleting the edge may isolate nothing here (degrees >= 2 past the tree
  // shortcut), and contraction keeps the component connected.
  IntPoly result = solve_component(0, std::move(del)) - solve_component(0, std::move(con));
  memo_.emplace(std::move(key), result);
  return result * free_part;
}

} // namespace

IntPoly chromatic_polynomial(const Multigraph& g) {
  require(g.n >= 0, errc::bad_argument, "vertex count must be nonnegative");
  for (auto [a, b] : g.edges)
    require(a >= 0 && a < g.n && b >= 0 && b < g.n, errc::vertex_out_of_range,
            "edge endpoint out of range");
  if (has_loop(g)) return IntPoly();
  std::set<int> touched;
  for (auto [a, b] : g.edges) {
    touched.insert(a);
    touched.insert(b);
  }
  ChromaticSolver solver;
  return solver.solve_component(g.n - static_cast<int>(touched.size()), g.edges);
}

IntPoly moduli_count_poly(const RibbonGraph& g) {
  IntPoly p = chromatic_polynomial(dual_graph(g));
  IntPoly shifted = shift_arg(p, Int(1)); // evaluate at q + 1
  IntPoly group; // q^3 - q
  group.coeff = {Int(0), Int(-1), Int(0), Int(1)};
  return div_exact(shifted, group, "configuration count by projective group order");
}

Int moduli_count(const RibbonGraph& g, const Int& q) {
  require(q >= 2, errc::bad_argument, "field size must be at least 2");
  return moduli_count_poly(g).eval(q);
}

Int brute_force_moduli_count(const RibbonGraph& g, long long q) {
  require(q >= 2, errc::bad_argument, "field size must be at least 2");
  Multigraph d = dual_graph(g);
  const long long colors = q + 1; // points of the projective line
  double budget = 1.0;
  for (int i = 0; i < d.n; ++i) {
    budget *= static_cast<double>(colors);
    require(budget <= 1e8, errc::too_large, "configuration enumeration exceeds the budget");
  }
  EdgeList constraints;
  for (auto [a, b] : d.edges) {
    if (a == b) return Int(0);
    constraints.emplace_back(a, b);
  }
  std::vector<long long> assign(static_cast<std::size_t>(d.n), 0);
  Int count(0);
  while (true) {
    bool ok = true;
    for (auto [a, b] : constraints)
      if (assign[static_cast<std::size_t>(a)] == assign[static_cast<std::size_t>(b)]) {
        ok = false;
        break;
      }
    if (ok) count += 1;
    int pos = 0;
    while (pos < d.n) {
      if (++assign[static_cast<std::size_t>(pos)] < colors) break;
      assign[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d.n) break;
  }
  Int qz(static_cast<long>(q));
  Int group = qz * qz * qz - qz;
  require(count % group == 0, errc::not_divisible,
          "configuration count is not divisible by the projective group order");
  return count / group;
}

FillabilityReport fillability_obstruction(const RibbonGraph& g) {
  Multigraph d = dual_graph(g);
  require(is_simple(d), errc::not_simple,
          "the fillability certificate needs a simple dual graph");
  FillabilityReport r;
  r.genus = surface_genus(g);
  r.moduli_poly = moduli_count_poly(g);
  r.shape_ok = r.moduli_poly.degree() == r.genus &&
               (r.moduli_poly.is_zero() ? false : r.moduli_poly.coeff.back() == 1);
  r.torus_subleading = -Int(r.genus);
  r.subleading = r.genus >= 1 ? r.moduli_poly.at(r.genus - 1) : Int(0);
  r.obstructed = r.shape_ok && r.genus >= 1 && r.subleading < r.torus_subleading;
  return r;
}

} // namespace chromlag
