#include "chromlag/periods.hpp"

#include <algorithm>

#include "chromlag/errors.hpp"

namespace chromlag {

ProjPoint proj_const(int nvars, const Rat& p, const Rat& q) {
  require(p != 0 || q != 0, errc::bad_argument, "projective point needs a nonzero coordinate");
  return {rf_const(nvars, p), rf_const(nvars, q)};
}

ProjPoint proj_infinity(int nvars) { return proj_const(nvars, Rat(1), Rat(0)); }

RatFunc proj_det(const ProjPoint& a, const ProjPoint& b) {
  return a.p * b.q - b.p * a.q;
}

RatFunc cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                    const ProjPoint& d) {
  RatFunc ba = proj_det(b, a);
  RatFunc dc = proj_det(d, c);
  RatFunc cb = proj_det(c, b);
  RatFunc ad = proj_det(a, d);
  require(!ba.is_zero() && !dc.is_zero() && !cb.is_zero() && !ad.is_zero(),
          errc::degenerate_configuration, "coincident points in a cross-ratio");
  return -(ba * dc) / (cb * ad);
}

std::array<int, 4> cross_ratio_faces(const RibbonGraph& g, int dart) {
  require(dart >= 0 && dart < g.ndarts(), errc::bad_argument, "dart index out of range");
  auto fod = face_of_darts(g);
  std::vector<int> sigma_inv(static_cast<std::size_t>(g.ndarts()));
  for (int d = 0; d < g.ndarts(); ++d) sigma_inv[static_cast<std::size_t>(g.sigma[static_cast<std::size_t>(d)])] = d;
  int opp = g.alpha[static_cast<std::size_t>(dart)];
  return {fod[static_cast<std::size_t>(dart)],
          fod[static_cast<std::size_t>(sigma_inv[static_cast<std::size_t>(opp)])],
          fod[static_cast<std::size_t>(opp)],
          fod[static_cast<std::size_t>(sigma_inv[static_cast<std::size_t>(dart)])]};
}

std::vector<RatFunc> edge_cross_ratios(const RibbonGraph& g, const std::vector<ProjPoint>& pts) {
  require(static_cast<int>(pts.size()) == nfaces(g), errc::bad_argument,
          "need one point per face");
  std::vector<RatFunc> out;
  for (const auto& [d, dbar] : edge_darts(g)) {
    (void)dbar;
    auto f = cross_ratio_faces(g, d);
    out.push_back(cross_ratio(pts[static_cast<std::size_t>(f[0])], pts[static_cast<std::size_t>(f[1])],
                              pts[static_cast<std::size_t>(f[2])], pts[static_cast<std::size_t>(f[3])]));
  }
  return out;
}

namespace {

// Face adjacency (shared edge) as a symmetric boolean table.
std::vector<std::vector<char>> face_adjacency(const RibbonGraph& g) {
  auto fod = face_of_darts(g);
  int f = nfaces(g);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(f),
                                     std::vector<char>(static_cast<std::size_t>(f), 0));
  for (const auto& [d, dbar] : edge_darts(g)) {
    int a = fod[static_cast<std::size_t>(d)];
    int b = fod[static_cast<std::size_t>(dbar)];
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  return adj;
}

} // namespace

Chart build_chart(const RibbonGraph& g, std::optional<std::array<int, 3>> gauge) {
  validate(g);
  const int f = nfaces(g);
  auto adj = face_adjacency(g);

  Chart chart;
  chart.graph = g;
  if (gauge.has_value()) {
    auto& gg = *gauge;
    for (int v : gg)
      require(v >= 0 && v < f, errc::bad_argument, "gauge face index out of range");
    require(gg[0] != gg[1] && gg[0] != gg[2] && gg[1] != gg[2], errc::bad_argument,
            "gauge faces must be distinct");
    // Non-adjacent triples are allowed: the fixed values 0, 1, infinity are
    // distinct regardless, and the chart then covers a dense open subset.
    chart.gauge = gg;
  } else {
    bool found = false;
    for (int a = 0; a < f && !found; ++a)
      for (int b = a + 1; b < f && !found; ++b)
        for (int c = b + 1; c < f && !found; ++c)
          if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
              adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
              adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
            chart.gauge = {a, b, c};
            found = true;
          }
    require(found, errc::degenerate_configuration,
            "no three pairwise-adjacent faces to pin the gauge");
  }

  for (int m = 0; m < f; ++m)
    if (m != chart.gauge[0] && m != chart.gauge[1] && m != chart.gauge[2])
      chart.free_faces.push_back(m);
  const int nv = static_cast<int>(chart.free_faces.size());
  for (int i = 0; i < nv; ++i) chart.var_names.push_back("t" + std::to_string(i + 1));

  chart.points.assign(static_cast<std::size_t>(f), ProjPoint{});
  chart.points[static_cast<std::size_t>(chart.gauge[0])] = proj_const(nv, Rat(0), Rat(1));
  chart.points[static_cast<std::size_t>(chart.gauge[1])] = proj_const(nv, Rat(1), Rat(1));
  chart.points[static_cast<std::size_t>(chart.gauge[2])] = proj_infinity(nv);
  for (int i = 0; i < nv; ++i)
    chart.points[static_cast<std::size_t>(chart.free_faces[static_cast<std::size_t>(i)])] =
        ProjPoint{rf_var(nv, i), rf_const(nv, Rat(1))};

  chart.x = edge_cross_ratios(g, chart.points);

  // Around every face the edge coordinates multiply to 1.
  auto eod = edge_of_darts(g);
  for (const auto& cyc : face_cycles(g)) {
    RatFunc prod = rf_const(nv, Rat(1));
    for (int d : cyc) prod = prod * chart.x[static_cast<std::size_t>(eod[static_cast<std::size_t>(d)])];
    require(rf_equal(prod, rf_const(nv, Rat(1))), errc::face_relation_failed,
            "edge coordinates around a face do not multiply to 1");
  }
  return chart;
}

bool gauge_pairwise_adjacent(const RibbonGraph& g, const std::array<int, 3>& gauge) {
  auto adj = face_adjacency(g);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto a = static_cast<std::size_t>(gauge[static_cast<std::size_t>(i)]);
      auto b = static_cast<std::size_t>(gauge[static_cast<std::size_t>(j)]);
      if (a >= adj.size() || b >= adj.size() || !adj[a][b]) return false;
    }
  return true;
}

RatFunc monomial_of_class(const Chart& chart, const std::vector<Int>& cls) {
  require(cls.size() == chart.x.size(), errc::bad_argument,
          "class length must match the edge count");
  int nv = static_cast<int>(chart.var_names.size());
  RatFunc out = rf_const(nv, Rat(1));
  for (std::size_t e = 0; e < cls.size(); ++e) {
    if (cls[e] == 0) continue;
    require(cls[e].fits_sint_p(), errc::too_large, "class exponent too large");
    out = out * rf_pow(chart.x[e], static_cast<int>(cls[e].get_si()));
  }
  return out;
}

} // namespace chromlag
