#include "chromlag/homlattice.hpp"

#include <numeric>

#include "chromlag/errors.hpp"

namespace chromlag {

IntMat intersection_form(const RibbonGraph& g) {
  auto eod = edge_of_darts(g);
  const int e = nedges(g);
  IntMat a(e, e);
  for (int d = 0; d < g.ndarts(); ++d) {
    int i = eod[static_cast<std::size_t>(d)];
    int j = eod[static_cast<std::size_t>(g.sigma[static_cast<std::size_t>(d)])];
    a.at(i, j) += 1;
    a.at(j, i) -= 1;
  }
  return a;
}

IntMat face_relation_matrix(const RibbonGraph& g) {
  auto eod = edge_of_darts(g);
  auto faces = face_cycles(g);
  IntMat r(static_cast<int>(faces.size()), nedges(g));
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int d : faces[f]) r.at(static_cast<int>(f), eod[static_cast<std::size_t>(d)]) += 1;
  return r;
}

H1Presentation h1_presentation(const RibbonGraph& g) {
  validate(g);
  H1Presentation pres;
  pres.genus = surface_genus(g);
  pres.edge_form = intersection_form(g);
  pres.relations = face_relation_matrix(g);
  const int e = nedges(g);
  const int f = nfaces(g);
  const int rank2g = 2 * pres.genus;
  require(e - f == rank2g, errc::presentation_assertion_failed,
          "edge and face counts do not leave a rank-2g quotient");

  SmithForm snf = smith_normal_form(pres.relations);
  require(snf.rank() == f, errc::presentation_assertion_failed,
          "face relations are not independent");
  // Every edge lies on two faces, so the rows sum to 2*(1,...,1): the last
  // invariant factor is 2 and all earlier ones are 1.
  for (std::size_t i = 0; i < snf.factors.size(); ++i) {
    const Int expected = (static_cast<int>(i) == f - 1) ? 2 : 1;
    require(snf.factors[i] == expected, errc::presentation_assertion_failed,
            "face relation lattice has unexpected invariant factors");
  }

  // With u r v = d, the first f rows of v^-1 span the relation lattice and
  // the remaining rows descend to a basis of the quotient; the coordinates
  // of x in that basis are the last 2g entries of v^T x.
  IntMat vinv = unimodular_inverse(snf.v);
  IntMat vt = transpose(snf.v);
  pres.basis = IntMat(rank2g, e);
  pres.coords_map = IntMat(rank2g, e);
  for (int i = 0; i < rank2g; ++i)
    for (int j = 0; j < e; ++j) {
      pres.basis.at(i, j) = vinv.at(f + i, j);
      pres.coords_map.at(i, j) = vt.at(f + i, j);
    }
  // Row f-1 of v^-1 generates the order-two part of the quotient: twice it
  // lies in the face-row span, itself does not.
  pres.torsion = IntMat(1, e);
  for (int j = 0; j < e; ++j) pres.torsion.at(0, j) = vinv.at(f - 1, j);

  // The face relations must pair trivially with everything.
  IntMat radical_check = pres.edge_form * transpose(pres.relations);
  require(radical_check.is_zero(), errc::presentation_assertion_failed,
          "face relations are not in the radical of the pairing");

  pres.induced = IntMat(rank2g, rank2g);
  for (int i = 0; i < rank2g; ++i) {
    std::vector<Int> bi(static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k) bi[static_cast<std::size_t>(k)] = pres.basis.at(i, k);
    for (int j = 0; j < rank2g; ++j) {
      std::vector<Int> bj(static_cast<std::size_t>(e));
      for (int k = 0; k < e; ++k) bj[static_cast<std::size_t>(k)] = pres.basis.at(j, k);
      pres.induced.at(i, j) = pair_with(pres.edge_form, bi, bj);
    }
  }
  require(det(pres.induced) == 1, errc::presentation_assertion_failed,
          "induced pairing on the quotient is not unimodular");
  return pres;
}

std::vector<Int> h1_coords(const H1Presentation& pres, const std::vector<Int>& x) {
  return mul_col(pres.coords_map, x);
}

Int edge_pairing(const H1Presentation& pres, const std::vector<Int>& x, const std::vector<Int>& y) {
  return pair_with(pres.edge_form, x, y);
}

int validate_phase(const RibbonGraph& g, const H1Presentation& pres, const Phase& ph) {
  const int genus = pres.genus;
  const int e = nedges(g);
  require(static_cast<int>(ph.nu.size()) == genus && static_cast<int>(ph.mu.size()) == genus,
          errc::bad_argument, "phase needs one nu and one mu per genus");
  for (const auto& v : ph.nu)
    require(static_cast<int>(v.size()) == e, errc::bad_argument,
            "phase vectors must live in the edge lattice");
  for (const auto& v : ph.mu)
    require(static_cast<int>(v.size()) == e, errc::bad_argument,
            "phase vectors must live in the edge lattice");
  require(ph.usign.empty() || static_cast<int>(ph.usign.size()) == genus,
          errc::bad_argument, "usign must be empty or have one entry per pair");
  for (int s : ph.usign)
    require(s == 1 || s == -1, errc::bad_argument, "usign entries must be +1 or -1");

  for (int i = 0; i < genus; ++i) {
    auto coords = h1_coords(pres, ph.nu[static_cast<std::size_t>(i)]);
    Int gcd(0);
    for (const Int& c : coords) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.get_mpz_t());
    require(gcd == 1, errc::not_primitive, "nu classes must be primitive in homology");
  }

  for (int i = 0; i < genus; ++i)
    for (int j = 0; j < genus; ++j) {
      Int nn = edge_pairing(pres, ph.nu[static_cast<std::size_t>(i)], ph.nu[static_cast<std::size_t>(j)]);
      require(nn == 0, errc::not_isotropic, "nu classes must pairwise pair to zero");
      Int mm = edge_pairing(pres, ph.mu[static_cast<std::size_t>(i)], ph.mu[static_cast<std::size_t>(j)]);
      require(mm == 0, errc::not_isotropic, "mu classes must pairwise pair to zero");
    }

  int epsilon = 0;
  for (int i = 0; i < genus; ++i)
    for (int j = 0; j < genus; ++j) {
      Int p = edge_pairing(pres, ph.mu[static_cast<std::size_t>(i)], ph.nu[static_cast<std::size_t>(j)]);
      if (i != j) {
        require(p == 0, errc::not_dual, "mu and nu must pair diagonally");
      } else {
        require(p == 1 || p == -1, errc::not_dual, "each mu must pair to a unit with its nu");
        int s = p == 1 ? 1 : -1;
        if (epsilon == 0) epsilon = s;
        require(s == epsilon, errc::not_dual, "duality signs must agree across the phase");
      }
    }
  return epsilon;
}

namespace {

std::vector<Int> unit_vec(int n, int i) {
  std::vector<Int> v(static_cast<std::size_t>(n), Int(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

} // namespace

std::optional<Phase> builtin_phase(const std::string& graph_name) {
  Phase ph;
  ph.name = graph_name;
  if (graph_name == "tetrahedron") {
    ph.nu = {unit_vec(6, 1)};
    ph.mu = {unit_vec(6, 0)};
    return ph;
  }
  if (graph_name == "prism") {
    ph.nu = {unit_vec(9, 2), unit_vec(9, 8)};
    ph.mu = {unit_vec(9, 1), unit_vec(9, 7)};
    return ph;
  }
  if (graph_name == "cube") {
    auto from = [](std::initializer_list<long> entries) {
      std::vector<Int> v;
      for (long x : entries) v.emplace_back(x);
      return v;
    };
    ph.nu = {from({0, 1, 1, 0, 0, 1, 1, 0, -1, 0, 0, 0}),
             from({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
             from({-1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0})};
    ph.mu = {from({-1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
             from({1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
             from({1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0})};
    ph.usign = {-1, 1, 1};
    return ph;
  }
  return std::nullopt;
}

} // namespace chromlag
