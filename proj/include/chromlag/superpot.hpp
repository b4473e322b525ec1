#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromlag/homlattice.hpp"
#include "chromlag/intmat.hpp"
#include "chromlag/mpoly.hpp"
#include "chromlag/periods.hpp"
#include "chromlag/ratfunc.hpp"
#include "chromlag/ribbon.hpp"
#include "chromlag/truncseries.hpp"

namespace chromlag {

// The exponential coordinates attached to a phase on a chart: for each of the
// g dual pairs, U[i] = -x^{mu_i} and V[i] = -x^{-nu_i} as rational functions
// of the chart parameters.
struct UVSystem {
    int genus = 0;
    std::vector<RatFunc> u;
    std::vector<RatFunc> v;
};

UVSystem build_uv(const Chart& chart, const H1Presentation& pres,
                  const Phase& phase);

// Polynomial relations cutting out the image of the chart in the (U, V)
// torus.  Variables are ordered U1..Ug, V1..Vg.  For each i the relation
// rel[i] expresses V_i in terms of the U's implicitly; solved_v[i] is the
// explicit rational solution V_i(U) when the eliminator found one.
struct LagrangianRelations {
    int genus = 0;
    std::vector<MPoly> relations;        // in 2g variables U1..Ug,V1..Vg
    std::vector<RatFunc> solved_v;       // in g variables U1..Ug (may be empty)
};

// Eliminate the chart parameters from {U_i = ..., V_i = ...} to produce g
// polynomial relations among the U's and V's alone.  Every relation is
// re-verified at `checks` random sample points drawn from `seed` before it is
// returned.
LagrangianRelations uv_relations(const Chart& chart, const UVSystem& uv,
                                 unsigned long long seed = 12345);

// Change of brane framing by a symmetric integer matrix M: substitute
//   U_i = s_i * U'_i * prod_j V_j^{M_ij},   s_i = (-1)^{M_ii},
// into each relation and clear denominators.  With flip = true the exponent
// matrix -M is used instead (the opposite handedness convention).  A
// nonempty `signs` vector (entries +-1, length genus) overrides the default
// s_i.
struct FramedSystem {
    int genus = 0;
    IntMat framing;                      // the matrix actually applied
    std::vector<int> sign;               // s_i in {+1,-1}
    std::vector<MPoly> relations;        // in 2g variables U1..Ug,V1..Vg
};

FramedSystem framed_system(const LagrangianRelations& rel, const IntMat& m,
                           bool flip = false,
                           const std::vector<int>& signs = {});

// Disk potential data extracted from the framed relations: the V-series
// solving them around V(0) = 1, the log-coordinates w_i = -log V_i, the
// normalized coefficients K_d, and the integer counts a_d obtained by
// Moebius inversion of the multi-cover sum.
struct Superpotential {
    int genus = 0;
    int order = 0;
    std::vector<TruncSeries> v_series;           // V_i(U') to the given order
    std::vector<TruncSeries> w_series;           // w_i = -log V_i
    std::map<std::vector<int>, Rat> kcoeff;      // K_d, nonzero entries only
    std::map<std::vector<int>, Rat> bps;         // a_d, nonzero entries only
    bool bps_integral = false;
    std::string closed_form;                     // dilogarithm sum if integral
};

Superpotential solve_and_integrate(const FramedSystem& sys, int order);

// Multi-cover sum and its Moebius inversion. The two maps are mutually
// inverse on tables supported in total degree <= order:
//   sum:    K_m = sum_{n | gcd(m)} a(m/n) / n^2
//   invert: a_m = sum_{n | gcd(m)} moebius(n) * K(m/n) / n^2
// Zero entries are dropped from the results.
std::map<std::vector<int>, Rat> multicover_sum(
    const std::map<std::vector<int>, Rat>& a, int order);
std::map<std::vector<int>, Rat> multicover_invert(
    const std::map<std::vector<int>, Rat>& k, int order);

// End-to-end: chart -> UV -> relations -> framing -> series -> counts.
struct PipelineResult {
    Chart chart;
    H1Presentation pres;
    Phase phase;
    UVSystem uv;
    LagrangianRelations relations;
    FramedSystem framed;
    Superpotential pot;
};

PipelineResult superpotential_pipeline(const RibbonGraph& g, const Phase& phase,
                                       const IntMat& framing, int order,
                                       bool flip = false,
                                       const std::vector<int>& gauge = {},
                                       const std::vector<int>& signs = {},
                                       unsigned long long seed = 12345);

}  // namespace chromlag
