#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromlag/mpoly.hpp"
#include "chromlag/ratfunc.hpp"

namespace chromlag {

// Multivariate power series truncated at a total degree. Terms of total
// degree greater than `order` are dropped on every operation, so all stored
// coefficients are exact.
struct TruncSeries {
  int nvars = 0;
  int order = 0;
  std::map<std::vector<int>, Rat> terms;

  TruncSeries() = default;
  TruncSeries(int n, int ord) : nvars(n), order(ord) {}

  bool is_zero() const { return terms.empty(); }
  bool operator==(const TruncSeries& o) const {
    return nvars == o.nvars && order == o.order && terms == o.terms;
  }
};

TruncSeries ts_const(int nvars, int order, const Rat& c);
TruncSeries ts_var(int nvars, int order, int i);
TruncSeries ts_monomial(int nvars, int order, const std::vector<int>& exps, const Rat& c);

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const Rat& c, const TruncSeries& a);
TruncSeries ts_pow(const TruncSeries& a, int n); // negative n inverts first

Rat ts_coeff(const TruncSeries& a, const std::vector<int>& exps);
Rat ts_constant_term(const TruncSeries& a);

// All terms of exact total degree k.
std::map<std::vector<int>, Rat> ts_slice(const TruncSeries& a, int k);

// Multiplicative inverse; requires a nonzero constant term.
TruncSeries ts_inverse(const TruncSeries& a);

// log of a series with constant term exactly 1.
TruncSeries ts_log(const TruncSeries& a);

// Expand a rational function as a series at the origin; the denominator must
// not vanish there.
TruncSeries rf_expand(const RatFunc& a, int order);

// Evaluate a polynomial with series arguments (all of one variable list).
TruncSeries mp_eval_ts(const MPoly& p, const std::vector<TruncSeries>& x);

// Solve G(u, v) = 0 for v as a truncated series in u around u = 0, v = seed.
// Each equation is a polynomial in nparams + nunknowns variables (parameters
// first). The equation count must match the unknown count, the seed must be
// a root at u = 0, and the Jacobian dG/dv there must be invertible. The
// returned series satisfy the system identically through `order`.
std::vector<TruncSeries> series_solve(const std::vector<MPoly>& equations, int nparams,
                                      const std::vector<Rat>& seed, int order);

std::string ts_to_string(const TruncSeries& a, const std::vector<std::string>& names);

} // namespace chromlag
