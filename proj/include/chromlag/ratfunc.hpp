#pragma once

#include <string>
#include <vector>

#include "chromlag/mpoly.hpp"

namespace chromlag {

// Rational function num/den over a fixed variable list. The denominator is
// kept primitive with a positive lex-leading coefficient and is never zero;
// common monomial factors are cancelled and exact polynomial quotients are
// taken when they exist. Equality is decided by cross-multiplication, so it
// is exact even when a common non-monomial factor survives normalization.
struct RatFunc {
  MPoly num;
  MPoly den;

  RatFunc() = default;
  explicit RatFunc(int nvars) : num(nvars), den(mp_const(nvars, 1)) {}

  int nvars() const { return num.nvars; }
  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const;
};

RatFunc rf_make(const MPoly& num, const MPoly& den);
RatFunc rf_const(int nvars, const Rat& c);
RatFunc rf_var(int nvars, int i);
RatFunc rf_poly(const MPoly& p);

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc rf_inverse(const RatFunc& a);
RatFunc rf_pow(const RatFunc& a, int n); // negative n allowed for nonzero a

bool rf_equal(const RatFunc& a, const RatFunc& b);

// Evaluate at a rational point; throws DegenerateConfiguration when the
// denominator vanishes there.
Rat rf_eval(const RatFunc& a, const std::vector<Rat>& x);

// Evaluate a polynomial with rational-function arguments.
RatFunc mp_eval_rf(const MPoly& p, const std::vector<RatFunc>& x);

std::string rf_to_string(const RatFunc& a, const std::vector<std::string>& names);

} // namespace chromlag
