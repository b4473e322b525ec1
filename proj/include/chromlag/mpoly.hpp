#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromlag/rational.hpp"

namespace chromlag {

// Sparse multivariate polynomial over the rationals. Exponent vectors have
// fixed length `nvars`; the map keeps them in lexicographic order, so the
// lex-leading term is *rbegin(). The zero polynomial has an empty map.
struct MPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;

  MPoly() = default;
  explicit MPoly(int n) : nvars(n) {}

  bool is_zero() const { return terms.empty(); }
  bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

MPoly mp_const(int nvars, const Rat& c);
MPoly mp_var(int nvars, int i);
MPoly mp_monomial(int nvars, const std::vector<int>& exps, const Rat& c);

MPoly operator+(const MPoly& p, const MPoly& q);
MPoly operator-(const MPoly& p, const MPoly& q);
MPoly operator-(const MPoly& p);
MPoly operator*(const MPoly& p, const MPoly& q);
MPoly operator*(const Rat& c, const MPoly& p);
MPoly mp_pow(const MPoly& p, int n);

// Total degree; -1 for the zero polynomial.
int mp_degree(const MPoly& p);
int mp_degree_in(const MPoly& p, int var);
Rat mp_coeff(const MPoly& p, const std::vector<int>& exps);
Rat mp_constant_term(const MPoly& p);

// Coefficients of p as a univariate polynomial in `var`. Entry d is the
// coefficient of var^d, an MPoly over the same variable list with the
// exponent of `var` set to 0. Size is degree_in+1 (empty for zero p).
std::vector<MPoly> mp_coeffs_in(const MPoly& p, int var);

MPoly mp_derivative(const MPoly& p, int var);

Rat mp_eval(const MPoly& p, const std::vector<Rat>& x);

// Exact division: returns q with p == q*d, or throws NotDivisible.
MPoly mp_div_exact(const MPoly& p, const MPoly& d, const std::string& what);

// True iff d divides p exactly.
bool mp_divides(const MPoly& d, const MPoly& p);

// Scale so coefficients are coprime integers and the lex-leading one is
// positive. Zero stays zero.
MPoly mp_make_primitive(const MPoly& p);

// Greatest common divisor up to scale, returned primitive. gcd(0, p) is the
// primitive part of p; gcd of two zero polynomials is zero.
MPoly mp_gcd(const MPoly& a, const MPoly& b);

// Resultant of p and q with respect to `var` (determinant of the Sylvester
// matrix, computed fraction-free). Throws EliminationBlowup when the
// intermediate term count exceeds an internal safety cap.
MPoly mp_resultant(const MPoly& p, const MPoly& q, int var);

std::string mp_to_string(const MPoly& p, const std::vector<std::string>& names);

} // namespace chromlag
