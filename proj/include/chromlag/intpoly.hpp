#pragma once

#include <string>
#include <vector>

#include "chromlag/rational.hpp"

namespace chromlag {

// Dense univariate polynomial with exact integer coefficients, stored
// ascending (coeff[i] multiplies x^i). Trailing zeros are trimmed so the
// representation is canonical; the zero polynomial has empty storage and
// degree -1.
struct IntPoly {
  std::vector<Int> coeff;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : coeff(std::move(c)) { trim(); }
  static IntPoly constant(const Int& c);
  static IntPoly x(); // the monomial x

  void trim();
  bool is_zero() const { return coeff.empty(); }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  const Int& at(std::size_t i) const; // 0 beyond degree

  bool operator==(const IntPoly& o) const { return coeff == o.coeff; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const Int& c, const IntPoly& a);

// p(x + shift)
IntPoly shift_arg(const IntPoly& p, const Int& shift);
// (x + a)^n helper
IntPoly binomial_power(const Int& a, unsigned n);

// Exact division; throws NotDivisible if the remainder is nonzero or the
// quotient would need non-integer coefficients.
IntPoly div_exact(const IntPoly& p, const IntPoly& d, const std::string& what);

// Pretty-printer, e.g. "q^3 - 6*q^2 + 14*q - 11"; zero prints "0".
std::string to_string(const IntPoly& p, const std::string& var);

} // namespace chromlag
