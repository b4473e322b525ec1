#include "chromlag/intpoly.hpp"

#include <sstream>

namespace chromlag {

IntPoly IntPoly::constant(const Int& c) {
  IntPoly p;
  if (c != 0) p.coeff = {c};
  return p;
}

IntPoly IntPoly::x() {
  IntPoly p;
  p.coeff = {Int(0), Int(1)};
  return p;
}

void IntPoly::trim() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

const Int& IntPoly::at(std::size_t i) const {
  static const Int zero(0);
  return i < coeff.size() ? coeff[i] : zero;
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeff.size(), b.coeff.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(i) + b.at(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeff.size(), b.coeff.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(i) - b.at(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Int> c(a.coeff);
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.coeff.size() + b.coeff.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    for (std::size_t j = 0; j < b.coeff.size(); ++j) c[i + j] += a.coeff[i] * b.coeff[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  if (c == 0) return IntPoly();
  std::vector<Int> r(a.coeff);
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

IntPoly binomial_power(const Int& a, unsigned n) {
  IntPoly base(std::vector<Int>{a, Int(1)});
  IntPoly acc = IntPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

IntPoly shift_arg(const IntPoly& p, const Int& shift) {
  // Horner in the shifted variable: p(x+s) = (...((c_n)(x+s) + c_{n-1})(x+s) + ...)
  IntPoly acc;
  IntPoly lin(std::vector<Int>{shift, Int(1)});
  for (auto it = p.coeff.rbegin(); it != p.coeff.rend(); ++it)
    acc = acc * lin + IntPoly::constant(*it);
  return acc;
}

IntPoly div_exact(const IntPoly& p, const IntPoly& d, const std::string& what) {
  require(!d.is_zero(), errc::bad_argument, "division by zero polynomial");
  if (p.is_zero()) return IntPoly();
  require(p.degree() >= d.degree(), errc::not_divisible, what + ": degree too small");
  std::vector<Int> rem = p.coeff;
  std::vector<Int> quot(static_cast<std::size_t>(p.degree() - d.degree()) + 1, Int(0));
  const Int& lead = d.coeff.back();
  for (int k = p.degree() - d.degree(); k >= 0; --k) {
    Int top = rem[static_cast<std::size_t>(k + d.degree())];
    if (top == 0) continue;
    require(top % lead == 0, errc::not_divisible, what + ": non-integral quotient");
    Int q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= d.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * d.coeff[static_cast<std::size_t>(i)];
  }
  for (const Int& r : rem)
    require(r == 0, errc::not_divisible, what + ": nonzero remainder");
  return IntPoly(std::move(quot));
}

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.at(static_cast<std::size_t>(i));
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (!unit) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

} // namespace chromlag
