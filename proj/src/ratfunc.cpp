#include "chromlag/ratfunc.hpp"

#include <algorithm>

#include "chromlag/errors.hpp"

namespace chromlag {

namespace {

void check_same(const RatFunc& a, const RatFunc& b) {
  require(a.nvars() == b.nvars(), errc::bad_argument, "rational-function variable-count mismatch");
}

// Divide out the largest monomial dividing every term of p; report it in e.
MPoly strip_monomial(const MPoly& p, std::vector<int>& e) {
  e.assign(static_cast<std::size_t>(p.nvars), 0);
  if (p.is_zero()) return p;
  bool first = true;
  for (const auto& [ex, c] : p.terms) {
    if (first) {
      e = ex;
      first = false;
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], ex[i]);
    }
  }
  bool trivial = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
  if (trivial) return p;
  MPoly z(p.nvars);
  for (const auto& [ex, c] : p.terms) {
    std::vector<int> ex2 = ex;
    for (std::size_t i = 0; i < ex2.size(); ++i) ex2[i] -= e[i];
    z.terms.emplace(std::move(ex2), c);
  }
  return z;
}

} // namespace

bool RatFunc::is_polynomial() const {
  return den == mp_const(num.nvars, 1);
}

RatFunc rf_make(const MPoly& num, const MPoly& den) {
  require(num.nvars == den.nvars, errc::bad_argument, "rational-function variable-count mismatch");
  require(!den.is_zero(), errc::bad_argument, "rational function with zero denominator");
  RatFunc r(num.nvars);
  if (num.is_zero()) return r;

  std::vector<int> en, ed;
  MPoly n = strip_monomial(num, en);
  MPoly d = strip_monomial(den, ed);
  // Cancel the shared monomial part, then put the leftover on the right side.
  std::vector<int> back_n(en.size(), 0), back_d(ed.size(), 0);
  for (std::size_t i = 0; i < en.size(); ++i) {
    int shared = std::min(en[i], ed[i]);
    back_n[i] = en[i] - shared;
    back_d[i] = ed[i] - shared;
  }
  n = n * mp_monomial(n.nvars, back_n, Rat(1));
  d = d * mp_monomial(d.nvars, back_d, Rat(1));

  MPoly common = mp_gcd(n, d);
  if (mp_degree(common) > 0) {
    n = mp_div_exact(n, common, "rational-function reduction");
    d = mp_div_exact(d, common, "rational-function reduction");
  }
  if (mp_divides(d, n)) {
    r.num = mp_div_exact(n, d, "rational-function reduction");
    r.den = mp_const(num.nvars, 1);
    return r;
  }
  MPoly dp = mp_make_primitive(d);
  // d == s * dp for a positive-or-negative rational s; fold s into the numerator.
  const auto& lead = *d.terms.rbegin();
  Rat s = lead.second / dp.terms.rbegin()->second;
  r.num = (1 / s) * n;
  r.den = dp;
  return r;
}

RatFunc rf_const(int nvars, const Rat& c) { return rf_poly(mp_const(nvars, c)); }

RatFunc rf_var(int nvars, int i) { return rf_poly(mp_var(nvars, i)); }

RatFunc rf_poly(const MPoly& p) {
  RatFunc r(p.nvars);
  r.num = p;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  check_same(a, b);
  return rf_make(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  check_same(a, b);
  return rf_make(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num = -r.num;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  check_same(a, b);
  return rf_make(a.num * b.num, a.den * b.den);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  check_same(a, b);
  require(!b.is_zero(), errc::bad_argument, "division by the zero rational function");
  return rf_make(a.num * b.den, a.den * b.num);
}

RatFunc rf_inverse(const RatFunc& a) {
  require(!a.is_zero(), errc::bad_argument, "inverse of the zero rational function");
  return rf_make(a.den, a.num);
}

RatFunc rf_pow(const RatFunc& a, int n) {
  if (n < 0) return rf_pow(rf_inverse(a), -n);
  RatFunc r = rf_const(a.nvars(), 1);
  RatFunc base = a;
  int k = n;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

bool rf_equal(const RatFunc& a, const RatFunc& b) {
  check_same(a, b);
  return (a.num * b.den - b.num * a.den).is_zero();
}

Rat rf_eval(const RatFunc& a, const std::vector<Rat>& x) {
  Rat d = mp_eval(a.den, x);
  require(d != 0, errc::degenerate_configuration, "rational function has a pole at the evaluation point");
  return mp_eval(a.num, x) / d;
}

RatFunc mp_eval_rf(const MPoly& p, const std::vector<RatFunc>& x) {
  require(static_cast<int>(x.size()) == p.nvars, errc::bad_argument, "evaluation point length mismatch");
  int nv = x.empty() ? 0 : x[0].nvars();
  for (const auto& xi : x)
    require(xi.nvars() == nv, errc::bad_argument, "evaluation arguments over mixed variable lists");
  RatFunc total = rf_const(nv, 0);
  for (const auto& [e, c] : p.terms) {
    RatFunc t = rf_const(nv, c);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] > 0) t = t * rf_pow(x[i], e[i]);
    total = total + t;
  }
  return total;
}

std::string rf_to_string(const RatFunc& a, const std::vector<std::string>& names) {
  if (a.is_polynomial()) return mp_to_string(a.num, names);
  std::string n = mp_to_string(a.num, names);
  std::string d = mp_to_string(a.den, names);
  if (a.num.terms.size() > 1) n = "(" + n + ")";
  if (a.den.terms.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

} // namespace chromlag
