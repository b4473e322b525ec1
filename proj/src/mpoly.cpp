#include "chromlag/mpoly.hpp"

#include <algorithm>
#include <optional>

#include "chromlag/errors.hpp"

namespace chromlag {

namespace {

void check_same(const MPoly& p, const MPoly& q) {
  require(p.nvars == q.nvars, errc::bad_argument, "polynomial variable-count mismatch");
}

void add_term(MPoly& p, const std::vector<int>& e, const Rat& c) {
  if (c == 0) return;
  auto it = p.terms.find(e);
  if (it == p.terms.end()) {
    p.terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

constexpr std::size_t kTermCap = 200000;

} // namespace

MPoly mp_const(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (c != 0) p.terms.emplace(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly mp_var(int nvars, int i) {
  require(i >= 0 && i < nvars, errc::bad_argument, "variable index out of range");
  MPoly p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.terms.emplace(std::move(e), Rat(1));
  return p;
}

MPoly mp_monomial(int nvars, const std::vector<int>& exps, const Rat& c) {
  require(static_cast<int>(exps.size()) == nvars, errc::bad_argument, "monomial exponent length mismatch");
  for (int e : exps) require(e >= 0, errc::bad_argument, "monomial exponents must be nonnegative");
  MPoly p(nvars);
  if (c != 0) p.terms.emplace(exps, c);
  return p;
}

MPoly operator+(const MPoly& p, const MPoly& q) {
  check_same(p, q);
  MPoly z = p;
  for (const auto& [e, c] : q.terms) add_term(z, e, c);
  return z;
}

MPoly operator-(const MPoly& p, const MPoly& q) {
  check_same(p, q);
  MPoly z = p;
  for (const auto& [e, c] : q.terms) add_term(z, e, Rat(-c));
  return z;
}

MPoly operator-(const MPoly& p) {
  MPoly z(p.nvars);
  for (const auto& [e, c] : p.terms) z.terms.emplace(e, Rat(-c));
  return z;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
  check_same(p, q);
  MPoly z(p.nvars);
  std::vector<int> e(static_cast<std::size_t>(p.nvars), 0);
  for (const auto& [ep, cp] : p.terms)
    for (const auto& [eq, cq] : q.terms) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      add_term(z, e, cp * cq);
      require(z.terms.size() <= kTermCap, errc::too_large, "polynomial product exceeds term cap");
    }
  return z;
}

MPoly operator*(const Rat& c, const MPoly& p) {
  MPoly z(p.nvars);
  if (c == 0) return z;
  for (const auto& [e, pc] : p.terms) z.terms.emplace(e, c * pc);
  return z;
}

MPoly mp_pow(const MPoly& p, int n) {
  require(n >= 0, errc::bad_argument, "polynomial power must be nonnegative");
  MPoly z = mp_const(p.nvars, 1);
  MPoly base = p;
  int k = n;
  while (k > 0) {
    if (k & 1) z = z * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return z;
}

int mp_degree(const MPoly& p) {
  int d = -1;
  for (const auto& [e, c] : p.terms) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

int mp_degree_in(const MPoly& p, int var) {
  require(var >= 0 && var < p.nvars, errc::bad_argument, "variable index out of range");
  int d = -1;
  for (const auto& [e, c] : p.terms) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

Rat mp_coeff(const MPoly& p, const std::vector<int>& exps) {
  auto it = p.terms.find(exps);
  return it == p.terms.end() ? Rat(0) : it->second;
}

Rat mp_constant_term(const MPoly& p) {
  return mp_coeff(p, std::vector<int>(static_cast<std::size_t>(p.nvars), 0));
}

std::vector<MPoly> mp_coeffs_in(const MPoly& p, int var) {
  int d = mp_degree_in(p, var);
  std::vector<MPoly> out(static_cast<std::size_t>(d + 1), MPoly(p.nvars));
  for (const auto& [e, c] : p.terms) {
    std::vector<int> e2 = e;
    int k = e2[static_cast<std::size_t>(var)];
    e2[static_cast<std::size_t>(var)] = 0;
    out[static_cast<std::size_t>(k)].terms.emplace(std::move(e2), c);
  }
  return out;
}

MPoly mp_derivative(const MPoly& p, int var) {
  require(var >= 0 && var < p.nvars, errc::bad_argument, "variable index out of range");
  MPoly z(p.nvars);
  for (const auto& [e, c] : p.terms) {
    int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    std::vector<int> e2 = e;
    e2[static_cast<std::size_t>(var)] = k - 1;
    add_term(z, e2, Rat(k) * c);
  }
  return z;
}

Rat mp_eval(const MPoly& p, const std::vector<Rat>& x) {
  require(static_cast<int>(x.size()) == p.nvars, errc::bad_argument, "evaluation point length mismatch");
  // Precompute the needed powers of each coordinate.
  std::vector<std::vector<Rat>> pw(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) pw[i].push_back(Rat(1));
  Rat total(0);
  for (const auto& [e, c] : p.terms) {
    Rat t = c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      int k = e[i];
      auto& tab = pw[i];
      while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * x[i]);
      t *= tab[static_cast<std::size_t>(k)];
    }
    total += t;
  }
  return total;
}

namespace {

std::optional<MPoly> try_div(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) return std::nullopt;
  MPoly rem = p;
  MPoly quot(p.nvars);
  const auto& ltd = *d.terms.rbegin();
  std::size_t steps = 0;
  while (!rem.is_zero()) {
    require(++steps <= kTermCap, errc::too_large, "polynomial division exceeds step cap");
    const auto& ltr = *rem.terms.rbegin();
    std::vector<int> e(static_cast<std::size_t>(p.nvars), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      int diff = ltr.first[i] - ltd.first[i];
      if (diff < 0) return std::nullopt;
      e[i] = diff;
    }
    MPoly t = mp_monomial(p.nvars, e, ltr.second / ltd.second);
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

} // namespace

MPoly mp_div_exact(const MPoly& p, const MPoly& d, const std::string& what) {
  check_same(p, d);
  auto q = try_div(p, d);
  require(q.has_value(), errc::not_divisible, "exact polynomial division failed: " + what);
  return *q;
}

bool mp_divides(const MPoly& d, const MPoly& p) {
  check_same(p, d);
  if (p.is_zero()) return !d.is_zero();
  return try_div(p, d).has_value();
}

MPoly mp_make_primitive(const MPoly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const auto& [e, c] : p.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(c).get_mpz_t());
  Int g(0);
  for (const auto& [e, c] : p.terms) {
    Int n = num(c) * (l / den(c));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rat scale = make_rat(l, g);
  if (p.terms.rbegin()->second < 0) scale = -scale;
  return scale * p;
}

namespace {

// Content of p viewed in Q[rest][var]: the gcd of its var-coefficients.
MPoly content_in(const MPoly& p, int var) {
  MPoly c(p.nvars);
  for (const MPoly& coeff : mp_coeffs_in(p, var)) {
    if (coeff.is_zero()) continue;
    c = mp_gcd(c, coeff);
    if (mp_degree(c) == 0) break;
  }
  return c;
}

// Pseudo-remainder of a by b in `var` (up to scale), deg_var < deg_var(b).
MPoly prem_in(MPoly r, const MPoly& b, int var) {
  const int db = mp_degree_in(b, var);
  const MPoly lcb = mp_coeffs_in(b, var).back();
  while (!r.is_zero() && mp_degree_in(r, var) >= db) {
    const int dr = mp_degree_in(r, var);
    const MPoly lcr = mp_coeffs_in(r, var).back();
    std::vector<int> e(static_cast<std::size_t>(r.nvars), 0);
    e[static_cast<std::size_t>(var)] = dr - db;
    r = lcb * r - lcr * mp_monomial(r.nvars, e, Rat(1)) * b;
    r = mp_make_primitive(r);
  }
  return r;
}

} // namespace

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
  check_same(a, b);
  if (a.is_zero()) return mp_make_primitive(b);
  if (b.is_zero()) return mp_make_primitive(a);

  // The gcd can only involve variables appearing in both inputs.
  int var = -1;
  for (int v = a.nvars - 1; v >= 0; --v)
    if (mp_degree_in(a, v) > 0 && mp_degree_in(b, v) > 0) {
      var = v;
      break;
    }
  if (var < 0) return mp_const(a.nvars, Rat(1));

  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly cg = mp_gcd(ca, cb);
  MPoly f = mp_div_exact(a, ca, "content split");
  MPoly g = mp_div_exact(b, cb, "content split");
  if (mp_degree_in(f, var) < mp_degree_in(g, var)) std::swap(f, g);
  while (true) {
    if (mp_degree_in(g, var) == 0) {
      // Coprime in the main variable: only the content survives.
      if (!g.is_zero()) return mp_make_primitive(cg);
      break;
    }
    MPoly r = prem_in(f, g, var);
    f = g;
    if (r.is_zero()) break;
    MPoly cr = content_in(r, var);
    g = mp_div_exact(r, cr, "primitive remainder");
  }
  MPoly cf = content_in(f, var);
  return mp_make_primitive(cg * mp_div_exact(f, cf, "primitive part"));
}

MPoly mp_resultant(const MPoly& p, const MPoly& q, int var) {
  check_same(p, q);
  if (p.is_zero() || q.is_zero()) return MPoly(p.nvars);
  auto pc = mp_coeffs_in(p, var);
  auto qc = mp_coeffs_in(q, var);
  int m = static_cast<int>(pc.size()) - 1;
  int n = static_cast<int>(qc.size()) - 1;
  if (m + n == 0) return mp_const(p.nvars, 1);
  int sz = m + n;
  std::vector<std::vector<MPoly>> s(static_cast<std::size_t>(sz),
                                    std::vector<MPoly>(static_cast<std::size_t>(sz), MPoly(p.nvars)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = pc[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = qc[static_cast<std::size_t>(n - j)];

  // Fraction-free elimination; every interior division is exact.
  MPoly prev = mp_const(p.nvars, 1);
  int sign = 1;
  for (int k = 0; k + 1 < sz; ++k) {
    auto& sk = s[static_cast<std::size_t>(k)];
    if (sk[static_cast<std::size_t>(k)].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < sz; ++i)
        if (!s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) { piv = i; break; }
      if (piv < 0) return MPoly(p.nvars);
      std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(piv)]);
      sign = -sign;
    }
    std::size_t live = 0;
    for (int i = k + 1; i < sz; ++i)
      for (int j = k + 1; j < sz; ++j) {
        MPoly t = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                  s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mp_div_exact(t, prev, "fraction-free elimination step");
        live += s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms.size();
      }
    require(live <= kTermCap, errc::elimination_blowup, "resultant intermediate size exceeds cap");
    prev = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  MPoly r = s[static_cast<std::size_t>(sz - 1)][static_cast<std::size_t>(sz - 1)];
  return sign < 0 ? -r : r;
}

std::string mp_to_string(const MPoly& p, const std::vector<std::string>& names) {
  require(static_cast<int>(names.size()) == p.nvars, errc::bad_argument, "variable-name list length mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& e = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    Rat ac = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += rat_str(ac);
    } else if (ac == 1) {
      out += vars;
    } else {
      out += rat_str(ac) + "*" + vars;
    }
  }
  return out;
}

} // namespace chromlag
