#include "chromlag/truncseries.hpp"

#include <algorithm>
#include <numeric>

#include "chromlag/errors.hpp"

namespace chromlag {

namespace {

int total_degree(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

void check_same(const TruncSeries& a, const TruncSeries& b) {
  require(a.nvars == b.nvars, errc::bad_argument, "series variable-count mismatch");
  require(a.order == b.order, errc::truncation_mismatch, "series truncation orders differ");
}

void add_term(TruncSeries& s, const std::vector<int>& e, const Rat& c) {
  if (c == 0 || total_degree(e) > s.order) return;
  auto it = s.terms.find(e);
  if (it == s.terms.end()) {
    s.terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) s.terms.erase(it);
  }
}

} // namespace

TruncSeries ts_const(int nvars, int order, const Rat& c) {
  TruncSeries s(nvars, order);
  add_term(s, std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return s;
}

TruncSeries ts_var(int nvars, int order, int i) {
  require(i >= 0 && i < nvars, errc::bad_argument, "variable index out of range");
  TruncSeries s(nvars, order);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  add_term(s, e, Rat(1));
  return s;
}

TruncSeries ts_monomial(int nvars, int order, const std::vector<int>& exps, const Rat& c) {
  require(static_cast<int>(exps.size()) == nvars, errc::bad_argument, "monomial exponent length mismatch");
  for (int e : exps) require(e >= 0, errc::bad_argument, "monomial exponents must be nonnegative");
  TruncSeries s(nvars, order);
  add_term(s, exps, c);
  return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_same(a, b);
  TruncSeries s = a;
  for (const auto& [e, c] : b.terms) add_term(s, e, c);
  return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  check_same(a, b);
  TruncSeries s = a;
  for (const auto& [e, c] : b.terms) add_term(s, e, Rat(-c));
  return s;
}

TruncSeries operator-(const TruncSeries& a) {
  TruncSeries s(a.nvars, a.order);
  for (const auto& [e, c] : a.terms) s.terms.emplace(e, Rat(-c));
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_same(a, b);
  TruncSeries s(a.nvars, a.order);
  std::vector<int> e(static_cast<std::size_t>(a.nvars), 0);
  for (const auto& [ea, ca] : a.terms) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms) {
      if (da + total_degree(eb) > s.order) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(s, e, ca * cb);
    }
  }
  return s;
}

TruncSeries operator*(const Rat& c, const TruncSeries& a) {
  TruncSeries s(a.nvars, a.order);
  if (c == 0) return s;
  for (const auto& [e, tc] : a.terms) s.terms.emplace(e, c * tc);
  return s;
}

TruncSeries ts_pow(const TruncSeries& a, int n) {
  if (n < 0) return ts_pow(ts_inverse(a), -n);
  TruncSeries s = ts_const(a.nvars, a.order, 1);
  TruncSeries base = a;
  int k = n;
  while (k > 0) {
    if (k & 1) s = s * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return s;
}

Rat ts_coeff(const TruncSeries& a, const std::vector<int>& exps) {
  auto it = a.terms.find(exps);
  return it == a.terms.end() ? Rat(0) : it->second;
}

Rat ts_constant_term(const TruncSeries& a) {
  return ts_coeff(a, std::vector<int>(static_cast<std::size_t>(a.nvars), 0));
}

std::map<std::vector<int>, Rat> ts_slice(const TruncSeries& a, int k) {
  std::map<std::vector<int>, Rat> out;
  for (const auto& [e, c] : a.terms)
    if (total_degree(e) == k) out.emplace(e, c);
  return out;
}

TruncSeries ts_inverse(const TruncSeries& a) {
  Rat c0 = ts_constant_term(a);
  require(c0 != 0, errc::non_unit_constant_term, "series inverse needs a nonzero constant term");
  // 1/(c0 + u) = (1/c0) * sum_k (-u/c0)^k
  TruncSeries u = a - ts_const(a.nvars, a.order, c0);
  TruncSeries t = Rat(-1) / c0 * u;
  TruncSeries acc = ts_const(a.nvars, a.order, 1);
  TruncSeries pw = ts_const(a.nvars, a.order, 1);
  for (int k = 1; k <= a.order; ++k) {
    pw = pw * t;
    if (pw.is_zero()) break;
    acc = acc + pw;
  }
  return 1 / c0 * acc;
}

TruncSeries ts_log(const TruncSeries& a) {
  require(ts_constant_term(a) == 1, errc::non_unit_constant_term,
          "series log needs constant term 1");
  TruncSeries u = a - ts_const(a.nvars, a.order, 1);
  TruncSeries acc(a.nvars, a.order);
  TruncSeries pw = ts_const(a.nvars, a.order, 1);
  for (int k = 1; k <= a.order; ++k) {
    pw = pw * u;
    if (pw.is_zero()) break;
    Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
    acc = acc + sign / Rat(k) * pw;
  }
  return acc;
}

TruncSeries rf_expand(const RatFunc& a, int order) {
  TruncSeries num(a.nvars(), order), den(a.nvars(), order);
  for (const auto& [e, c] : a.num.terms) add_term(num, e, c);
  for (const auto& [e, c] : a.den.terms) add_term(den, e, c);
  require(ts_constant_term(den) != 0, errc::pole_at_origin,
          "rational function has a pole at the origin");
  return num * ts_inverse(den);
}

TruncSeries mp_eval_ts(const MPoly& p, const std::vector<TruncSeries>& x) {
  require(static_cast<int>(x.size()) == p.nvars, errc::bad_argument,
          "evaluation point length mismatch");
  require(!x.empty(), errc::bad_argument, "series evaluation needs at least one argument");
  int nv = x[0].nvars;
  int ord = x[0].order;
  for (const auto& xi : x) {
    require(xi.nvars == nv, errc::bad_argument, "evaluation arguments over mixed variable lists");
    require(xi.order == ord, errc::truncation_mismatch, "evaluation arguments with mixed orders");
  }
  TruncSeries total(nv, ord);
  for (const auto& [e, c] : p.terms) {
    TruncSeries t = ts_const(nv, ord, c);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] > 0) t = t * ts_pow(x[i], e[i]);
    total = total + t;
  }
  return total;
}

namespace {

// Invert a small rational matrix by Gauss-Jordan; returns false if singular.
bool rat_inverse(std::vector<std::vector<Rat>> m, std::vector<std::vector<Rat>>& inv) {
  int n = static_cast<int>(m.size());
  inv.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { piv = i; break; }
    if (piv < 0) return false;
    std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
    std::swap(inv[static_cast<std::size_t>(k)], inv[static_cast<std::size_t>(piv)]);
    Rat p = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] /= p;
      inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      Rat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
    }
  }
  return true;
}

} // namespace

std::vector<TruncSeries> series_solve(const std::vector<MPoly>& equations, int nparams,
                                      const std::vector<Rat>& seed, int order) {
  const int m = static_cast<int>(equations.size());
  require(m == static_cast<int>(seed.size()), errc::bad_argument,
          "series solve needs as many equations as unknowns");
  require(m > 0, errc::bad_argument, "series solve needs at least one equation");
  require(order >= 0, errc::bad_argument, "series order must be nonnegative");
  const int ntot = equations[0].nvars;
  const int nu = ntot - nparams;
  require(nu == m, errc::bad_argument, "unknown count does not match equation count");
  for (const auto& g : equations)
    require(g.nvars == ntot, errc::bad_argument, "equations over mixed variable lists");

  // Check the seed is a root at the origin of the parameter space.
  std::vector<Rat> origin(static_cast<std::size_t>(ntot), Rat(0));
  for (int j = 0; j < nu; ++j) origin[static_cast<std::size_t>(nparams + j)] = seed[static_cast<std::size_t>(j)];
  for (const auto& g : equations)
    require(mp_eval(g, origin) == 0, errc::seed_not_root,
            "seed does not solve the system at the origin");

  // Constant Jacobian with respect to the unknowns.
  std::vector<std::vector<Rat>> jac(static_cast<std::size_t>(m),
                                    std::vector<Rat>(static_cast<std::size_t>(m), Rat(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < nu; ++j)
      jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mp_eval(mp_derivative(equations[static_cast<std::size_t>(i)], nparams + j), origin);
  std::vector<std::vector<Rat>> jinv;
  require(rat_inverse(jac, jinv), errc::singular_jacobian,
          "Jacobian with respect to the unknowns is singular at the seed");

  // Current solution as series in the parameters.
  std::vector<TruncSeries> v;
  v.reserve(static_cast<std::size_t>(nu));
  for (int j = 0; j < nu; ++j) v.push_back(ts_const(nparams, order, seed[static_cast<std::size_t>(j)]));

  std::vector<TruncSeries> args;
  args.reserve(static_cast<std::size_t>(ntot));
  for (int k = 1; k <= order; ++k) {
    args.clear();
    for (int i = 0; i < nparams; ++i) args.push_back(ts_var(nparams, k, i));
    for (int j = 0; j < nu; ++j) {
      TruncSeries t(nparams, k);
      for (const auto& [e, c] : v[static_cast<std::size_t>(j)].terms)
        if (std::accumulate(e.begin(), e.end(), 0) <= k) t.terms.emplace(e, c);
      args.push_back(std::move(t));
    }
    // Residual slice at degree k, per exponent vector.
    std::map<std::vector<int>, std::vector<Rat>> rhs;
    for (int i = 0; i < m; ++i) {
      TruncSeries r = mp_eval_ts(equations[static_cast<std::size_t>(i)], args);
      for (const auto& [e, c] : ts_slice(r, k)) {
        auto it = rhs.find(e);
        if (it == rhs.end())
          it = rhs.emplace(e, std::vector<Rat>(static_cast<std::size_t>(m), Rat(0))).first;
        it->second[static_cast<std::size_t>(i)] = c;
      }
    }
    // Newton correction: v += -Jinv * residual, one monomial at a time.
    for (const auto& [e, resid] : rhs) {
      for (int j = 0; j < nu; ++j) {
        Rat delta(0);
        for (int i = 0; i < m; ++i)
          delta += jinv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * resid[static_cast<std::size_t>(i)];
        if (delta == 0) continue;
        add_term(v[static_cast<std::size_t>(j)], e, Rat(-delta));
      }
    }
  }

  // Final verification: the system vanishes identically through `order`.
  args.clear();
  for (int i = 0; i < nparams; ++i) args.push_back(ts_var(nparams, order, i));
  for (int j = 0; j < nu; ++j) args.push_back(v[static_cast<std::size_t>(j)]);
  for (const auto& g : equations)
    require(mp_eval_ts(g, args).is_zero(), errc::verification_failed,
            "solved series do not satisfy the system through the requested order");
  return v;
}

std::string ts_to_string(const TruncSeries& a, const std::vector<std::string>& names) {
  MPoly p(a.nvars);
  p.terms = a.terms;
  std::string body = mp_to_string(p, names);
  return body + " + O(deg " + std::to_string(a.order + 1) + ")";
}

} // namespace chromlag
