#include "chromlag/superpot.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <cstdint>
#include <limits>
#include <sstream>

#include "chromlag/errors.hpp"
#include "chromlag/numtheory.hpp"

namespace chromlag {

namespace {

void strip_zero_terms(MPoly& p) {
    for (auto it = p.terms.begin(); it != p.terms.end();) {
        if (it->second == 0) it = p.terms.erase(it);
        else ++it;
    }
}

// Re-embed a polynomial into a different variable space: variable k of p
// becomes variable perm[k] of the result.  Every exponent outside the image
// must already be zero where perm[k] < 0.
MPoly map_vars(const MPoly& p, const std::vector<int>& perm, int new_nvars) {
    MPoly out(new_nvars);
    for (const auto& [e, c] : p.terms) {
        std::vector<int> ne(new_nvars, 0);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (perm[k] < 0)
                fail(errc::verification_failed,
                     "internal: eliminated variable still appears");
            ne[perm[k]] += e[k];
        }
        out.terms[ne] += c;
    }
    strip_zero_terms(out);
    return out;
}

// Evaluate a rational function with rational-function arguments.
RatFunc rf_eval_rf(const RatFunc& f, const std::vector<RatFunc>& args) {
    return mp_eval_rf(f.num, args) / mp_eval_rf(f.den, args);
}

// U_k * den_k(t) - num_k(t) as a polynomial in the combined variable space
// (nu U-variables followed by nt chart parameters).
MPoly coordinate_equation(const RatFunc& f, int uindex, int nu, int nt) {
    const int n = nu + nt;
    std::vector<int> tshift(f.num.nvars);
    for (int j = 0; j < f.num.nvars; ++j) tshift[j] = nu + j;
    MPoly num = map_vars(f.num, tshift, n);
    MPoly den = map_vars(f.den, tshift, n);
    return mp_var(n, uindex) * den - num;
}

struct SeededRng {
    uint64_t state;
    explicit SeededRng(uint64_t s) : state(s ? s : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // Small nonzero rational, suitable as a generic sample point.
    Rat rat() {
        long long num = static_cast<long long>(next() % 41) - 20;
        if (num == 0) num = 21;
        long long den = 1 + static_cast<long long>(next() % 12);
        return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
    }
};

// Check that every relation vanishes at many exact sample points of the
// parameterized solution set.
void verify_relations_on_samples(const Chart& chart, const UVSystem& uv,
                                 const std::vector<MPoly>& relations,
                                 unsigned long long seed) {
    const int g = uv.genus;
    const int nt = static_cast<int>(chart.free_faces.size());
    SeededRng rng(seed);
    int successes = 0, attempts = 0;
    while (successes < 20) {
        if (++attempts > 400)
            fail(errc::degenerate_configuration,
                 "could not sample enough generic chart points");
        std::vector<Rat> tval(nt);
        for (auto& t : tval) t = rng.rat();
        std::vector<Rat> point(2 * g);
        bool ok = true;
        try {
            for (int i = 0; i < g; ++i) {
                point[i] = rf_eval(uv.u[i], tval);
                point[g + i] = rf_eval(uv.v[i], tval);
            }
        } catch (const error& e) {
            if (e.code() == errc::degenerate_configuration) { ok = false; }
            else throw;
        }
        if (!ok) continue;
        for (const MPoly& r : relations) {
            if (mp_eval(r, point) != 0)
                fail(errc::verification_failed,
                     "eliminated relation fails on a sample of the chart");
        }
        ++successes;
    }
}

// Strip any monomial factor common to all terms. Its roots lie on the
// coordinate hyperplanes, which are degenerate chart points; the surviving
// relations are re-verified on samples afterwards.
MPoly strip_common_monomial(const MPoly& p) {
    if (p.is_zero()) return p;
    std::vector<int> e(p.terms.begin()->first);
    for (const auto& [ex, c] : p.terms)
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], ex[i]);
    bool trivial = true;
    for (int v : e)
        if (v != 0) trivial = false;
    if (trivial) return p;
    MPoly out(p.nvars);
    for (const auto& [ex, c] : p.terms) {
        std::vector<int> ne(ex);
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= e[i];
        out.terms.emplace(std::move(ne), c);
    }
    return out;
}

// Sequential linear elimination of the chart parameters: each step solves
// one coordinate equation for one parameter it is linear in, allowing the
// solution to involve parameters solved in later steps; a reverse
// substitution pass then closes the triangle.
bool solve_triangular(const std::vector<MPoly>& eqs, int nu, int nt,
                      std::vector<RatFunc>& tsol) {
    const int n = nu + nt;
    tsol.assign(nt, RatFunc());
    std::vector<bool> solved(nt, false), used(eqs.size(), false);
    std::vector<int> order;
    for (int round = 0; round < nt; ++round) {
        bool progress = false;
        for (size_t k = 0; k < eqs.size() && !progress; ++k) {
            if (used[k]) continue;
            std::vector<RatFunc> args(n);
            for (int i = 0; i < n; ++i) args[i] = rf_var(n, i);
            for (int j = 0; j < nt; ++j)
                if (solved[j]) args[nu + j] = tsol[j];
            RatFunc sub = mp_eval_rf(eqs[k], args);
            if (sub.is_zero()) { used[k] = true; continue; }
            MPoly num = strip_common_monomial(sub.num);
            int pivot = -1;
            for (int j = 0; j < nt && pivot < 0; ++j) {
                if (solved[j]) continue;
                if (mp_degree_in(num, nu + j) == 1) pivot = j;
            }
            if (pivot < 0) continue;
            auto coeffs = mp_coeffs_in(num, nu + pivot);
            // coeffs[1] * t + coeffs[0] = 0
            tsol[pivot] = -(rf_poly(coeffs[0]) / rf_poly(coeffs[1]));
            solved[pivot] = true;
            used[k] = true;
            order.push_back(pivot);
            progress = true;
        }
        if (!progress) return false;
    }
    // tsol[order[r]] may reference parameters solved in later rounds.
    for (int r = nt - 2; r >= 0; --r) {
        int j = order[static_cast<size_t>(r)];
        std::vector<RatFunc> args(n);
        for (int i = 0; i < n; ++i) args[i] = rf_var(n, i);
        for (int s = r + 1; s < nt; ++s)
            args[nu + order[static_cast<size_t>(s)]] = tsol[order[static_cast<size_t>(s)]];
        tsol[j] = rf_eval_rf(tsol[j], args);
    }
    for (int j = 0; j < nt; ++j)
        for (int v = nu; v < n; ++v)
            if (mp_degree_in(tsol[j].num, v) > 0 || mp_degree_in(tsol[j].den, v) > 0)
                return false;
    return true;
}

// Resultant-based fallback eliminator for one V coordinate: eliminate all
// chart parameters from {V*den_v - num_v} u {U_k*den_k - num_k}.
MPoly eliminate_by_resultants(const std::vector<MPoly>& ueqs, const MPoly& veq,
                              int nu, int nt) {
    if (nt > 3)
        fail(errc::elimination_blowup,
             "resultant elimination limited to three chart parameters");
    std::vector<MPoly> pool = ueqs;
    pool.push_back(veq);
    for (int j = nt - 1; j >= 0; --j) {
        const int var = nu + j;
        std::vector<MPoly> with_var, without;
        for (const auto& p : pool) {
            if (mp_degree_in(p, var) > 0) with_var.push_back(p);
            else without.push_back(p);
        }
        if (with_var.empty()) { pool = without; continue; }
        // Use the smallest-degree polynomial as the pivot.
        size_t best = 0;
        for (size_t i = 1; i < with_var.size(); ++i) {
            int di = mp_degree_in(with_var[i], var);
            int db = mp_degree_in(with_var[best], var);
            if (di < db || (di == db && with_var[i].terms.size() <
                                            with_var[best].terms.size()))
                best = i;
        }
        for (size_t i = 0; i < with_var.size(); ++i) {
            if (i == best) continue;
            MPoly r = mp_resultant(with_var[i], with_var[best], var);
            if (!r.is_zero()) without.push_back(mp_make_primitive(r));
        }
        pool = without;
        if (pool.empty())
            fail(errc::elimination_blowup, "elimination emptied the system");
    }
    // Keep the relation that still involves this V coordinate.
    const int vvar = nu - 1;  // caller places V as the last U-block variable
    MPoly bestp(nu + nt);
    bool found = false;
    for (const auto& p : pool) {
        if (mp_degree_in(p, vvar) > 0 &&
            (!found || p.terms.size() < bestp.terms.size())) {
            bestp = p;
            found = true;
        }
    }
    if (!found)
        fail(errc::elimination_blowup, "no eliminated relation involves V");
    return bestp;
}

std::string monomial_name(const std::vector<int>& d) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << "*";
        os << "U" << (i + 1);
        if (d[i] != 1) os << "^" << d[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

UVSystem build_uv(const Chart& chart, const H1Presentation& pres,
                  const Phase& phase) {
    validate_phase(chart.graph, pres, phase);
    UVSystem uv;
    uv.genus = pres.genus;
    const int nt = static_cast<int>(chart.free_faces.size());
    for (int i = 0; i < pres.genus; ++i) {
        std::vector<Int> neg(phase.nu[i].size());
        for (size_t k = 0; k < neg.size(); ++k) neg[k] = -phase.nu[i][k];
        Rat us(phase.usign.empty() ? -1 : -phase.usign[i]);
        uv.u.push_back(rf_const(nt, us) * monomial_of_class(chart, phase.mu[i]));
        uv.v.push_back(rf_const(nt, Rat(-1)) * monomial_of_class(chart, neg));
    }
    return uv;
}

LagrangianRelations uv_relations(const Chart& chart, const UVSystem& uv,
                                 unsigned long long seed) {
    const int g = uv.genus;
    const int nt = static_cast<int>(chart.free_faces.size());
    if (nt != g)
        fail(errc::bad_argument, "chart parameter count differs from genus");
    const int n = g + nt;

    std::vector<MPoly> ueqs;
    for (int i = 0; i < g; ++i)
        ueqs.push_back(coordinate_equation(uv.u[i], i, g, nt));

    LagrangianRelations rel;
    rel.genus = g;

    std::vector<RatFunc> tsol;
    bool mode_a = false;
    try {
        mode_a = solve_triangular(ueqs, g, nt, tsol);
    } catch (const error&) {
        mode_a = false;
    }
    if (mode_a) {
        // Substitute the solved parameters into each V coordinate.
        for (int i = 0; i < g; ++i) {
            std::vector<int> tshift(nt);
            for (int j = 0; j < nt; ++j) tshift[j] = g + j;
            RatFunc vnum = rf_make(map_vars(uv.v[i].num, tshift, n),
                                   map_vars(uv.v[i].den, tshift, n));
            std::vector<RatFunc> args(n);
            for (int k = 0; k < n; ++k) args[k] = rf_var(n, k);
            for (int j = 0; j < nt; ++j) args[g + j] = tsol[j];
            RatFunc vi = rf_eval_rf(vnum, args);
            // vi now involves only the U variables; compress to g variables.
            std::vector<int> keep(n, -1);
            for (int k = 0; k < g; ++k) keep[k] = k;
            RatFunc compact = rf_make(map_vars(vi.num, keep, g),
                                      map_vars(vi.den, keep, g));
            rel.solved_v.push_back(compact);
            // Relation in 2g variables: V_i * den(U) - num(U).
            std::vector<int> ushift(g);
            for (int k = 0; k < g; ++k) ushift[k] = k;
            MPoly dnum = map_vars(compact.num, ushift, 2 * g);
            MPoly dden = map_vars(compact.den, ushift, 2 * g);
            MPoly r = mp_var(2 * g, g + i) * dden - dnum;
            rel.relations.push_back(mp_make_primitive(r));
        }
    } else {
        // Fallback: projection by iterated resultants, one V at a time.
        for (int i = 0; i < g; ++i) {
            // Variable space: U1..Ug, V_i, t1..tnt with V_i at index g.
            const int m = g + 1 + nt;
            std::vector<MPoly> eqs;
            for (int k = 0; k < g; ++k) {
                std::vector<int> shift(uv.u[k].num.nvars);
                for (int j = 0; j < uv.u[k].num.nvars; ++j) shift[j] = g + 1 + j;
                MPoly num = map_vars(uv.u[k].num, shift, m);
                MPoly den = map_vars(uv.u[k].den, shift, m);
                eqs.push_back(mp_var(m, k) * den - num);
            }
            std::vector<int> shift(uv.v[i].num.nvars);
            for (int j = 0; j < uv.v[i].num.nvars; ++j) shift[j] = g + 1 + j;
            MPoly vnum = map_vars(uv.v[i].num, shift, m);
            MPoly vden = map_vars(uv.v[i].den, shift, m);
            MPoly veq = mp_var(m, g) * vden - vnum;
            MPoly r = eliminate_by_resultants(eqs, veq, g + 1, nt);
            // Compress from (g+1+nt) to 2g variables: U's keep index, the
            // V slot moves to g+i, parameters must be gone.
            std::vector<int> keep(m, -1);
            for (int k = 0; k < g; ++k) keep[k] = k;
            keep[g] = g + i;
            rel.relations.push_back(
                mp_make_primitive(map_vars(r, keep, 2 * g)));
        }
    }

    verify_relations_on_samples(chart, uv, rel.relations, seed);
    return rel;
}

FramedSystem framed_system(const LagrangianRelations& rel, const IntMat& m,
                           bool flip, const std::vector<int>& signs) {
    const int g = rel.genus;
    if (m.rows != g || m.cols != g)
        fail(errc::bad_argument, "framing matrix must be genus x genus");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (m.at(i, j) != m.at(j, i))
                fail(errc::framing_not_symmetric,
                     "framing matrix must be symmetric");
    if (!signs.empty()) {
        if (static_cast<int>(signs.size()) != g)
            fail(errc::bad_argument, "sign override must have one entry per handle");
        for (int s : signs)
            if (s != 1 && s != -1)
                fail(errc::bad_argument, "sign override entries must be +-1");
    }
    FramedSystem sys;
    sys.genus = g;
    sys.framing = m;
    if (flip) sys.framing = -m;
    sys.sign.resize(g);
    std::vector<long long> mm(static_cast<size_t>(g) * g);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const Int& v = sys.framing.at(i, j);
            if (!v.fits_slong_p())
                fail(errc::too_large, "framing entry out of range");
            mm[static_cast<size_t>(i) * g + j] = v.get_si();
        }
        sys.sign[i] = signs.empty()
                          ? ((mm[static_cast<size_t>(i) * g + i] % 2 == 0) ? 1 : -1)
                          : signs[i];
    }

    for (const MPoly& r : rel.relations) {
        // Substitute U_i = s_i U'_i prod_j V_j^{M_ij}; exponents of V may go
        // negative, so collect terms first and clear the worst power.
        std::map<std::vector<int>, Rat> terms;
        std::vector<long long> minv(g, 0);
        for (const auto& [e, c] : r.terms) {
            std::vector<long long> vexp(g);
            Rat coeff = c;
            for (int j = 0; j < g; ++j) vexp[j] = e[g + j];
            for (int i = 0; i < g; ++i) {
                if (e[i] == 0) continue;
                if (sys.sign[i] < 0 && e[i] % 2 == 1) coeff = -coeff;
                for (int j = 0; j < g; ++j)
                    vexp[j] += mm[static_cast<size_t>(i) * g + j] *
                               static_cast<long long>(e[i]);
            }
            std::vector<int> ne(e);
            for (int j = 0; j < g; ++j) {
                if (vexp[j] < std::numeric_limits<int>::min() ||
                    vexp[j] > std::numeric_limits<int>::max())
                    fail(errc::too_large, "framed exponent out of range");
                ne[g + j] = static_cast<int>(vexp[j]);
                minv[j] = std::min(minv[j], vexp[j]);
            }
            terms[ne] += coeff;
        }
        MPoly out(2 * g);
        for (const auto& [e, c] : terms) {
            if (c == 0) continue;
            std::vector<int> ne(e);
            for (int j = 0; j < g; ++j) ne[g + j] -= static_cast<int>(minv[j]);
            out.terms[ne] = c;
        }
        sys.relations.push_back(mp_make_primitive(out));
    }
    return sys;
}

namespace {

// Shared driver for the two multi-cover directions: for every lattice point
// reachable as an integer multiple of a support point within the order
// bound, accumulate weight(n) * table(m/n) / n^2 over divisors n of gcd(m).
template <typename WeightFn>
std::map<std::vector<int>, Rat> multicover_transform(
    const std::map<std::vector<int>, Rat>& table, int order, WeightFn weight) {
    std::map<std::vector<int>, Rat> out;
    for (const auto& [d, c] : table) {
        (void)c;
        int deg = 0;
        for (int x : d) deg += x;
        if (deg <= 0) continue;
        for (int n = 1; n * deg <= order; ++n) {
            std::vector<int> m(d);
            for (auto& x : m) x *= n;
            if (out.count(m)) continue;
            Rat total(0);
            for (long long k : divisors(gcd_all(m))) {
                Rat w = weight(k);
                if (w == 0) continue;
                std::vector<int> base(m);
                for (auto& x : base) x = static_cast<int>(x / k);
                auto it = table.find(base);
                if (it == table.end()) continue;
                Int kz(static_cast<long>(k));
                total += w * it->second / Rat(kz * kz);
            }
            out[m] = total;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

}  // namespace

std::map<std::vector<int>, Rat> multicover_sum(
    const std::map<std::vector<int>, Rat>& a, int order) {
    return multicover_transform(a, order, [](long long) { return Rat(1); });
}

std::map<std::vector<int>, Rat> multicover_invert(
    const std::map<std::vector<int>, Rat>& k, int order) {
    return multicover_transform(k, order,
                                [](long long n) { return Rat(moebius(n)); });
}

Superpotential solve_and_integrate(const FramedSystem& sys, int order) {
    const int g = sys.genus;
    if (order < 1) fail(errc::bad_argument, "expansion order must be positive");
    Superpotential pot;
    pot.genus = g;
    pot.order = order;

    std::vector<Rat> seed(g, Rat(1));
    pot.v_series = series_solve(sys.relations, g, seed, order);
    for (int i = 0; i < g; ++i)
        pot.w_series.push_back(-ts_log(pot.v_series[i]));

    // Union of exponent supports of the w series.
    std::map<std::vector<int>, std::vector<Rat>> rows;
    for (int i = 0; i < g; ++i) {
        for (const auto& [d, c] : pot.w_series[i].terms) {
            bool zero = std::all_of(d.begin(), d.end(),
                                    [](int x) { return x == 0; });
            if (zero) continue;
            auto& row = rows[d];
            row.resize(g);
            row[i] = c;
        }
    }
    for (auto& [d, c] : rows) c.resize(g);

    // The w gradient must be closed: d_j c_i(d) = d_i c_j(d).
    for (const auto& [d, c] : rows) {
        for (int i = 0; i < g; ++i)
            for (int j = i + 1; j < g; ++j)
                if (c[i] * d[j] != c[j] * d[i])
                    fail(errc::not_closed,
                         "potential one-form is not closed at " +
                             monomial_name(d));
        int pick = -1;
        for (int i = 0; i < g; ++i)
            if (d[i] != 0) { pick = i; break; }
        Rat k = c[pick] / d[pick];
        if (k != 0) pot.kcoeff[d] = k;
    }

    // Twist sign tau_i = s_i * (-1)^{M_ii}.
    std::vector<int> tau(g);
    for (int i = 0; i < g; ++i) {
        bool odd = mpz_odd_p(sys.framing.at(i, i).get_mpz_t()) != 0;
        tau[i] = sys.sign[i] * (odd ? -1 : 1);
    }

    // Moebius inversion of the multi-cover formula, applied to the
    // tau-twisted table: with kt_d = tau^d * K_d, the inverse recovers
    // tau^m * a_m, which is what the table of counts reports.
    std::map<std::vector<int>, Rat> twisted;
    for (const auto& [d, k] : pot.kcoeff) {
        int sign = 1;
        for (int i = 0; i < g; ++i)
            if (tau[i] < 0 && d[i] % 2 == 1) sign = -sign;
        twisted[d] = Rat(sign) * k;
    }
    pot.bps = multicover_invert(twisted, order);

    pot.bps_integral = true;
    for (const auto& [m, a] : pot.bps)
        if (a.get_den() != 1) pot.bps_integral = false;

    if (pot.bps_integral) {
        std::ostringstream os;
        os << "W =";
        bool first = true;
        // Low degrees first; within a degree, U1 terms before U2 before U3.
        std::vector<std::pair<std::vector<int>, Rat>> entries(pot.bps.begin(),
                                                              pot.bps.end());
        std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
            int dx = 0, dy = 0;
            for (int v : x.first) dx += v;
            for (int v : y.first) dy += v;
            if (dx != dy) return dx < dy;
            return x.first > y.first;
        });
        for (const auto& [m, a] : entries) {
            Int num = a.get_num();
            bool neg = num < 0;
            Int mag = neg ? Int(-num) : num;
            if (first) os << (neg ? " -" : " ");
            else os << (neg ? " - " : " + ");
            if (mag != 1) os << int_str(mag) << "*";
            os << "Li2(" << monomial_name(m) << ")";
            first = false;
        }
        if (first) os << " 0";
        pot.closed_form = os.str();
    }
    return pot;
}

PipelineResult superpotential_pipeline(const RibbonGraph& g, const Phase& phase,
                                       const IntMat& framing, int order,
                                       bool flip, const std::vector<int>& gauge,
                                       const std::vector<int>& signs,
                                       unsigned long long seed) {
    PipelineResult res;
    std::optional<std::array<int, 3>> gg;
    if (!gauge.empty()) {
        if (gauge.size() != 3)
            fail(errc::bad_argument, "gauge must list exactly three faces");
        gg = std::array<int, 3>{gauge[0], gauge[1], gauge[2]};
    }
    res.chart = build_chart(g, gg);
    res.pres = h1_presentation(g);
    res.phase = phase;
    res.uv = build_uv(res.chart, res.pres, phase);
    res.relations = uv_relations(res.chart, res.uv, seed);
    res.framed = framed_system(res.relations, framing, flip, signs);
    res.pot = solve_and_integrate(res.framed, order);
    return res;
}

}  // namespace chromlag
