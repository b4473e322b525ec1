#include "chromlag/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chromlag/chromatic.hpp"
#include "chromlag/errors.hpp"
#include "chromlag/graphio.hpp"
#include "chromlag/homlattice.hpp"
#include "chromlag/periods.hpp"
#include "chromlag/ribbon.hpp"
#include "chromlag/superpot.hpp"

namespace chromlag {

namespace {

using nlohmann::json;

// Flag values that fail to parse are usage errors (exit 2), unlike domain
// errors (exit 1) raised once the computation is underway.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr unsigned long long kDefaultSeed = 12345;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write '" + path + "'");
    out << text;
    if (!out) fail(errc::io_error, "write to '" + path + "' failed");
}

RibbonGraph load_graph(const std::string& src) {
    if (auto g = builtin_graph(src)) return *g;
    std::ifstream probe(src);
    if (!probe)
        fail(errc::io_error, "'" + src + "' is neither a built-in graph (" +
                                 join(builtin_graph_names(), ", ") +
                                 ") nor a readable file");
    return graph_from_json(read_file(src));
}

// Phase presets are named after the family they parameterize; each maps to
// the built-in phase of the corresponding graph.
Phase load_phase(const std::string& src) {
    std::string key = src;
    if (src == "tetra-p") key = "tetrahedron";
    else if (src == "prism-M") key = "prism";
    else if (src == "cube-std") key = "cube";
    if (auto ph = builtin_phase(key)) return *ph;
    std::ifstream probe(src);
    if (!probe)
        fail(errc::io_error,
             "'" + src +
                 "' is neither a built-in phase (tetra-p, prism-M, cube-std) nor a "
                 "readable file");
    return phase_from_json(read_file(src));
}

Phase default_phase(const RibbonGraph& g) {
    if (auto ph = builtin_phase(g.name)) return *ph;
    fail(errc::bad_argument,
         "no built-in phase for graph '" + (g.name.empty() ? "<unnamed>" : g.name) +
             "'; pass --phase <file|preset>");
}

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw usage_error(what + " must be an integer, got '" + s + "'");
    }
}

IntMat parse_framing(const std::string& text, int genus) {
    IntMat m(genus, genus);
    if (text.empty() || text == "zero") return m;
    json j = json::parse(text, nullptr, false);
    if (j.is_number_integer()) {
        if (genus != 1)
            throw usage_error("a bare integer framing needs a genus-1 graph");
        m.at(0, 0) = Int(static_cast<long>(j.get<long long>()));
        return m;
    }
    if (j.is_discarded() || !j.is_array())
        throw usage_error(
            "framing must be 'zero', an integer (genus 1), or a matrix like "
            "\"[[0,1],[1,0]]\"");
    if (static_cast<int>(j.size()) != genus)
        throw usage_error("framing must be " + std::to_string(genus) + "x" +
                          std::to_string(genus) + " for this graph");
    for (int i = 0; i < genus; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != genus)
            throw usage_error("framing must be " + std::to_string(genus) + "x" +
                              std::to_string(genus) + " for this graph");
        for (int k = 0; k < genus; ++k) {
            const auto& v = row[static_cast<std::size_t>(k)];
            if (!v.is_number_integer())
                throw usage_error("framing entries must be integers");
            m.at(i, k) = Int(static_cast<long>(v.get<long long>()));
        }
    }
    return m;
}

std::vector<int> parse_signs(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "1" || item == "+1") out.push_back(1);
        else if (item == "-1") out.push_back(-1);
        else throw usage_error("signs must be a comma list of +1/-1, got '" + item + "'");
    }
    if (out.empty()) throw usage_error("signs must name at least one entry");
    return out;
}

std::optional<std::array<int, 3>> parse_gauge(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<long long> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        vals.push_back(parse_ll(item, "gauge entry"));
    if (vals.size() != 3)
        throw usage_error("gauge must list exactly three face indices, e.g. 0,1,2");
    return std::array<int, 3>{static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                              static_cast<int>(vals[2])};
}

// ---------- JSON helpers ----------

json jint(const Int& n) {
    if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
    return int_str(n);
}

json jmat(const IntMat& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(jint(m.at(r, c)));
        out.push_back(row);
    }
    return out;
}

json jpoly(const IntPoly& p, const std::string& var) {
    json coeff = json::array();
    for (const Int& c : p.coeff) coeff.push_back(jint(c));
    return json{{"text", to_string(p, var)}, {"coeff_ascending", coeff}};
}

std::string key_of(const std::vector<int>& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out;
}

std::vector<std::string> uv_names(int genus) {
    std::vector<std::string> names;
    for (int i = 1; i <= genus; ++i) names.push_back("U" + std::to_string(i));
    for (int i = 1; i <= genus; ++i) names.push_back("V" + std::to_string(i));
    return names;
}

// ---------- output plumbing ----------

struct Opts {
    std::string graph, phase, framing = "zero", signs, gauge, q, out;
    std::string seed_str;
    int order = 10;
    long long vertex = -1, edge = -1;
    bool flip = false, json_out = false, brute = false;
};

int finish(const json& report, const Opts& o, std::ostream& out,
           const std::string& human) {
    if (o.json_out) out << report.dump(2) << "\n";
    else out << human;
    if (!o.out.empty()) write_file(o.out, report.dump(2) + "\n");
    return 0;
}

std::string graph_banner(const RibbonGraph& g) {
    std::ostringstream os;
    os << "graph: " << (g.name.empty() ? "<unnamed>" : g.name) << " (v=" << nvertices(g)
       << ", e=" << nedges(g) << ", f=" << nfaces(g) << ", genus=" << surface_genus(g)
       << ")\n";
    return os.str();
}

// ---------- subcommands ----------

int cmd_validate(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    std::ostringstream os;
    os << "{v:" << nvertices(g) << ",e:" << nedges(g) << ",f:" << nfaces(g)
       << ",g:" << surface_genus(g) << "}\n";
    json r{{"name", g.name},
           {"v", nvertices(g)},
           {"e", nedges(g)},
           {"f", nfaces(g)},
           {"g", surface_genus(g)}};
    return finish(r, o, out, os.str());
}

int cmd_chromatic(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    IntPoly chrom = chromatic_polynomial(dual_graph(g));
    IntPoly mod = moduli_count_poly(g);
    std::ostringstream os;
    os << graph_banner(g);
    os << "dual chromatic polynomial: " << to_string(chrom, "q") << "\n";
    os << "moduli count polynomial:   " << to_string(mod, "q") << "\n";
    json r{{"graph", g.name},
           {"dual_chromatic", jpoly(chrom, "q")},
           {"moduli_poly", jpoly(mod, "q")}};
    return finish(r, o, out, os.str());
}

int cmd_count(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    if (o.q.empty()) throw usage_error("count requires --q <prime power>");
    Int q;
    try {
        q = int_parse(o.q);
    } catch (const error&) {
        throw usage_error("--q must be an integer, got '" + o.q + "'");
    }
    Int n = moduli_count(g, q);
    std::ostringstream os;
    os << graph_banner(g);
    os << "count(q=" << int_str(q) << ") = " << int_str(n) << "\n";
    json r{{"graph", g.name}, {"q", int_str(q)}, {"count", int_str(n)}};
    if (o.brute) {
        if (!q.fits_slong_p()) fail(errc::too_large, "--brute requires a small q");
        Int b = brute_force_moduli_count(g, q.get_si());
        os << "brute-force enumeration = " << int_str(b) << "\n";
        r["brute_force"] = int_str(b);
        if (b != n)
            fail(errc::verification_failed,
                 "brute-force enumeration disagrees with the polynomial count");
        os << "agreement: yes\n";
    }
    return finish(r, o, out, os.str());
}

int cmd_fillability(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    FillabilityReport rep = fillability_obstruction(g);
    IntPoly chrom = chromatic_polynomial(dual_graph(g));
    std::ostringstream os;
    os << graph_banner(g);
    os << "dual chromatic polynomial: " << to_string(chrom, "q") << "\n";
    os << "moduli count polynomial:   " << to_string(rep.moduli_poly, "q") << "\n";
    os << "shape: degree " << rep.moduli_poly.degree() << " (genus " << rep.genus
       << "), " << (rep.shape_ok ? "monic" : "NOT monic of the expected degree") << "\n";
    os << "subleading coefficient: " << int_str(rep.subleading)
       << "; an exact torus filling forces " << int_str(rep.torus_subleading) << "\n";
    os << "verdict: "
       << (rep.obstructed ? "obstructed (no exact torus filling)" : "not obstructed")
       << "\n";
    json r{{"graph", g.name},
           {"genus", rep.genus},
           {"dual_chromatic", jpoly(chrom, "q")},
           {"moduli_poly", jpoly(rep.moduli_poly, "q")},
           {"shape_ok", rep.shape_ok},
           {"subleading", jint(rep.subleading)},
           {"torus_subleading", jint(rep.torus_subleading)},
           {"obstructed", rep.obstructed}};
    return finish(r, o, out, os.str());
}

int cmd_lattice(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    H1Presentation pres = h1_presentation(g);
    std::ostringstream os;
    os << graph_banner(g);
    os << "edge lattice rank: " << nedges(g) << "\n";
    os << "face relations: " << pres.relations.rows << " rows, invariant factors 1 x "
       << (pres.relations.rows - 1) << ", 2 x 1\n";
    os << "free quotient rank: " << 2 * pres.genus << "\n";
    os << "basis rows (edge coordinates):\n";
    for (int r = 0; r < pres.basis.rows; ++r) {
        os << "  b" << r + 1 << " = [";
        for (int c = 0; c < pres.basis.cols; ++c)
            os << (c ? "," : "") << int_str(pres.basis.at(r, c));
        os << "]\n";
    }
    os << "induced pairing (determinant 1):\n";
    for (int r = 0; r < pres.induced.rows; ++r) {
        os << "  [";
        for (int c = 0; c < pres.induced.cols; ++c)
            os << (c ? "," : "") << int_str(pres.induced.at(r, c));
        os << "]\n";
    }
    os << "torsion: one order-two class, representative [";
    for (int c = 0; c < pres.torsion.cols; ++c)
        os << (c ? "," : "") << int_str(pres.torsion.at(0, c));
    os << "]\n";
    json r{{"graph", g.name},
           {"genus", pres.genus},
           {"edge_form", jmat(pres.edge_form)},
           {"relations", jmat(pres.relations)},
           {"basis", jmat(pres.basis)},
           {"induced", jmat(pres.induced)},
           {"torsion", jmat(pres.torsion)}};
    if (!o.phase.empty()) {
        Phase ph = load_phase(o.phase);
        int eps = validate_phase(g, pres, ph);
        os << "phase '" << ph.name << "': valid, epsilon = " << eps << "\n";
        r["phase"] = json{{"name", ph.name}, {"epsilon", eps}};
    }
    return finish(r, o, out, os.str());
}

int cmd_periods(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    Chart chart = build_chart(g, parse_gauge(o.gauge));
    std::ostringstream os;
    os << graph_banner(g);
    const char* target[3] = {"0", "1", "infinity"};
    os << "gauge:";
    for (int i = 0; i < 3; ++i)
        os << (i ? ", " : " ") << face_label(g, chart.gauge[static_cast<std::size_t>(i)])
           << " -> " << target[i];
    os << "\n";
    if (!gauge_pairwise_adjacent(g, chart.gauge))
        os << "note: gauge faces are not pairwise adjacent; the chart covers a dense "
              "open subset\n";
    os << "variables:";
    for (std::size_t i = 0; i < chart.free_faces.size(); ++i)
        os << (i ? ", " : " ") << chart.var_names[i] << " (face "
           << face_label(g, chart.free_faces[i]) << ")";
    os << "\n";
    auto ed = edge_darts(g);
    auto fod = face_of_darts(g);
    json xs = json::array();
    for (std::size_t e = 0; e < chart.x.size(); ++e) {
        std::string s = rf_to_string(chart.x[e], chart.var_names);
        os << "x[" << e << "] (" << face_label(g, fod[static_cast<std::size_t>(ed[e][0])])
           << "|" << face_label(g, fod[static_cast<std::size_t>(ed[e][1])]) << ") = " << s
           << "\n";
        xs.push_back(s);
    }
    json r{{"graph", g.name},
           {"gauge", json::array({chart.gauge[0], chart.gauge[1], chart.gauge[2]})},
           {"variables", chart.var_names},
           {"x", xs}};
    return finish(r, o, out, os.str());
}

unsigned long long resolve_seed(const Opts& o) {
    if (!o.seed_str.empty()) {
        long long v = parse_ll(o.seed_str, "--seed");
        if (v < 0) throw usage_error("--seed must be nonnegative");
        return static_cast<unsigned long long>(v);
    }
    if (const char* env = std::getenv("CHROMLAG_SEED")) {
        std::string s(env);
        if (!s.empty()) {
            long long v = parse_ll(s, "CHROMLAG_SEED");
            if (v < 0) throw usage_error("CHROMLAG_SEED must be nonnegative");
            return static_cast<unsigned long long>(v);
        }
    }
    return kDefaultSeed;
}

json pipeline_report(const PipelineResult& pr, unsigned long long seed) {
    json kmap = json::object();
    for (const auto& [d, k] : pr.pot.kcoeff) kmap[key_of(d)] = rat_str(k);
    json amap = json::object();
    for (const auto& [d, a] : pr.pot.bps) {
        if (a.get_den() == 1) amap[key_of(d)] = jint(a.get_num());
        else amap[key_of(d)] = rat_str(a);
    }
    json rels = json::array();
    auto names = uv_names(pr.relations.genus);
    for (const MPoly& rel : pr.relations.relations)
        rels.push_back(mp_to_string(rel, names));
    json frels = json::array();
    for (const MPoly& rel : pr.framed.relations)
        frels.push_back(mp_to_string(rel, names));
    json sgn = json::array();
    for (int s : pr.framed.sign) sgn.push_back(s);
    return json{{"graph", pr.chart.graph.name},
                {"genus", pr.relations.genus},
                {"phase", pr.phase.name},
                {"framing", jmat(pr.framed.framing)},
                {"signs", sgn},
                {"order", pr.pot.order},
                {"seed", seed},
                {"relations", rels},
                {"framed_relations", frels},
                {"K", kmap},
                {"a", amap},
                {"verdict", pr.pot.bps_integral ? "integral" : "non-integral"},
                {"li2_form", pr.pot.closed_form}};
}

PipelineResult run_pipeline(const Opts& o, unsigned long long seed) {
    RibbonGraph g = load_graph(o.graph);
    Phase ph = o.phase.empty() ? default_phase(g) : load_phase(o.phase);
    IntMat m = parse_framing(o.framing, surface_genus(g));
    std::vector<int> signs = parse_signs(o.signs);
    auto gauge = parse_gauge(o.gauge);
    std::vector<int> gvec;
    if (gauge) gvec = {(*gauge)[0], (*gauge)[1], (*gauge)[2]};
    return superpotential_pipeline(g, ph, m, o.order, o.flip, gvec, signs, seed);
}

void pipeline_banner(const PipelineResult& pr, const Opts& o, unsigned long long seed,
                     std::ostringstream& os) {
    os << graph_banner(pr.chart.graph);
    os << "phase: " << (pr.phase.name.empty() ? "<custom>" : pr.phase.name) << "\n";
    os << "framing:";
    for (int r = 0; r < pr.framed.framing.rows; ++r) {
        os << " [";
        for (int c = 0; c < pr.framed.framing.cols; ++c)
            os << (c ? "," : "") << int_str(pr.framed.framing.at(r, c));
        os << "]";
    }
    if (o.flip) os << " (flipped)";
    os << "\n";
    os << "signs:";
    for (int s : pr.framed.sign) os << " " << (s > 0 ? "+1" : "-1");
    os << (o.signs.empty() ? " (default)" : " (override)") << "\n";
    os << "order: " << pr.pot.order << "\n";
    os << "seed: " << seed << "\n";
}

void suggest_toggle(const PipelineResult& pr, const Opts& o, std::ostringstream& os) {
    if (!pr.pot.bps_integral) {
        os << "hint: non-integral counts usually mean the opposite handedness or sign "
              "convention; retry with "
           << (o.flip ? "" : "--flip-framing, ") << "--signs, or the negated framing\n";
    }
}

int cmd_superpotential(const Opts& o, std::ostream& out) {
    unsigned long long seed = resolve_seed(o);
    PipelineResult pr = run_pipeline(o, seed);
    std::ostringstream os;
    pipeline_banner(pr, o, seed, os);
    auto names = uv_names(pr.relations.genus);
    os << "relations (verified on random chart samples):\n";
    for (const MPoly& rel : pr.relations.relations)
        os << "  " << mp_to_string(rel, names) << " = 0\n";
    bool zero_framing = pr.framed.framing.is_zero();
    if (!zero_framing) {
        os << "framed relations (U renamed to the framed coordinate):\n";
        for (const MPoly& rel : pr.framed.relations)
            os << "  " << mp_to_string(rel, names) << " = 0\n";
    }
    os << "K coefficients (nonzero, total degree <= " << pr.pot.order << "):\n";
    for (const auto& [d, k] : pr.pot.kcoeff)
        os << "  K[" << key_of(d) << "] = " << rat_str(k) << "\n";
    os << "BPS numbers:\n";
    for (const auto& [d, a] : pr.pot.bps)
        os << "  a[" << key_of(d) << "] = " << rat_str(a) << "\n";
    os << "verdict: " << (pr.pot.bps_integral ? "integral" : "non-integral") << "\n";
    if (pr.pot.bps_integral && !pr.pot.closed_form.empty())
        os << pr.pot.closed_form << "\n";
    suggest_toggle(pr, o, os);
    return finish(pipeline_report(pr, seed), o, out, os.str());
}

int cmd_bps(const Opts& o, std::ostream& out) {
    unsigned long long seed = resolve_seed(o);
    PipelineResult pr = run_pipeline(o, seed);
    std::ostringstream os;
    pipeline_banner(pr, o, seed, os);
    os << "BPS numbers:\n";
    for (const auto& [d, a] : pr.pot.bps)
        os << "  a[" << key_of(d) << "] = " << rat_str(a) << "\n";
    os << "verdict: " << (pr.pot.bps_integral ? "integral" : "non-integral") << "\n";
    suggest_toggle(pr, o, os);
    return finish(pipeline_report(pr, seed), o, out, os.str());
}

int cmd_blowup(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    if (o.vertex < 0) throw usage_error("blowup requires --vertex <index>");
    BlowUpResult res = blow_up(g, static_cast<int>(o.vertex));
    std::string doc = graph_to_json(res.graph);
    std::ostringstream os;
    os << graph_banner(g);
    os << "blow-up at vertex " << res.vertex << ": v=" << nvertices(res.graph)
       << ", e=" << nedges(res.graph) << ", f=" << nfaces(res.graph)
       << ", genus=" << surface_genus(res.graph) << "\n";
    os << "exceptional edges: " << res.exceptional_edges[0] << ", "
       << res.exceptional_edges[1] << ", " << res.exceptional_edges[2] << "\n";
    if (o.out.empty()) os << doc;
    else os << "graph document written to " << o.out << "\n";
    json r{{"vertex", res.vertex},
           {"base_darts",
            json::array({res.base_darts[0], res.base_darts[1], res.base_darts[2]})},
           {"exceptional_edges",
            json::array({res.exceptional_edges[0], res.exceptional_edges[1],
                         res.exceptional_edges[2]})},
           {"lattice_map", jmat(res.lattice_map)},
           {"graph", json::parse(doc)}};
    if (o.json_out) out << r.dump(2) << "\n";
    else out << os.str();
    if (!o.out.empty()) write_file(o.out, doc);
    return 0;
}

int cmd_edgemove(const Opts& o, std::ostream& out) {
    RibbonGraph g = load_graph(o.graph);
    if (o.edge < 0) throw usage_error("edgemove requires --edge <index>");
    RibbonGraph moved = edge_move(g, static_cast<int>(o.edge));
    std::string doc = graph_to_json(moved);
    std::ostringstream os;
    os << graph_banner(g);
    os << "edge move at edge " << o.edge << " done\n";
    if (o.out.empty()) os << doc;
    else os << "graph document written to " << o.out << "\n";
    json r{{"edge", o.edge}, {"graph", json::parse(doc)}};
    if (o.json_out) out << r.dump(2) << "\n";
    else out << os.str();
    if (!o.out.empty()) write_file(o.out, doc);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"chromatic-Lagrangian invariants of cubic planar maps"};
    app.name("chromlag");

    std::string cmd;
    auto add_common = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->callback([&cmd, name]() { cmd = name; });
        sub->add_option("--graph", o.graph,
                        "built-in graph (theta, tetrahedron, prism, cube) or a JSON "
                        "graph file")
            ->required();
        sub->add_flag("--json", o.json_out, "emit the machine-readable report");
        sub->add_option("--out", o.out, "also write the report to this file");
        return sub;
    };

    add_common("validate", "check a graph and print v, e, f, genus");
    add_common("chromatic", "chromatic polynomial of the dual and the moduli count polynomial");
    CLI::App* count = add_common("count", "moduli points over one finite field");
    count->add_option("--q", o.q, "field size (prime power)");
    count->add_flag("--brute", o.brute, "cross-check against direct enumeration");
    add_common("fillability", "torus-filling obstruction from the count polynomial");
    CLI::App* lattice = add_common("lattice", "edge lattice, pairing, basis, and torsion");
    lattice->add_option("--phase", o.phase, "phase to validate (preset or file)");
    CLI::App* periods = add_common("periods", "exact edge coordinates on a chart");
    periods->add_option("--gauge", o.gauge, "three face indices pinned to 0,1,infinity (a,b,c)");
    auto add_pipeline = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = add_common(name, desc);
        sub->add_option("--phase", o.phase, "phase preset (tetra-p, prism-M, cube-std) or file");
        sub->add_option("--framing", o.framing, "'zero', an integer (genus 1), or \"[[..],[..]]\"");
        sub->add_option("--signs", o.signs, "override the default framing signs, e.g. -1,+1");
        sub->add_flag("--flip-framing", o.flip, "use the opposite handedness (negate the matrix)");
        sub->add_option("--gauge", o.gauge, "chart gauge faces a,b,c");
        sub->add_option("--order", o.order, "series truncation order (total degree)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed_str, "seed for randomized verification (default: CHROMLAG_SEED or 12345)");
        return sub;
    };
    add_pipeline("superpotential", "framed disk potential, K coefficients, and BPS integers");
    add_pipeline("bps", "BPS integers for a framed phase");
    CLI::App* blowup = add_common("blowup", "replace a vertex by a triangle; emits the new graph");
    blowup->add_option("--vertex", o.vertex, "vertex index to blow up");
    CLI::App* edgemove = add_common("edgemove", "slide neighbors across an edge; emits the new graph");
    edgemove->add_option("--edge", o.edge, "edge index to move");
    app.require_subcommand(1);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd == "validate") return cmd_validate(o, out);
        if (cmd == "chromatic") return cmd_chromatic(o, out);
        if (cmd == "count") return cmd_count(o, out);
        if (cmd == "fillability") return cmd_fillability(o, out);
        if (cmd == "lattice") return cmd_lattice(o, out);
        if (cmd == "periods") return cmd_periods(o, out);
        if (cmd == "superpotential") return cmd_superpotential(o, out);
        if (cmd == "bps") return cmd_bps(o, out);
        if (cmd == "blowup") return cmd_blowup(o, out);
        if (cmd == "edgemove") return cmd_edgemove(o, out);
        err << "usage: no subcommand selected\n";
        return 2;
    } catch (const usage_error& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace chromlag
