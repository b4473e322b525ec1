#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chromlag/errors.hpp"
#include "chromlag/ribbon.hpp"

using namespace chromlag;

namespace {

void set_cycle3(std::vector<int>& s, int a, int b, int c) {
    s[static_cast<std::size_t>(a)] = b;
    s[static_cast<std::size_t>(b)] = c;
    s[static_cast<std::size_t>(c)] = a;
}

// Two loops joined by a bridge; a valid map whose dual has loops.
RibbonGraph dumbbell_graph() {
    RibbonGraph g;
    g.name = "dumbbell";
    g.alpha = {1, 0, 3, 2, 5, 4};
    g.sigma = {0, 0, 0, 0, 0, 0};
    set_cycle3(g.sigma, 0, 2, 3);
    set_cycle3(g.sigma, 1, 4, 5);
    return g;
}

// Conjugate a graph by a random permutation of its darts.
RibbonGraph relabel(const RibbonGraph& g, std::mt19937_64& rng) {
    int n = g.ndarts();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RibbonGraph h;
    h.name = g.name + "/relabel";
    h.alpha.resize(static_cast<std::size_t>(n));
    h.sigma.resize(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        h.alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(d)])] =
            perm[static_cast<std::size_t>(g.alpha[static_cast<std::size_t>(d)])];
        h.sigma[static_cast<std::size_t>(perm[static_cast<std::size_t>(d)])] =
            perm[static_cast<std::size_t>(g.sigma[static_cast<std::size_t>(d)])];
    }
    return h;
}

errc code_of(const RibbonGraph& g) {
    try {
        validate(g);
    } catch (const error& e) {
        return e.code();
    }
    return errc::io_error;  // sentinel: no error thrown
}

}  // namespace

TEST_CASE("built-in graphs validate with the expected counts") {
    struct Row {
        const char* name;
        int v, e, f, g;
    };
    const Row rows[] = {
        {"theta", 2, 3, 3, 0},
        {"tetrahedron", 4, 6, 4, 1},
        {"prism", 6, 9, 5, 2},
        {"cube", 8, 12, 6, 3},
    };
    for (const auto& r : rows) {
        CAPTURE(r.name);
        auto og = builtin_graph(r.name);
        REQUIRE(og.has_value());
        const RibbonGraph& g = *og;
        CHECK_NOTHROW(validate(g));
        CHECK(nvertices(g) == r.v);
        CHECK(nedges(g) == r.e);
        CHECK(nfaces(g) == r.f);
        CHECK(surface_genus(g) == r.g);
        // v = 2g + 2, e = 3g + 3, f = g + 3 for a trivalent sphere map.
        CHECK(nvertices(g) == 2 * r.g + 2);
        CHECK(nedges(g) == 3 * r.g + 3);
        CHECK(nfaces(g) == r.g + 3);
        // Labels are optional; when present there must be one per face.
        if (!g.face_labels.empty())
            CHECK(g.face_labels.size() == static_cast<std::size_t>(r.f));
    }
    CHECK(!builtin_graph("dodecahedron").has_value());
    auto names = builtin_graph_names();
    CHECK(std::find(names.begin(), names.end(), "cube") != names.end());
    CHECK(names.size() == 4);
}

TEST_CASE("dart tables of the built-in graphs are pinned") {
    // These tables fix the embeddings (hence all coordinates downstream);
    // any change here is a breaking change for every golden value.
    auto th = theta_graph();
    CHECK(th.sigma == std::vector<int>{4, 3, 0, 5, 2, 1});
    auto te = tetrahedron_graph();
    CHECK(te.sigma == std::vector<int>{6, 2, 10, 4, 9, 0, 5, 11, 7, 3, 1, 8});
    auto pr = prism_graph();
    CHECK(pr.sigma ==
          std::vector<int>{2, 11, 9, 5, 1, 6, 3, 15, 17, 0, 13, 4, 8, 14, 10, 16, 7, 12});
    auto cu = cube_graph();
    CHECK(cu.sigma == std::vector<int>{7, 19, 1,  21, 3,  23, 5,  17, 16, 10, 18, 12,
                                       20, 14, 22, 8,  15, 0,  9,  2,  11, 4,  13, 6});
    for (const auto* g : {&th, &te, &pr, &cu})
        for (int d = 0; d < g->ndarts(); d += 2) {
            CHECK(g->alpha[static_cast<std::size_t>(d)] == d + 1);
            CHECK(g->alpha[static_cast<std::size_t>(d + 1)] == d);
        }
    CHECK(te.face_labels == std::vector<std::string>{"z0", "z1", "z3", "z2"});
    CHECK(pr.face_labels == std::vector<std::string>{"z1", "x", "z2", "z3", "y"});
    CHECK(cu.face_labels == std::vector<std::string>{"w", "u", "x", "y", "z", "v"});
}

TEST_CASE("cycle structure and incidence helpers") {
    auto g = tetrahedron_graph();
    auto vc = vertex_cycles(g);
    auto fc = face_cycles(g);
    REQUIRE(vc.size() == 4);
    REQUIRE(fc.size() == 4);
    for (const auto& c : vc) CHECK(c.size() == 3);
    // Normalization: every cycle starts at its smallest dart, sorted lists.
    for (const auto& c : vc) CHECK(*std::min_element(c.begin(), c.end()) == c.front());
    for (std::size_t i = 0; i + 1 < vc.size(); ++i) CHECK(vc[i].front() < vc[i + 1].front());
    for (const auto& c : fc) CHECK(*std::min_element(c.begin(), c.end()) == c.front());

    auto eod = edge_of_darts(g);
    auto ed = edge_darts(g);
    REQUIRE(ed.size() == 6);
    for (int e = 0; e < 6; ++e) {
        CHECK(ed[static_cast<std::size_t>(e)][0] < ed[static_cast<std::size_t>(e)][1]);
        CHECK(eod[static_cast<std::size_t>(ed[static_cast<std::size_t>(e)][0])] == e);
        CHECK(eod[static_cast<std::size_t>(ed[static_cast<std::size_t>(e)][1])] == e);
        CHECK(g.alpha[static_cast<std::size_t>(ed[static_cast<std::size_t>(e)][0])] ==
              ed[static_cast<std::size_t>(e)][1]);
    }
    auto vod = vertex_of_darts(g);
    auto fod = face_of_darts(g);
    for (int d = 0; d < g.ndarts(); ++d) {
        const auto& cyc = vc[static_cast<std::size_t>(vod[static_cast<std::size_t>(d)])];
        CHECK(std::find(cyc.begin(), cyc.end(), d) != cyc.end());
        const auto& fcy = fc[static_cast<std::size_t>(fod[static_cast<std::size_t>(d)])];
        CHECK(std::find(fcy.begin(), fcy.end(), d) != fcy.end());
    }
    CHECK(face_label(g, 0) == "z0");
    RibbonGraph bare = g;
    bare.face_labels.clear();
    CHECK(face_label(bare, 2) == "f2");
}

TEST_CASE("validation rejects malformed maps with typed errors") {
    // alpha with a fixed point.
    RibbonGraph g1 = theta_graph();
    g1.face_labels.clear();
    g1.alpha[0] = 0;
    g1.alpha[1] = 1;
    CHECK(code_of(g1) == errc::malformed_permutation);

    // alpha not an involution (not even a permutation pairing).
    RibbonGraph g2 = theta_graph();
    g2.face_labels.clear();
    g2.alpha = {2, 3, 1, 0, 5, 4};
    CHECK(code_of(g2) == errc::malformed_permutation);

    // sigma out of range.
    RibbonGraph g3 = theta_graph();
    g3.face_labels.clear();
    g3.sigma[2] = 17;
    CHECK(code_of(g3) == errc::malformed_permutation);

    // A vertex of degree 2: merge two theta vertices into rotations of
    // lengths 2 and 4 is impossible with 6 darts; instead build a square
    // with doubled edges (every vertex degree 2).
    RibbonGraph g4;
    g4.alpha = {1, 0, 3, 2};
    g4.sigma = {2, 3, 0, 1};
    CHECK(code_of(g4) == errc::not_cubic);

    // Reversing one vertex rotation of the tetrahedron leaves a cubic map
    // that is no longer a sphere map.
    RibbonGraph g5 = tetrahedron_graph();
    g5.face_labels.clear();
    set_cycle3(g5.sigma, 0, 5, 6);
    CHECK(code_of(g5) == errc::not_planar);

    // Two disjoint thetas: disconnected.
    RibbonGraph g6;
    auto th = theta_graph();
    g6.alpha = th.alpha;
    g6.sigma = th.sigma;
    for (int d = 0; d < 6; ++d) {
        g6.alpha.push_back(th.alpha[static_cast<std::size_t>(d)] + 6);
        g6.sigma.push_back(th.sigma[static_cast<std::size_t>(d)] + 6);
    }
    CHECK_THROWS_AS(validate(g6), error);

    // Odd dart count cannot pair into edges.
    RibbonGraph g7;
    g7.alpha = {1, 0, 2};
    g7.sigma = {0, 1, 2};
    CHECK(code_of(g7) == errc::malformed_permutation);
}

TEST_CASE("the dumbbell is a valid sphere map distinct from theta") {
    auto d = dumbbell_graph();
    CHECK_NOTHROW(validate(d));
    CHECK(nvertices(d) == 2);
    CHECK(nedges(d) == 3);
    CHECK(nfaces(d) == 3);
    CHECK(surface_genus(d) == 0);
    CHECK(!isomorphic(d, theta_graph()));
}

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(314159);
    for (const char* name : {"theta", "tetrahedron", "prism", "cube"}) {
        CAPTURE(name);
        auto g = *builtin_graph(name);
        auto canon = canonical_form(g);
        CHECK_NOTHROW(validate(canon));
        CHECK(canonical_form(canon).alpha == canon.alpha);
        CHECK(canonical_form(canon).sigma == canon.sigma);
        for (int trial = 0; trial < 6; ++trial) {
            RibbonGraph h = relabel(g, rng);
            CHECK(canonical_form(h).alpha == canon.alpha);
            CHECK(canonical_form(h).sigma == canon.sigma);
            CHECK(isomorphic(g, h));
        }
    }
    auto d = dumbbell_graph();
    for (int trial = 0; trial < 6; ++trial) {
        RibbonGraph h = relabel(d, rng);
        CHECK(isomorphic(d, h));
        CHECK(!isomorphic(h, theta_graph()));
    }
    CHECK(!isomorphic(theta_graph(), tetrahedron_graph()));
    CHECK(!isomorphic(prism_graph(), cube_graph()));
}

TEST_CASE("blowing up a vertex inserts an exceptional triangle") {
    for (const char* name : {"theta", "tetrahedron", "prism", "cube"}) {
        CAPTURE(name);
        auto g = *builtin_graph(name);
        int v0 = nvertices(g), e0 = nedges(g), f0 = nfaces(g);
        for (int v = 0; v < v0; ++v) {
            auto res = blow_up(g, v);
            CHECK_NOTHROW(validate(res.graph));
            CHECK(nvertices(res.graph) == v0 + 2);
            CHECK(nedges(res.graph) == e0 + 3);
            CHECK(nfaces(res.graph) == f0 + 1);
            CHECK(surface_genus(res.graph) == surface_genus(g) + 1);
            CHECK(res.vertex == v);
            // The exceptional edges are the three appended ones.
            for (int i = 0; i < 3; ++i) {
                CHECK(res.exceptional_edges[static_cast<std::size_t>(i)] == e0 + i);
                CHECK(res.opposite[static_cast<std::size_t>(i)] == e0 + (i + 1) % 3);
            }
            // Old darts keep their indices; the face of every old dart at an
            // untouched corner is preserved as a set of old darts.
            CHECK(res.lattice_map.rows == e0 + 3);
            CHECK(res.lattice_map.cols == e0);
        }
    }
    CHECK_THROWS_AS(blow_up(theta_graph(), 2), error);
    try {
        blow_up(theta_graph(), 5);
    } catch (const error& e) {
        CHECK(e.code() == errc::vertex_out_of_range);
    }
}

TEST_CASE("blow-up of theta is the tetrahedron and of the tetrahedron the prism") {
    auto th = theta_graph();
    for (int v = 0; v < 2; ++v) CHECK(isomorphic(blow_up(th, v).graph, tetrahedron_graph()));
    auto te = tetrahedron_graph();
    for (int v = 0; v < 4; ++v) CHECK(isomorphic(blow_up(te, v).graph, prism_graph()));
    // Names record the construction.
    CHECK(blow_up(th, 0).graph.name == "theta/blowup0");
}

TEST_CASE("the edge move is an involution up to isomorphism") {
    for (const char* name : {"tetrahedron", "prism", "cube"}) {
        CAPTURE(name);
        auto g = *builtin_graph(name);
        for (int e = 0; e < nedges(g); ++e) {
            auto h = edge_move(g, e);
            CHECK_NOTHROW(validate(h));
            CHECK(nedges(h) == nedges(g));
            CHECK(nvertices(h) == nvertices(g));
            CHECK(nfaces(h) == nfaces(g));
            auto back = edge_move(h, e);
            CHECK(isomorphic(back, g));
        }
    }
    // Loop edges cannot slide.
    auto d = dumbbell_graph();
    CHECK_THROWS_AS(edge_move(d, 1), error);
    try {
        edge_move(d, 1);
    } catch (const error& e) {
        CHECK(e.code() == errc::loop_edge);
    }
    CHECK_THROWS_AS(edge_move(d, 99), error);
}

TEST_CASE("moving an edge of the prism can change the embedding type") {
    // The move preserves validity on every edge but need not preserve the
    // isomorphism type; on the prism at least one edge changes it.
    auto g = prism_graph();
    bool changed = false;
    for (int e = 0; e < nedges(g); ++e) {
        auto h = edge_move(g, e);
        if (!isomorphic(h, g)) changed = true;
    }
    CHECK(changed);
}
