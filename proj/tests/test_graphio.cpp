#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chromlag/errors.hpp"
#include "chromlag/graphio.hpp"
#include "chromlag/homlattice.hpp"
#include "chromlag/ribbon.hpp"

using namespace chromlag;
using nlohmann::json;

namespace {

// A structurally valid document to mutate in the error tests.
json theta_doc() {
    json j;
    j["name"] = "theta";
    j["darts"] = 6;
    j["alpha"] = {1, 0, 3, 2, 5, 4};
    j["sigma"] = {4, 3, 0, 5, 2, 1};
    j["face_labels"] = {"a", "b", "c"};
    return j;
}

std::optional<errc> code_of(const std::string& text) {
    try {
        graph_from_json(text);
    } catch (const error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("graph serialization round-trips every built-in graph") {
    for (const auto& name : builtin_graph_names()) {
        CAPTURE(name);
        auto g = *builtin_graph(name);
        std::string text = graph_to_json(g);
        RibbonGraph back = graph_from_json(text);
        CHECK(back.name == g.name);
        CHECK(back.alpha == g.alpha);
        CHECK(back.sigma == g.sigma);
        CHECK(back.face_labels == g.face_labels);
        // Deterministic output: a second pass is byte-identical.
        CHECK(graph_to_json(back) == text);
        CHECK(isomorphic(back, g));
    }
}

TEST_CASE("graph serialization is stable under JSON reformatting") {
    auto g = *builtin_graph("prism");
    std::string text = graph_to_json(g);
    // Reformat through a generic parser (different indentation, same data).
    std::string squashed = json::parse(text).dump();
    RibbonGraph back = graph_from_json(squashed);
    CHECK(graph_to_json(back) == text);
}

TEST_CASE("optional graph fields") {
    json j = theta_doc();
    j.erase("name");
    j.erase("face_labels");
    RibbonGraph g = graph_from_json(j.dump());
    CHECK(g.name.empty());
    CHECK(g.face_labels.empty());
    CHECK(nfaces(g) == 3);
}

TEST_CASE("graph documents with missing or inconsistent structure are rejected") {
    CHECK(code_of("{ not json") == errc::io_error);
    CHECK(code_of("[1, 2, 3]") == errc::io_error);
    CHECK(code_of("42") == errc::io_error);

    json j = theta_doc();
    j.erase("darts");
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j["darts"] = "six";
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j["darts"] = 8;
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j.erase("alpha");
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j.erase("sigma");
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j["alpha"][2] = "x";
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j["face_labels"] = 7;
    CHECK(code_of(j.dump()) == errc::io_error);

    j = theta_doc();
    j["face_labels"][0] = 3;
    CHECK(code_of(j.dump()) == errc::io_error);
}

TEST_CASE("combinatorial validation runs on parsed graphs") {
    // alpha with a fixed point is a permutation problem, not an I/O problem.
    json j = theta_doc();
    j["alpha"] = {0, 1, 3, 2, 5, 4};
    CHECK(code_of(j.dump()) == errc::malformed_permutation);

    // A dart index out of range.
    j = theta_doc();
    j["sigma"][0] = 17;
    CHECK(code_of(j.dump()) == errc::malformed_permutation);
}

TEST_CASE("phase serialization round-trips with and without usign") {
    for (const char* name : {"tetrahedron", "prism", "cube"}) {
        CAPTURE(name);
        auto ph = *builtin_phase(name);
        std::string text = phase_to_json(ph);
        Phase back = phase_from_json(text);
        CHECK(back.name == ph.name);
        CHECK(back.nu == ph.nu);
        CHECK(back.mu == ph.mu);
        CHECK(back.usign == ph.usign);
        CHECK(phase_to_json(back) == text);
        // The restored phase still validates against its graph.
        auto g = *builtin_graph(name);
        auto pres = h1_presentation(g);
        CHECK_NOTHROW(validate_phase(g, pres, back));
    }
    // usign is omitted from the document when empty.
    auto tp = *builtin_phase("tetrahedron");
    CHECK(tp.usign.empty());
    CHECK(phase_to_json(tp).find("usign") == std::string::npos);
    auto cp = *builtin_phase("cube");
    CHECK(!cp.usign.empty());
    CHECK(phase_to_json(cp).find("usign") != std::string::npos);
}

TEST_CASE("phase documents with bad structure are rejected") {
    auto phase_code = [](const std::string& text) -> std::optional<errc> {
        try {
            phase_from_json(text);
        } catch (const error& e) {
            return e.code();
        }
        return std::nullopt;
    };
    CHECK(phase_code("nope") == errc::io_error);

    json j = json::parse(phase_to_json(*builtin_phase("prism")));
    json k = j;
    k.erase("nu");
    CHECK(phase_code(k.dump()) == errc::io_error);

    k = j;
    k["mu"] = 5;
    CHECK(phase_code(k.dump()) == errc::io_error);

    k = j;
    k["nu"][0] = "row";
    CHECK(phase_code(k.dump()) == errc::io_error);

    k = j;
    k["nu"][0][0] = 1.5;
    CHECK(phase_code(k.dump()) == errc::io_error);

    k = j;
    k["usign"] = {"+"};
    CHECK(phase_code(k.dump()) == errc::io_error);
}

TEST_CASE("phase entries beyond the integer range of JSON are refused") {
    Phase ph;
    ph.name = "huge";
    ph.nu = {{Int("123456789012345678901234567890")}};
    ph.mu = {{Int(1)}};
    try {
        phase_to_json(ph);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::too_large);
    }
}
