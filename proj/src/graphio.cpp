#include "chromlag/graphio.hpp"

#include <json.hpp>

#include "chromlag/errors.hpp"

namespace chromlag {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::io_error, "invalid JSON");
    if (!j.is_object()) fail(errc::io_error, "expected a JSON object");
    return j;
}

std::vector<int> int_array(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        fail(errc::io_error, "missing array field '" + key + "'");
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            fail(errc::io_error, "field '" + key + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string name_field(const json& j) {
    if (!j.contains("name")) return "";
    if (!j["name"].is_string()) fail(errc::io_error, "'name' must be a string");
    return j["name"].get<std::string>();
}

}  // namespace

std::string graph_to_json(const RibbonGraph& g) {
    json j;
    j["name"] = g.name;
    j["darts"] = g.alpha.size();
    j["alpha"] = g.alpha;
    j["sigma"] = g.sigma;
    j["face_labels"] = g.face_labels;
    return j.dump(2) + "\n";
}

RibbonGraph graph_from_json(const std::string& text) {
    json j = parse(text);
    RibbonGraph g;
    g.name = name_field(j);
    if (!j.contains("darts") || !j["darts"].is_number_integer())
        fail(errc::io_error, "missing integer field 'darts'");
    const long long darts = j["darts"].get<long long>();
    g.alpha = int_array(j, "alpha");
    g.sigma = int_array(j, "sigma");
    if (darts < 0 || static_cast<std::size_t>(darts) != g.alpha.size() ||
        static_cast<std::size_t>(darts) != g.sigma.size())
        fail(errc::io_error, "'darts' must equal the length of alpha and sigma");
    if (j.contains("face_labels")) {
        if (!j["face_labels"].is_array())
            fail(errc::io_error, "'face_labels' must be an array");
        for (const auto& v : j["face_labels"]) {
            if (!v.is_string())
                fail(errc::io_error, "'face_labels' must hold strings");
            g.face_labels.push_back(v.get<std::string>());
        }
    }
    validate(g);
    return g;
}

std::string phase_to_json(const Phase& ph) {
    json j;
    j["name"] = ph.name;
    auto classes = [](const std::vector<std::vector<Int>>& rows) {
        json out = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (const Int& x : row) {
                if (!x.fits_slong_p())
                    fail(errc::too_large, "phase entry out of JSON range");
                r.push_back(static_cast<long long>(x.get_si()));
            }
            out.push_back(r);
        }
        return out;
    };
    j["nu"] = classes(ph.nu);
    j["mu"] = classes(ph.mu);
    if (!ph.usign.empty()) j["usign"] = ph.usign;
    return j.dump(2) + "\n";
}

Phase phase_from_json(const std::string& text) {
    json j = parse(text);
    Phase ph;
    ph.name = name_field(j);
    auto classes = [&](const std::string& key) {
        if (!j.contains(key) || !j[key].is_array())
            fail(errc::io_error, "missing array field '" + key + "'");
        std::vector<std::vector<Int>> rows;
        for (const auto& row : j[key]) {
            if (!row.is_array())
                fail(errc::io_error, "field '" + key + "' must hold arrays");
            std::vector<Int> r;
            for (const auto& v : row) {
                if (!v.is_number_integer())
                    fail(errc::io_error, "field '" + key + "' must hold integers");
                r.emplace_back(static_cast<long>(v.get<long long>()));
            }
            rows.push_back(r);
        }
        return rows;
    };
    ph.nu = classes("nu");
    ph.mu = classes("mu");
    if (j.contains("usign")) ph.usign = int_array(j, "usign");
    return ph;
}

}  // namespace chromlag
