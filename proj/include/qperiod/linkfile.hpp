#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qperiod/errors.hpp"
#include "qperiod/laurent.hpp"
#include "qperiod/pd_code.hpp"

namespace qperiod {

using Json = nlohmann::ordered_json;

// linkfile-v1: {"format": "linkfile-v1", "crossings": [[a,b,c,d], ...],
// "components": [[arc, ...], ...], "framings": [int, ...],
// "colors": [int-or-null, ...] (optional)}.  Schema violations are rejected
// before any computation.
inline FramedLinkDiagram parse_link_file(const Json& j) {
    if (!j.is_object()) throw MalformedDiagram("link file: top level must be an object");
    if (!j.contains("format") || !j["format"].is_string() || j["format"] != "linkfile-v1")
        throw MalformedDiagram("link file: missing or unsupported \"format\" (want \"linkfile-v1\")");
    for (const char* key : {"crossings", "components", "framings"})
        if (!j.contains(key) || !j[key].is_array())
            throw MalformedDiagram(std::string("link file: missing array \"") + key + "\"");

    FramedLinkDiagram d;
    for (const auto& x : j["crossings"]) {
        if (!x.is_array() || x.size() != 4)
            throw MalformedDiagram("link file: each crossing must be a 4-element array");
        Crossing c{};
        for (int s = 0; s < 4; ++s) {
            if (!x[static_cast<std::size_t>(s)].is_number_integer())
                throw MalformedDiagram("link file: crossing entries must be integers");
            c.arcs[static_cast<std::size_t>(s)] = x[static_cast<std::size_t>(s)].get<long long>();
            if (c.arcs[static_cast<std::size_t>(s)] <= 0)
                throw MalformedDiagram("link file: arc labels must be positive");
        }
        d.pd.crossings.push_back(c);
    }
    for (const auto& comp : j["components"]) {
        if (!comp.is_array() || comp.empty())
            throw MalformedDiagram("link file: each component must be a nonempty array of arcs");
        std::vector<long long> cyc;
        for (const auto& a : comp) {
            if (!a.is_number_integer() || a.get<long long>() <= 0)
                throw MalformedDiagram("link file: arc labels must be positive integers");
            cyc.push_back(a.get<long long>());
        }
        d.pd.components.push_back(std::move(cyc));
    }
    for (const auto& f : j["framings"]) {
        if (!f.is_number_integer()) throw MalformedDiagram("link file: framings must be integers");
        d.framings.push_back(f.get<long long>());
    }
    if (d.framings.size() != d.pd.component_count())
        throw MalformedDiagram("link file: framings array must parallel components");
    if (j.contains("colors")) {
        if (!j["colors"].is_array() || j["colors"].size() != d.pd.component_count())
            throw MalformedDiagram("link file: colors array must parallel components");
        for (const auto& c : j["colors"]) {
            if (c.is_null())
                d.colors.push_back(std::nullopt);
            else if (c.is_number_integer() && c.get<long long>() >= 0)
                d.colors.push_back(c.get<long long>());
            else
                throw MalformedDiagram("link file: colors must be null or nonnegative integers");
        }
    }
    require_valid(d);
    return d;
}

inline FramedLinkDiagram load_link_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedDiagram("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDiagram("JSON parse error in " + path + ": " + e.what());
    }
    return parse_link_file(j);
}

inline Json link_file_json(const FramedLinkDiagram& d) {
    Json j;
    j["format"] = "linkfile-v1";
    j["crossings"] = Json::array();
    for (const auto& x : d.pd.crossings) j["crossings"].push_back({x[0], x[1], x[2], x[3]});
    j["components"] = d.pd.components;
    j["framings"] = d.framings;
    if (!d.colors.empty()) {
        Json colors = Json::array();
        for (const auto& c : d.colors) {
            if (c)
                colors.push_back(*c);
            else
                colors.push_back(nullptr);
        }
        j["colors"] = colors;
    }
    return j;
}

// reportfile-v1.  Coefficients are serialized as decimal strings so the
// round trip is lossless for arbitrary-precision values; the exponent map is
// emitted in ascending exponent order.
struct ReportFile {
    std::string criterion;  // jones | bracket-with-writhe | bracket-framed | manifold | invariant
    long long p = 0;
    std::string verdict;  // pass | fail | computed
    std::vector<long long> passing_j;
    std::map<long long, std::string> invariant;
    std::string ring;
    std::string notes;

    bool operator==(const ReportFile&) const = default;
};

inline std::map<long long, std::string> exponent_map(const LaurentZ& poly) {
    std::map<long long, std::string> m;
    for (const auto& [e, c] : poly.terms()) m[e] = c.str();
    return m;
}

inline Json report_file_json(const ReportFile& r) {
    Json j;
    j["format"] = "reportfile-v1";
    j["criterion"] = r.criterion;
    j["p"] = r.p;
    j["verdict"] = r.verdict;
    j["passing_j"] = r.passing_j;
    Json inv = Json::object();
    for (const auto& [e, c] : r.invariant) inv[std::to_string(e)] = c;
    j["invariant"] = inv;
    j["ring"] = r.ring;
    j["notes"] = r.notes;
    return j;
}

inline ReportFile parse_report_file(const Json& j) {
    if (!j.is_object() || !j.contains("format") || j["format"] != "reportfile-v1")
        throw MalformedDiagram("report file: missing or unsupported \"format\"");
    ReportFile r;
    r.criterion = j.at("criterion").get<std::string>();
    r.p = j.at("p").get<long long>();
    r.verdict = j.at("verdict").get<std::string>();
    for (const auto& v : j.at("passing_j")) r.passing_j.push_back(v.get<long long>());
    for (const auto& [key, value] : j.at("invariant").items())
        r.invariant[std::stoll(key)] = value.get<std::string>();
    r.ring = j.at("ring").get<std::string>();
    r.notes = j.at("notes").get<std::string>();
    return r;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace qperiod
