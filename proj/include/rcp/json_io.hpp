#pragma once

#include "rcp/diagram.hpp"
#include "rcp/intmat.hpp"
#include "rcp/moves.hpp"

#include <json.hpp>

#include <limits>
#include <map>
#include <string>

// Diagram JSON format:
//   {"crossings":[{"id":1,"slots":[e0,e1,e2,e3]},...],
//    "free_loops":[{"orientation":1,"host":{"face":0}}],
//    "outer":{"edge":1,"side":"left"},
//    "projection":false}
// Slots are edge ids counterclockwise from the incoming under-strand. Loop
// hosts name either a face (region id of the crossing diagram) or the
// interior of an earlier loop: {"loop":0}.

namespace rcp {

using json = nlohmann::json;

inline DiagramSpec diagram_spec_from_json(const json &j) {
    DiagramSpec spec;
    if (!j.is_object() || !j.contains("crossings"))
        throw DiagramError("diagram JSON must contain \"crossings\"");
    for (const auto &jc : j.at("crossings")) {
        DiagramSpec::CrossingSpec cs{};
        cs.id = jc.at("id").get<int>();
        const auto &sl = jc.at("slots");
        if (!sl.is_array() || sl.size() != 4)
            throw DiagramError("crossing slots must be 4 edge ids");
        for (int s = 0; s < 4; ++s)
            cs.slots[s] = sl.at(s).get<int>();
        spec.crossings.push_back(cs);
    }
    if (j.contains("free_loops"))
        for (const auto &jl : j.at("free_loops")) {
            LoopSpec ls;
            ls.orientation = jl.value("orientation", 1) >= 0 ? +1 : -1;
            const auto &h = jl.at("host");
            if (h.contains("face")) {
                ls.host.in_loop_interior = false;
                ls.host.index = h.at("face").get<int>();
            } else if (h.contains("loop")) {
                ls.host.in_loop_interior = true;
                ls.host.index = h.at("loop").get<int>();
            } else {
                throw DiagramError("loop host must name a face or a loop");
            }
            spec.loops.push_back(ls);
        }
    if (j.contains("outer") && !j.at("outer").is_null()) {
        OuterRef o;
        o.edge = j.at("outer").at("edge").get<int>();
        o.left_side = j.at("outer").value("side", "left") == std::string("left");
        spec.outer = o;
    }
    spec.projection = j.value("projection", false);
    return spec;
}

inline json diagram_spec_to_json(const DiagramSpec &spec) {
    json j;
    j["crossings"] = json::array();
    for (const auto &cs : spec.crossings)
        j["crossings"].push_back(
            {{"id", cs.id},
             {"slots", {cs.slots[0], cs.slots[1], cs.slots[2], cs.slots[3]}}});
    j["free_loops"] = json::array();
    for (const auto &ls : spec.loops) {
        json h = ls.host.in_loop_interior ? json{{"loop", ls.host.index}}
                                          : json{{"face", ls.host.index}};
        j["free_loops"].push_back(
            {{"orientation", ls.orientation}, {"host", h}});
    }
    if (spec.outer)
        j["outer"] = {{"edge", spec.outer->edge},
                      {"side", spec.outer->left_side ? "left" : "right"}};
    j["projection"] = spec.projection;
    return j;
}

inline LinkDiagram diagram_from_json(const json &j) {
    return LinkDiagram::parse(diagram_spec_from_json(j));
}

// integer maps keyed by id: {"0":2,"1":-1,...}
inline json int_map_to_json(const std::map<int, Int> &m) {
    json j = json::object();
    for (const auto &[k, v] : m)
        j[std::to_string(k)] = v.str();
    return j;
}

inline std::map<int, Int> int_map_from_json(const json &j) {
    std::map<int, Int> m;
    if (!j.is_object())
        throw DiagramError("expected an object of id -> integer");
    for (auto it = j.begin(); it != j.end(); ++it) {
        Int v = it.value().is_string() ? Int(it.value().get<std::string>())
                                       : Int(it.value().get<long long>());
        int key;
        try {
            key = std::stoi(it.key());
        } catch (...) {
            throw DiagramError("non-integer id key: " + it.key());
        }
        m[key] = v;
    }
    return m;
}

inline json matrix_to_json(const IntMat &m, const std::vector<int> &row_ids,
                           const std::vector<int> &col_ids) {
    json j;
    j["rows"] = row_ids;
    j["cols"] = col_ids;
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj) {
            const Int &v = m(i, jj);
            if (v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max())
                row.push_back(static_cast<long long>(v));
            else
                row.push_back(v.str());
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

// reproducible walk transcripts
inline json move_spec_to_json(const MoveSpec &m) {
    json j;
    j["kind"] = move_name(m.kind);
    switch (m.kind) {
    case MoveKind::crossing_change:
    case MoveKind::r1_remove:
        j["crossing"] = m.crossing;
        break;
    case MoveKind::r1_add:
        j["edge"] = m.edge_a;
        j["side"] = m.left_side ? "left" : "right";
        j["positive"] = m.positive;
        break;
    case MoveKind::r2_add:
        j["edge_a"] = m.edge_a;
        j["edge_b"] = m.edge_b;
        j["region"] = m.region;
        j["over_a"] = m.over_a;
        break;
    case MoveKind::r2_remove:
    case MoveKind::r3:
        j["region"] = m.region;
        break;
    }
    return j;
}

inline MoveSpec move_spec_from_json(const json &j) {
    MoveSpec m;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "crossing_change" || kind == "r1_remove") {
        m.kind = kind == "r1_remove" ? MoveKind::r1_remove
                                     : MoveKind::crossing_change;
        m.crossing = j.at("crossing").get<int>();
    } else if (kind == "r1_add") {
        m.kind = MoveKind::r1_add;
        m.edge_a = j.at("edge").get<int>();
        m.left_side = j.value("side", "left") == std::string("left");
        m.positive = j.value("positive", true);
    } else if (kind == "r2_add") {
        m.kind = MoveKind::r2_add;
        m.edge_a = j.at("edge_a").get<int>();
        m.edge_b = j.at("edge_b").get<int>();
        m.region = j.at("region").get<int>();
        m.over_a = j.value("over_a", true);
    } else if (kind == "r2_remove" || kind == "r3") {
        m.kind = kind == "r3" ? MoveKind::r3 : MoveKind::r2_remove;
        m.region = j.at("region").get<int>();
    } else {
        throw DiagramError("unknown move kind " + kind);
    }
    return m;
}

} // namespace rcp
