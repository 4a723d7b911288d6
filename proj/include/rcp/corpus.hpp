#pragma once

#include "rcp/diagram.hpp"
#include "rcp/matrices.hpp"
#include "rcp/moves.hpp"
#include "rcp/zlinalg.hpp"

#include <optional>
#include <string>
#include <vector>

// Built-in diagrams (the worked examples) and seeded random diagrams for
// desk-scale verification.

namespace rcp {

struct CorpusEntry {
    std::string name;
    DiagramSpec spec;
    LinkDiagram diagram;
    int expected_n = 0, expected_d = 0, expected_l = 0;
    // golden matrices for the double counting rules, matched up to one
    // simultaneous row/column permutation shared by both families
    std::optional<IntMat> golden_definite, golden_alternating;
};

namespace corpus_detail {

inline DiagramSpec figure8_spec() {
    DiagramSpec s;
    s.crossings = {{1, {4, 2, 5, 1}},
                   {2, {8, 6, 1, 5}},
                   {3, {6, 3, 7, 4}},
                   {4, {2, 7, 3, 8}}};
    return s;
}

inline DiagramSpec trefoil_spec() {
    DiagramSpec s;
    s.crossings = {{1, {1, 4, 2, 5}}, {2, {3, 6, 4, 1}}, {3, {5, 2, 6, 3}}};
    return s;
}

// closed 2-braid with k positive half-twists: hopf (k=2), (2,4)-torus (k=4)
inline DiagramSpec torus_braid_spec(int k) {
    DiagramSpec s;
    auto l = [&](int i) { return ((i - 1 + k) % k) + 1; };
    auto r = [&](int i) { return k + ((i - 1 + k) % k) + 1; };
    for (int i = 1; i <= k; ++i)
        s.crossings.push_back({i, {r(i - 1), r(i), l(i), l(i - 1)}});
    return s;
}

inline DiagramSpec kink_spec(int sign) {
    DiagramSpec s;
    if (sign > 0)
        s.crossings = {{1, {1, 1, 2, 2}}};
    else
        s.crossings = {{1, {2, 1, 1, 2}}};
    return s;
}

inline DiagramSpec kink_sum_spec(int k) {
    DiagramSpec s;
    for (int i = 0; i < k; ++i)
        s.crossings.push_back(
            {i + 1, {2 * i + 2, 2 * i + 1, 2 * i + 1, 2 * i + 2}});
    return s;
}

inline DiagramSpec kink_plus_loops_spec(int l) {
    DiagramSpec s = kink_spec(-1);
    for (int i = 1; i < l; ++i)
        s.loops.push_back({+1, {false, 0}});
    return s;
}

// connected 2-component diagram with self- and inter-component crossings:
// a trefoil with a small circle pushed over one of its arcs
inline DiagramSpec two_component_fig_spec() {
    DiagramSpec s;
    s.crossings = {{1, {1, 4, 2, 5}},
                   {2, {3, 6, 4, 1}},
                   {3, {5, 9, 6, 3}},
                   {4, {2, 8, 10, 7}},
                   {5, {10, 8, 9, 7}}};
    return s;
}

inline IntMat fig8_definite() {
    return IntMat{{1, 1, 1, 0, 0, 1},
                  {1, 1, 0, 0, 1, 1},
                  {0, 1, 1, 1, 1, 0},
                  {0, 0, 1, 1, 1, 1}};
}

inline IntMat fig8_alternating() {
    return IntMat{{-1, 1, -1, 0, 0, 1},
                  {-1, 1, 0, 0, -1, 1},
                  {0, 1, -1, 1, -1, 0},
                  {0, 0, -1, 1, -1, 1}};
}

inline IntMat torus24_definite() {
    return IntMat{{1, 1, 1, 1, 0, 0},
                  {0, 1, 1, 1, 1, 0},
                  {0, 1, 1, 0, 1, 1},
                  {1, 1, 1, 0, 0, 1}};
}

inline IntMat torus24_alternating() {
    return IntMat{{-1, 1, 1, -1, 0, 0},
                  {0, 1, 1, -1, -1, 0},
                  {0, 1, 1, 0, -1, -1},
                  {-1, 1, 1, 0, 0, -1}};
}

inline int parse_param(const std::string &name, const std::string &prefix) {
    // "prefix(k)" -> k, or -1 if the shape does not match
    if (name.size() < prefix.size() + 3 ||
        name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
        return -1;
    try {
        return std::stoi(
            name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    } catch (...) {
        return -1;
    }
}

} // namespace corpus_detail

inline CorpusEntry builtin(const std::string &name) {
    using namespace corpus_detail;
    CorpusEntry e;
    e.name = name;
    if (name == "figure8") {
        e.spec = figure8_spec();
        e.expected_n = 4;
        e.expected_d = 1;
        e.expected_l = 1;
        e.golden_definite = fig8_definite();
        e.golden_alternating = fig8_alternating();
    } else if (name == "trefoil") {
        e.spec = trefoil_spec();
        e.expected_n = 3;
        e.expected_d = 1;
        e.expected_l = 1;
    } else if (name == "torus_2_4") {
        e.spec = torus_braid_spec(4);
        e.expected_n = 4;
        e.expected_d = 1;
        e.expected_l = 2;
        e.golden_definite = torus24_definite();
        e.golden_alternating = torus24_alternating();
    } else if (name == "hopf") {
        e.spec = torus_braid_spec(2);
        e.expected_n = 2;
        e.expected_d = 1;
        e.expected_l = 2;
    } else if (name == "kink_pos" || name == "kink_neg") {
        e.spec = kink_spec(name == "kink_pos" ? +1 : -1);
        e.expected_n = 1;
        e.expected_d = 1;
        e.expected_l = 1;
    } else if (name == "two_component_fig") {
        e.spec = two_component_fig_spec();
        e.expected_n = 5;
        e.expected_d = 1;
        e.expected_l = 2;
    } else if (int k = parse_param(name, "kink_sum"); k > 0) {
        e.spec = kink_sum_spec(k);
        e.expected_n = k;
        e.expected_d = k;
        e.expected_l = k;
    } else if (int k2 = parse_param(name, "kink_plus_loops"); k2 > 0) {
        e.spec = kink_plus_loops_spec(k2);
        e.expected_n = 1;
        e.expected_d = k2;
        e.expected_l = k2;
    } else {
        throw DiagramError("unknown corpus entry: " + name);
    }
    e.diagram = LinkDiagram::parse(e.spec);

    // expected data is verified at load
    if (e.diagram.n() != e.expected_n || e.diagram.d() != e.expected_d ||
        e.diagram.l() != e.expected_l)
        throw std::logic_error("corpus entry " + name + ": wrong counts");
    for (const Rule &rule : all_rules()) {
        IntMat A = region_choice_matrix(e.diagram, rule).mat;
        if (rank(A) != static_cast<std::size_t>(e.expected_n + e.expected_d -
                                                e.expected_l))
            throw std::logic_error("corpus entry " + name + ": wrong rank");
    }
    if (e.golden_definite) {
        IntMat ad = region_choice_matrix(e.diagram, Rule::d2()).mat;
        IntMat aa = region_choice_matrix(e.diagram, Rule::a2()).mat;
        if (!simultaneous_permutation(
                 {&ad, &aa}, {&*e.golden_definite, &*e.golden_alternating}))
            throw std::logic_error("corpus entry " + name +
                                   ": golden matrices do not match");
    }
    return e;
}

inline std::vector<std::string> builtin_names() {
    return {"figure8",          "trefoil",        "torus_2_4",
            "hopf",             "kink_pos",       "kink_neg",
            "kink_sum(2)",      "kink_sum(3)",    "kink_plus_loops(2)",
            "kink_plus_loops(3)", "two_component_fig"};
}

// Deterministic random diagram: a seeded move walk from a split sum of
// kinks. Valid by construction; the component count is preserved by the
// moves.
inline LinkDiagram random_diagram(unsigned long long seed, int max_crossings,
                                  int components) {
    if (max_crossings > 20)
        throw DiagramError("random_diagram: max_crossings beyond desk scale");
    LinkDiagram start =
        builtin("kink_sum(" + std::to_string(std::max(1, components)) + ")")
            .diagram;
    WalkResult w = random_walk(std::move(start), seed, 2 * max_crossings + 6,
                               max_crossings, /*check_laws=*/false);
    return std::move(w.final_diagram);
}

} // namespace rcp
