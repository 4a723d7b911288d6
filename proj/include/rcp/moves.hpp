#pragma once

#include "rcp/diagram.hpp"
#include "rcp/matrices.hpp"
#include "rcp/zlinalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

// Diagram rewriting: crossing changes and Reidemeister moves I/II/III as
// local surgeries on the combinatorial map. R1/R2/R3 rebuild the diagram from
// the rewired crossing list; crossing changes preserve the region structure
// exactly. Moves require a loop-free diagram and refuse surgeries that would
// strip a component of its last crossing.

namespace rcp {

enum class MoveKind {
    crossing_change,
    r1_add,
    r1_remove,
    r2_add,
    r2_remove,
    r3,
};

inline const char *move_name(MoveKind k) {
    switch (k) {
    case MoveKind::crossing_change:
        return "crossing_change";
    case MoveKind::r1_add:
        return "r1_add";
    case MoveKind::r1_remove:
        return "r1_remove";
    case MoveKind::r2_add:
        return "r2_add";
    case MoveKind::r2_remove:
        return "r2_remove";
    case MoveKind::r3:
        return "r3";
    }
    return "?";
}

struct MoveSpec {
    MoveKind kind = MoveKind::crossing_change;
    int crossing = 0;     // crossing_change, r1_remove
    int edge_a = 0;       // r1_add, r2_add
    int edge_b = 0;       // r2_add
    int region = -1;      // r2_add (shared face), r2_remove (bigon), r3
    bool left_side = true; // r1_add: loop on the left of edge_a
    bool positive = true;  // r1_add: chirality of the new crossing
    bool over_a = true;    // r2_add: edge_a passes over
};

namespace detail {

inline int max_crossing_id(const LinkDiagram &d) {
    int m = 0;
    for (const Crossing &c : d.crossings())
        m = std::max(m, c.id);
    return m;
}

inline int max_edge_id(const LinkDiagram &d) {
    int m = 0;
    for (const auto &[eid, e] : d.edges())
        m = std::max(m, eid);
    return m;
}

inline DiagramSpec to_spec(const std::vector<Crossing> &crossings) {
    DiagramSpec s;
    for (const Crossing &c : crossings)
        s.crossings.push_back({c.id, c.slots});
    return s;
}

inline void require_loop_free(const LinkDiagram &d) {
    if (!d.loops().empty())
        throw DiagramError("moves need a loop-free diagram");
}

// Remove a set of crossings, joining the strands straight through them.
// Returns the surviving crossing list with merged edge ids, or nullopt when
// some strand closes into a crossing-free circle.
inline std::optional<std::vector<Crossing>>
remove_straight_through(const LinkDiagram &d, const std::set<int> &removed) {
    // dart -> dart continuation inside removed crossings
    auto conn = [&](int cid, int slot) { return (slot + 2) & 3; };
    std::map<int, int> rename; // old edge id -> merged edge id
    std::set<int> dead;
    for (const auto &[eid, e] : d.edges()) {
        if (rename.count(eid))
            continue;
        if (removed.count(e.tail_crossing))
            continue; // picked up by a chain or a cycle
        int cur = eid;
        rename[eid] = eid;
        while (removed.count(d.edges().at(cur).head_crossing)) {
            const Edge &ce = d.edges().at(cur);
            const Crossing &c = d.crossing(ce.head_crossing);
            int nxt = c.slots[conn(ce.head_crossing, ce.head_slot)];
            if (nxt == eid)
                return std::nullopt; // strand closes on itself
            rename[nxt] = eid;
            dead.insert(nxt);
            cur = nxt;
        }
    }
    for (const auto &[eid, e] : d.edges())
        if (!rename.count(eid))
            return std::nullopt; // pure cycle through removed crossings
    std::vector<Crossing> out;
    for (const Crossing &c : d.crossings()) {
        if (removed.count(c.id))
            continue;
        Crossing nc = c;
        for (int s = 0; s < 4; ++s)
            nc.slots[s] = rename.at(nc.slots[s]);
        out.push_back(nc);
    }
    return out;
}

inline std::array<int, 4> mirror_slots(const std::array<int, 4> &s) {
    return {s[0], s[3], s[2], s[1]};
}

} // namespace detail

// --- individual moves ------------------------------------------------------

inline LinkDiagram r1_add(const LinkDiagram &d, int edge, bool left_side,
                          bool positive) {
    detail::require_loop_free(d);
    if (!d.edges().count(edge))
        throw DiagramError("r1_add: unknown edge");
    int z = detail::max_crossing_id(d) + 1;
    int e2 = detail::max_edge_id(d) + 1;
    int g = e2 + 1;
    std::vector<Crossing> cs = d.crossings();
    const Edge &old = d.edges().at(edge);
    // split: `edge` keeps its tail and now ends at z; e2 runs z -> old head
    for (Crossing &c : cs)
        if (c.id == old.head_crossing)
            c.slots[old.head_slot] = e2;
    Crossing k;
    k.id = z;
    if (left_side && positive)
        k.slots = {edge, e2, g, g};
    else if (left_side && !positive)
        k.slots = {g, edge, e2, g};
    else if (!left_side && positive)
        k.slots = {g, g, e2, edge};
    else
        k.slots = {edge, g, g, e2};
    cs.push_back(k);
    return LinkDiagram::parse(detail::to_spec(cs));
}

// removable kink: a region with a single corner at `crossing`
inline std::optional<int> kink_monogon(const LinkDiagram &d, int crossing) {
    for (const Region &r : d.regions())
        if (r.corners.size() == 1 && r.loops.empty() &&
            r.corners[0].crossing_id == crossing)
            return r.corners[0].index;
    return std::nullopt;
}

inline LinkDiagram r1_remove(const LinkDiagram &d, int crossing) {
    detail::require_loop_free(d);
    auto q = kink_monogon(d, crossing);
    if (!q)
        throw DiagramError("r1_remove: no monogon at this crossing");
    if (d.n() < 2)
        throw DiagramError("r1_remove: would leave an empty diagram");
    auto merged = detail::remove_straight_through(d, {crossing});
    if (!merged)
        throw DiagramError("r1_remove: component would lose its last crossing");
    return LinkDiagram::parse(detail::to_spec(*merged));
}

inline LinkDiagram r2_add(const LinkDiagram &d, int edge_a, int edge_b,
                          int face, bool over_a) {
    detail::require_loop_free(d);
    if (edge_a == edge_b)
        throw DiagramError("r2_add: need two distinct edges");
    const Edge &ea = d.edges().at(edge_a);
    const Edge &eb = d.edges().at(edge_b);
    auto touches = [&](const Edge &e) {
        return e.left_region == face || e.right_region == face;
    };
    if (!touches(ea) || !touches(eb))
        throw DiagramError("r2_add: edges do not border the face");
    int ahat = ea.left_region == face ? +1 : -1;
    int bhat = eb.left_region == face ? +1 : -1;
    bool mirrored = ahat < 0;
    int bh = mirrored ? -bhat : bhat;

    int zw = detail::max_crossing_id(d) + 1, ze = zw + 1;
    int am = detail::max_edge_id(d) + 1;
    int a2 = am + 1, bm = am + 2, b2 = am + 3;
    // a-strand: edge_a -> zw -> am -> ze -> a2 -> old head of a
    // b parallel (bh=-1): edge_b -> zw -> bm -> ze -> b2
    // b antiparallel (bh=+1): edge_b -> ze -> bm -> zw -> b2
    std::vector<Crossing> cs = d.crossings();
    for (Crossing &c : cs) {
        if (c.id == ea.head_crossing &&
            c.slots[ea.head_slot] == edge_a)
            c.slots[ea.head_slot] = a2;
        if (c.id == eb.head_crossing &&
            c.slots[eb.head_slot] == edge_b)
            c.slots[eb.head_slot] = b2;
    }
    Crossing w, e;
    w.id = zw;
    e.id = ze;
    if (bh < 0) {
        if (over_a) {
            w.slots = {edge_b, edge_a, bm, am};
            e.slots = {bm, a2, b2, am};
        } else {
            w.slots = {edge_a, bm, am, edge_b};
            e.slots = {am, bm, a2, b2};
        }
    } else {
        if (over_a) {
            w.slots = {bm, am, b2, edge_a};
            e.slots = {edge_b, am, bm, a2};
        } else {
            w.slots = {edge_a, bm, am, b2};
            e.slots = {am, bm, a2, edge_b};
        }
    }
    if (mirrored) {
        w.slots = detail::mirror_slots(w.slots);
        e.slots = detail::mirror_slots(e.slots);
    }
    cs.push_back(w);
    cs.push_back(e);
    return LinkDiagram::parse(detail::to_spec(cs));
}

// bigon removable by R2: two corners at distinct crossings with quadrant
// indices of opposite parity (each strand passes over at exactly one end)
inline bool r2_removable(const LinkDiagram &d, const Region &r) {
    if (r.corners.size() != 2 || !r.loops.empty())
        return false;
    const Quadrant &a = r.corners[0], &b = r.corners[1];
    if (a.crossing_id == b.crossing_id)
        return false;
    return ((a.index ^ b.index) & 1) != 0;
}

inline LinkDiagram r2_remove(const LinkDiagram &d, int region) {
    detail::require_loop_free(d);
    if (region < 0 || region >= d.region_count())
        throw DiagramError("r2_remove: no such region");
    const Region &r = d.regions()[region];
    if (!r2_removable(d, r))
        throw DiagramError("r2_remove: region is not a removable bigon");
    if (d.n() < 3)
        throw DiagramError("r2_remove: would leave an empty diagram");
    auto merged = detail::remove_straight_through(
        d, {r.corners[0].crossing_id, r.corners[1].crossing_id});
    if (!merged)
        throw DiagramError("r2_remove: component would lose its last crossing");
    return LinkDiagram::parse(detail::to_spec(*merged));
}

// triangle admitting an R3 move: three corners at distinct crossings, in
// face-walk order, with acyclic over/under relations among the three strands
struct R3Site {
    int x, y, z;    // crossing ids in walk order
    int qx, qy, qz; // matching quadrant indices
};

inline std::optional<R3Site> r3_site(const LinkDiagram &d, const Region &r) {
    if (r.corners.size() != 3 || !r.loops.empty())
        return std::nullopt;
    // try the stored corner order and its rotations; verify the walk relation
    for (int start = 0; start < 3; ++start) {
        R3Site s;
        const Quadrant &cx = r.corners[start];
        const Quadrant &cy = r.corners[(start + 1) % 3];
        const Quadrant &cz = r.corners[(start + 2) % 3];
        s.x = cx.crossing_id;
        s.y = cy.crossing_id;
        s.z = cz.crossing_id;
        s.qx = cx.index;
        s.qy = cy.index;
        s.qz = cz.index;
        if (s.x == s.y || s.y == s.z || s.x == s.z)
            return std::nullopt;
        auto slot = [&](int cid, int q) { return d.crossing(cid).slots[q & 3]; };
        if (slot(s.x, s.qx) != slot(s.y, s.qy + 1) ||
            slot(s.y, s.qy) != slot(s.z, s.qz + 1) ||
            slot(s.z, s.qz) != slot(s.x, s.qx + 1))
            continue;
        // heights: P (through x,y), Q (y,z), R (x,z)
        bool p_over_r = (s.qx & 1) != 0;
        bool p_over_q = ((s.qy + 1) & 1) != 0;
        bool q_over_r = ((s.qz + 1) & 1) != 0;
        bool cyc1 = p_over_q && q_over_r && !p_over_r;
        bool cyc2 = !p_over_q && !q_over_r && p_over_r;
        if (cyc1 || cyc2)
            return std::nullopt; // heights are cyclic: no R3 here
        return s;
    }
    return std::nullopt;
}

inline LinkDiagram r3(const LinkDiagram &d, int region) {
    detail::require_loop_free(d);
    if (region < 0 || region >= d.region_count())
        throw DiagramError("r3: no such region");
    auto site = r3_site(d, d.regions()[region]);
    if (!site)
        throw DiagramError("r3: region is not an admissible triangle");
    const R3Site &s = *site;
    std::vector<Crossing> cs = d.crossings();
    auto at = [&](int cid) -> Crossing & {
        for (Crossing &c : cs)
            if (c.id == cid)
                return c;
        throw DiagramError("r3: lost crossing");
    };
    auto oldslot = [&](int cid, int q) { return d.crossing(cid).slots[q & 3]; };
    int e1 = oldslot(s.x, s.qx);
    int e2 = oldslot(s.y, s.qy);
    int e3 = oldslot(s.z, s.qz);
    int ax2 = oldslot(s.x, s.qx + 2), ax3 = oldslot(s.x, s.qx + 3);
    int ay2 = oldslot(s.y, s.qy + 2), ay3 = oldslot(s.y, s.qy + 3);
    int az2 = oldslot(s.z, s.qz + 2), az3 = oldslot(s.z, s.qz + 3);
    // each strand's two triangle crossings swap order along it: the triangle
    // edges reattach at the opposite rays, the outer arcs swap endpoints
    Crossing &cx = at(s.x);
    cx.slots[s.qx & 3] = ay3;
    cx.slots[(s.qx + 1) & 3] = az2;
    cx.slots[(s.qx + 2) & 3] = e1;
    cx.slots[(s.qx + 3) & 3] = e3;
    Crossing &cy = at(s.y);
    cy.slots[s.qy & 3] = az3;
    cy.slots[(s.qy + 1) & 3] = ax2;
    cy.slots[(s.qy + 2) & 3] = e2;
    cy.slots[(s.qy + 3) & 3] = e1;
    Crossing &cz = at(s.z);
    cz.slots[s.qz & 3] = ax3;
    cz.slots[(s.qz + 1) & 3] = ay2;
    cz.slots[(s.qz + 2) & 3] = e3;
    cz.slots[(s.qz + 3) & 3] = e2;
    return LinkDiagram::parse(detail::to_spec(cs));
}

inline LinkDiagram apply_move(const LinkDiagram &d, const MoveSpec &m) {
    switch (m.kind) {
    case MoveKind::crossing_change:
        return d.with_crossing_changed(m.crossing);
    case MoveKind::r1_add:
        return r1_add(d, m.edge_a, m.left_side, m.positive);
    case MoveKind::r1_remove:
        return r1_remove(d, m.crossing);
    case MoveKind::r2_add:
        return r2_add(d, m.edge_a, m.edge_b, m.region, m.over_a);
    case MoveKind::r2_remove:
        return r2_remove(d, m.region);
    case MoveKind::r3:
        return r3(d, m.region);
    }
    throw DiagramError("unknown move");
}

// --- rank bookkeeping ------------------------------------------------------

struct MoveReport {
    MoveSpec spec;
    bool ok = true;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

// Verify the matrix transformation laws of the move on all four rules.
inline MoveReport rank_delta_check(const LinkDiagram &before,
                                   const LinkDiagram &after,
                                   const MoveSpec &spec) {
    MoveReport rep;
    rep.spec = spec;
    for (const Rule &rule : all_rules()) {
        IntMat A = region_choice_matrix(before, rule).mat;
        IntMat B = region_choice_matrix(after, rule).mat;
        std::size_t ra = rank(A), rb = rank(B);
        std::size_t ka = A.cols() - ra, kb = B.cols() - rb;
        std::string tag = rule.name() + " ";
        switch (spec.kind) {
        case MoveKind::crossing_change: {
            rep.expect(rb == ra, tag + "rank preserved");
            rep.expect(kb == ka, tag + "kernel rank preserved");
            if (rule.family == Family::definite) {
                rep.expect(A == B, tag + "matrix preserved");
            } else {
                std::size_t row = 0;
                for (std::size_t i = 0; i < A.rows(); ++i)
                    if (before.crossings()[i].id == spec.crossing)
                        row = i;
                bool good = true;
                for (std::size_t i = 0; i < A.rows(); ++i)
                    for (std::size_t j = 0; j < A.cols(); ++j)
                        good = good && (B(i, j) ==
                                        (i == row ? -A(i, j) : A(i, j)));
                rep.expect(good, tag + "one row negated");
            }
            break;
        }
        case MoveKind::r1_add:
            rep.expect(rb == ra + 1, tag + "rank +1");
            rep.expect(kb == ka, tag + "kernel rank preserved");
            break;
        case MoveKind::r1_remove:
            rep.expect(rb + 1 == ra, tag + "rank -1");
            rep.expect(kb == ka, tag + "kernel rank preserved");
            break;
        case MoveKind::r2_add: {
            int dd = before.d() - after.d(); // 1 when components joined
            rep.expect(rb == ra + 2 - dd, tag + "rank +2 (or +1 joining)");
            rep.expect(kb == ka, tag + "kernel rank preserved");
            break;
        }
        case MoveKind::r2_remove: {
            int dd = after.d() - before.d();
            rep.expect(rb + 2 - dd == ra, tag + "rank -2 (or -1 splitting)");
            rep.expect(kb == ka, tag + "kernel rank preserved");
            break;
        }
        case MoveKind::r3:
            rep.expect(A.rows() == B.rows() && A.cols() == B.cols(),
                       tag + "same size");
            rep.expect(rb == ra, tag + "rank preserved");
            rep.expect(kb == ka, tag + "kernel rank preserved");
            break;
        }
    }
    return rep;
}

// --- seeded random walks ---------------------------------------------------

inline std::vector<MoveSpec> enumerate_moves(const LinkDiagram &d) {
    std::vector<MoveSpec> out;
    if (!d.loops().empty())
        return out;
    for (const Crossing &c : d.crossings()) {
        MoveSpec m;
        m.kind = MoveKind::crossing_change;
        m.crossing = c.id;
        out.push_back(m);
        if (d.n() >= 2 && kink_monogon(d, c.id)) {
            MoveSpec k;
            k.kind = MoveKind::r1_remove;
            k.crossing = c.id;
            if (detail::remove_straight_through(d, {c.id}))
                out.push_back(k);
        }
    }
    for (const auto &[eid, e] : d.edges())
        for (bool left : {true, false})
            for (bool pos : {true, false}) {
                MoveSpec m;
                m.kind = MoveKind::r1_add;
                m.edge_a = eid;
                m.left_side = left;
                m.positive = pos;
                out.push_back(m);
            }
    for (const Region &r : d.regions()) {
        if (r2_removable(d, r) && d.n() >= 3) {
            auto merged = detail::remove_straight_through(
                d, {r.corners[0].crossing_id, r.corners[1].crossing_id});
            if (merged) {
                MoveSpec m;
                m.kind = MoveKind::r2_remove;
                m.region = r.id;
                out.push_back(m);
            }
        }
        if (r3_site(d, r)) {
            MoveSpec m;
            m.kind = MoveKind::r3;
            m.region = r.id;
            out.push_back(m);
        }
        // r2_add across any two distinct boundary edges
        std::vector<int> boundary;
        for (const auto &[eid, e] : d.edges())
            if (e.left_region == r.id || e.right_region == r.id)
                boundary.push_back(eid);
        for (std::size_t i = 0; i < boundary.size(); ++i)
            for (std::size_t j = 0; j < boundary.size(); ++j)
                if (i != j)
                    for (bool over : {true, false}) {
                        MoveSpec m;
                        m.kind = MoveKind::r2_add;
                        m.edge_a = boundary[i];
                        m.edge_b = boundary[j];
                        m.region = r.id;
                        m.over_a = over;
                        out.push_back(m);
                    }
    }
    return out;
}

struct WalkStep {
    MoveSpec spec;
    MoveReport report;
};

struct WalkResult {
    LinkDiagram final_diagram;
    std::vector<WalkStep> steps;
    bool all_ok = true;
};

// Seeded move walk with per-step verification of the rank laws and the
// theorem rank(A) = n + d - l at every stop.
inline WalkResult random_walk(LinkDiagram start, unsigned long long seed,
                              int steps, int max_n = 15,
                              bool check_laws = true) {
    std::mt19937_64 rng(seed);
    WalkResult res{std::move(start), {}, true};
    for (int t = 0; t < steps; ++t) {
        std::vector<MoveSpec> moves;
        for (const MoveSpec &m : enumerate_moves(res.final_diagram)) {
            int dn = m.kind == MoveKind::r1_add   ? 1
                     : m.kind == MoveKind::r2_add ? 2
                                                  : 0;
            if (res.final_diagram.n() + dn <= max_n)
                moves.push_back(m);
        }
        if (moves.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        const MoveSpec m = moves[pick(rng)];
        LinkDiagram next = apply_move(res.final_diagram, m);
        WalkStep step;
        step.spec = m;
        if (check_laws) {
            step.report = rank_delta_check(res.final_diagram, next, m);
            // the rank theorem at every stop
            for (const Rule &rule : all_rules()) {
                IntMat A = region_choice_matrix(next, rule).mat;
                step.report.expect(
                    rank(A) == static_cast<std::size_t>(next.n() + next.d() -
                                                        next.l()),
                    rule.name() + " rank = n+d-l");
            }
            res.all_ok = res.all_ok && step.report.ok;
        }
        res.steps.push_back(std::move(step));
        res.final_diagram = std::move(next);
    }
    return res;
}

} // namespace rcp
