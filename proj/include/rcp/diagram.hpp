#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Oriented link diagrams as planar combinatorial maps. A crossing lists its
// four edge ids counterclockwise starting from the incoming under-strand
// (slot 0); quadrant q sits between slots q and q+1 mod 4. Faces are traced
// with the interior on the walker's left, free loops split their host region,
// and split projection components are embedded side by side (each component's
// designated outer face is merged into the single outer region).

namespace rcp {

class DiagramError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Quadrant {
    int crossing_id;
    int index; // 0..3
    friend bool operator==(const Quadrant &, const Quadrant &) = default;
    friend auto operator<=>(const Quadrant &, const Quadrant &) = default;
};

struct Crossing {
    int id = 0;
    std::array<int, 4> slots{}; // edge ids, CCW from incoming under
    int over_in_slot = 3;       // 1 or 3
    int sign = +1;              // +1 iff the over-strand enters at slot 3
};

struct Edge {
    int id = 0;
    int tail_crossing = -1, tail_slot = -1; // outgoing appearance
    int head_crossing = -1, head_slot = -1; // incoming appearance
    int left_region = -1, right_region = -1;
    int component = -1; // link component, 1-based
};

struct FreeLoop {
    int orientation = +1; // +1: the region split off by the loop lies left
    int left_region = -1, right_region = -1;
    int component = -1;
};

struct Region {
    int id = 0;
    std::vector<Quadrant> corners;
    std::vector<int> loops; // indices of free loops on the boundary
    bool is_outer = false;

    // crossing id -> multiplicity (1 or 2)
    std::map<int, int> touches() const {
        std::map<int, int> t;
        for (const Quadrant &q : corners)
            ++t[q.crossing_id];
        return t;
    }
};

struct OuterRef {
    int edge = 0;
    bool left_side = true;
};

struct LoopHost {
    bool in_loop_interior = false;
    int index = 0; // region id, or earlier loop index
};

struct LoopSpec {
    int orientation = +1;
    LoopHost host;
};

struct DiagramSpec {
    struct CrossingSpec {
        int id;
        std::array<int, 4> slots;
    };
    std::vector<CrossingSpec> crossings;
    std::vector<LoopSpec> loops;
    std::optional<OuterRef> outer;
    bool projection = false;
};

// Reference to an arc of a diagram: an edge (by id) or a free loop (by index).
struct ArcRef {
    bool is_loop = false;
    int id = -1;
    friend bool operator==(const ArcRef &, const ArcRef &) = default;
};

struct SpliceRecord {
    int crossing_id = 0;
    int sign = +1;
    std::pair<int, int> merged_regions_old{-1, -1};
    int merged_region_new = -1;
    std::vector<int> region_map; // old region id -> new region id
    std::map<int, ArcRef> arc_map; // old edge id -> arc in the new diagram
    ArcRef gamma1, gamma2; // smoothing arcs; gamma1 lies on the left of gamma2
};

class LinkDiagram {
  public:
    LinkDiagram() = default;

    static LinkDiagram parse(const DiagramSpec &spec);

    int n() const { return static_cast<int>(crossings_.size()); }
    int d() const { return d_; }
    int l() const { return l_; }
    bool is_projection() const { return projection_; }

    const std::vector<Crossing> &crossings() const { return crossings_; }
    const std::map<int, Edge> &edges() const { return edges_; }
    const std::vector<FreeLoop> &loops() const { return loops_; }
    const std::vector<Region> &regions() const { return regions_; }
    int region_count() const { return static_cast<int>(regions_.size()); }
    int outer_region() const { return outer_region_; }

    const Crossing &crossing(int id) const {
        return crossings_[crossing_index(id)];
    }
    bool has_crossing(int id) const { return index_of_.count(id) != 0; }

    int region_at(int crossing_id, int quadrant) const {
        return region_at_[crossing_index(crossing_id)][quadrant & 3];
    }

    // crossings some region touches twice
    std::set<int> reducible_crossings() const {
        std::set<int> out;
        for (const Region &r : regions_)
            for (auto &[cid, mult] : r.touches())
                if (mult == 2)
                    out.insert(cid);
        return out;
    }
    bool is_reducible() const { return !reducible_crossings().empty(); }

    int arc_component(const ArcRef &a) const {
        return a.is_loop ? loops_[a.id].component : edges_.at(a.id).component;
    }
    int arc_left(const ArcRef &a) const {
        return a.is_loop ? loops_[a.id].left_region : edges_.at(a.id).left_region;
    }
    int arc_right(const ArcRef &a) const {
        return a.is_loop ? loops_[a.id].right_region
                         : edges_.at(a.id).right_region;
    }
    std::vector<ArcRef> arcs() const {
        std::vector<ArcRef> out;
        for (const auto &[id, e] : edges_)
            out.push_back({false, id});
        for (int i = 0; i < static_cast<int>(loops_.size()); ++i)
            out.push_back({true, i});
        return out;
    }

    // True when both strands through the crossing belong to one link component.
    bool is_self_crossing(int crossing_id) const {
        const Crossing &c = crossing(crossing_id);
        return edges_.at(c.slots[0]).component ==
               edges_.at(c.slots[1]).component;
    }

    // Oriented smoothing at a crossing plus the data needed to pull region
    // assignments of the smoothed diagram back to this one.
    std::pair<LinkDiagram, SpliceRecord> splice(int crossing_id) const;

    // Over/under swapped at one crossing; regions and their ids preserved.
    LinkDiagram with_crossing_changed(int crossing_id) const;

    // Orientation of one link component reversed; regions preserved.
    LinkDiagram with_component_reversed(int component) const;

    void validate() const;

  private:
    std::vector<Crossing> crossings_; // sorted by id
    std::map<int, Edge> edges_;
    std::vector<FreeLoop> loops_;
    std::vector<Region> regions_;
    std::vector<std::array<int, 4>> region_at_; // per crossing index
    int outer_region_ = 0;
    int d_ = 0, l_ = 0;
    bool projection_ = false;

    std::size_t crossing_index(int id) const {
        auto it = index_of_.find(id);
        if (it == index_of_.end())
            throw DiagramError("no crossing with id " + std::to_string(id));
        return it->second;
    }
    std::map<int, std::size_t> index_of_;

    void reindex() {
        index_of_.clear();
        for (std::size_t i = 0; i < crossings_.size(); ++i)
            index_of_[crossings_[i].id] = i;
    }

    void assign_components();
    void rebuild_region_loops();
};

namespace detail {

struct Dart {
    int crossing_index; // position in the crossings vector
    int slot;
    friend bool operator==(const Dart &, const Dart &) = default;
    friend auto operator<=>(const Dart &, const Dart &) = default;
};

struct EdgeDarts {
    std::vector<Dart> at; // exactly two appearances, in declaration order
};

inline std::map<int, EdgeDarts>
collect_darts(const std::vector<Crossing> &crossings) {
    std::map<int, EdgeDarts> darts;
    for (std::size_t ci = 0; ci < crossings.size(); ++ci)
        for (int s = 0; s < 4; ++s)
            darts[crossings[ci].slots[s]].at.push_back(
                {static_cast<int>(ci), s});
    return darts;
}

// the appearance of edge e other than `d`
inline Dart other_dart(const EdgeDarts &e, const Dart &d) {
    return e.at[0] == d ? e.at[1] : e.at[0];
}

} // namespace detail

// ---------------------------------------------------------------------------
// parsing

inline LinkDiagram LinkDiagram::parse(const DiagramSpec &spec) {
    using detail::Dart;
    LinkDiagram dia;
    dia.projection_ = spec.projection;

    std::set<int> seen_ids;
    for (const auto &cs : spec.crossings) {
        if (!seen_ids.insert(cs.id).second)
            throw DiagramError("duplicate crossing id " + std::to_string(cs.id));
        Crossing c;
        c.id = cs.id;
        c.slots = cs.slots;
        dia.crossings_.push_back(c);
    }
    std::sort(dia.crossings_.begin(), dia.crossings_.end(),
              [](const Crossing &a, const Crossing &b) { return a.id < b.id; });
    dia.reindex();

    auto darts = detail::collect_darts(dia.crossings_);
    for (const auto &[eid, ed] : darts)
        if (ed.at.size() != 2)
            throw DiagramError("edge " + std::to_string(eid) + " appears " +
                               std::to_string(ed.at.size()) +
                               " times, expected 2");

    // --- orient edges: which appearance is the head (incoming end).
    // slot 0 is a head, slot 2 a tail; the two over slots of each crossing
    // carry one head and one tail.
    std::map<int, int> head_sel; // edge id -> appearance index 0/1
    std::vector<int> work;
    auto assign = [&](int eid, int sel) {
        auto it = head_sel.find(eid);
        if (it != head_sel.end()) {
            if (it->second != sel)
                throw DiagramError("orientation inconsistency at edge " +
                                   std::to_string(eid));
            return;
        }
        head_sel[eid] = sel;
        work.push_back(eid);
    };
    auto sel_of = [&](int eid, const Dart &d) {
        return darts[eid].at[0] == d ? 0 : 1;
    };
    for (std::size_t ci = 0; ci < dia.crossings_.size(); ++ci) {
        const auto &c = dia.crossings_[ci];
        int ici = static_cast<int>(ci);
        assign(c.slots[0], sel_of(c.slots[0], {ici, 0}));
        int e2 = c.slots[2];
        assign(e2, 1 - sel_of(e2, {ici, 2}));
    }
    auto propagate = [&]() {
        while (!work.empty()) {
            int eid = work.back();
            work.pop_back();
            for (int ai = 0; ai < 2; ++ai) {
                Dart d = darts[eid].at[ai];
                if (d.slot != 1 && d.slot != 3)
                    continue;
                const auto &c = dia.crossings_[d.crossing_index];
                int partner_slot = d.slot == 1 ? 3 : 1;
                int peid = c.slots[partner_slot];
                Dart pd{d.crossing_index, partner_slot};
                if (peid == eid)
                    continue; // same edge on both over slots: no constraint
                bool head_here = head_sel[eid] == ai;
                // partner dart must have the opposite role
                int psel = sel_of(peid, pd);
                assign(peid, head_here ? 1 - psel : psel);
            }
        }
    };
    propagate();
    for (const auto &[eid, ed] : darts)
        if (!head_sel.count(eid)) {
            assign(eid, 1); // default: first declared appearance is the tail
            propagate();
        }

    // --- fill edge records and derive over-in slots / signs
    for (const auto &[eid, ed] : darts) {
        Edge e;
        e.id = eid;
        Dart head = ed.at[head_sel[eid]];
        Dart tail = ed.at[1 - head_sel[eid]];
        e.head_crossing = dia.crossings_[head.crossing_index].id;
        e.head_slot = head.slot;
        e.tail_crossing = dia.crossings_[tail.crossing_index].id;
        e.tail_slot = tail.slot;
        dia.edges_[eid] = e;
    }
    for (std::size_t ci = 0; ci < dia.crossings_.size(); ++ci) {
        Crossing &c = dia.crossings_[ci];
        int ici = static_cast<int>(ci);
        bool head1 = darts[c.slots[1]].at[head_sel[c.slots[1]]] == Dart{ici, 1};
        bool head3 = darts[c.slots[3]].at[head_sel[c.slots[3]]] == Dart{ici, 3};
        if (head1 == head3)
            throw DiagramError("orientation inconsistency at crossing " +
                               std::to_string(c.id));
        c.over_in_slot = head3 ? 3 : 1;
        c.sign = head3 ? +1 : -1;
    }

    // --- face walk: from corner (c,q), leave along slot q; arriving at slot
    // s of the far crossing puts the walker in corner s-1.
    const std::size_t nc = dia.crossings_.size();
    std::vector<std::array<int, 4>> face_of(nc, {-1, -1, -1, -1});
    std::vector<std::vector<Quadrant>> faces;
    for (std::size_t ci = 0; ci < nc; ++ci)
        for (int q = 0; q < 4; ++q) {
            if (face_of[ci][q] != -1)
                continue;
            int fid = static_cast<int>(faces.size());
            faces.emplace_back();
            int cc = static_cast<int>(ci), cq = q;
            std::size_t guard = 0;
            while (face_of[cc][cq] == -1) {
                face_of[cc][cq] = fid;
                faces[fid].push_back({dia.crossings_[cc].id, cq});
                int eid = dia.crossings_[cc].slots[cq];
                Dart nd = detail::other_dart(darts[eid], {cc, cq});
                cc = nd.crossing_index;
                cq = (nd.slot + 3) & 3;
                if (++guard > 4 * nc + 4)
                    throw DiagramError("face walk does not close");
            }
            if (face_of[cc][cq] != fid)
                throw DiagramError("face walk does not close");
        }

    // --- projection components of the crossing graph
    std::vector<int> comp(nc);
    int pcomps = 0;
    {
        std::vector<int> stack;
        std::vector<bool> seen(nc, false);
        std::map<int, std::vector<int>> by_edge;
        for (std::size_t ci = 0; ci < nc; ++ci)
            for (int s = 0; s < 4; ++s)
                by_edge[dia.crossings_[ci].slots[s]].push_back(
                    static_cast<int>(ci));
        for (std::size_t ci = 0; ci < nc; ++ci) {
            if (seen[ci])
                continue;
            int id = pcomps++;
            stack.push_back(static_cast<int>(ci));
            seen[ci] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp[v] = id;
                for (int s = 0; s < 4; ++s)
                    for (int w : by_edge[dia.crossings_[v].slots[s]])
                        if (!seen[w]) {
                            seen[w] = true;
                            stack.push_back(w);
                        }
            }
        }
    }

    // --- outer faces. left(e) is the face at the tail corner, right(e) the
    // face at the head corner.
    auto face_left_of_edge = [&](int eid) {
        const Edge &e = dia.edges_.at(eid);
        return face_of[dia.crossing_index(e.tail_crossing)][e.tail_slot];
    };
    auto face_right_of_edge = [&](int eid) {
        const Edge &e = dia.edges_.at(eid);
        return face_of[dia.crossing_index(e.head_crossing)][e.head_slot];
    };

    int global_outer_face = -1;
    if (nc > 0) {
        if (spec.outer) {
            if (!dia.edges_.count(spec.outer->edge))
                throw DiagramError("outer refers to unknown edge");
            global_outer_face = spec.outer->left_side
                                    ? face_left_of_edge(spec.outer->edge)
                                    : face_right_of_edge(spec.outer->edge);
        } else {
            global_outer_face = face_left_of_edge(dia.edges_.begin()->first);
        }
    }

    // merge the designated outer face of every projection component into one
    // region (side-by-side embedding of split components)
    std::vector<int> face_to_region(faces.size());
    {
        std::vector<int> comp_outer(pcomps, -1);
        if (global_outer_face >= 0) {
            // component owning the named face
            int oc = comp[dia.crossing_index(
                faces[global_outer_face][0].crossing_id)];
            comp_outer[oc] = global_outer_face;
        }
        std::map<int, int> comp_min_edge;
        for (const auto &[eid, e] : dia.edges_) {
            int c = comp[dia.crossing_index(e.tail_crossing)];
            if (!comp_min_edge.count(c))
                comp_min_edge[c] = eid;
        }
        for (int c = 0; c < pcomps; ++c)
            if (comp_outer[c] < 0)
                comp_outer[c] = face_left_of_edge(comp_min_edge.at(c));
        std::set<int> merged(comp_outer.begin(), comp_outer.end());
        int next = 0;
        int merged_region = -1;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (merged.count(static_cast<int>(f))) {
                if (merged_region < 0)
                    merged_region = next++;
                face_to_region[f] = merged_region;
            } else {
                face_to_region[f] = next++;
            }
        }
        dia.regions_.assign(next, {});
        for (int r = 0; r < next; ++r)
            dia.regions_[r].id = r;
        for (std::size_t f = 0; f < faces.size(); ++f)
            for (const Quadrant &q : faces[f])
                dia.regions_[face_to_region[f]].corners.push_back(q);
        dia.outer_region_ =
            global_outer_face >= 0 ? face_to_region[global_outer_face] : 0;
    }
    if (nc == 0) {
        dia.regions_.assign(1, {});
        dia.regions_[0].id = 0;
        dia.outer_region_ = 0;
    }
    dia.regions_[dia.outer_region_].is_outer = true;

    dia.region_at_.assign(nc, {-1, -1, -1, -1});
    for (std::size_t ci = 0; ci < nc; ++ci)
        for (int q = 0; q < 4; ++q)
            dia.region_at_[ci][q] = face_to_region.empty()
                                        ? -1
                                        : face_to_region[face_of[ci][q]];
    for (auto &[eid, e] : dia.edges_) {
        e.left_region =
            dia.region_at_[dia.crossing_index(e.tail_crossing)][e.tail_slot];
        e.right_region =
            dia.region_at_[dia.crossing_index(e.head_crossing)][e.head_slot];
    }

    // --- free loops, in declaration order; each splits one region
    for (std::size_t li = 0; li < spec.loops.size(); ++li) {
        const LoopSpec &ls = spec.loops[li];
        int host;
        if (ls.host.in_loop_interior) {
            if (ls.host.index < 0 || ls.host.index >= static_cast<int>(li))
                throw DiagramError("loop host refers to a later loop");
            const FreeLoop &h = dia.loops_[ls.host.index];
            host = h.orientation > 0 ? h.left_region : h.right_region;
        } else {
            host = ls.host.index;
            if (host < 0 || host >= static_cast<int>(dia.regions_.size()))
                throw DiagramError("loop host region out of range");
        }
        int inner = static_cast<int>(dia.regions_.size());
        Region r;
        r.id = inner;
        dia.regions_.push_back(r);
        FreeLoop fl;
        fl.orientation = ls.orientation >= 0 ? +1 : -1;
        fl.left_region = fl.orientation > 0 ? inner : host;
        fl.right_region = fl.orientation > 0 ? host : inner;
        dia.loops_.push_back(fl);
    }
    dia.rebuild_region_loops();

    dia.d_ = pcomps + static_cast<int>(dia.loops_.size());
    dia.assign_components();
    dia.validate();
    return dia;
}

inline void LinkDiagram::assign_components() {
    // successor of an edge: continue straight through the head crossing
    std::map<int, int> next;
    for (const auto &[eid, e] : edges_) {
        const Crossing &c = crossings_[crossing_index(e.head_crossing)];
        next[eid] = c.slots[(e.head_slot + 2) & 3];
    }
    std::map<int, int> comp_of;
    std::vector<int> comp_min;
    for (const auto &[eid, e] : edges_) {
        if (comp_of.count(eid))
            continue;
        int cid = static_cast<int>(comp_min.size());
        comp_min.push_back(eid);
        int cur = eid;
        while (!comp_of.count(cur)) {
            comp_of[cur] = cid;
            cur = next[cur];
        }
        if (comp_of[cur] != cid)
            throw DiagramError("component trace corrupt");
    }
    // number components by their smallest edge id, then loops
    std::vector<int> order(comp_min.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return comp_min[a] < comp_min[b]; });
    std::vector<int> rank(comp_min.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = static_cast<int>(i) + 1;
    for (auto &[eid, e] : edges_)
        e.component = rank[comp_of[eid]];
    int base = static_cast<int>(comp_min.size());
    for (std::size_t i = 0; i < loops_.size(); ++i)
        loops_[i].component = base + static_cast<int>(i) + 1;
    l_ = base + static_cast<int>(loops_.size());
}

inline void LinkDiagram::rebuild_region_loops() {
    for (Region &r : regions_)
        r.loops.clear();
    for (std::size_t i = 0; i < loops_.size(); ++i) {
        regions_[loops_[i].left_region].loops.push_back(static_cast<int>(i));
        if (loops_[i].right_region != loops_[i].left_region)
            regions_[loops_[i].right_region].loops.push_back(
                static_cast<int>(i));
    }
}

inline void LinkDiagram::validate() const {
    const int nn = n();
    if (static_cast<int>(regions_.size()) != nn + d_ + 1)
        throw DiagramError("not planar: " + std::to_string(regions_.size()) +
                           " regions for n=" + std::to_string(nn) +
                           ", d=" + std::to_string(d_));
    std::set<std::pair<int, int>> seen;
    for (const Region &r : regions_) {
        for (const Quadrant &q : r.corners)
            if (!seen.insert({q.crossing_id, q.index}).second)
                throw DiagramError("quadrant covered twice");
        for (auto &[cid, mult] : r.touches()) {
            if (mult > 2)
                throw DiagramError("region touches a crossing thrice");
            if (mult == 2) {
                std::vector<int> qs;
                for (const Quadrant &q : r.corners)
                    if (q.crossing_id == cid)
                        qs.push_back(q.index);
                if (((qs[0] - qs[1]) & 3) != 2)
                    throw DiagramError(
                        "twice-touching region with adjacent corners");
            }
        }
    }
    if (static_cast<int>(seen.size()) != 4 * nn)
        throw DiagramError("quadrant not covered");
    for (const auto &[eid, e] : edges_) {
        if (e.left_region < 0 || e.right_region < 0 || e.component < 0)
            throw DiagramError("edge record incomplete");
    }
    for (const FreeLoop &fl : loops_)
        if (fl.left_region < 0 || fl.right_region < 0 ||
            fl.left_region == fl.right_region)
            throw DiagramError("loop record incomplete");
    for (std::size_t ci = 0; ci < crossings_.size(); ++ci)
        for (int q = 0; q < 4; ++q)
            if (region_at_[ci][q] < 0 ||
                region_at_[ci][q] >= static_cast<int>(regions_.size()))
                throw DiagramError("corner without region");
}

// ---------------------------------------------------------------------------
// region-preserving operations

inline LinkDiagram LinkDiagram::with_crossing_changed(int crossing_id) const {
    LinkDiagram out = *this;
    std::size_t ci = crossing_index(crossing_id);
    Crossing &c = out.crossings_[ci];
    int r = c.over_in_slot; // rotate so the old over-in becomes slot 0
    std::array<int, 4> ns, nr;
    for (int j = 0; j < 4; ++j) {
        ns[j] = c.slots[(j + r) & 3];
        nr[j] = region_at_[ci][(j + r) & 3];
    }
    c.slots = ns;
    out.region_at_[ci] = nr;
    c.over_in_slot = (4 - r) & 3;
    c.sign = -c.sign;
    for (Region &reg : out.regions_)
        for (Quadrant &q : reg.corners)
            if (q.crossing_id == crossing_id)
                q.index = (q.index - r) & 3;
    // edge endpoint slots rotate with the crossing
    for (auto &[eid, e] : out.edges_) {
        if (e.tail_crossing == crossing_id)
            e.tail_slot = (e.tail_slot - r) & 3;
        if (e.head_crossing == crossing_id)
            e.head_slot = (e.head_slot - r) & 3;
    }
    out.validate();
    return out;
}

inline LinkDiagram LinkDiagram::with_component_reversed(int component) const {
    LinkDiagram out = *this;
    for (auto &[eid, e] : out.edges_) {
        if (e.component != component)
            continue;
        std::swap(e.tail_crossing, e.head_crossing);
        std::swap(e.tail_slot, e.head_slot);
        std::swap(e.left_region, e.right_region);
    }
    for (std::size_t ci = 0; ci < out.crossings_.size(); ++ci) {
        Crossing &c = out.crossings_[ci];
        bool under_rev =
            edges_.at(c.slots[0]).component == component; // under strand
        bool over_rev = edges_.at(c.slots[1]).component == component;
        if (under_rev) {
            std::array<int, 4> ns, nr;
            for (int j = 0; j < 4; ++j) {
                ns[j] = c.slots[(j + 2) & 3];
                nr[j] = out.region_at_[ci][(j + 2) & 3];
            }
            c.slots = ns;
            out.region_at_[ci] = nr;
            for (Region &reg : out.regions_)
                for (Quadrant &q : reg.corners)
                    if (q.crossing_id == c.id)
                        q.index = (q.index + 2) & 3;
            for (auto &[eid, e] : out.edges_) {
                if (e.tail_crossing == c.id)
                    e.tail_slot = (e.tail_slot + 2) & 3;
                if (e.head_crossing == c.id)
                    e.head_slot = (e.head_slot + 2) & 3;
            }
        }
        if (over_rev != under_rev) {
            c.sign = -c.sign;
            c.over_in_slot = c.over_in_slot == 1 ? 3 : 1;
        }
    }
    for (FreeLoop &fl : out.loops_)
        if (fl.component == component) {
            std::swap(fl.left_region, fl.right_region);
            fl.orientation = -fl.orientation;
        }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// splice

inline std::pair<LinkDiagram, SpliceRecord>
LinkDiagram::splice(int crossing_id) const {
    const std::size_t xi = crossing_index(crossing_id);
    const Crossing &x = crossings_[xi];
    SpliceRecord rec;
    rec.crossing_id = crossing_id;
    rec.sign = x.sign;

    // regions merging at the smoothing: the opposite pair not absorbed by the
    // two elbows (quadrants 1,3 for a positive crossing, 0,2 for a negative)
    int qa = x.sign > 0 ? 1 : 0;
    int rA = region_at_[xi][qa], rB = region_at_[xi][(qa + 2) & 3];
    rec.merged_regions_old = {rA, rB};

    // dart connectors of the oriented smoothing: incoming dart -> outgoing
    // dart it continues through. positive: 0->1, 3->2; negative: 0->3, 1->2.
    std::map<int, int> conn; // incoming slot -> outgoing slot
    if (x.sign > 0)
        conn = {{0, 1}, {3, 2}};
    else
        conn = {{0, 3}, {1, 2}};

    // region mapping: rB folds into rA, ids compacted
    const int R = region_count();
    rec.region_map.assign(R, -1);
    {
        int next = 0;
        for (int r = 0; r < R; ++r) {
            if (r == rB && rB != rA)
                continue;
            rec.region_map[r] = next++;
        }
        if (rB != rA)
            rec.region_map[rB] = rec.region_map[rA];
    }
    rec.merged_region_new = rec.region_map[rA];

    LinkDiagram out;
    out.projection_ = projection_;
    for (const Crossing &c : crossings_)
        if (c.id != crossing_id)
            out.crossings_.push_back(c);
    out.reindex();

    // merge edge chains through the removed crossing
    auto at_x = [&](int cid, int) { return cid == crossing_id; };
    std::map<int, ArcRef> arc_map;
    std::set<int> consumed;
    // walk from every edge whose tail is elsewhere
    for (const auto &[eid, e] : edges_) {
        if (consumed.count(eid) || at_x(e.tail_crossing, e.tail_slot))
            continue;
        std::vector<int> chain{eid};
        int cur = eid;
        while (at_x(edges_.at(cur).head_crossing, 0)) {
            int in_slot = edges_.at(cur).head_slot;
            int out_slot = conn.at(in_slot);
            int nxt = x.slots[out_slot];
            chain.push_back(nxt);
            cur = nxt;
        }
        Edge merged = edges_.at(chain.front());
        merged.head_crossing = edges_.at(chain.back()).head_crossing;
        merged.head_slot = edges_.at(chain.back()).head_slot;
        for (std::size_t i = 1; i < chain.size(); ++i)
            consumed.insert(chain[i]);
        consumed.insert(eid);
        merged.left_region = rec.region_map[merged.left_region];
        merged.right_region = rec.region_map[merged.right_region];
        for (int ce : chain) {
            if (rec.region_map[edges_.at(ce).left_region] !=
                    merged.left_region ||
                rec.region_map[edges_.at(ce).right_region] !=
                    merged.right_region)
                throw std::logic_error("splice: inconsistent chain sides");
            arc_map[ce] = {false, merged.id};
        }
        out.edges_[merged.id] = merged;
    }
    out.loops_ = loops_;
    for (FreeLoop &fl : out.loops_) {
        fl.left_region = rec.region_map[fl.left_region];
        fl.right_region = rec.region_map[fl.right_region];
    }
    // remaining edges close into free loops through the smoothing
    for (const auto &[eid, e] : edges_) {
        if (consumed.count(eid))
            continue;
        std::vector<int> cycle;
        int cur = eid;
        while (!consumed.count(cur)) {
            consumed.insert(cur);
            cycle.push_back(cur);
            int in_slot = edges_.at(cur).head_slot;
            cur = x.slots[conn.at(in_slot)];
        }
        FreeLoop fl;
        fl.left_region = rec.region_map[edges_.at(eid).left_region];
        fl.right_region = rec.region_map[edges_.at(eid).right_region];
        fl.orientation = +1;
        int li = static_cast<int>(out.loops_.size());
        out.loops_.push_back(fl);
        for (int ce : cycle)
            arc_map[ce] = {true, li};
    }
    rec.arc_map = arc_map;

    // rename merged edges inside the surviving crossings
    for (Crossing &c : out.crossings_)
        for (int s = 0; s < 4; ++s) {
            const ArcRef &a = arc_map.at(c.slots[s]);
            if (a.is_loop)
                throw std::logic_error("splice: loop edge at a crossing");
            c.slots[s] = a.id;
        }
    // gamma arcs: gamma1 is the left smoothing arc. For a positive crossing
    // that is the (over-in -> under-out) path entering at slot 3; for a
    // negative crossing the (under-in -> over-out) path entering at slot 0.
    rec.gamma1 = arc_map.at(x.slots[x.sign > 0 ? 3 : 0]);
    rec.gamma2 = arc_map.at(x.slots[x.sign > 0 ? 0 : 1]);

    // regions
    out.regions_.clear();
    for (int r = 0; r < R; ++r) {
        if (r == rB && rB != rA)
            continue;
        Region nr;
        nr.id = rec.region_map[r];
        auto push_corners = [&](const Region &src) {
            for (const Quadrant &q : src.corners)
                if (q.crossing_id != crossing_id)
                    nr.corners.push_back(q);
        };
        push_corners(regions_[r]);
        if (r == rA && rB != rA)
            push_corners(regions_[rB]);
        nr.is_outer = rec.region_map[outer_region_] == nr.id;
        out.regions_.push_back(nr);
    }
    out.outer_region_ = rec.region_map[outer_region_];
    out.region_at_.assign(out.crossings_.size(), {-1, -1, -1, -1});
    for (std::size_t ci = 0; ci < out.crossings_.size(); ++ci) {
        std::size_t oci = crossing_index(out.crossings_[ci].id);
        for (int q = 0; q < 4; ++q)
            out.region_at_[ci][q] = rec.region_map[region_at_[oci][q]];
    }
    out.rebuild_region_loops();

    // projection components of the remaining crossings + loops
    {
        std::map<int, std::vector<std::size_t>> by_edge;
        for (std::size_t ci = 0; ci < out.crossings_.size(); ++ci)
            for (int s = 0; s < 4; ++s)
                by_edge[out.crossings_[ci].slots[s]].push_back(ci);
        std::vector<int> pc(out.crossings_.size(), -1);
        int npc = 0;
        for (std::size_t ci = 0; ci < out.crossings_.size(); ++ci) {
            if (pc[ci] != -1)
                continue;
            std::vector<std::size_t> stack{ci};
            pc[ci] = npc;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                for (int s = 0; s < 4; ++s)
                    for (std::size_t w : by_edge[out.crossings_[v].slots[s]])
                        if (pc[w] == -1) {
                            pc[w] = npc;
                            stack.push_back(w);
                        }
            }
            ++npc;
        }
        out.d_ = npc + static_cast<int>(out.loops_.size());
    }
    out.assign_components();
    out.validate();
    return {std::move(out), std::move(rec)};
}

} // namespace rcp
