#pragma once

#include "rcp/diagram.hpp"
#include "rcp/intmat.hpp"

#include <map>
#include <vector>

namespace rcp {

enum class NumberingKind { alexander, checkerboard, componentwise, generic };

// Integer assignment to the regions of one diagram.
struct NumberingVector {
    std::vector<Int> values; // indexed by region id
    NumberingKind kind = NumberingKind::generic;
    int component = 0; // for componentwise numberings

    Int &operator[](int r) { return values[r]; }
    const Int &operator[](int r) const { return values[r]; }
    std::size_t size() const { return values.size(); }

    std::map<int, Int> as_map() const {
        std::map<int, Int> m;
        for (std::size_t r = 0; r < values.size(); ++r)
            m[static_cast<int>(r)] = values[r];
        return m;
    }
};

namespace detail {

// Propagate values across arcs: +1 jump (left = right + 1) on arcs of the
// selected set, equality elsewhere; verify every arc afterwards.
inline NumberingVector propagate_numbering(const LinkDiagram &d,
                                           auto &&jumps_across,
                                           int base_region, Int base_value) {
    NumberingVector out;
    out.values.assign(d.region_count(), Int(0));
    std::vector<char> seen(d.region_count(), 0);
    struct Nb {
        int to;
        int delta;
    };
    std::vector<std::vector<Nb>> adj(d.region_count());
    for (const ArcRef &a : d.arcs()) {
        int lr = d.arc_left(a), rr = d.arc_right(a);
        int delta = jumps_across(a) ? 1 : 0;
        adj[rr].push_back({lr, +delta}); // left = right + delta
        adj[lr].push_back({rr, -delta});
    }
    std::vector<int> stack{base_region};
    seen[base_region] = 1;
    out.values[base_region] = base_value;
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (const Nb &nb : adj[r]) {
            Int v = out.values[r] + nb.delta;
            if (!seen[nb.to]) {
                seen[nb.to] = 1;
                out.values[nb.to] = v;
                stack.push_back(nb.to);
            } else if (out.values[nb.to] != v) {
                throw DiagramError("numbering inconsistent: corrupt map");
            }
        }
    }
    for (char s : seen)
        if (!s)
            throw DiagramError("numbering: region unreachable, corrupt map");
    return out;
}

} // namespace detail

// Alexander numbering: across every oriented arc the left region exceeds the
// right by one; anchored at base_region.
inline NumberingVector alexander_numbering(const LinkDiagram &d,
                                           int base_region,
                                           Int base_value = 0) {
    NumberingVector n = detail::propagate_numbering(
        d, [](const ArcRef &) { return true; }, base_region,
        std::move(base_value));
    n.kind = NumberingKind::alexander;
    return n;
}

// Alexander numbering mod 2, normalized so the outer region is 0.
inline NumberingVector checkerboard(const LinkDiagram &d) {
    NumberingVector a = alexander_numbering(d, d.outer_region(), 0);
    NumberingVector c;
    c.kind = NumberingKind::checkerboard;
    c.values.assign(d.region_count(), Int(0));
    for (int r = 0; r < d.region_count(); ++r)
        c.values[r] = ((a.values[r] % 2) + 2) % 2;
    return c;
}

// Checkerboard coloring with a prescribed color at one region.
inline NumberingVector checkerboard_with(const LinkDiagram &d, int region,
                                         int color) {
    NumberingVector c = checkerboard(d);
    if (c.values[region] != color)
        for (Int &v : c.values)
            v = 1 - v;
    return c;
}

// Alexander numbering of one component's sub-diagram pulled back to all
// regions: jumps only across arcs of component i, constant elsewhere.
inline NumberingVector componentwise_alexander(const LinkDiagram &d, int i,
                                               int base_region) {
    NumberingVector n = detail::propagate_numbering(
        d, [&](const ArcRef &a) { return d.arc_component(a) == i; },
        base_region, 0);
    n.kind = NumberingKind::componentwise;
    n.component = i;
    return n;
}

// u_1, ..., u_l (componentwise numberings vanishing at the outer region)
// followed by the all-ones u_infinity.
inline std::vector<NumberingVector>
standard_kernel_basis_vectors(const LinkDiagram &d) {
    if (d.n() == 0)
        throw DiagramError("standard kernel solutions need n >= 1");
    std::vector<NumberingVector> out;
    for (int i = 1; i <= d.l(); ++i)
        out.push_back(componentwise_alexander(d, i, d.outer_region()));
    NumberingVector ones;
    ones.values.assign(d.region_count(), Int(1));
    ones.kind = NumberingKind::generic;
    out.push_back(ones);
    return out;
}

} // namespace rcp
