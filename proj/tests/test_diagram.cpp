#include "rcp/diagram.hpp"
#include "rcp/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace rcp;

namespace {

DiagramSpec fig8_spec() {
    DiagramSpec s;
    s.crossings = {{1, {4, 2, 5, 1}},
                   {2, {8, 6, 1, 5}},
                   {3, {6, 3, 7, 4}},
                   {4, {2, 7, 3, 8}}};
    return s;
}

// closed 2-braid with k half-twists, all crossings positive
DiagramSpec torus_braid_spec(int k) {
    DiagramSpec s;
    auto l = [&](int i) { return ((i - 1 + k) % k) + 1; };
    auto r = [&](int i) { return k + ((i - 1 + k) % k) + 1; };
    for (int i = 1; i <= k; ++i)
        s.crossings.push_back({i, {r(i - 1), r(i), l(i), l(i - 1)}});
    return s;
}

DiagramSpec kink_spec(int sign) {
    DiagramSpec s;
    if (sign > 0)
        s.crossings = {{1, {1, 1, 2, 2}}};
    else
        s.crossings = {{1, {2, 1, 1, 2}}};
    return s;
}

std::multiset<int> region_degrees(const LinkDiagram &d) {
    std::multiset<int> deg;
    for (const Region &r : d.regions())
        deg.insert(static_cast<int>(r.corners.size()));
    return deg;
}

} // namespace

TEST_CASE("figure-eight parses to n=4, d=1, l=1, 6 regions") {
    LinkDiagram d = LinkDiagram::parse(fig8_spec());
    REQUIRE(d.n() == 4);
    REQUIRE(d.d() == 1);
    REQUIRE(d.l() == 1);
    REQUIRE(d.region_count() == 6);
    REQUIRE(region_degrees(d) == std::multiset<int>{2, 2, 3, 3, 3, 3});
    REQUIRE(d.reducible_crossings().empty());
    // writhe zero: two positive, two negative crossings
    int w = 0;
    for (const Crossing &c : d.crossings())
        w += c.sign;
    REQUIRE(w == 0);
}

TEST_CASE("one-crossing kinks") {
    for (int sign : {+1, -1}) {
        LinkDiagram d = LinkDiagram::parse(kink_spec(sign));
        CAPTURE(sign);
        REQUIRE(d.n() == 1);
        REQUIRE(d.d() == 1);
        REQUIRE(d.l() == 1);
        REQUIRE(d.region_count() == 3);
        REQUIRE(d.crossings()[0].sign == sign);
        REQUIRE(d.reducible_crossings() == std::set<int>{1});
        // the twice-touching region is the default outer (left of edge 1)
        const Region &outer = d.regions()[d.outer_region()];
        REQUIRE(outer.touches().at(1) == 2);
    }
}

TEST_CASE("hopf link and (2,4)-torus counts") {
    LinkDiagram hopf = LinkDiagram::parse(torus_braid_spec(2));
    REQUIRE(hopf.n() == 2);
    REQUIRE(hopf.d() == 1);
    REQUIRE(hopf.l() == 2);
    REQUIRE(hopf.region_count() == 4);
    REQUIRE(region_degrees(hopf) == std::multiset<int>{2, 2, 2, 2});

    LinkDiagram t = LinkDiagram::parse(torus_braid_spec(4));
    REQUIRE(t.n() == 4);
    REQUIRE(t.d() == 1);
    REQUIRE(t.l() == 2);
    REQUIRE(t.region_count() == 6);
    REQUIRE(region_degrees(t) == std::multiset<int>{2, 2, 2, 2, 4, 4});
    for (const Crossing &c : t.crossings())
        REQUIRE(c.sign == +1);
    // every crossing joins the two components
    for (const Crossing &c : t.crossings())
        REQUIRE(!t.is_self_crossing(c.id));
}

TEST_CASE("split sum of kinks via shared outer region") {
    // two negative kinks side by side
    DiagramSpec s;
    s.crossings = {{1, {2, 1, 1, 2}}, {2, {4, 3, 3, 4}}};
    LinkDiagram d = LinkDiagram::parse(s);
    REQUIRE(d.n() == 2);
    REQUIRE(d.d() == 2);
    REQUIRE(d.l() == 2);
    REQUIRE(d.region_count() == 5);
    // one region touches all crossings twice
    const Region &outer = d.regions()[d.outer_region()];
    REQUIRE(outer.touches() == std::map<int, int>{{1, 2}, {2, 2}});
    REQUIRE(d.reducible_crossings() == std::set<int>{1, 2});
}

TEST_CASE("free loops split their host region") {
    // kink plus two free loops in the outer region = trivial 3-component link
    DiagramSpec s = kink_spec(-1);
    LinkDiagram base = LinkDiagram::parse(s);
    int outer = base.outer_region();
    s.loops.push_back({+1, {false, outer}});
    s.loops.push_back({+1, {false, outer}});
    LinkDiagram d = LinkDiagram::parse(s);
    REQUIRE(d.n() == 1);
    REQUIRE(d.d() == 3);
    REQUIRE(d.l() == 3);
    REQUIRE(d.region_count() == 5); // l + 2
    // nested loop
    s.loops[1] = {+1, {true, 0}};
    LinkDiagram nested = LinkDiagram::parse(s);
    REQUIRE(nested.region_count() == 5);

    // loops only, no crossings
    DiagramSpec only;
    only.loops.push_back({+1, {false, 0}});
    only.loops.push_back({-1, {false, 0}});
    LinkDiagram lo = LinkDiagram::parse(only);
    REQUIRE(lo.n() == 0);
    REQUIRE(lo.d() == 2);
    REQUIRE(lo.l() == 2);
    REQUIRE(lo.region_count() == 3);
}

TEST_CASE("quadrants partition and twice-touch corners are opposite") {
    for (int k : {2, 3, 4, 5}) {
        LinkDiagram d = LinkDiagram::parse(torus_braid_spec(k));
        std::set<std::pair<int, int>> covered;
        for (const Region &r : d.regions())
            for (const Quadrant &q : r.corners)
                covered.insert({q.crossing_id, q.index});
        REQUIRE(covered.size() == 4u * d.n());
        d.validate(); // twice-touch opposition is enforced here
    }
}

TEST_CASE("parse errors") {
    SECTION("edge appearing three times") {
        DiagramSpec s;
        s.crossings = {{1, {1, 1, 1, 2}}, {2, {2, 3, 3, 4}}};
        REQUIRE_THROWS_AS(LinkDiagram::parse(s), DiagramError);
    }
    SECTION("non-planar rotation system") {
        DiagramSpec s;
        s.crossings = {{1, {1, 2, 1, 2}}};
        REQUIRE_THROWS_AS(LinkDiagram::parse(s), DiagramError);
    }
    SECTION("orientation conflict") {
        // edge 1 is the incoming under-strand at both crossings
        DiagramSpec s;
        s.crossings = {{1, {1, 2, 3, 4}}, {2, {1, 3, 2, 4}}};
        REQUIRE_THROWS_AS(LinkDiagram::parse(s), DiagramError);
    }
}

TEST_CASE("splice at a self-crossing splits the component") {
    LinkDiagram d = LinkDiagram::parse(fig8_spec());
    for (const Crossing &c : d.crossings()) {
        auto [dx, rec] = d.splice(c.id);
        CAPTURE(c.id);
        REQUIRE(dx.n() == 3);
        REQUIRE(dx.l() == 2);
        REQUIRE(dx.region_count() == dx.n() + dx.d() + 1);
        // gamma arcs lie in the two new components
        REQUIRE(dx.arc_component(rec.gamma1) != dx.arc_component(rec.gamma2));
        // right of gamma1 is the merged region
        REQUIRE(dx.arc_right(rec.gamma1) == rec.merged_region_new);
        // region map surjective onto new regions
        std::set<int> img(rec.region_map.begin(), rec.region_map.end());
        REQUIRE(static_cast<int>(img.size()) == dx.region_count());
    }
}

TEST_CASE("splice record pulls regions back faithfully") {
    // every surviving corner lands in the image of its old region, so the
    // record suffices to transport region assignments across the unsplice
    for (const char *which : {"fig8", "torus"}) {
        LinkDiagram d = LinkDiagram::parse(std::string(which) == "fig8"
                                               ? fig8_spec()
                                               : torus_braid_spec(4));
        for (const Crossing &c : d.crossings()) {
            auto [dx, rec] = d.splice(c.id);
            for (const Region &r : d.regions())
                for (const Quadrant &q : r.corners) {
                    if (q.crossing_id == c.id)
                        continue;
                    REQUIRE(dx.region_at(q.crossing_id, q.index) ==
                            rec.region_map[r.id]);
                }
            REQUIRE(rec.region_map[rec.merged_regions_old.first] ==
                    rec.merged_region_new);
            REQUIRE(rec.region_map[rec.merged_regions_old.second] ==
                    rec.merged_region_new);
        }
    }
}

TEST_CASE("splice at an inter-component crossing merges components") {
    LinkDiagram t = LinkDiagram::parse(torus_braid_spec(4));
    auto [dx, rec] = t.splice(2);
    REQUIRE(dx.n() == 3);
    REQUIRE(dx.l() == 1);
    REQUIRE(dx.d() == 1);
    REQUIRE(dx.region_count() == 5);
}

TEST_CASE("splice of a closed kink yields two free loops") {
    for (int sign : {+1, -1}) {
        LinkDiagram d = LinkDiagram::parse(kink_spec(sign));
        auto [dx, rec] = d.splice(1);
        CAPTURE(sign);
        REQUIRE(dx.n() == 0);
        REQUIRE(dx.loops().size() == 2);
        REQUIRE(dx.l() == 2);
        REQUIRE(dx.region_count() == 3);
    }
}

TEST_CASE("crossing change preserves regions and flips the sign") {
    LinkDiagram d = LinkDiagram::parse(fig8_spec());
    LinkDiagram d2 = d.with_crossing_changed(3);
    REQUIRE(d2.crossing(3).sign == -d.crossing(3).sign);
    REQUIRE(d2.region_count() == d.region_count());
    // region ids untouched: every region has the same crossing-touch multiset
    for (int r = 0; r < d.region_count(); ++r)
        REQUIRE(d.regions()[r].touches() == d2.regions()[r].touches());
    // double change restores the diagram
    LinkDiagram d3 = d2.with_crossing_changed(3);
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        REQUIRE(d.crossings()[i].slots == d3.crossings()[i].slots);
        REQUIRE(d.crossings()[i].sign == d3.crossings()[i].sign);
    }
}

TEST_CASE("component reversal flips signs of self-crossings only") {
    LinkDiagram t = LinkDiagram::parse(torus_braid_spec(4));
    LinkDiagram r = t.with_component_reversed(1);
    // all crossings are inter-component: all four signs flip
    for (const Crossing &c : r.crossings())
        REQUIRE(c.sign == -1);
    LinkDiagram rr = r.with_component_reversed(1);
    for (const Crossing &c : rr.crossings())
        REQUIRE(c.sign == +1);

    LinkDiagram f = LinkDiagram::parse(fig8_spec());
    LinkDiagram fr = f.with_component_reversed(1);
    // both strands reverse at a self-crossing: signs stay
    for (std::size_t i = 0; i < f.crossings().size(); ++i)
        REQUIRE(f.crossings()[i].sign == fr.crossings()[i].sign);
}

TEST_CASE("projections carry the deterministic over/under assignment") {
    DiagramSpec s = fig8_spec();
    s.projection = true;
    LinkDiagram d = LinkDiagram::parse(s);
    REQUIRE(d.is_projection());
    // slot 0 is declared the incoming under-strand either way
    LinkDiagram plain = LinkDiagram::parse(fig8_spec());
    for (std::size_t i = 0; i < d.crossings().size(); ++i)
        REQUIRE(d.crossings()[i].sign == plain.crossings()[i].sign);
}

TEST_CASE("diagram JSON round trip") {
    DiagramSpec s = fig8_spec();
    s.outer = OuterRef{1, true};
    json j = diagram_spec_to_json(s);
    DiagramSpec back = diagram_spec_from_json(j);
    LinkDiagram a = LinkDiagram::parse(s);
    LinkDiagram b = LinkDiagram::parse(back);
    REQUIRE(a.region_count() == b.region_count());
    REQUIRE(region_degrees(a) == region_degrees(b));
    REQUIRE(diagram_spec_to_json(back) == j);
}
