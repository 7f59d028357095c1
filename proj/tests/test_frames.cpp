#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rfg/frame.hpp"
#include "rfg/frame_builders.hpp"
#include "rfg/k4_gallery.hpp"

using namespace rfg;
namespace fx = fixtures;

TEST_CASE("containment classification") {
    Frame a{0, 10, 0, 10, 0};
    Frame nested{2, 8, 2, 8, 1};
    Frame canon{5, 15, 2, 8, 1};
    Frame apart{20, 30, 0, 10, 1};
    CHECK(containment(nested, a) == Containment::AInsideB);
    CHECK(containment(a, nested) == Containment::BInsideA);
    CHECK(containment(a, canon) == Containment::Intersecting);
    CHECK(containment(a, apart) == Containment::Disjoint);
    CHECK(canonical_pair(a, canon));
    CHECK_FALSE(canonical_pair(canon, a));
}

TEST_CASE("intersection_graph basics") {
    CHECK(intersection_graph({Frame{0, 2, 0, 2, 0}}).n == 1);
    auto k2 = intersection_graph({Frame{0, 10, 0, 10, 0}, Frame{5, 15, 2, 8, 1}});
    CHECK(k2.adjacent(0, 1));
    auto e2 = intersection_graph({Frame{0, 10, 0, 10, 0}, Frame{2, 8, 2, 8, 1}});
    CHECK(e2.edge_count() == 0);
    CHECK_THROWS_AS(intersection_graph({Frame{0, 10, 0, 2, 0}, Frame{0, 8, 4, 6, 1}}), std::domain_error);
}

TEST_CASE("validator flags constructed breaches") {
    // general position: shared x coordinate on vertical sides
    {
        FrameRepresentation rep;
        rep.target = SimpleGraph(2);
        rep.frames = {Frame{0, 10, 0, 10, 0}, Frame{0, 8, 20, 30, 1}};
        auto vs = validate(rep);
        bool gp = false;
        for (auto& v : vs) gp |= (v.kind == ViolationKind::GeneralPosition);
        CHECK(gp);
    }
    // clause 2: a left side crossing another frame
    {
        FrameRepresentation rep;
        rep.target = SimpleGraph(2);
        rep.target.add_edge(0, 1);
        // B's left side inside A, but B pokes out the top: corner overlap
        rep.frames = {Frame{0, 10, 0, 10, 0}, Frame{5, 15, 5, 15, 1}};
        auto vs = validate(rep);
        bool cl2 = false;
        for (auto& v : vs) cl2 |= (v.clause == 2);
        CHECK(cl2);
    }
    // clause 4: a small frame inside the intersection zone
    {
        FrameRepresentation rep;
        rep.target = SimpleGraph(3);
        rep.target.add_edge(0, 1);
        rep.frames = {Frame{0, 10, 0, 10, 0}, Frame{5, 15, 2, 8, 1}, Frame{6, 9, 3, 7, 2}};
        auto vs = validate(rep);
        bool cl4 = false;
        for (auto& v : vs) cl4 |= (v.clause == 4);
        CHECK(cl4);
    }
    // graph mismatch
    {
        FrameRepresentation rep;
        rep.target = SimpleGraph(2); // no edge, but frames intersect
        rep.frames = {Frame{0, 10, 0, 10, 0}, Frame{5, 15, 2, 8, 1}};
        auto vs = validate(rep);
        bool mm = false;
        for (auto& v : vs) mm |= (v.kind == ViolationKind::GraphMismatch);
        CHECK(mm);
    }
    // clause 3: right side touching without piercing top and bottom
    {
        FrameRepresentation rep;
        rep.target = SimpleGraph(2);
        rep.target.add_edge(0, 1);
        // A tall and narrow, B wide and flat: a plus-shaped crossing
        rep.frames = {Frame{0, 10, -20, 20, 0}, Frame{-5, 15, 2, 8, 1}};
        auto vs = validate(rep);
        CHECK_FALSE(vs.empty());
    }
}

TEST_CASE("canonical pattern is the only valid adjacency") {
    // every valid representation's intersecting pairs satisfy the canonical
    // inequalities up to role swap; probe with the K4 gallery bases
    for (auto rep : {detail::k4_base_matching(), detail::k4_base_triangle()}) {
        REQUIRE(validate(rep).empty());
        for (size_t i = 0; i < rep.frames.size(); ++i)
            for (size_t j = i + 1; j < rep.frames.size(); ++j)
                if (frames_intersect(rep.frames[i], rep.frames[j]))
                    CHECK(canonical_orientation(rep.frames[i], rep.frames[j]).has_value());
    }
}

TEST_CASE("K4 gallery bases are valid and match their targets") {
    auto m = detail::k4_base_matching();
    CHECK(validate(m).empty());
    auto t = detail::k4_base_triangle();
    CHECK(validate(t).empty());
}

TEST_CASE("big vertices of cycles in fixture representations") {
    // triangle: three telescoping frames, everyone is trivially big
    FrameRepresentation tri;
    tri.target = fx::cycle(3);
    tri.frames = {Frame{0, 10, 0, 20, 0}, Frame{4, 14, 2, 16, 1}, Frame{8, 18, 4, 12, 2}};
    REQUIRE(validate(tri).empty());
    CHECK(big_vertex_of_cycle(tri, {0, 1, 2}).size() == 3);

    // chandelier representation of C5
    auto c5 = build_chandelier(fx::cycle(5), 0);
    REQUIRE(validate(c5).empty());
    auto big = big_vertex_of_cycle(c5, {0, 1, 2, 3, 4});
    CHECK_FALSE(big.empty());
    CHECK(big.size() <= 2);
    if (big.size() == 2) {
        auto it = big.begin();
        int a = *it++, b = *it;
        CHECK(c5.target.adjacent(a, b));
    }

    CHECK_THROWS_AS(big_vertex_of_cycle(c5, {0, 1, 2}), std::domain_error);
}

TEST_CASE("validator accepts chandelier and tree builders (spot)") {
    auto rep = build_tree(fx::path(3), 1);
    CHECK(validate(rep).empty());
    // the leaf frames' right sides are rightmost
    std::int64_t leaf_min = INT64_MAX, internal_max = INT64_MIN;
    for (const auto& f : rep.frames) {
        if (rep.target.degree(f.vertex) == 1)
            leaf_min = std::min(leaf_min, f.x2);
        else
            internal_max = std::max(internal_max, f.x2);
    }
    CHECK(leaf_min > internal_max);
}
