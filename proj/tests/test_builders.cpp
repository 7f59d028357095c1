#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rfg/frame.hpp"
#include "rfg/frame_builders.hpp"
#include "rfg/k4_gallery.hpp"
#include "rfg/represent.hpp"
#include "rfg/svg.hpp"

using namespace rfg;
namespace fx = fixtures;

static void check_rep(const FrameRepresentation& rep, const SimpleGraph& want) {
    auto vs = validate(rep);
    if (!vs.empty()) {
        for (auto& v : vs) MESSAGE(v.detail, " frames ", v.frames.size() ? v.frames[0] : -1);
    }
    REQUIRE(vs.empty());
    CHECK(are_isomorphic(rep.target, want));
}

TEST_CASE("build_tree on random trees") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + (int)(rng() % 15);
        auto t = fx::random_tree(rng, n);
        auto rep = build_tree(t, 0);
        REQUIRE(validate(rep).empty());
        CHECK(rep.target == t);
    }
}

TEST_CASE("build_chandelier fixtures") {
    check_rep(build_chandelier(fx::cycle(5), 2), fx::cycle(5));
    check_rep(build_chandelier(fx::cycle(4), 0), fx::cycle(4));
    check_rep(build_chandelier(fx::cycle(3), 1), fx::cycle(3));

    // spider with 3 legs of length 2 and a pivot over the leaf ends
    SimpleGraph spider(8);
    spider.add_edge(0, 1);
    spider.add_edge(1, 2);
    spider.add_edge(0, 3);
    spider.add_edge(3, 4);
    spider.add_edge(0, 5);
    spider.add_edge(5, 6);
    for (int leaf : {2, 4, 6}) spider.add_edge(7, leaf);
    check_rep(build_chandelier(spider, 7), spider);

    CHECK_THROWS_AS(build_chandelier(fx::path(4), 0), std::domain_error);
}

TEST_CASE("build_chandelier on random luxury chandeliers") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 40; ++iter) {
        auto t = fx::random_tree(rng, 2 + (int)(rng() % 10));
        // pivot adjacent to all leaves of t
        SimpleGraph h(t.n + 1);
        for (auto [u, v] : t.edge_list()) h.add_edge(u, v);
        bool any = false;
        for (int v = 0; v < t.n; ++v)
            if (t.degree(v) == 1) {
                h.add_edge(t.n, v);
                any = true;
            }
        if (!any) continue;
        check_rep(build_chandelier(h, t.n), h);
    }
}

TEST_CASE("add_twin") {
    // twin of an end of K2
    auto rep = build_tree(fx::path(2), 0);
    auto twinned = add_twin(rep, 0);
    REQUIRE(validate(twinned).empty());
    CHECK(twinned.target.n == 3);
    CHECK(twinned.target.adjacent(0, 1));
    CHECK(twinned.target.adjacent(2, 1));
    CHECK_FALSE(twinned.target.adjacent(0, 2));

    // twin in C4
    auto c4 = build_chandelier(fx::cycle(4), 0);
    auto tw = add_twin(c4, 1);
    REQUIRE(validate(tw).empty());
    CHECK(tw.target.n == 5);
    CHECK(tw.target.adj[4] == tw.target.adj[1]);

    // twin of an isolated vertex
    FrameRepresentation lone;
    lone.target = SimpleGraph(1);
    lone.frames = {Frame{0, 2, 0, 2, 0}};
    auto tw2 = add_twin(lone, 0);
    REQUIRE(validate(tw2).empty());
    CHECK(tw2.target.edge_count() == 0);
}

TEST_CASE("twins iterated keep validity") {
    std::mt19937_64 rng(23);
    auto rep = build_chandelier(fx::cycle(6), 0);
    for (int i = 0; i < 6; ++i) {
        int v = (int)(rng() % rep.target.n);
        rep = add_twin(rep, v);
        REQUIRE(validate(rep).empty());
    }
}

TEST_CASE("glue_chandelier") {
    // glue a C5 chandelier onto a represented C5: two cycles sharing a vertex
    auto rep = build_chandelier(fx::cycle(5), 0);
    auto glued = glue_chandelier(rep, 3, fx::cycle(5), 2);
    REQUIRE(validate(glued).empty());
    SimpleGraph want(9); // C5 0..4 plus a C5 through vertex 3
    for (int i = 0; i < 5; ++i) want.add_edge(i, (i + 1) % 5);
    want.add_edge(3, 5);
    want.add_edge(5, 6);
    want.add_edge(6, 7);
    want.add_edge(7, 8);
    want.add_edge(8, 3);
    CHECK(are_isomorphic(glued.target, want));

    // glue onto K1 gives the chandelier itself
    FrameRepresentation k1;
    k1.target = SimpleGraph(1);
    k1.frames = {Frame{0, 2, 0, 2, 0}};
    auto alone = glue_chandelier(k1, 0, fx::cycle(6), 1);
    REQUIRE(validate(alone).empty());
    CHECK(are_isomorphic(alone.target, fx::cycle(6)));
}

TEST_CASE("glue iterated along a chain of blocks") {
    auto rep = build_chandelier(fx::cycle(4), 0);
    for (int step = 0; step < 3; ++step) {
        int v = rep.target.n - 1;
        rep = glue_chandelier(rep, v, fx::cycle(4), 0);
        REQUIRE(validate(rep).empty());
    }
    CHECK(rep.target.n == 4 + 3 * 3);
}

TEST_CASE("add_pendant_path") {
    FrameRepresentation k1;
    k1.target = SimpleGraph(1);
    k1.frames = {Frame{0, 2, 0, 2, 0}};
    auto k2 = add_pendant_path(k1, 0, 1);
    REQUIRE(validate(k2).empty());
    CHECK(are_isomorphic(k2.target, fx::path(2)));

    auto c6 = build_chandelier(fx::cycle(6), 0);
    auto tadpole = add_pendant_path(c6, 2, 3);
    REQUIRE(validate(tadpole).empty());
    CHECK(tadpole.target.n == 9);
    CHECK(tadpole.target.degree(2) == 3);

    // two pendant paths on the same vertex
    auto two = add_pendant_path(tadpole, 2, 2);
    REQUIRE(validate(two).empty());
    CHECK(two.target.degree(2) == 4);
}

TEST_CASE("insert_path on K2") {
    auto rep = build_tree(fx::path(2), 0);
    auto p3 = insert_path(rep, 0, 1, 1);
    REQUIRE(p3.has_value());
    REQUIRE(validate(*p3).empty());
    CHECK(are_isomorphic(p3->target, fx::path(3)));

    auto p5 = insert_path(rep, 0, 1, 3);
    REQUIRE(p5.has_value());
    CHECK(are_isomorphic(p5->target, fx::path(5)));
}

TEST_CASE("insert_path subdivides a C4 edge into C6") {
    auto rep = build_chandelier(fx::cycle(4), 0);
    bool done = false;
    for (auto [u, v] : rep.target.edge_list()) {
        auto r = insert_path(rep, u, v, 2);
        if (r) {
            REQUIRE(validate(*r).empty());
            CHECK(are_isomorphic(r->target, fx::cycle(6)));
            done = true;
            break;
        }
    }
    CHECK(done);
}

TEST_CASE("insert_path refuses a blocked zone") {
    // telescope of three frames all pierced by one flat frame: the middle
    // pierced frame has its zone traversed by the innermost one
    FrameRepresentation rep;
    rep.target = SimpleGraph(4);
    rep.target.add_edge(0, 3);
    rep.target.add_edge(1, 3);
    rep.target.add_edge(2, 3);
    rep.frames = {
        Frame{0, 100, 0, 100, 0},  // outermost
        Frame{5, 50, 5, 95, 1},    // middle
        Frame{10, 30, 10, 90, 2},  // innermost
        Frame{15, 120, 40, 60, 3}, // pierces all three
    };
    REQUIRE(validate(rep).empty());
    CHECK_FALSE(insert_path(rep, 1, 3, 1).has_value());
    // the innermost and outermost edges are still subdividable
    CHECK(insert_path(rep, 2, 3, 1).has_value());
    CHECK(insert_path(rep, 0, 3, 1).has_value());
}

TEST_CASE("build_k4_subdivision over sample profiles") {
    auto check_profile = [&](std::array<int, 6> prof) {
        auto rep = build_k4_subdivision(prof);
        REQUIRE(validate(rep).empty());
        auto want = subdivide(to_multigraph(fx::complete(4)), std::vector<int>(prof.begin(), prof.end()));
        CHECK(rep.target == want.realized);
    };
    check_profile({1, 0, 0, 0, 0, 1}); // type 2 matching
    check_profile({0, 1, 0, 0, 1, 0}); // another matching
    check_profile({0, 0, 1, 1, 0, 0});
    check_profile({2, 0, 0, 0, 0, 2});
    check_profile({0, 0, 0, 1, 1, 1}); // triangle base itself
    check_profile({0, 0, 0, 2, 2, 2}); // triangle with counts 2
    check_profile({1, 0, 0, 1, 0, 1}); // path type 3
    check_profile({0, 0, 1, 1, 1, 1}); // type 4 sharing vertex 0's non-subdivided pair
    check_profile({2, 1, 1, 0, 0, 2}); // type 4 with mixed counts, sharing vertex 1
    CHECK_THROWS_AS(build_k4_subdivision({1, 1, 1, 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(build_k4_subdivision({0, 0, 0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("build_ge2_subdivision fixtures") {
    Multigraph digon(2);
    digon.add_edge(0, 1);
    digon.add_edge(0, 1);
    auto rep = build_ge2_subdivision(digon, {2, 2});
    REQUIRE(validate(rep).empty());
    CHECK(are_isomorphic(rep.target, fx::cycle(6)));

    auto bow = build_ge2_subdivision(fx::bowtie(), {2, 2, 2, 2, 2, 2});
    REQUIRE(validate(bow).empty());
    CHECK(bow.target.n == 17); // 5 + 12

    auto th = build_ge2_subdivision(fx::theta(), {2, 2, 2});
    REQUIRE(validate(th).empty());
    CHECK(th.target.n == 8);

    auto chain = build_ge2_subdivision(fx::digon_edge_digon(), {2, 3, 2, 2, 3});
    REQUIRE(validate(chain).empty());

    CHECK_THROWS_AS(build_ge2_subdivision(to_multigraph(fx::complete(4)), {2, 2, 2, 2, 2, 2}), std::domain_error);
    CHECK_THROWS_AS(build_ge2_subdivision(digon, {1, 2}), std::invalid_argument);
}

TEST_CASE("emit_svg") {
    auto rep = build_chandelier(fx::cycle(5), 0);
    auto svg = emit_svg(rep);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '<') > 5);
    size_t rects = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) {
        ++rects;
        pos += 5;
    }
    CHECK(rects == 5);
    // invalid representations get violation classes
    FrameRepresentation bad;
    bad.target = SimpleGraph(2);
    bad.frames = {Frame{0, 10, 0, 10, 0}, Frame{5, 15, 2, 8, 1}};
    CHECK(emit_svg(bad).find("violation") != std::string::npos);
}

TEST_CASE("builder closure fuzz: every output validates and matches its target") {
    // trees, chandeliers and glue/twin/pendant sequences; also asserts no
    // output ever realizes the 1-subdivision of K4
    std::mt19937_64 rng(20240817);
    auto one_sub_k4 = subdivide(to_multigraph(fx::complete(4)), {1, 1, 1, 1, 1, 1}).realized;
    long long cases = 0;
    auto check_one = [&](const FrameRepresentation& rep) {
        ++cases;
        REQUIRE(validate(rep).empty());
        if (rep.target.n == one_sub_k4.n && rep.target.edge_count() == one_sub_k4.edge_count())
            CHECK_FALSE(are_isomorphic(rep.target, one_sub_k4));
    };

    for (int iter = 0; iter < 4200; ++iter) {
        int n = 1 + (int)(rng() % 9);
        auto t = fx::random_tree(rng, n);
        check_one(build_tree(t, (int)(rng() % n)));
    }
    for (int iter = 0; iter < 4200; ++iter) {
        auto t = fx::random_tree(rng, 2 + (int)(rng() % 8));
        SimpleGraph h(t.n + 1);
        for (auto [u, v] : t.edge_list()) h.add_edge(u, v);
        for (int v = 0; v < t.n; ++v)
            if (t.degree(v) == 1) h.add_edge(t.n, v);
        if (t.n == 1) continue;
        check_one(build_chandelier(h, t.n));
    }
    for (int iter = 0; iter < 800; ++iter) {
        auto rep = build_chandelier(fx::cycle(4 + (int)(rng() % 4)), 0);
        for (int step = 0; step < 3; ++step) {
            int which = (int)(rng() % 3);
            int v = (int)(rng() % rep.target.n);
            if (which == 0) {
                rep = add_twin(rep, v);
            } else if (which == 1) {
                rep = add_pendant_path(rep, v, 1 + (int)(rng() % 3));
            } else {
                rep = glue_chandelier(rep, v, fx::cycle(4 + (int)(rng() % 3)), 0);
            }
            check_one(rep);
        }
    }
    CHECK(cases >= 10000);
}
