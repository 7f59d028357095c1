#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rfg/burling.hpp"

using namespace rfg;
namespace fx = fixtures;

TEST_CASE("next on the singleton pair") {
    auto p0 = singleton_pair();
    auto p1 = next(p0);
    CHECK(p1.graph.n == 3);
    CHECK(p1.graph.edge_count() == 1);
    CHECK(p1.stable_sets.size() == 2);
    p1.check();

    auto p2 = next(p1);
    CHECK(p2.graph.n == 13);
    CHECK(p2.stable_sets.size() == 8);
    p2.check();

    auto p3 = next(p2);
    CHECK(p3.graph.n == 181);
    CHECK(p3.stable_sets.size() == 128);
    p3.check();

    CHECK(is_triangle_free(p1.graph));
    CHECK(is_triangle_free(p2.graph));
    CHECK(is_triangle_free(p3.graph));
}

TEST_CASE("size law matches the recurrence") {
    auto p = singleton_pair();
    long long v = 1, s = 1;
    for (int k = 0; k < 3; ++k) {
        p = next(p);
        long long v2 = v * (1 + s) + s * s;
        long long s2 = 2 * s * s;
        CHECK(p.graph.n == v2);
        CHECK((long long)p.stable_sets.size() == s2);
        v = v2;
        s = s2;
    }
}

TEST_CASE("add_op") {
    auto p = singleton_pair();
    auto k2 = add_op(p, 0);
    CHECK(k2.graph.n == 2);
    CHECK(k2.graph.adjacent(0, 1));
    CHECK(k2.stable_sets == std::vector<std::vector<int>>{{0}, {1}});
    CHECK_THROWS_AS(add_op(p, 5), std::out_of_range);

    // repeated adds build a tree with all singleton sets
    auto t = k2;
    t = add_op(t, 1);
    t = add_op(t, 0);
    CHECK(t.graph.n == 4);
    CHECK(t.graph.edge_count() == 3);
    CHECK(t.stable_sets.size() == 4);
}

TEST_CASE("join_op") {
    auto a = singleton_pair();
    auto b = singleton_pair();
    auto j = join_op(a, b, 0);
    CHECK(j.graph.n == 2);
    CHECK(j.graph.edge_count() == 0);
    CHECK(j.stable_sets == std::vector<std::vector<int>>{{0, 1}});

    auto ju = join_op(a, b, -1);
    CHECK(ju.graph.n == 2);
    CHECK(ju.stable_sets.size() == 2);

    // join is order-sensitive in its family (regression example)
    auto p1 = add_op(singleton_pair(), 0); // K2 with {{0},{1}}
    auto p2 = singleton_pair();
    auto left = join_op(p1, p2, 0);
    auto right = join_op(p2, p1, 0);
    CHECK(left.stable_sets != right.stable_sets);
}

TEST_CASE("family validity is preserved by the operators") {
    std::mt19937_64 rng(3);
    auto p = singleton_pair();
    for (int i = 0; i < 25; ++i) {
        int which = (int)(rng() % 3);
        if (which == 0 && p.graph.n < 40) {
            p = add_op(p, (int)(rng() % p.stable_sets.size()));
        } else if (which == 1 && p.graph.n < 25) {
            auto q = add_op(singleton_pair(), 0);
            p = join_op(q, p, (int)(rng() % p.stable_sets.size()));
        } else if (p.graph.n < 10) {
            p = next(p);
        }
        CHECK_NOTHROW(p.check());
    }
}

TEST_CASE("replay and certificate checking") {
    ConstructionCertificate c;
    c.root.op = CertOp::Singleton;
    c.claimed = singleton_pair();
    CHECK_NOTHROW(check_certificate(c));

    // ADD(SINGLETON, 0) -> K2 pair
    ConstructionCertificate c2;
    c2.root.op = CertOp::Add;
    c2.root.set_index = 0;
    c2.root.left = std::make_unique<CertNode>();
    c2.root.left->op = CertOp::Singleton;
    auto r = replay(c2);
    CHECK(r.pair.graph.n == 2);
    CHECK(r.op_count == 1);
    c2.claimed = r.pair;
    CHECK_NOTHROW(check_certificate(c2));

    // three-node ADD chain for P3 with singleton sets
    ConstructionCertificate c3;
    c3.root.op = CertOp::Add;
    c3.root.set_index = 1;
    c3.root.left = std::make_unique<CertNode>(c2.root.clone());
    auto r3 = replay(c3);
    CHECK(are_isomorphic(r3.pair.graph, fx::path(3)));

    // tampered set index is rejected with the node named
    ConstructionCertificate bad;
    bad.root.op = CertOp::Add;
    bad.root.set_index = 7;
    bad.root.left = std::make_unique<CertNode>();
    bad.root.left->op = CertOp::Singleton;
    try {
        replay(bad);
        CHECK(false);
    } catch (const certificate_error& e) {
        CHECK(e.node_path == "root");
    }
}

TEST_CASE("is_induced_subpair") {
    auto p0 = singleton_pair();
    auto p1 = next(p0);
    CHECK(is_induced_subpair(p0, p1).has_value());

    // ADD output embeds into NEXT of its input
    auto added = add_op(p1, 0);
    auto p2 = next(p1);
    CHECK(is_induced_subpair(added, p2).has_value());

    // JOIN of two subpairs embeds into NEXT (2-vertex instance)
    auto joined = join_op(p0, p0, 0);
    CHECK(is_induced_subpair(joined, next(p0)).has_value());

    // a triangle pair embeds nowhere in the triangle-free construction
    GraphStableSetPair tri;
    tri.graph = fx::complete(3);
    CHECK_FALSE(is_induced_subpair(tri, p2).has_value());
}

TEST_CASE("pseudo_decomposition") {
    auto c9 = pseudo_decomposition(fx::cycle(9));
    CHECK(c9.pseudo_blocks.size() == 1);
    CHECK(c9.root_vertex >= 0);

    auto bow2 = subdivide(fx::bowtie(), {2, 2, 2, 2, 2, 2});
    auto pd = pseudo_decomposition(bow2.realized);
    CHECK(pd.pseudo_blocks.size() == 2);

    auto chain2 = subdivide(fx::digon_edge_digon(), {2, 2, 2, 2, 2});
    auto pd2 = pseudo_decomposition(chain2.realized);
    CHECK(pd2.pseudo_blocks.size() == 3);
    // distance property: every base cut-vertex other than the root is at
    // distance >= 3 from the root in the subdivision
    {
        std::vector<int> dist(chain2.realized.n, -1);
        std::vector<int> q{pd2.root_vertex};
        dist[pd2.root_vertex] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi)
            for (int w : chain2.realized.adj[q[qi]])
                if (dist[w] < 0) {
                    dist[w] = dist[q[qi]] + 1;
                    q.push_back(w);
                }
        for (int c : pd2.base_tree.cut_vertices) {
            int realized = pd2.profile.branch_map[c];
            if (realized == pd2.root_vertex) continue;
            CHECK(dist[realized] >= 3);
        }
    }

    // a path is a >=2-subdivision of K2 and decides yes
    CHECK(pseudo_decomposition(fx::path(6)).pseudo_blocks.size() == 1);

    // base fails the decision algorithm
    auto k4sub = subdivide(to_multigraph(fx::complete(4)), {2, 2, 2, 2, 2, 2});
    CHECK_THROWS_AS(pseudo_decomposition(k4sub.realized), std::domain_error);
    // not a >=2-subdivision
    auto onesub = subdivide(to_multigraph(fx::complete(4)), {1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(pseudo_decomposition(onesub.realized), std::domain_error);
}

TEST_CASE("build_inner_certificate on cycles") {
    // C6 rooted anywhere: inner pair is a P3 with singletons at both ends
    auto inter = build_inner_certificate(fx::cycle(6));
    auto rep = replay(inter.certificate);
    CHECK(are_isomorphic(rep.pair.graph, fx::path(3)));
    // the family holds the singletons of the two distance-2 vertices
    int count_singletons = 0;
    for (auto& s : rep.pair.stable_sets)
        if (s.size() == 1) ++count_singletons;
    CHECK(count_singletons >= 2);

    auto inter9 = build_inner_certificate(fx::cycle(9));
    CHECK(are_isomorphic(replay(inter9.certificate).pair.graph, fx::path(6)));
}

TEST_CASE("construct on fixtures") {
    auto check_construct = [&](const SimpleGraph& h) {
        auto res = construct(h);
        auto rep = replay(res.certificate);
        REQUIRE(rep.pair.graph.n == h.n);
        // vertex_of maps certificate ids to h ids as a real isomorphism
        for (auto [u, v] : rep.pair.graph.edge_list()) CHECK(h.adjacent(res.vertex_of[u], res.vertex_of[v]));
        CHECK(rep.pair.graph.edge_count() == h.edge_count());
        rep.pair.check();
    };
    check_construct(fx::cycle(6));
    check_construct(fx::cycle(9));
    check_construct(subdivide(fx::digon_edge_digon(), {2, 2, 2, 2, 2}).realized);
    check_construct(subdivide(fx::bowtie(), {2, 2, 2, 2, 2, 2}).realized);
    check_construct(subdivide(fx::theta(), {2, 2, 2}).realized);
}

TEST_CASE("chromatic_number small cases") {
    SimpleGraph k1(1);
    CHECK(chromatic_number(k1).exact == 1);
    CHECK(chromatic_number(fx::cycle(5)).exact == 3);
    CHECK(chromatic_number(fx::cycle(6)).exact == 2);
    CHECK(chromatic_number(fx::complete(4)).exact == 4);
    CHECK(chromatic_number(fx::petersen()).exact == 3);

    auto p2 = next(next(singleton_pair()));
    CHECK(chromatic_number(p2.graph).exact == 3);

    // budget signal carries bounds
    auto big = next(next(next(singleton_pair())));
    auto r = chromatic_number(big.graph, 10);
    CHECK_FALSE(r.exact.has_value());
    CHECK(r.lower >= 1);
    CHECK(r.upper >= r.lower);
}

TEST_CASE("size law holds through step 4") {
    auto p = singleton_pair();
    long long v = 1, s = 1;
    for (int k = 0; k < 4; ++k) {
        p = next(p);
        long long v2 = v * (1 + s) + s * s;
        long long s2 = 2 * s * s;
        CHECK(p.graph.n == v2);
        CHECK((long long)p.stable_sets.size() == s2);
        v = v2;
        s = s2;
    }
}

TEST_CASE("empty joins expand to their add/join/induce simulation") {
    // certificates from construct contain first-class empty joins
    for (auto h : {fixtures::cycle(6), subdivide(fixtures::bowtie(), {2, 2, 2, 2, 2, 2}).realized}) {
        auto res = construct(h);
        ConstructionCertificate expanded;
        expanded.root = expand_empty_joins(res.certificate.root);
        auto a = replay(res.certificate);
        auto b = replay(expanded);
        CHECK(a.pair.graph == b.pair.graph);
        CHECK(a.pair.stable_sets == b.pair.stable_sets);
    }
    // and a hand-made empty join
    ConstructionCertificate c;
    c.root.op = CertOp::Join;
    c.root.set_index = -1;
    c.root.left = std::make_unique<CertNode>();
    c.root.left->op = CertOp::Add;
    c.root.left->set_index = 0;
    c.root.left->left = std::make_unique<CertNode>();
    c.root.left->left->op = CertOp::Singleton;
    c.root.right = std::make_unique<CertNode>();
    c.root.right->op = CertOp::Singleton;
    ConstructionCertificate e;
    e.root = expand_empty_joins(c.root);
    CHECK(replay(c).pair.graph == replay(e).pair.graph);
    CHECK(replay(c).pair.stable_sets == replay(e).pair.stable_sets);
}
