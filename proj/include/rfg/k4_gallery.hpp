#pragma once

// Representations for the representable triangle-free subdivisions of K4:
// two hand-laid base representations plus path insertion, with K4 symmetry
// used to rotate any admissible profile onto the bases' capabilities.

#include <array>
#include <optional>
#include <stdexcept>

#include "rfg/decision.hpp"
#include "rfg/frame_builders.hpp"
#include "rfg/subdivision.hpp"

namespace rfg {

namespace detail {

inline int k4_edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < 6; ++e)
        if (k4_edges()[e] == std::make_pair(u, v)) return e;
    throw std::out_of_range("not a K4 edge");
}

// Base M: K4 with the matching {01, 23} subdivided once.
// Tags: 0..3 the K4 vertices, 4 on the 01 path, 5 on the 23 path.
// The nest 5 < 0 < 1 is pierced by the long frames 2 and 3; frame 4 pierces
// 0 and 1 only. Certified by the validator in the test suite.
inline FrameRepresentation k4_base_matching() {
    FrameRepresentation rep;
    rep.target = subdivide(k4_graph(), {1, 0, 0, 0, 0, 1}).realized;
    rep.frames = {
        Frame{3, 33, 3, 97, 1},   // K4 vertex 1
        Frame{5, 30, 5, 95, 0},   // K4 vertex 0
        Frame{7, 28, 10, 80, 5},  // subdivision vertex on 23
        Frame{10, 150, 15, 30, 2}, // K4 vertex 2
        Frame{20, 160, 40, 70, 3}, // K4 vertex 3
        Frame{12, 40, 85, 90, 4}, // subdivision vertex on 01
    };
    return rep;
}

// Base T: K4 with the triangle {12, 13, 23} subdivided once.
// Tags: 0..3 the K4 vertices, 4 on 12, 5 on 13, 6 on 23.
inline FrameRepresentation k4_base_triangle() {
    FrameRepresentation rep;
    rep.target = subdivide(k4_graph(), {0, 0, 0, 1, 1, 1}).realized;
    rep.frames = {
        Frame{0, 200, 0, 200, 6},   // subdivision vertex on 23
        Frame{10, 60, 10, 190, 1},  // K4 vertex 1
        Frame{20, 100, 20, 120, 0}, // K4 vertex 0 (the apex)
        Frame{25, 70, 30, 60, 4},   // subdivision vertex on 12
        Frame{30, 75, 70, 110, 5},  // subdivision vertex on 13
        Frame{65, 210, 40, 50, 2},  // K4 vertex 2
        Frame{68, 220, 80, 100, 3}, // K4 vertex 3
    };
    return rep;
}

// Remap a built representation onto the canonical numbering of
// subdivide(K4, profile), undoing the symmetry sigma that was applied.
// sigma maps original K4 vertices to the base's vertices.
inline FrameRepresentation k4_retag(const FrameRepresentation& built, const std::array<int, 6>& profile,
                                    const std::array<int, 4>& sigma) {
    SubdivisionProfile want = subdivide(k4_graph(), std::vector<int>(profile.begin(), profile.end()));
    SubdivisionProfile have = subdivision_base(built.target);

    // built branch vertices keep tags 0..3 (inserted vertices get fresh ids)
    std::vector<int> map(built.target.n, -1);
    for (int v = 0; v < 4; ++v) map[v] = -1; // filled below
    for (int orig = 0; orig < 4; ++orig) map[sigma[orig]] = orig;

    // walk each original edge's path on both sides
    for (int e = 0; e < 6; ++e) {
        auto [u, v] = k4_edges()[e];
        const auto& wpath = want.path_map[e]; // u ... v in realized ids
        int bu = sigma[u], bv = sigma[v];
        // locate the built path between bu and bv
        const std::vector<int>* bpath = nullptr;
        bool flip = false;
        for (size_t i = 0; i < have.path_map.size(); ++i) {
            int a = have.branch_map[have.base.edges[i].first];
            int b = have.branch_map[have.base.edges[i].second];
            if (a == bu && b == bv) {
                bpath = &have.path_map[i];
                flip = false;
            } else if (a == bv && b == bu) {
                bpath = &have.path_map[i];
                flip = true;
            }
        }
        if (!bpath || bpath->size() != wpath.size())
            throw std::runtime_error("k4_retag: built graph does not match the requested profile");
        for (size_t j = 1; j + 1 < bpath->size(); ++j) {
            int built_id = flip ? (*bpath)[bpath->size() - 1 - j] : (*bpath)[j];
            map[built_id] = wpath[j];
        }
    }

    FrameRepresentation out;
    out.target = want.realized;
    out.frames = built.frames;
    for (auto& f : out.frames) {
        if (map[f.vertex] < 0) throw std::runtime_error("k4_retag: unmapped vertex");
        f.vertex = map[f.vertex];
    }
    return out;
}

} // namespace detail

// Build a valid representation of the subdivision of K4 described by the
// profile (counts per edge in the order 01 02 03 12 13 23). Requires the
// profile to be in the representable class.
inline FrameRepresentation build_k4_subdivision(const std::array<int, 6>& profile) {
    if (k4_status(profile).cls != K4Class::RestrictedFrameGraph)
        throw std::domain_error("build_k4_subdivision: profile is not in the representable class");

    std::array<int, 4> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        std::array<int, 6> p{};
        for (int e = 0; e < 6; ++e) {
            auto [u, v] = k4_edges()[e];
            p[detail::k4_edge_index(perm[u], perm[v])] = profile[e];
        }
        // route 1: matching base needs 01 and 23 subdivided, 02 and 03 not
        if (p[0] >= 1 && p[5] >= 1 && p[1] == 0 && p[2] == 0) {
            FrameRepresentation rep = detail::k4_base_matching();
            bool ok = true;
            auto apply = [&](int a, int b, int k) {
                if (!ok || k <= 0) return;
                auto r = insert_path(rep, a, b, k);
                if (r) rep = *r; else ok = false;
            };
            apply(1, 2, p[3]);     // K4 edge 12
            apply(1, 3, p[4]);     // K4 edge 13
            apply(5, 2, p[5] - 1); // extend the 23 path
            apply(0, 4, p[0] - 1); // extend the 01 path
            if (ok && validate(rep).empty()) return detail::k4_retag(rep, profile, perm);
        }
        // route 2: triangle base needs exactly the triangle 12, 13, 23 subdivided
        if (p[3] >= 1 && p[4] >= 1 && p[5] >= 1 && p[0] == 0 && p[1] == 0 && p[2] == 0) {
            FrameRepresentation rep = detail::k4_base_triangle();
            bool ok = true;
            auto apply = [&](int a, int b, int k) {
                if (!ok || k <= 0) return;
                auto r = insert_path(rep, a, b, k);
                if (r) rep = *r; else ok = false;
            };
            apply(6, 2, p[5] - 1); // extend the 23 path (right retraction on frame 2)
            apply(4, 2, p[3] - 1); // extend the 12 path
            apply(5, 3, p[4] - 1); // extend the 13 path
            if (ok && validate(rep).empty()) return detail::k4_retag(rep, profile, perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw std::runtime_error("build_k4_subdivision: no construction route found");
}

} // namespace rfg
