#pragma once

// Exact integer geometry for frame representations. A frame is the boundary
// of an axis-parallel box. In a valid representation every intersecting pair
// follows one canonical pattern: with A the taller frame,
//   A.x1 < B.x1 < A.x2 < B.x2   and   A.y1 < B.y1 < B.y2 < A.y2,
// so B's left side sits inside A and B pierces A's right side through B's
// top and bottom. Everything else is either disjoint or nested.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfg/graph.hpp"

namespace rfg {

struct Frame {
    std::int64_t x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    int vertex = -1;

    bool well_formed() const { return x1 < x2 && y1 < y2; }
};

enum class Containment { Disjoint, AInsideB, BInsideA, Intersecting };

inline bool boxes_overlap(const Frame& a, const Frame& b) {
    return a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2;
}

inline bool strictly_inside(const Frame& inner, const Frame& outer) {
    return outer.x1 < inner.x1 && inner.x2 < outer.x2 && outer.y1 < inner.y1 && inner.y2 < outer.y2;
}

// Boundary curves intersect iff the closed boxes overlap and neither box is
// strictly inside the other's open box.
inline bool frames_intersect(const Frame& a, const Frame& b) {
    if (!boxes_overlap(a, b)) return false;
    if (strictly_inside(a, b) || strictly_inside(b, a)) return false;
    return true;
}

inline Containment containment(const Frame& a, const Frame& b) {
    if (strictly_inside(a, b)) return Containment::AInsideB;
    if (strictly_inside(b, a)) return Containment::BInsideA;
    if (boxes_overlap(a, b)) return Containment::Intersecting;
    return Containment::Disjoint;
}

// Canonical pattern with a as the taller (pierced) frame.
inline bool canonical_pair(const Frame& a, const Frame& b) {
    return a.x1 < b.x1 && b.x1 < a.x2 && a.x2 < b.x2 && a.y1 < b.y1 && b.y2 < a.y2 && b.y1 < b.y2;
}

// Orientation of an intersecting pair: returns (pierced, piercer) indices
// into {0 = a, 1 = b}, or nullopt when the intersection is non-canonical.
inline std::optional<std::pair<int, int>> canonical_orientation(const Frame& a, const Frame& b) {
    if (canonical_pair(a, b)) return std::make_pair(0, 1);
    if (canonical_pair(b, a)) return std::make_pair(1, 0);
    return std::nullopt;
}

struct FrameRepresentation {
    std::vector<Frame> frames;
    SimpleGraph target;

    const Frame& frame_of(int vertex) const {
        for (const auto& f : frames)
            if (f.vertex == vertex) return f;
        throw std::out_of_range("no frame for vertex " + std::to_string(vertex));
    }
};

// ---------------------------------------------------------------- validator

enum class ViolationKind {
    BadFrame,            // degenerate coordinates or bad vertex tag
    GeneralPosition,     // shared x or y coordinate between two frames
    CornerContact,       // clause 1
    LeftSideContact,     // clause 2
    RightSidePartial,    // clause 3
    NonCanonical,        // intersecting but in no recognised pattern
    FrameInZone,         // clause 4
    GraphMismatch,
};

struct Violation {
    ViolationKind kind;
    int clause;            // 1..4, or 0 when not tied to a clause
    std::vector<int> frames; // indices into the representation's frame list
    std::string detail;
};

namespace detail {

// does the vertical segment x = x0, y in [ya, yb] touch the frame boundary of f?
inline bool vseg_hits_frame(std::int64_t x0, std::int64_t ya, std::int64_t yb, const Frame& f) {
    if (x0 == f.x1 || x0 == f.x2) {
        // collinear with a vertical side
        if (std::max(ya, f.y1) <= std::min(yb, f.y2)) return true;
    }
    if (x0 > f.x1 && x0 < f.x2) {
        // crosses horizontal sides?
        if ((f.y1 >= ya && f.y1 <= yb) || (f.y2 >= ya && f.y2 <= yb)) return true;
    }
    return false;
}

inline bool hseg_hits_frame(std::int64_t y0, std::int64_t xa, std::int64_t xb, const Frame& f) {
    if (y0 == f.y1 || y0 == f.y2) {
        if (std::max(xa, f.x1) <= std::min(xb, f.x2)) return true;
    }
    if (y0 > f.y1 && y0 < f.y2) {
        if ((f.x1 >= xa && f.x1 <= xb) || (f.x2 >= xa && f.x2 <= xb)) return true;
    }
    return false;
}

inline bool point_on_frame(std::int64_t x, std::int64_t y, const Frame& f) {
    bool on_v = (x == f.x1 || x == f.x2) && y >= f.y1 && y <= f.y2;
    bool on_h = (y == f.y1 || y == f.y2) && x >= f.x1 && x <= f.x2;
    return on_v || on_h;
}

} // namespace detail

// Check Definition 2.2 on a representation. Returns one record per breach;
// an empty list means the representation is valid.
inline std::vector<Violation> validate(const FrameRepresentation& rep) {
    std::vector<Violation> out;
    const auto& fs = rep.frames;
    int k = static_cast<int>(fs.size());

    bool tags_ok = true;
    {
        std::vector<int> count(rep.target.n, 0);
        for (int i = 0; i < k; ++i) {
            if (!fs[i].well_formed()) {
                out.push_back({ViolationKind::BadFrame, 0, {i}, "coordinates not strictly ordered"});
                tags_ok = false;
            }
            if (fs[i].vertex < 0 || fs[i].vertex >= rep.target.n) {
                out.push_back({ViolationKind::BadFrame, 0, {i}, "vertex tag out of range"});
                tags_ok = false;
            } else if (++count[fs[i].vertex] > 1) {
                out.push_back({ViolationKind::BadFrame, 0, {i}, "duplicate vertex tag"});
                tags_ok = false;
            }
        }
        if (tags_ok)
            for (int v = 0; v < rep.target.n; ++v)
                if (count[v] == 0) {
                    out.push_back({ViolationKind::BadFrame, 0, {}, "vertex " + std::to_string(v) + " has no frame"});
                    tags_ok = false;
                }
    }

    // general position: all x coordinates pairwise distinct, same for y
    {
        std::set<std::int64_t> xs, ys;
        bool xdup = false, ydup = false;
        for (const auto& f : fs) {
            if (!xs.insert(f.x1).second || !xs.insert(f.x2).second) xdup = true;
            if (!ys.insert(f.y1).second || !ys.insert(f.y2).second) ydup = true;
        }
        if (xdup) out.push_back({ViolationKind::GeneralPosition, 0, {}, "repeated x coordinate"});
        if (ydup) out.push_back({ViolationKind::GeneralPosition, 0, {}, "repeated y coordinate"});
    }

    // pairwise analysis
    std::vector<std::pair<int, int>> canonical; // (pierced, piercer) frame indices
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const Frame &a = fs[i], &b = fs[j];
            if (!frames_intersect(a, b)) continue;
            if (canonical_pair(a, b)) {
                canonical.emplace_back(i, j);
                continue;
            }
            if (canonical_pair(b, a)) {
                canonical.emplace_back(j, i);
                continue;
            }
            // non-canonical intersection: attribute a clause
            bool attributed = false;
            for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                const Frame &f = fs[x], &g = fs[y];
                for (auto [cx, cy] : {std::pair{f.x1, f.y1}, std::pair{f.x1, f.y2}, std::pair{f.x2, f.y1},
                                      std::pair{f.x2, f.y2}})
                    if (detail::point_on_frame(cx, cy, g)) {
                        out.push_back({ViolationKind::CornerContact, 1, {x, y}, "corner touches another frame"});
                        attributed = true;
                        break;
                    }
                if (attributed) break;
            }
            for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                const Frame &f = fs[x], &g = fs[y];
                if (detail::vseg_hits_frame(f.x1, f.y1, f.y2, g)) {
                    out.push_back({ViolationKind::LeftSideContact, 2, {x, y}, "left side meets another frame"});
                    attributed = true;
                }
            }
            for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                const Frame &f = fs[x], &g = fs[y];
                if (detail::vseg_hits_frame(f.x2, f.y1, f.y2, g)) {
                    // the right side must cross both the top and the bottom of g
                    bool crosses_top = g.y2 > f.y1 && g.y2 < f.y2 && f.x2 > g.x1 && f.x2 < g.x2;
                    bool crosses_bottom = g.y1 > f.y1 && g.y1 < f.y2 && f.x2 > g.x1 && f.x2 < g.x2;
                    if (!(crosses_top && crosses_bottom)) {
                        out.push_back(
                            {ViolationKind::RightSidePartial, 3, {x, y}, "right side does not pierce top and bottom"});
                        attributed = true;
                    }
                }
            }
            if (!attributed)
                out.push_back({ViolationKind::NonCanonical, 0, {i, j}, "intersection matches no allowed pattern"});
        }
    }

    // clause 4: for each canonical pair, the intersection zone of the two
    // bounded regions is [B.x1, A.x2] x [B.y1, B.y2]; no third frame's box
    // may lie entirely inside it.
    for (auto [ai, bi] : canonical) {
        const Frame &a = fs[ai], &b = fs[bi];
        for (int t = 0; t < k; ++t) {
            if (t == ai || t == bi) continue;
            const Frame& c = fs[t];
            if (c.x1 >= b.x1 && c.x2 <= a.x2 && c.y1 >= b.y1 && c.y2 <= b.y2)
                out.push_back({ViolationKind::FrameInZone, 4, {ai, bi, t}, "frame inside a pairwise intersection zone"});
        }
    }

    // extracted intersection graph must equal the target
    if (tags_ok) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool geo = frames_intersect(fs[i], fs[j]);
                bool want = rep.target.adjacent(fs[i].vertex, fs[j].vertex);
                if (geo != want)
                    out.push_back({ViolationKind::GraphMismatch, 0, {i, j},
                                   geo ? "unexpected intersection" : "missing intersection"});
            }
    }
    return out;
}

inline bool is_valid(const FrameRepresentation& rep) { return validate(rep).empty(); }

// Intersection graph of a set of frames whose vertex tags are 0..k-1.
inline SimpleGraph intersection_graph(const std::vector<Frame>& frames) {
    {
        std::set<std::int64_t> xs, ys;
        for (const auto& f : frames) {
            if (!f.well_formed()) throw std::domain_error("intersection_graph: degenerate frame");
            if (!xs.insert(f.x1).second || !xs.insert(f.x2).second || !ys.insert(f.y1).second ||
                !ys.insert(f.y2).second)
                throw std::domain_error("intersection_graph: general position violated");
        }
    }
    int k = static_cast<int>(frames.size());
    std::vector<int> tag(k);
    std::vector<char> seen(k, 0);
    for (int i = 0; i < k; ++i) {
        int v = frames[i].vertex;
        if (v < 0 || v >= k || seen[v]) throw std::domain_error("intersection_graph: vertex tags must be 0..k-1");
        seen[v] = 1;
        tag[i] = v;
    }
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (frames_intersect(frames[i], frames[j])) g.add_edge(tag[i], tag[j]);
    return g;
}

// All vertices of an induced cycle whose frame contains the frame of every
// cycle vertex outside their closed neighborhood (the "big" vertices).
inline std::set<int> big_vertex_of_cycle(const FrameRepresentation& rep, const std::vector<int>& cycle) {
    int len = static_cast<int>(cycle.size());
    if (len < 3) throw std::domain_error("big_vertex_of_cycle: need a cycle of length >= 3");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != len) throw std::domain_error("big_vertex_of_cycle: repeated vertex");
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (rep.target.adjacent(cycle[i], cycle[j]) != consecutive)
                throw std::domain_error("big_vertex_of_cycle: not an induced cycle of the target");
        }
    std::set<int> big;
    for (int i = 0; i < len; ++i) {
        int v = cycle[i];
        const Frame& fv = rep.frame_of(v);
        bool ok = true;
        for (int j = 0; j < len && ok; ++j) {
            int u = cycle[j];
            if (u == v || rep.target.adjacent(u, v)) continue;
            if (containment(rep.frame_of(u), fv) != Containment::AInsideB) ok = false;
        }
        if (ok) big.insert(v);
    }
    return big;
}

} // namespace rfg
