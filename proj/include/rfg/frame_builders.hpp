#pragma once

// Constructive side of the frame model: tree and chandelier layouts, twins,
// gluing at a corner region, pendant paths, path insertion gadgets, the K4
// subdivision gallery and the full yes-branch pipeline.
//
// All builders work over integer coordinates. Whenever an operation needs
// room it first multiplies every coordinate by a factor; validity only
// depends on coordinate order, so outputs are re-compressed afterwards.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rfg/decision.hpp"
#include "rfg/frame.hpp"
#include "rfg/graph.hpp"
#include "rfg/shape.hpp"
#include "rfg/subdivision.hpp"

namespace rfg {

// Order-preserving compression of all coordinates (axis-wise).
inline void normalize_coordinates(FrameRepresentation& rep) {
    std::vector<std::int64_t> xs, ys;
    for (const auto& f : rep.frames) {
        xs.push_back(f.x1);
        xs.push_back(f.x2);
        ys.push_back(f.y1);
        ys.push_back(f.y2);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    auto rank = [](const std::vector<std::int64_t>& v, std::int64_t c) {
        return static_cast<std::int64_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };
    for (auto& f : rep.frames) {
        f.x1 = rank(xs, f.x1);
        f.x2 = rank(xs, f.x2);
        f.y1 = rank(ys, f.y1);
        f.y2 = rank(ys, f.y2);
    }
}

inline void rescale(FrameRepresentation& rep, std::int64_t m) {
    for (auto& f : rep.frames) {
        f.x1 *= m;
        f.x2 *= m;
        f.y1 *= m;
        f.y2 *= m;
    }
}

namespace detail {

struct TreeLayout {
    std::vector<Frame> frames; // tagged with tree-local vertex ids
    std::int64_t ell;          // the line every "far" leaf crosses
};

// Rooted tree layout: the root has the leftmost left side, parent frames are
// pierced through their right side by their children, and the frames of the
// designated far leaves all cross the vertical line ell.
inline TreeLayout tree_layout(const SimpleGraph& t, int root, const std::vector<char>& far) {
    if (!is_tree(t)) throw std::domain_error("tree_layout: input is not a tree");
    for (int v = 0; v < t.n; ++v)
        if (far[v] && (t.degree(v) > 1 || v == root)) throw std::domain_error("tree_layout: far set must be non-root leaves");

    int n = t.n;
    std::int64_t W = 4 * (n + 2);

    std::vector<int> depth(n, 0), parent(n, -1), order; // preorder
    std::vector<std::int64_t> y1(n), y2(n);
    std::int64_t ycounter = 0;
    int maxdepth = 0;
    {
        // iterative DFS assigning y brackets and depths
        std::vector<std::pair<int, int>> stack{{root, 0}}; // (vertex, phase)
        std::vector<int> it(n, 0);
        std::vector<std::vector<int>> children(n);
        std::vector<char> seen(n, 0);
        // build children lists by BFS first
        std::vector<int> q{root};
        seen[root] = 1;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int u = q[qi];
            for (int v : t.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    maxdepth = std::max(maxdepth, depth[v]);
                    children[u].push_back(v);
                    q.push_back(v);
                }
        }
        std::vector<int> st{root};
        std::vector<int> ci(n, 0);
        y1[root] = ycounter++;
        order.push_back(root);
        while (!st.empty()) {
            int u = st.back();
            if (ci[u] < static_cast<int>(children[u].size())) {
                int v = children[u][ci[u]++];
                y1[v] = ycounter++;
                order.push_back(v);
                st.push_back(v);
            } else {
                y2[u] = ycounter++;
                st.pop_back();
            }
        }
    }

    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    TreeLayout out;
    out.ell = static_cast<std::int64_t>(maxdepth + 2) * W - 1;
    out.frames.resize(n);
    for (int v = 0; v < n; ++v) {
        Frame f;
        f.vertex = v;
        f.y1 = y1[v];
        f.y2 = y2[v];
        if (v == root) {
            f.x1 = 0;
        } else {
            f.x1 = static_cast<std::int64_t>(depth[v] - 1) * W + n + 1 + rank[v];
        }
        if (far[v]) {
            f.x2 = static_cast<std::int64_t>(maxdepth + 2) * W + rank[v];
        } else {
            f.x2 = static_cast<std::int64_t>(depth[v] + 1) * W + rank[v];
        }
        out.frames[v] = f;
    }
    return out;
}

// Two mutually crossing frames both spanning the far line; used when the
// chandelier tree is a single edge (the pivot closes a triangle).
inline TreeLayout k2_far_layout() {
    TreeLayout out;
    out.ell = 3;
    out.frames = {Frame{0, 4, 0, 6, 0}, Frame{2, 6, 2, 4, 1}};
    return out;
}

} // namespace detail

// Valid representation of a tree: root leftmost, every non-root leaf's right
// side strictly right of all other right sides.
inline FrameRepresentation build_tree(const SimpleGraph& t, int root) {
    if (!is_tree(t)) throw std::domain_error("build_tree: input is not a tree");
    FrameRepresentation rep;
    rep.target = t;
    if (t.n == 1) {
        rep.frames = {Frame{0, 2, 0, 2, 0}};
        return rep;
    }
    std::vector<char> far(t.n, 0);
    for (int v = 0; v < t.n; ++v)
        if (v != root && t.degree(v) == 1) far[v] = 1;
    auto layout = detail::tree_layout(t, root, far);
    rep.frames = layout.frames;
    normalize_coordinates(rep);
    return rep;
}

// Valid representation of a chandelier given as the whole graph plus its
// pivot: h - pivot must be a tree whose leaves are exactly N(pivot).
inline FrameRepresentation build_chandelier(const SimpleGraph& h, int pivot) {
    if (pivot < 0 || pivot >= h.n) throw std::out_of_range("build_chandelier: pivot out of range");

    SimpleGraph t(h.n - 1);
    std::vector<int> to_t(h.n, -1), from_t(h.n - 1);
    {
        int k = 0;
        for (int v = 0; v < h.n; ++v)
            if (v != pivot) {
                to_t[v] = k;
                from_t[k] = v;
                ++k;
            }
        for (int u = 0; u < h.n; ++u) {
            if (u == pivot) continue;
            for (int v : h.adj[u])
                if (v != pivot && u < v) t.add_edge(to_t[u], to_t[v]);
        }
    }
    bool luxury_unused = false;
    if (!chandelier_pivot_check(h, pivot, luxury_unused))
        throw std::domain_error("build_chandelier: not a chandelier with that pivot");

    detail::TreeLayout layout;
    if (t.n == 2) {
        layout = detail::k2_far_layout();
    } else {
        int root = -1;
        for (int v = 0; v < t.n && root < 0; ++v)
            if (t.degree(v) >= 2) root = v;
        std::vector<char> far(t.n, 0);
        for (int v = 0; v < t.n; ++v)
            if (t.degree(v) == 1) far[v] = 1;
        layout = detail::tree_layout(t, root, far);
    }

    FrameRepresentation rep;
    rep.target = h;
    std::int64_t ymin = 0, ymax = 0;
    for (const auto& f : layout.frames) {
        ymin = std::min(ymin, f.y1);
        ymax = std::max(ymax, f.y2);
    }
    for (auto f : layout.frames) {
        f.vertex = from_t[f.vertex];
        rep.frames.push_back(f);
    }
    rep.frames.push_back(Frame{-2, layout.ell, ymin - 1, ymax + 1, pivot});
    normalize_coordinates(rep);
    return rep;
}

// Add a non-adjacent copy of v with the same neighborhood: a frame just
// inside the frame of v after making integer room.
inline FrameRepresentation add_twin(const FrameRepresentation& rep, int v) {
    FrameRepresentation out = rep;
    rescale(out, 4);
    const Frame& fv = out.frame_of(v);
    Frame tw{fv.x1 + 1, fv.x2 - 1, fv.y1 + 1, fv.y2 - 1, out.target.n};

    SimpleGraph g(rep.target.n + 1);
    for (auto [a, b] : rep.target.edge_list()) g.add_edge(a, b);
    for (int u : rep.target.adj[v]) g.add_edge(g.n - 1, u);
    out.target = g;
    out.frames.push_back(tw);
    normalize_coordinates(out);
    return out;
}

namespace detail {

// Shared corner-region insertion: shrink a laid-out tree into the free
// region at the top right corner of F_v so that exactly the far leaves
// pierce F_v's right side. New vertices are appended in layout-id order.
inline FrameRepresentation glue_layout_at(const FrameRepresentation& rep, int v, const TreeLayout& layout,
                                          const std::vector<std::vector<int>>& tree_adj,
                                          const std::vector<char>& attaches) {
    std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& f : layout.frames) {
        xmin = std::min(xmin, f.x1);
        xmax = std::max(xmax, f.x2);
        ymin = std::min(ymin, f.y1);
        ymax = std::max(ymax, f.y2);
    }
    std::int64_t spread = std::max({layout.ell - xmin, xmax - layout.ell, ymax - ymin}) + 3;

    FrameRepresentation out = rep;
    rescale(out, spread);
    const Frame fv = out.frame_of(v); // copy: frame list grows below
    int base = out.target.n;

    for (const auto& f : layout.frames) {
        Frame g;
        g.vertex = base + f.vertex;
        g.x1 = fv.x2 + (f.x1 - layout.ell);
        g.x2 = fv.x2 + (f.x2 - layout.ell);
        g.y1 = fv.y2 - 1 - (ymax - f.y1);
        g.y2 = fv.y2 - 1 - (ymax - f.y2);
        out.frames.push_back(g);
    }

    SimpleGraph g(rep.target.n + static_cast<int>(layout.frames.size()));
    for (auto [a, b] : rep.target.edge_list()) g.add_edge(a, b);
    for (int u = 0; u < static_cast<int>(tree_adj.size()); ++u)
        for (int w : tree_adj[u])
            if (u < w) g.add_edge(base + u, base + w);
    for (int u = 0; u < static_cast<int>(attaches.size()); ++u)
        if (attaches[u]) g.add_edge(v, base + u);
    out.target = g;
    normalize_coordinates(out);
    return out;
}

} // namespace detail

// Glue a chandelier onto the representation by identifying its pivot with v.
// chand is the chandelier graph, pivot its pivot vertex; the non-pivot
// vertices are appended to the target in ascending chand-id order.
inline FrameRepresentation glue_chandelier(const FrameRepresentation& rep, int v, const SimpleGraph& chand,
                                           int pivot) {
    bool luxury_unused = false;
    if (!chandelier_pivot_check(chand, pivot, luxury_unused))
        throw std::domain_error("glue_chandelier: not a chandelier with that pivot");

    SimpleGraph t(chand.n - 1);
    std::vector<int> to_t(chand.n, -1);
    {
        int k = 0;
        for (int u = 0; u < chand.n; ++u)
            if (u != pivot) to_t[u] = k++;
        for (int u = 0; u < chand.n; ++u) {
            if (u == pivot) continue;
            for (int w : chand.adj[u])
                if (w != pivot && u < w) t.add_edge(to_t[u], to_t[w]);
        }
    }
    std::vector<char> far(t.n, 0);
    for (int u : chand.adj[pivot]) far[to_t[u]] = 1;

    detail::TreeLayout layout;
    if (t.n == 2 && far[0] && far[1]) {
        layout = detail::k2_far_layout();
    } else {
        int root = -1;
        for (int u = 0; u < t.n && root < 0; ++u)
            if (!far[u]) root = u;
        if (root < 0) throw std::domain_error("glue_chandelier: unsupported chandelier shape");
        layout = detail::tree_layout(t, root, far);
    }
    return detail::glue_layout_at(rep, v, layout, t.adj, far);
}

// Attach a pendant path of len new vertices at v using the same corner
// technique; only the first path vertex touches F_v.
inline FrameRepresentation add_pendant_path(const FrameRepresentation& rep, int v, int len) {
    if (len < 1) throw std::invalid_argument("add_pendant_path: len must be positive");
    SimpleGraph t(len);
    for (int i = 0; i + 1 < len; ++i) t.add_edge(i, i + 1);
    std::vector<char> far(len, 0);
    far[0] = 1;
    detail::TreeLayout layout;
    if (len == 1) {
        layout.ell = 1;
        layout.frames = {Frame{0, 2, 0, 2, 0}};
    } else {
        layout = detail::tree_layout(t, len - 1, far);
    }
    return detail::glue_layout_at(rep, v, layout, t.adj, far);
}

// ------------------------------------------------------------ insert_path

namespace detail {

struct PairRoles {
    int pierced = -1; // frame index of A
    int piercer = -1; // frame index of B
};

inline std::optional<PairRoles> edge_roles(const FrameRepresentation& rep, int u, int v) {
    int iu = -1, iv = -1;
    for (int i = 0; i < static_cast<int>(rep.frames.size()); ++i) {
        if (rep.frames[i].vertex == u) iu = i;
        if (rep.frames[i].vertex == v) iv = i;
    }
    if (iu < 0 || iv < 0) return std::nullopt;
    if (canonical_pair(rep.frames[iu], rep.frames[iv])) return PairRoles{iu, iv};
    if (canonical_pair(rep.frames[iv], rep.frames[iu])) return PairRoles{iv, iu};
    return std::nullopt;
}

inline SimpleGraph subdivided_target(const SimpleGraph& g, int u, int v, int k) {
    SimpleGraph out(g.n + k);
    for (auto [a, b] : g.edge_list())
        if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
    int prev = u;
    for (int j = 0; j < k; ++j) {
        out.add_edge(prev, g.n + j);
        prev = g.n + j;
    }
    out.add_edge(prev, v);
    return out;
}

// Variant 1: retract the piercer's left side just past A's right side and
// telescope the path frames rightwards out of A. Needs A to be B's innermost
// pierced frame with no third frame riding inside B across A's right side.
inline std::optional<FrameRepresentation> insert_path_v1(const FrameRepresentation& rep, int u, int v, int k,
                                                         const PairRoles& roles) {
    const Frame A = rep.frames[roles.pierced];
    const Frame B = rep.frames[roles.piercer];
    for (int i = 0; i < static_cast<int>(rep.frames.size()); ++i) {
        if (i == roles.pierced || i == roles.piercer) continue;
        const Frame& c = rep.frames[i];
        if (canonical_pair(c, B) && c.x2 < A.x2) return std::nullopt; // deeper pierced frame would be lost
        if (c.x1 < A.x2 && A.x2 < c.x2 && B.y1 < c.y1 && c.y2 < B.y2) return std::nullopt; // rider
    }

    std::int64_t m = 2 * k + 8;
    FrameRepresentation out = rep;
    rescale(out, m);
    std::int64_t sx = A.x2 * m;

    Frame& nb = out.frames[roles.piercer];
    nb.x1 = sx + 2 * k - 1;
    nb.y1 = B.y1 * m + k + 1;
    nb.y2 = B.y2 * m - k - 1;

    bool u_is_a = (A.vertex == u);
    for (int i = 1; i <= k; ++i) {
        Frame w;
        w.x1 = (i == 1) ? sx - 1 : sx + 2 * i - 3;
        w.x2 = sx + 2 * i;
        w.y1 = B.y1 * m + i;
        w.y2 = B.y2 * m - i;
        w.vertex = u_is_a ? rep.target.n + i - 1 : rep.target.n + k - i;
        out.frames.push_back(w);
    }
    out.target = subdivided_target(rep.target, u, v, k);
    if (!validate(out).empty()) return std::nullopt;
    normalize_coordinates(out);
    return out;
}

// Variant 2: retract the piercer's right side to just before A's right side
// and telescope the path frames leftwards from A. Needs A to be B's
// outermost pierced frame, with every frame piercing B entering before A's
// right side and nothing nested in B straddling it.
inline std::optional<FrameRepresentation> insert_path_v2(const FrameRepresentation& rep, int u, int v, int k,
                                                         const PairRoles& roles) {
    const Frame A = rep.frames[roles.pierced];
    const Frame B = rep.frames[roles.piercer];
    for (int i = 0; i < static_cast<int>(rep.frames.size()); ++i) {
        if (i == roles.pierced || i == roles.piercer) continue;
        const Frame& c = rep.frames[i];
        if (canonical_pair(c, B) && c.x2 > A.x2) return std::nullopt; // A not outermost
        if (canonical_pair(B, c) && c.x1 > A.x2) return std::nullopt; // piercer of B would be lost
        bool nested_in_b = strictly_inside(c, B);
        if (nested_in_b && c.x1 < A.x2 && A.x2 < c.x2) return std::nullopt; // would be cut
    }

    std::int64_t m = 2 * k + 8;
    FrameRepresentation out = rep;
    rescale(out, m);
    std::int64_t sx = A.x2 * m;
    std::int64_t b0 = B.y1 * m;
    std::int64_t alpha = sx - 2 * k + 1;

    Frame& nb = out.frames[roles.piercer];
    nb.x2 = alpha;

    bool u_is_a = (A.vertex == u);
    for (int i = 1; i <= k; ++i) {
        Frame w;
        w.x1 = sx - 2 * i;
        w.x2 = (i == 1) ? sx + 2 : sx - 2 * i + 3;
        w.y1 = b0 + (k + 1 - i);
        w.y2 = b0 + (k + 2 + i);
        w.vertex = u_is_a ? rep.target.n + i - 1 : rep.target.n + k - i;
        out.frames.push_back(w);
    }
    out.target = subdivided_target(rep.target, u, v, k);
    if (!validate(out).empty()) return std::nullopt;
    normalize_coordinates(out);
    return out;
}

} // namespace detail

// Subdivide the edge uv of a valid representation k times, keeping validity.
// The gadget needs a clear strip next to A's right side inside the
// intersection zone of the two frames; when no variant applies the caller
// must pick a different representation.
inline std::optional<FrameRepresentation> insert_path(const FrameRepresentation& rep, int u, int v, int k) {
    if (k < 1) throw std::invalid_argument("insert_path: k must be positive");
    if (!rep.target.adjacent(u, v)) throw std::domain_error("insert_path: uv is not an edge of the target");
    auto roles = detail::edge_roles(rep, u, v);
    if (!roles) return std::nullopt;
    if (auto r = detail::insert_path_v1(rep, u, v, k, *roles)) return r;
    if (auto r = detail::insert_path_v2(rep, u, v, k, *roles)) return r;
    return std::nullopt;
}

} // namespace rfg
