#pragma once

// The linear-time decision procedure: prune block-tree leaves whose parent
// cut-vertex is a feedback vertex of the leaf, then test the last block via
// the cycle+ear trick. Plus a brute-force twin used as its oracle, the
// counterexample classifier, and the K4 subdivision status table.

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "rfg/block_tree.hpp"
#include "rfg/graph.hpp"
#include "rfg/shape.hpp"

namespace rfg {

// ---------------------------------------------------------------- feedback

inline std::set<int> feedback_vertices_bruteforce(const Multigraph& g) {
    std::set<int> out;
    for (int v = 0; v < g.n; ++v)
        if (is_feedback_vertex(g, v)) out.insert(v);
    return out;
}

namespace detail {

struct CycleFound {
    std::vector<int> vertices; // cyclic order
    std::vector<int> edge_ids; // edge_ids[i] joins vertices[i] and vertices[i+1 mod size]
};

// Any cycle in a multigraph; empty vertices when acyclic. Parallel pairs
// give 2-vertex cycles, loops 1-vertex cycles.
inline CycleFound find_cycle(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edges[e].first == g.edges[e].second) return {{g.edges[e].first}, {e}};
    AdjacencyCSR adj(g);
    std::vector<int> parent_edge(g.n, -1), parent(g.n, -1), state(g.n, 0), it(g.n);
    for (int v = 0; v < g.n; ++v) it[v] = adj.offset[v];
    for (int s = 0; s < g.n; ++s) {
        if (state[s]) continue;
        std::vector<int> stack{s};
        state[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            if (it[u] < adj.offset[u + 1]) {
                int v = adj.nbr[it[u]];
                int e = adj.eid[it[u]];
                ++it[u];
                if (e == parent_edge[u]) continue;
                if (state[v] != 0) {
                    // no cross edges in undirected DFS: v is an ancestor of u
                    // when still active, else a finished descendant of u
                    int from = (state[v] == 1) ? u : v;
                    int to = (state[v] == 1) ? v : u;
                    CycleFound c;
                    int w = from;
                    c.vertices.push_back(w);
                    while (w != to) {
                        c.edge_ids.push_back(parent_edge[w]);
                        w = parent[w];
                        c.vertices.push_back(w);
                    }
                    c.edge_ids.push_back(e); // closes to..from
                    return c;
                }
                state[v] = 1;
                parent[v] = u;
                parent_edge[v] = e;
                stack.push_back(v);
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

} // namespace detail

// Feedback vertex of a 2-connected multigraph (single edges, single vertices
// and loop-only blocks allowed). Finds a cycle C, then one ear of C, and
// tests only the two ear endpoints; constant number of linear passes.
inline std::optional<int> feedback_vertex_2connected(const Multigraph& b) {
    if (b.n == 0) throw std::domain_error("feedback_vertex_2connected: empty graph");
    if (b.n == 1) return 0; // vertex, possibly with loops

    auto found = detail::find_cycle(b);
    const auto& cycle = found.vertices;
    if (cycle.empty()) {
        // acyclic and 2-connected-admissible: a single edge
        if (b.n > 2) throw std::domain_error("feedback_vertex_2connected: input not 2-connected");
        return 0;
    }
    if (static_cast<int>(cycle.size()) == b.n && b.edge_count() == b.n) {
        return cycle.front(); // the graph is that cycle; every vertex works
    }

    // find an ear of the cycle: mark C, search from it through non-C vertices
    std::vector<char> on_cycle(b.n, 0);
    for (int v : cycle) on_cycle[v] = 1;

    std::vector<char> cyc_edge(b.edge_count(), 0);
    for (int e : found.edge_ids) cyc_edge[e] = 1;

    int x = -1, y = -1;
    // case A: a non-cycle edge with both ends on C (chord / parallel / loop)
    for (int e = 0; e < b.edge_count(); ++e) {
        if (cyc_edge[e]) continue;
        auto [u, v] = b.edges[e];
        if (on_cycle[u] && on_cycle[v]) {
            x = u;
            y = v;
            break;
        }
    }
    if (x < 0) {
        // case B: multi-source BFS from C through non-C vertices
        AdjacencyCSR adj(b);
        std::vector<int> origin(b.n, -1);
        std::deque<int> q;
        for (int v : cycle) {
            origin[v] = v;
            q.push_back(v);
        }
        while (!q.empty() && x < 0) {
            int u = q.front();
            q.pop_front();
            for (int i = adj.offset[u]; i < adj.offset[u + 1]; ++i) {
                int v = adj.nbr[i];
                if (cyc_edge[adj.eid[i]]) continue;
                if (on_cycle[u] && on_cycle[v]) continue; // would be case A
                if (origin[v] == -1) {
                    origin[v] = origin[u];
                    q.push_back(v);
                } else if (origin[v] != origin[u]) {
                    x = origin[u];
                    y = origin[v];
                    break;
                }
            }
        }
        if (x < 0) throw std::domain_error("feedback_vertex_2connected: input not 2-connected");
    }

    if (is_feedback_vertex(b, x)) return x;
    if (x != y && is_feedback_vertex(b, y)) return y;
    return std::nullopt;
}

// ---------------------------------------------------------------- outcome

enum class EvidenceKind { FinalBlockFeedback, FullyPruned, SingleBlockNoFeedback, TwoBadLeaves };

struct DecisionOutcome {
    bool answer = false;
    struct TraceStep {
        Block block;
        int parent_cut_vertex;
    };
    std::vector<TraceStep> trace;
    EvidenceKind kind = EvidenceKind::FullyPruned;
    // FinalBlockFeedback / SingleBlockNoFeedback
    Block final_block;
    int feedback_vertex = -1; // parent-graph id
    // TwoBadLeaves
    Block bad_block1, bad_block2;
    int bad_cut1 = -1, bad_cut2 = -1;
};

namespace detail {

// Shared pruning loop over an explicit block-cut incidence. The feedback
// test is supplied by the caller so the fast and brute paths stay separate.
// Pruned blocks are moved into the trace.
template <typename FeedbackTest>
inline DecisionOutcome prune_blocks(std::vector<Block>& blocks, const std::vector<int>& cut_vertices,
                                    const std::vector<std::pair<int, int>>& tree_edges, FeedbackTest leaf_prunable,
                                    const std::vector<int>& leaf_order) {
    DecisionOutcome out;
    size_t nb = blocks.size(), nc = cut_vertices.size();
    std::vector<std::vector<int>> boc(nc), cob(nb);
    for (auto [c, b] : tree_edges) {
        boc[c].push_back(b);
        cob[b].push_back(c);
    }
    std::vector<int> cut_deg(nc), block_deg(nb);
    for (size_t c = 0; c < nc; ++c) cut_deg[c] = static_cast<int>(boc[c].size());
    for (size_t b = 0; b < nb; ++b) block_deg[b] = static_cast<int>(cob[b].size());

    std::vector<char> removed_block(nb, 0), removed_cut(nc, 0), bad(nb, 0), queued(nb, 0);
    int alive_blocks = static_cast<int>(nb);

    std::deque<int> queue;
    auto enqueue_if_leaf = [&](int b) {
        if (removed_block[b] || queued[b] || bad[b]) return;
        int live = 0;
        for (int c : cob[b])
            if (!removed_cut[c]) ++live;
        if (live <= 1) {
            queue.push_back(b);
            queued[b] = 1;
        }
    };
    for (int b : leaf_order) enqueue_if_leaf(b);

    while (alive_blocks > 1 && !queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        queued[b] = 0;
        if (removed_block[b]) continue;
        int pc = -1;
        for (int c : cob[b])
            if (!removed_cut[c]) pc = c;
        if (pc < 0) break; // isolated alive block: tree exhausted
        int parent_vertex = cut_vertices[pc];
        if (!leaf_prunable(b, parent_vertex)) {
            bad[b] = 1;
            continue;
        }
        removed_block[b] = 1;
        --alive_blocks;
        out.trace.push_back({std::move(blocks[b]), parent_vertex});
        if (--cut_deg[pc] == 1) {
            removed_cut[pc] = 1;
            for (int b2 : boc[pc])
                if (!removed_block[b2]) {
                    bad[b2] = 0; // a bad leaf may become the single final block
                    enqueue_if_leaf(b2);
                }
        }
    }

    std::vector<int> alive;
    for (size_t b = 0; b < nb; ++b)
        if (!removed_block[b]) alive.push_back(static_cast<int>(b));

    if (alive.size() >= 2) {
        // all remaining leaves refused to prune; report two of them
        std::vector<int> leaves;
        for (int b : alive) {
            int live = 0;
            for (int c : cob[b])
                if (!removed_cut[c]) ++live;
            if (live <= 1) leaves.push_back(b);
        }
        out.answer = false;
        out.kind = EvidenceKind::TwoBadLeaves;
        auto parent_of = [&](int b) {
            for (int c : cob[b])
                if (!removed_cut[c]) return cut_vertices[c];
            return -1;
        };
        out.bad_cut1 = parent_of(leaves[0]);
        out.bad_cut2 = parent_of(leaves[1]);
        out.bad_block1 = std::move(blocks[leaves[0]]);
        out.bad_block2 = std::move(blocks[leaves[1]]);
        return out;
    }
    out.final_block = std::move(blocks[alive[0]]);
    return out; // caller decides on the final block
}

} // namespace detail

// Decide whether all >=2-subdivisions of g are restricted frame graphs (yes)
// or none are (no). Linear in |V| + |E|.
inline DecisionOutcome decide_ge2_subdivisions(const Multigraph& g) {
    if (!is_connected(g)) throw std::domain_error("decide_ge2_subdivisions: graph must be connected");
    BlockTree bt = block_tree(g);

    auto prunable = [&](int b, int parent_vertex) {
        const Block& blk = bt.blocks[b];
        return is_feedback_vertex(blk.graph, blk.local_of(parent_vertex));
    };
    std::vector<int> order(bt.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

    DecisionOutcome out = detail::prune_blocks(bt.blocks, bt.cut_vertices, bt.tree_edges, prunable, order);
    if (out.kind == EvidenceKind::TwoBadLeaves) return out;

    auto fv = feedback_vertex_2connected(out.final_block.graph);
    if (fv) {
        out.answer = true;
        out.kind = EvidenceKind::FinalBlockFeedback;
        out.feedback_vertex = out.final_block.to_parent[*fv];
    } else {
        out.answer = false;
        out.kind = EvidenceKind::SingleBlockNoFeedback;
    }
    return out;
}

namespace detail {

// Brute block decomposition by definition: repeatedly split at any vertex
// whose removal disconnects the fragment. Loops split off first.
inline void brute_blocks_rec(const Multigraph& g, std::vector<int> vmap, std::vector<Block>& out) {
    Multigraph core(g.n);
    for (auto [u, v] : g.edges) {
        if (u == v) {
            Block b;
            b.vertices = {vmap[u]};
            b.to_parent = {vmap[u]};
            b.graph = Multigraph(1);
            b.graph.edges.emplace_back(0, 0);
            out.push_back(std::move(b));
        } else {
            core.edges.emplace_back(u, v);
        }
    }
    // drop isolated vertices of the loopless core
    std::vector<int> deg(core.n, 0);
    for (auto [u, v] : core.edges) ++deg[u], ++deg[v];
    std::vector<int> keep, local(core.n, -1);
    for (int v = 0; v < core.n; ++v)
        if (deg[v] > 0) {
            local[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    if (keep.empty()) return;
    Multigraph h(static_cast<int>(keep.size()));
    std::vector<int> hmap(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) hmap[i] = vmap[keep[i]];
    for (auto [u, v] : core.edges) h.edges.emplace_back(local[u], local[v]);

    // components first
    auto adj = h.adjacency();
    std::vector<int> comp(h.n, -1);
    int nc = 0;
    for (int s = 0; s < h.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, e] : adj[u])
                if (comp[v] < 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
        }
        ++nc;
    }
    if (nc > 1) {
        for (int c = 0; c < nc; ++c) {
            std::vector<int> verts, loc(h.n, -1);
            for (int v = 0; v < h.n; ++v)
                if (comp[v] == c) {
                    loc[v] = static_cast<int>(verts.size());
                    verts.push_back(v);
                }
            Multigraph sub(static_cast<int>(verts.size()));
            std::vector<int> smap(verts.size());
            for (size_t i = 0; i < verts.size(); ++i) smap[i] = hmap[verts[i]];
            for (auto [u, v] : h.edges)
                if (comp[u] == c) sub.edges.emplace_back(loc[u], loc[v]);
            brute_blocks_rec(sub, smap, out);
        }
        return;
    }

    // connected: find a cut vertex by definition
    int cut = -1;
    for (int v = 0; v < h.n && cut < 0; ++v) {
        Multigraph del(h.n);
        for (auto [a, b] : h.edges)
            if (a != v && b != v) del.edges.emplace_back(a, b);
        // count components among vertices != v
        auto dadj = del.adjacency();
        std::vector<int> seen(h.n, 0);
        int pieces = 0;
        for (int s = 0; s < h.n; ++s) {
            if (s == v || seen[s]) continue;
            ++pieces;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, e] : dadj[u])
                    if (w != v && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        if (pieces >= 2) cut = v;
    }
    if (cut < 0) {
        Block b;
        b.graph = h;
        b.vertices = hmap;
        b.to_parent = hmap;
        out.push_back(std::move(b));
        return;
    }
    // split at the cut vertex: each component of h - cut plus cut
    Multigraph del(h.n);
    for (auto [a, b] : h.edges)
        if (a != cut && b != cut) del.edges.emplace_back(a, b);
    auto dadj = del.adjacency();
    std::vector<int> part(h.n, -1);
    int np = 0;
    for (int s = 0; s < h.n; ++s) {
        if (s == cut || part[s] >= 0) continue;
        std::vector<int> stack{s};
        part[s] = np;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : dadj[u])
                if (w != cut && part[w] < 0) {
                    part[w] = np;
                    stack.push_back(w);
                }
        }
        ++np;
    }
    for (int c = 0; c < np; ++c) {
        std::vector<int> verts, loc(h.n, -1);
        for (int v = 0; v < h.n; ++v)
            if (part[v] == c) {
                loc[v] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        loc[cut] = static_cast<int>(verts.size());
        verts.push_back(cut);
        Multigraph sub(static_cast<int>(verts.size()));
        std::vector<int> smap(verts.size());
        for (size_t i = 0; i < verts.size(); ++i) smap[i] = hmap[verts[i]];
        for (auto [u, v] : h.edges) {
            bool at_u = (u == cut), at_v = (v == cut);
            if ((at_u || part[u] == c) && (at_v || part[v] == c) && !(at_u && at_v))
                sub.edges.emplace_back(loc[u], loc[v]);
        }
        brute_blocks_rec(sub, smap, out);
    }
}

} // namespace detail

// Independent slow path: blocks found by definitional splitting, feedback
// vertices by full scans and the leaf order shuffled by the seed.
inline bool decide_bruteforce(const Multigraph& g, std::uint64_t seed = 0) {
    if (!is_connected(g)) throw std::domain_error("decide_bruteforce: graph must be connected");

    std::vector<Block> blocks;
    {
        std::vector<int> vmap(g.n);
        for (int i = 0; i < g.n; ++i) vmap[i] = i;
        detail::brute_blocks_rec(g, vmap, blocks);
    }
    if (blocks.empty()) {
        // edgeless connected graph = K1
        return true;
    }
    std::vector<int> in_blocks(g.n, 0);
    for (const auto& b : blocks)
        for (int v : b.vertices) ++in_blocks[v];
    std::vector<int> cut_vertices, cut_index(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (in_blocks[v] >= 2) {
            cut_index[v] = static_cast<int>(cut_vertices.size());
            cut_vertices.push_back(v);
        }
    std::vector<std::pair<int, int>> tree_edges;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b].vertices)
            if (cut_index[v] >= 0) tree_edges.emplace_back(cut_index[v], static_cast<int>(b));

    auto prunable = [&](int b, int parent_vertex) {
        const Block& blk = blocks[b];
        auto set = feedback_vertices_bruteforce(blk.graph);
        return set.count(blk.local_of(parent_vertex)) > 0;
    };
    std::vector<int> order(blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    DecisionOutcome out = detail::prune_blocks(blocks, cut_vertices, tree_edges, prunable, order);
    if (out.kind == EvidenceKind::TwoBadLeaves) return false;
    return !feedback_vertices_bruteforce(out.final_block.graph).empty();
}

// ---------------------------------------------------------------- Scott

enum class ScottStatus { Counterexample, RepresentableFamily, NotDecidedByTheorem };
enum class ScottReason { None, Disconnected, HasTriangle, HasFullStarCutset };

struct ScottResult {
    ScottStatus status;
    ScottReason reason = ScottReason::None;   // for NotDecidedByTheorem
    ShapeClass family = ShapeClass::Other;    // for RepresentableFamily
};

inline ScottResult classify_scott(const SimpleGraph& h) {
    ScottResult r{ScottStatus::NotDecidedByTheorem};
    if (h.n == 0 || !is_connected(h)) {
        r.reason = ScottReason::Disconnected;
        return r;
    }
    if (!is_triangle_free(h)) {
        r.reason = ScottReason::HasTriangle;
        return r;
    }
    if (!full_star_cutset_centers(h).empty()) {
        r.reason = ScottReason::HasFullStarCutset;
        return r;
    }
    auto shape = recognize_shape(h);
    if (shape.cls == ShapeClass::PathAtMost4 || shape.cls == ShapeClass::LuxuryChandelier) {
        r.status = ScottStatus::RepresentableFamily;
        r.family = shape.cls;
        return r;
    }
    r.status = ScottStatus::Counterexample;
    return r;
}

// ---------------------------------------------------------------- K4 table

enum class K4Class { ContainsTriangle, RestrictedFrameGraph, NotRestrictedFrameGraph };

struct K4Status {
    K4Class cls;
    int type; // number of subdivided edges
};

// Edges of K4 in the fixed order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
inline const std::array<std::pair<int, int>, 6>& k4_edges() {
    static const std::array<std::pair<int, int>, 6> e{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return e;
}

inline Multigraph k4_graph() {
    Multigraph g(4);
    for (auto [u, v] : k4_edges()) g.add_edge(u, v);
    return g;
}

inline K4Status k4_status(const std::array<int, 6>& profile) {
    K4Status s{K4Class::NotRestrictedFrameGraph, 0};
    for (int c : profile)
        if (c > 0) ++s.type;
    // a triangle survives iff some K4 triangle keeps all three edges intact
    static const int tri[4][3] = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
    for (auto& t : tri)
        if (profile[t[0]] == 0 && profile[t[1]] == 0 && profile[t[2]] == 0) {
            s.cls = K4Class::ContainsTriangle;
            return s;
        }
    if (s.type <= 3) {
        s.cls = K4Class::RestrictedFrameGraph;
        return s;
    }
    if (s.type == 4) {
        std::vector<int> unsub;
        for (int e = 0; e < 6; ++e)
            if (profile[e] == 0) unsub.push_back(e);
        auto [a1, b1] = k4_edges()[unsub[0]];
        auto [a2, b2] = k4_edges()[unsub[1]];
        bool share = (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2);
        if (share) s.cls = K4Class::RestrictedFrameGraph;
    }
    return s;
}

// ---------------------------------------------------------------- fixtures

// Reconstructions of the two special graphs: a digon-plus-apex gadget is a
// digon {a,b} plus an apex adjacent to a and b. H1 shares the apex between
// two gadgets; H2 joins the two apexes by an edge.
inline std::pair<Multigraph, Multigraph> hhat_fixtures() {
    Multigraph h1(5); // 0 = apex, digons {1,2} and {3,4}
    h1.add_edge(1, 2);
    h1.add_edge(1, 2);
    h1.add_edge(0, 1);
    h1.add_edge(0, 2);
    h1.add_edge(3, 4);
    h1.add_edge(3, 4);
    h1.add_edge(0, 3);
    h1.add_edge(0, 4);

    Multigraph h2(6); // apexes 0 and 3, digons {1,2} and {4,5}
    h2.add_edge(1, 2);
    h2.add_edge(1, 2);
    h2.add_edge(0, 1);
    h2.add_edge(0, 2);
    h2.add_edge(4, 5);
    h2.add_edge(4, 5);
    h2.add_edge(3, 4);
    h2.add_edge(3, 5);
    h2.add_edge(0, 3);
    return {h1, h2};
}

} // namespace rfg
