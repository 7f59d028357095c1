#pragma once

// The construction engine: graph-stable-set pairs, the NEXT iteration that
// generates the triangle-free family with unbounded chromatic number, the
// ADD/JOIN operators, constructibility certificates with a replay checker,
// the recursive certificate builder for >=2-subdivisions, and an exact
// chromatic number solver.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfg/block_tree.hpp"
#include "rfg/decision.hpp"
#include "rfg/graph.hpp"
#include "rfg/subdivision.hpp"

namespace rfg {

struct GraphStableSetPair {
    SimpleGraph graph;
    std::vector<std::vector<int>> stable_sets; // each sorted ascending

    void check() const {
        for (const auto& s : stable_sets) {
            for (size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] >= s[i + 1]) throw std::domain_error("stable set not sorted/unique");
            for (int v : s)
                if (v < 0 || v >= graph.n) throw std::domain_error("stable set vertex out of range");
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = i + 1; j < s.size(); ++j)
                    if (graph.adjacent(s[i], s[j])) throw std::domain_error("set is not stable");
        }
    }
};

inline GraphStableSetPair singleton_pair() {
    GraphStableSetPair p;
    p.graph = SimpleGraph(1);
    p.stable_sets = {{0}};
    return p;
}

namespace detail {

inline void push_unique(std::vector<std::vector<int>>& family, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    for (const auto& t : family)
        if (t == s) return;
    family.push_back(std::move(s));
}

} // namespace detail

// One step of the iterative construction: add |S| disjoint copies indexed by
// the stable sets, a vertex v_{S,T} adjacent to exactly T in copy H_S, and
// the family {S u T} u {S u {v_{S,T}}}. Vertices are numbered originals
// first, then the copies in stable-set order, then the v_{S,T} in
// lexicographic (S, T) order.
inline GraphStableSetPair next(const GraphStableSetPair& p) {
    p.check();
    if (p.stable_sets.empty()) throw std::domain_error("next: family must be non-empty");
    int n = p.graph.n;
    int s = static_cast<int>(p.stable_sets.size());
    GraphStableSetPair out;
    out.graph = SimpleGraph(n + s * n + s * s);

    auto copy_vertex = [&](int copy, int v) { return n + copy * n + v; };
    auto new_vertex = [&](int si, int ti) { return n + s * n + si * s + ti; };

    auto base_edges = p.graph.edge_list();
    for (auto [a, b] : base_edges) out.graph.add_edge(a, b);
    for (int c = 0; c < s; ++c)
        for (auto [a, b] : base_edges) out.graph.add_edge(copy_vertex(c, a), copy_vertex(c, b));
    for (int si = 0; si < s; ++si)
        for (int ti = 0; ti < s; ++ti)
            for (int t : p.stable_sets[ti]) out.graph.add_edge(new_vertex(si, ti), copy_vertex(si, t));

    for (int si = 0; si < s; ++si)
        for (int ti = 0; ti < s; ++ti) {
            std::vector<int> su = p.stable_sets[si];
            for (int t : p.stable_sets[ti]) su.push_back(copy_vertex(si, t));
            detail::push_unique(out.stable_sets, std::move(su));
        }
    for (int si = 0; si < s; ++si)
        for (int ti = 0; ti < s; ++ti) {
            std::vector<int> su = p.stable_sets[si];
            su.push_back(new_vertex(si, ti));
            detail::push_unique(out.stable_sets, std::move(su));
        }
    return out;
}

// Add a vertex adjacent to exactly the indexed stable set; the family gains
// the singleton of the new vertex.
inline GraphStableSetPair add_op(const GraphStableSetPair& p, int set_index) {
    if (set_index < 0 || set_index >= static_cast<int>(p.stable_sets.size()))
        throw std::out_of_range("add_op: bad set index");
    GraphStableSetPair out;
    out.graph = SimpleGraph(p.graph.n + 1);
    for (auto [a, b] : p.graph.edge_list()) out.graph.add_edge(a, b);
    for (int t : p.stable_sets[set_index]) out.graph.add_edge(p.graph.n, t);
    out.stable_sets = p.stable_sets;
    detail::push_unique(out.stable_sets, {p.graph.n});
    return out;
}

// Disjoint union of p1 and p2 (p1's vertices first); the indexed stable set
// of p2 is added to all of p1's sets. set_index == -1 joins on the empty
// set: plain disjoint union of graphs and families.
inline GraphStableSetPair join_op(const GraphStableSetPair& p1, const GraphStableSetPair& p2, int set_index) {
    if (set_index < -1 || set_index >= static_cast<int>(p2.stable_sets.size()))
        throw std::out_of_range("join_op: bad set index");
    GraphStableSetPair out;
    out.graph = SimpleGraph(p1.graph.n + p2.graph.n);
    for (auto [a, b] : p1.graph.edge_list()) out.graph.add_edge(a, b);
    for (auto [a, b] : p2.graph.edge_list()) out.graph.add_edge(p1.graph.n + a, p1.graph.n + b);

    auto shift = [&](const std::vector<int>& set2) {
        std::vector<int> r;
        for (int v : set2) r.push_back(p1.graph.n + v);
        return r;
    };
    if (set_index == -1) {
        for (const auto& t : p2.stable_sets) detail::push_unique(out.stable_sets, shift(t));
        for (const auto& t : p1.stable_sets) detail::push_unique(out.stable_sets, t);
    } else {
        for (int i = 0; i < static_cast<int>(p2.stable_sets.size()); ++i)
            if (i != set_index) detail::push_unique(out.stable_sets, shift(p2.stable_sets[i]));
        for (const auto& s1 : p1.stable_sets) {
            std::vector<int> u = s1;
            for (int v : shift(p2.stable_sets[set_index])) u.push_back(v);
            detail::push_unique(out.stable_sets, std::move(u));
        }
    }
    return out;
}

// ------------------------------------------------------------- certificates

enum class CertOp { Singleton, Add, Join, Induce };

struct CertNode {
    CertOp op = CertOp::Singleton;
    int set_index = -1;                       // Add / Join
    std::vector<int> vertices;                // Induce: kept vertices
    std::vector<int> set_indices;             // Induce: kept sets (by child index)
    std::unique_ptr<CertNode> left, right;    // Add/Induce use left; Join uses both

    CertNode() = default;
    CertNode clone() const {
        CertNode c;
        c.op = op;
        c.set_index = set_index;
        c.vertices = vertices;
        c.set_indices = set_indices;
        if (left) c.left = std::make_unique<CertNode>(left->clone());
        if (right) c.right = std::make_unique<CertNode>(right->clone());
        return c;
    }
};

struct ConstructionCertificate {
    CertNode root;
    GraphStableSetPair claimed;
};

struct certificate_error : std::runtime_error {
    std::string node_path;
    certificate_error(std::string path, const std::string& what_)
        : std::runtime_error("certificate node " + path + ": " + what_), node_path(std::move(path)) {}
};

struct ReplayResult {
    GraphStableSetPair pair;
    int op_count = 0; // ADD + JOIN nodes; bounds the NEXT iteration index
};

namespace detail {

inline GraphStableSetPair replay_node(const CertNode& node, const std::string& path, int& ops) {
    switch (node.op) {
        case CertOp::Singleton:
            return singleton_pair();
        case CertOp::Add: {
            if (!node.left) throw certificate_error(path, "ADD without child");
            auto child = replay_node(*node.left, path + ".child", ops);
            ++ops;
            if (node.set_index < 0 || node.set_index >= static_cast<int>(child.stable_sets.size()))
                throw certificate_error(path, "ADD set index out of range");
            return add_op(child, node.set_index);
        }
        case CertOp::Join: {
            if (!node.left || !node.right) throw certificate_error(path, "JOIN needs two children");
            auto l = replay_node(*node.left, path + ".left", ops);
            auto r = replay_node(*node.right, path + ".right", ops);
            ++ops;
            if (node.set_index < -1 || node.set_index >= static_cast<int>(r.stable_sets.size()))
                throw certificate_error(path, "JOIN set index out of range");
            return join_op(l, r, node.set_index);
        }
        case CertOp::Induce: {
            if (!node.left) throw certificate_error(path, "INDUCE without child");
            auto child = replay_node(*node.left, path + ".child", ops);
            std::vector<int> keep = node.vertices;
            std::sort(keep.begin(), keep.end());
            if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
                throw certificate_error(path, "INDUCE repeats a vertex");
            std::vector<int> loc(child.graph.n, -1);
            for (size_t i = 0; i < keep.size(); ++i) {
                if (keep[i] < 0 || keep[i] >= child.graph.n)
                    throw certificate_error(path, "INDUCE vertex out of range");
                loc[keep[i]] = static_cast<int>(i);
            }
            GraphStableSetPair out;
            out.graph = SimpleGraph(static_cast<int>(keep.size()));
            for (auto [a, b] : child.graph.edge_list())
                if (loc[a] >= 0 && loc[b] >= 0) out.graph.add_edge(loc[a], loc[b]);
            for (int si : node.set_indices) {
                if (si < 0 || si >= static_cast<int>(child.stable_sets.size()))
                    throw certificate_error(path, "INDUCE set index out of range");
                std::vector<int> restricted;
                for (int v : child.stable_sets[si])
                    if (loc[v] >= 0) restricted.push_back(loc[v]);
                std::sort(restricted.begin(), restricted.end());
                push_unique(out.stable_sets, std::move(restricted));
            }
            return out;
        }
    }
    throw certificate_error(path, "unknown op");
}

} // namespace detail

// Evaluate a certificate bottom-up, checking every structural invariant.
inline ReplayResult replay(const ConstructionCertificate& cert) {
    ReplayResult r;
    r.pair = detail::replay_node(cert.root, "root", r.op_count);
    r.pair.check();
    return r;
}

inline void check_certificate(const ConstructionCertificate& cert) {
    auto r = replay(cert);
    if (!(r.pair.graph == cert.claimed.graph) || r.pair.stable_sets != cert.claimed.stable_sets)
        throw certificate_error("root", "replayed pair differs from the claimed pair");
}

// Rewrite every empty-set JOIN into its simulation: ADD a helper vertex to
// the right child, JOIN on the helper's singleton, then INDUCE it away. Used
// to cross-validate the two semantics of the first-class empty join.
inline CertNode expand_empty_joins(const CertNode& node) {
    CertNode out;
    out.op = node.op;
    out.set_index = node.set_index;
    out.vertices = node.vertices;
    out.set_indices = node.set_indices;
    if (node.left) out.left = std::make_unique<CertNode>(expand_empty_joins(*node.left));
    if (node.right) out.right = std::make_unique<CertNode>(expand_empty_joins(*node.right));
    if (node.op != CertOp::Join || node.set_index != -1) return out;

    ConstructionCertificate lc, rc;
    lc.root = out.left->clone();
    rc.root = out.right->clone();
    auto lp = replay(lc).pair;
    auto rp = replay(rc).pair;

    CertNode add;
    add.op = CertOp::Add;
    add.set_index = static_cast<int>(rp.stable_sets.size()) - 1; // any set works; the helper goes away
    add.left = std::move(out.right);

    CertNode join;
    join.op = CertOp::Join;
    join.set_index = static_cast<int>(rp.stable_sets.size()); // the helper singleton {v}
    join.left = std::move(out.left);
    join.right = std::make_unique<CertNode>(std::move(add));

    CertNode induce;
    induce.op = CertOp::Induce;
    induce.left = std::make_unique<CertNode>(std::move(join));
    // keep everything except the helper vertex, renumbering to match the
    // plain disjoint union (left first, then right)
    int nl = lp.graph.n, nr = rp.graph.n;
    for (int v = 0; v < nl + nr; ++v) induce.vertices.push_back(v);
    // family of the simulated join: (S2' - {v}) u {S1 u {v}} restricted; the
    // order matches the first-class empty join: right sets then left sets
    int total_sets = static_cast<int>(rp.stable_sets.size()) + static_cast<int>(lp.stable_sets.size());
    for (int s = 0; s < total_sets; ++s) induce.set_indices.push_back(s);
    return induce;
}

// ---------------------------------------------------- induced subpair search

// Induced-subgraph embedding of small.graph into big.graph under which every
// small stable set is the restriction of some big stable set. Each small set
// keeps a bitmask of the big sets still able to realize it: a candidate big
// set must contain every mapped member and no mapped non-member.
inline std::optional<std::vector<int>> is_induced_subpair(const GraphStableSetPair& small,
                                                          const GraphStableSetPair& big,
                                                          std::uint64_t budget = 50'000'000) {
    int n = small.graph.n;
    if (n > big.graph.n) return std::nullopt;
    int nb = static_cast<int>(big.stable_sets.size());
    int words = (nb + 63) / 64;

    // member_mask[c]: which big sets contain big vertex c
    std::vector<std::uint64_t> member_mask(static_cast<size_t>(big.graph.n) * words, 0);
    for (int t = 0; t < nb; ++t)
        for (int c : big.stable_sets[t]) member_mask[static_cast<size_t>(c) * words + t / 64] |= (1ull << (t % 64));

    int ns = static_cast<int>(small.stable_sets.size());
    std::vector<std::vector<char>> in_set(ns, std::vector<char>(n, 0));
    for (int s = 0; s < ns; ++s)
        for (int v : small.stable_sets[s]) in_set[s][v] = 1;

    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1, score_best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int sc = small.graph.degree(v);
                for (int u : small.graph.adj[v])
                    if (placed[u]) sc += 1000;
                if (sc > score_best) score_best = sc, best = v;
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(big.graph.n, 0);
    // compat[s]: big sets still able to realize small set s (stack of states)
    std::vector<std::vector<std::uint64_t>> compat_stack(n + 1, std::vector<std::uint64_t>(ns * words));
    for (int s = 0; s < ns; ++s)
        for (int w = 0; w < words; ++w)
            compat_stack[0][s * words + w] =
                (w == words - 1 && (nb % 64)) ? ((1ull << (nb % 64)) - 1) : ~0ull;
    std::uint64_t nodes = 0;

    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        const auto& cur = compat_stack[idx];
        auto& nxt = compat_stack[idx + 1];
        for (int cand = 0; cand < big.graph.n; ++cand) {
            if (used[cand]) continue;
            if (++nodes > budget) throw budget_error("induced-subpair search budget exceeded");
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j)
                if (small.graph.adjacent(order[j], v) != big.graph.adjacent(map[order[j]], cand)) ok = false;
            if (!ok) continue;
            const std::uint64_t* cm = &member_mask[static_cast<size_t>(cand) * words];
            bool feasible = true;
            for (int s = 0; s < ns && feasible; ++s) {
                bool member = in_set[s][v];
                bool nonzero = false;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t bits = cur[s * words + w];
                    bits = member ? (bits & cm[w]) : (bits & ~cm[w]);
                    nxt[s * words + w] = bits;
                    nonzero |= (bits != 0);
                }
                if (!nonzero) feasible = false;
            }
            if (!feasible) continue;
            map[v] = cand;
            used[cand] = 1;
            if (self(self, idx + 1)) return true;
            used[cand] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

// ------------------------------------------------------ pseudo-decomposition

struct PseudoDecomposition {
    SubdivisionProfile profile;     // base graph recovered from h
    BlockTree base_tree;            // rooted per the decision trace
    int root_vertex = -1;           // realized feedback vertex of the root block
    int root_block = -1;
    std::vector<std::vector<int>> pseudo_blocks; // realized vertex sets per base block
};

// Rooted block decomposition of the base multigraph lifted to its
// >=2-subdivision h; requires decide(base) = yes.
inline PseudoDecomposition pseudo_decomposition(const SimpleGraph& h) {
    PseudoDecomposition pd;
    pd.profile = subdivision_base(h);
    if (!pd.profile.is_ge_subdivision(2))
        throw std::domain_error("pseudo_decomposition: input is not a >=2-subdivision");
    DecisionOutcome dec = decide_ge2_subdivisions(pd.profile.base);
    if (!dec.answer) throw std::domain_error("pseudo_decomposition: base graph fails the decision algorithm");

    pd.base_tree = block_tree(pd.profile.base);
    // identify the final block within the tree to root there
    auto same_block = [&](const Block& a, const Block& b) {
        return a.edge_ids == b.edge_ids && a.vertices == b.vertices;
    };
    for (size_t i = 0; i < pd.base_tree.blocks.size(); ++i)
        if (same_block(pd.base_tree.blocks[i], dec.final_block)) pd.root_block = static_cast<int>(i);
    if (pd.root_block < 0) throw std::runtime_error("pseudo_decomposition: final block not found");
    pd.base_tree.root_at(pd.root_block);
    pd.root_vertex = pd.profile.branch_map[dec.feedback_vertex];

    for (const auto& blk : pd.base_tree.blocks) {
        std::set<int> verts;
        for (int v : blk.vertices) verts.insert(pd.profile.branch_map[v]);
        for (int e : blk.edge_ids)
            for (int v : pd.profile.path_map[e]) verts.insert(v);
        pd.pseudo_blocks.emplace_back(verts.begin(), verts.end());
    }
    return pd;
}

// --------------------------------------------------- certificate construction

namespace detail {

struct BuiltPair {
    CertNode node;
    std::vector<int> vertex_of;              // certificate id -> h vertex id
    std::vector<std::vector<int>> family;    // in h vertex ids, mirrors the replayed family
};

// ADD-chain certificate for a tree on the given h-vertices (all singletons).
inline BuiltPair tree_pair(const SimpleGraph& h, const std::vector<int>& verts) {
    BuiltPair out;
    if (verts.empty()) {
        out.node.op = CertOp::Induce;
        out.node.left = std::make_unique<CertNode>();
        out.node.left->op = CertOp::Singleton;
        return out;
    }
    std::set<int> in(verts.begin(), verts.end());
    out.node.op = CertOp::Singleton;
    out.vertex_of = {verts[0]};
    out.family = {{verts[0]}};

    // BFS from verts[0] within the vertex set; each new vertex is ADDed on
    // its parent's singleton
    std::map<int, int> cert_id{{verts[0], 0}};
    std::vector<int> q{verts[0]};
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int u = q[qi];
        for (int w : h.adj[u]) {
            if (!in.count(w) || cert_id.count(w)) continue;
            // find the family index of {u}
            int idx = -1;
            for (size_t i = 0; i < out.family.size(); ++i)
                if (out.family[i] == std::vector<int>{u}) idx = static_cast<int>(i);
            if (idx < 0) throw std::runtime_error("tree_pair: missing singleton");
            CertNode add;
            add.op = CertOp::Add;
            add.set_index = idx;
            add.left = std::make_unique<CertNode>(std::move(out.node));
            out.node = std::move(add);
            cert_id[w] = static_cast<int>(out.vertex_of.size());
            out.vertex_of.push_back(w);
            out.family.push_back({w});
            q.push_back(w);
        }
    }
    if (out.vertex_of.size() != verts.size()) throw std::runtime_error("tree_pair: vertex set is not a tree");
    return out;
}

inline int family_index(const BuiltPair& p, const std::vector<int>& set_in_h) {
    for (size_t i = 0; i < p.family.size(); ++i)
        if (p.family[i] == set_in_h) return static_cast<int>(i);
    return -1;
}

// join bookkeeping mirroring join_op's family construction
inline BuiltPair join_built(BuiltPair p1, BuiltPair p2, int set_index) {
    BuiltPair out;
    out.node.op = CertOp::Join;
    out.node.set_index = set_index;
    out.node.left = std::make_unique<CertNode>(std::move(p1.node));
    out.node.right = std::make_unique<CertNode>(std::move(p2.node));
    out.vertex_of = p1.vertex_of;
    out.vertex_of.insert(out.vertex_of.end(), p2.vertex_of.begin(), p2.vertex_of.end());

    auto push = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        for (const auto& t : out.family)
            if (t == s) return;
        out.family.push_back(std::move(s));
    };
    if (set_index == -1) {
        for (const auto& t : p2.family) push(t);
        for (const auto& t : p1.family) push(t);
    } else {
        for (int i = 0; i < static_cast<int>(p2.family.size()); ++i)
            if (i != set_index) push(p2.family[i]);
        for (const auto& s1 : p1.family) {
            std::vector<int> u = s1;
            u.insert(u.end(), p2.family[set_index].begin(), p2.family[set_index].end());
            push(std::move(u));
        }
    }
    return out;
}

inline BuiltPair add_built(BuiltPair p, int set_index, int new_h_vertex) {
    BuiltPair out;
    out.node.op = CertOp::Add;
    out.node.set_index = set_index;
    out.node.left = std::make_unique<CertNode>(std::move(p.node));
    out.vertex_of = std::move(p.vertex_of);
    out.vertex_of.push_back(new_h_vertex);
    out.family = std::move(p.family);
    std::vector<int> s{new_h_vertex};
    bool present = false;
    for (const auto& t : out.family)
        if (t == s) present = true;
    if (!present) out.family.push_back(std::move(s));
    return out;
}

// Certificate for (piece - N[r], S) where piece is a union of pseudo-blocks
// of h hanging below the root vertex r, per the recursion of the proof.
// Returns a pair whose family contains {v} for every v at distance 2 from r
// inside the piece.
inline BuiltPair inter_rec(const SimpleGraph& h, const PseudoDecomposition& pd, int block_index, int r_realized) {
    const BlockTree& bt = pd.base_tree;
    const Block& root_block = bt.blocks[block_index];

    // vertices of the root pseudo-block minus N[r]
    std::set<int> rblock(pd.pseudo_blocks[block_index].begin(), pd.pseudo_blocks[block_index].end());
    std::set<int> nr{r_realized};
    for (int w : h.adj[r_realized]) nr.insert(w);
    std::vector<int> tree_verts;
    for (int v : rblock)
        if (!nr.count(v)) tree_verts.push_back(v);

    BuiltPair acc = tree_pair(h, tree_verts);

    // cut-vertices of the base lying in this block, in ascending realized id;
    // the cut this block hangs from belongs to the level above
    auto boc = bt.blocks_of_cut();
    std::vector<std::pair<int, int>> cuts; // (realized id, cut index)
    for (size_t c = 0; c < bt.cut_vertices.size(); ++c) {
        int base_v = bt.cut_vertices[c];
        if (base_v == bt.parent_cut_vertex[block_index]) continue;
        bool in_block = false;
        for (int v : root_block.vertices)
            if (v == base_v) in_block = true;
        if (!in_block) continue;
        cuts.emplace_back(pd.profile.branch_map[base_v], static_cast<int>(c));
    }
    std::sort(cuts.begin(), cuts.end());

    for (auto [s_realized, c] : cuts) {
        // children blocks hanging below this cut vertex
        std::vector<int> child_blocks;
        for (int b : boc[c])
            if (bt.parent_cut_vertex[b] == bt.cut_vertices[c] && b != block_index) child_blocks.push_back(b);
        if (child_blocks.empty()) continue;

        // H_s = disjoint union of the recursive pieces below s
        BuiltPair hs;
        bool first = true;
        std::vector<int> dist2; // vertices at distance 2 from s inside the union
        for (int b : child_blocks) {
            BuiltPair piece = inter_rec(h, pd, b, s_realized);
            if (first) {
                hs = std::move(piece);
                first = false;
            } else {
                hs = join_built(std::move(piece), std::move(hs), -1);
            }
        }
        for (int w : h.adj[s_realized]) {
            if (rblock.count(w)) continue; // neighbors inside the root block stay
            for (int u : h.adj[w])
                if (u != s_realized && !h.adjacent(u, s_realized)) dist2.push_back(u);
        }
        std::sort(dist2.begin(), dist2.end());
        dist2.erase(std::unique(dist2.begin(), dist2.end()), dist2.end());

        if (s_realized == r_realized) {
            // pieces hanging at the root vertex itself: plain disjoint union
            acc = join_built(std::move(hs), std::move(acc), -1);
            continue;
        }

        // join on {s}: s has to be present in acc with a singleton
        int sidx = family_index(acc, {s_realized});
        if (sidx < 0) throw std::runtime_error("inter_rec: singleton of cut vertex missing");
        acc = join_built(std::move(hs), std::move(acc), sidx);

        // the join created sets {s, u} for u at distance 2 from s below s;
        // add back every middle vertex of such a path
        for (int u : dist2) {
            std::vector<int> su{s_realized, u};
            std::sort(su.begin(), su.end());
            int idx = family_index(acc, su);
            if (idx < 0) throw std::runtime_error("inter_rec: pair set missing after join");
            for (int w : h.adj[s_realized]) {
                if (rblock.count(w) || !h.adjacent(w, u)) continue;
                acc = add_built(std::move(acc), idx, w);
                idx = family_index(acc, su); // unchanged, but recompute defensively
            }
        }
    }
    return acc;
}

} // namespace detail

// Certificate for (h - N[r], S) where r is the root of the
// pseudo-decomposition; the family contains every singleton {v} with v at
// distance 2 from r. Returns the certificate together with the map from
// certificate ids to h ids.
struct InnerCertificate {
    ConstructionCertificate certificate;
    std::vector<int> vertex_of;
};

inline InnerCertificate build_inner_certificate(const SimpleGraph& h, const PseudoDecomposition& pd) {
    if (!is_triangle_free(h))
        throw std::domain_error("build_inner_certificate: the construction is triangle-free; input must be too");
    detail::BuiltPair built = detail::inter_rec(h, pd, pd.root_block, pd.root_vertex);
    InnerCertificate out;
    out.certificate.root = std::move(built.node);
    out.vertex_of = built.vertex_of;
    auto replayed = replay(out.certificate);
    out.certificate.claimed = replayed.pair;
    return out;
}

inline InnerCertificate build_inner_certificate(const SimpleGraph& h) { return build_inner_certificate(h, pseudo_decomposition(h)); }

struct ConstructResult {
    ConstructionCertificate certificate;
    std::vector<int> vertex_of; // certificate id -> h id
};

// Full certificate for (h, S): join the inner pair with ({r}, {{r}}) on {r}
// and add one vertex per path r-w-u with u at distance 2 from r.
inline ConstructResult construct(const SimpleGraph& h) {
    if (!is_triangle_free(h))
        throw std::domain_error("construct: the construction is triangle-free; input must be too");
    PseudoDecomposition pd = pseudo_decomposition(h);
    int r = pd.root_vertex;

    detail::BuiltPair inner = detail::inter_rec(h, pd, pd.root_block, r);
    detail::BuiltPair rpair;
    rpair.node.op = CertOp::Singleton;
    rpair.vertex_of = {r};
    rpair.family = {{r}};

    detail::BuiltPair acc = detail::join_built(std::move(inner), std::move(rpair), 0);

    std::vector<int> dist2;
    for (int w : h.adj[r])
        for (int u : h.adj[w])
            if (u != r && !h.adjacent(u, r)) dist2.push_back(u);
    std::sort(dist2.begin(), dist2.end());
    dist2.erase(std::unique(dist2.begin(), dist2.end()), dist2.end());
    for (int u : dist2) {
        std::vector<int> ru{r, u};
        std::sort(ru.begin(), ru.end());
        int idx = detail::family_index(acc, ru);
        if (idx < 0) throw std::runtime_error("construct: pair set missing");
        for (int w : h.adj[r]) {
            if (!h.adjacent(w, u)) continue;
            acc = detail::add_built(std::move(acc), idx, w);
            idx = detail::family_index(acc, ru);
        }
    }
    if (static_cast<int>(acc.vertex_of.size()) != h.n) throw std::runtime_error("construct: vertex count mismatch");

    ConstructResult out;
    out.certificate.root = std::move(acc.node);
    out.vertex_of = acc.vertex_of;
    out.certificate.claimed = replay(out.certificate).pair;
    return out;
}

// ---------------------------------------------------------- chromatic number

struct ChromaticResult {
    std::optional<int> exact;
    int lower = 1, upper = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

// k-colorability of the peeled core by saturation-guided backtracking.
inline bool k_colorable(const SimpleGraph& g, int k, std::uint64_t budget, std::uint64_t& nodes) {
    // peel vertices of degree < k; they can always be colored afterwards
    std::vector<int> deg(g.n);
    std::vector<char> alive(g.n, 1);
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            alive[v] = 0;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if (alive[u] && --deg[u] < k) {
                alive[u] = 0;
                stack.push_back(u);
            }
    }
    std::vector<int> core;
    for (int v = 0; v < g.n; ++v)
        if (alive[v]) core.push_back(v);
    if (core.empty()) return true;

    SimpleGraph c(static_cast<int>(core.size()));
    std::vector<int> loc(g.n, -1);
    for (size_t i = 0; i < core.size(); ++i) loc[core[i]] = static_cast<int>(i);
    for (int v : core)
        for (int u : g.adj[v])
            if (loc[u] >= 0 && v < u) c.add_edge(loc[v], loc[u]);

    std::vector<int> color(c.n, -1);
    std::vector<std::vector<int>> sat(c.n, std::vector<int>(k, 0));
    std::vector<int> satcount(c.n, 0);
    int colored = 0, max_used = -1;

    auto pick = [&]() {
        int best = -1;
        for (int v = 0; v < c.n; ++v) {
            if (color[v] >= 0) continue;
            if (best < 0 || satcount[v] > satcount[best] ||
                (satcount[v] == satcount[best] && c.degree(v) > c.degree(best)))
                best = v;
        }
        return best;
    };

    auto rec = [&](auto&& self) -> bool {
        if (colored == c.n) return true;
        if (++nodes > budget) throw budget_error("chromatic search budget exceeded");
        int v = pick();
        if (satcount[v] >= k) return false;
        int limit = std::min(k - 1, max_used + 1); // new colors in one canonical order
        for (int col = 0; col <= limit; ++col) {
            if (sat[v][col] > 0) continue;
            color[v] = col;
            ++colored;
            int old_max = max_used;
            max_used = std::max(max_used, col);
            for (int u : c.adj[v])
                if (color[u] < 0 && sat[u][col]++ == 0) ++satcount[u];
            bool dead = false;
            for (int u : c.adj[v])
                if (color[u] < 0 && satcount[u] >= k) dead = true;
            if (!dead && self(self)) return true;
            for (int u : c.adj[v])
                if (color[u] < 0 && --sat[u][col] == 0) --satcount[u];
            color[v] = -1;
            --colored;
            max_used = old_max;
        }
        return false;
    };
    return rec(rec);
}

} // namespace detail

// Exact chromatic number by iterated k-colorability with a node budget.
inline ChromaticResult chromatic_number(const SimpleGraph& g, std::uint64_t budget = 100'000'000) {
    ChromaticResult r;
    if (g.n == 0) {
        r.exact = 0;
        r.lower = r.upper = 0;
        return r;
    }
    bool has_edge = g.edge_count() > 0;
    r.lower = has_edge ? 2 : 1;
    r.upper = g.n;
    try {
        for (int k = 1; k <= g.n; ++k) {
            if (detail::k_colorable(g, k, budget, r.nodes)) {
                r.exact = k;
                r.lower = r.upper = k;
                return r;
            }
            r.lower = k + 1;
        }
    } catch (const budget_error&) {
        // bounds carry the progress made
    }
    return r;
}

} // namespace rfg
