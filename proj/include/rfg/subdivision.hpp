#pragma once

// Subdivision calculus: expand a multigraph into a simple graph by putting
// counted paths on its edges, and the inverse (suppress degree-2 vertices).

#include <stdexcept>
#include <vector>

#include "rfg/graph.hpp"

namespace rfg {

struct SubdivisionProfile {
    Multigraph base;
    std::vector<int> counts;                 // per base edge: number of inserted vertices
    SimpleGraph realized;
    std::vector<int> branch_map;             // base vertex -> realized vertex
    std::vector<std::vector<int>> path_map;  // base edge -> realized path (endpoints included)

    bool is_ge_subdivision(int k) const {
        for (int c : counts)
            if (c < k) return false;
        return true;
    }
};

// Replace edge i of g by a path with counts[i] internal vertices. Branch
// vertices keep their ids, subdivision vertices are appended in edge order.
// Fails if the result would have a loop or a parallel pair.
inline SubdivisionProfile subdivide(const Multigraph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.edge_count())
        throw std::invalid_argument("subdivide: need one count per edge");
    for (int c : counts)
        if (c < 0) throw std::invalid_argument("subdivide: negative count");

    SubdivisionProfile p;
    p.base = g;
    p.counts = counts;
    int total = g.n;
    for (int c : counts) total += c;
    p.realized = SimpleGraph(total);
    p.branch_map.resize(g.n);
    for (int v = 0; v < g.n; ++v) p.branch_map[v] = v;

    int next = g.n;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        std::vector<int> path{u};
        for (int j = 0; j < counts[e]; ++j) path.push_back(next++);
        path.push_back(v);
        for (size_t j = 0; j + 1 < path.size(); ++j) {
            int a = path[j], b = path[j + 1];
            if (a == b) throw std::domain_error("subdivide: loop survives (count too small)");
            if (p.realized.adjacent(a, b))
                throw std::domain_error("subdivide: parallel edge survives (count too small)");
            p.realized.add_edge(a, b);
        }
        p.path_map.push_back(std::move(path));
    }
    return p;
}

// Inverse: contract maximal degree-2 paths of a connected simple graph. A
// bare cycle (no branch vertex) becomes a loop anchored at its smallest id.
inline SubdivisionProfile subdivision_base(const SimpleGraph& h) {
    if (!is_connected(h)) throw std::domain_error("subdivision_base: graph must be connected");

    SubdivisionProfile p;
    p.realized = h;

    std::vector<int> branch;
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) != 2) branch.push_back(v);

    if (branch.empty()) {
        // h is a cycle: base is a loop anchored at vertex 0
        p.base = Multigraph(1);
        p.base.edges.emplace_back(0, 0);
        p.branch_map = {0};
        std::vector<int> path{0};
        int prev = 0, cur = h.adj[0][0];
        while (cur != 0) {
            path.push_back(cur);
            int nxt = (h.adj[cur][0] == prev) ? h.adj[cur][1] : h.adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        path.push_back(0);
        p.counts = {static_cast<int>(path.size()) - 2};
        p.path_map.push_back(std::move(path));
        return p;
    }

    std::vector<int> base_id(h.n, -1);
    for (size_t i = 0; i < branch.size(); ++i) base_id[branch[i]] = static_cast<int>(i);
    p.base = Multigraph(static_cast<int>(branch.size()));
    p.branch_map = branch;

    // walk every maximal degree-2 path once: mark traversed first edges
    std::set<std::pair<int, int>> used; // directed (from, to) of the first step
    for (int b : branch) {
        for (int w : h.adj[b]) {
            if (used.count({b, w})) continue;
            std::vector<int> path{b};
            int prev = b, cur = w;
            while (base_id[cur] < 0) {
                path.push_back(cur);
                int nxt = (h.adj[cur][0] == prev) ? h.adj[cur][1] : h.adj[cur][0];
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            used.insert({b, w});
            used.insert({cur, prev});
            p.base.edges.emplace_back(base_id[b], base_id[cur]);
            p.counts.push_back(static_cast<int>(path.size()) - 2);
            p.path_map.push_back(std::move(path));
        }
    }
    return p;
}

} // namespace rfg
