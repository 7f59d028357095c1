#pragma once

// Block decomposition of a connected multigraph: maximal 2-connected
// fragments, bridge edges as K2 blocks, and loops as single-vertex blocks.
// The incidence structure between blocks and cut-vertices is a tree.

#include <stdexcept>
#include <vector>

#include "rfg/graph.hpp"

namespace rfg {

struct Block {
    std::vector<int> vertices;              // parent-graph vertex ids
    std::vector<int> edge_ids;              // indices into the parent graph's edge list
    Multigraph graph;                       // fragment with local ids 0..k-1
    std::vector<int> to_parent;             // local id -> parent id (same as vertices)
    int local_of(int parent_vertex) const {
        for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
            if (to_parent[i] == parent_vertex) return i;
        throw std::out_of_range("vertex not in block");
    }
};

struct BlockTree {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;                    // parent ids, vertices lying in >= 2 blocks
    std::vector<std::pair<int, int>> tree_edges;      // (cut-vertex index, block index)
    int root = -1;                                    // optional root block index
    std::vector<int> parent_cut_vertex;               // per block, parent cut vertex id (-1 for root); only when rooted

    std::vector<std::vector<int>> blocks_of_cut() const {
        std::vector<std::vector<int>> r(cut_vertices.size());
        for (auto [c, b] : tree_edges) r[c].push_back(b);
        return r;
    }
    std::vector<std::vector<int>> cuts_of_block() const {
        std::vector<std::vector<int>> r(blocks.size());
        for (auto [c, b] : tree_edges) r[b].push_back(c);
        return r;
    }

    // Root the tree at the given block; fills parent_cut_vertex by BFS.
    void root_at(int block_index) {
        root = block_index;
        parent_cut_vertex.assign(blocks.size(), -1);
        auto boc = blocks_of_cut();
        auto cob = cuts_of_block();
        std::vector<char> seen_block(blocks.size(), 0), seen_cut(cut_vertices.size(), 0);
        std::vector<int> queue{block_index};
        seen_block[block_index] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int b = queue[qi];
            for (int c : cob[b]) {
                if (seen_cut[c]) continue;
                seen_cut[c] = 1;
                for (int b2 : boc[c]) {
                    if (seen_block[b2]) continue;
                    seen_block[b2] = 1;
                    parent_cut_vertex[b2] = cut_vertices[c];
                    queue.push_back(b2);
                }
            }
        }
    }
};

// Iterative lowpoint algorithm; handles parallel edges by edge-id tracking.
// Loop edges each become their own single-vertex block.
inline BlockTree block_tree(const Multigraph& g) {
    if (g.n == 0) throw std::domain_error("block_tree: empty graph");

    AdjacencyCSR adj(g);
    int n = g.n, m = g.edge_count();

    BlockTree bt;
    std::vector<std::vector<int>> raw_blocks; // lists of edge ids

    // loops first: one block per loop edge
    std::vector<char> is_loop(m, 0);
    for (int e = 0; e < m; ++e)
        if (g.edges[e].first == g.edges[e].second) {
            is_loop[e] = 1;
            raw_blocks.push_back({e});
        }

    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), it(n);
    for (int v = 0; v < n; ++v) it[v] = adj.offset[v];
    std::vector<int> edge_stack;
    std::vector<char> edge_seen(m, 0);
    int timer = 0;

    std::vector<int> dfs_stack;
    dfs_stack.reserve(64);
    dfs_stack.push_back(0);
    disc[0] = low[0] = timer++;
    while (!dfs_stack.empty()) {
        int u = dfs_stack.back();
        if (it[u] < adj.offset[u + 1]) {
            int v = adj.nbr[it[u]];
            int e = adj.eid[it[u]];
            ++it[u];
            if (is_loop[e] || e == parent_edge[u] || edge_seen[e]) continue;
            edge_seen[e] = 1;
            if (disc[v] == -1) {
                edge_stack.push_back(e);
                disc[v] = low[v] = timer++;
                parent_edge[v] = e;
                dfs_stack.push_back(v);
            } else {
                edge_stack.push_back(e);
                if (disc[v] < low[u]) low[u] = disc[v];
            }
        } else {
            dfs_stack.pop_back();
            if (!dfs_stack.empty()) {
                int p = dfs_stack.back();
                if (low[u] < low[p]) low[p] = low[u];
                if (low[u] >= disc[p]) {
                    // pop the biconnected component ending at the tree edge p-u
                    std::vector<int> comp;
                    int pe = parent_edge[u];
                    while (!edge_stack.empty()) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(e);
                        if (e == pe) break;
                    }
                    raw_blocks.push_back(std::move(comp));
                }
            }
        }
    }

    if (timer != n) throw std::domain_error("block_tree: graph must be connected");

    if (raw_blocks.empty()) {
        // single vertex without edges
        Block b;
        b.vertices = {0};
        b.to_parent = {0};
        b.graph = Multigraph(1);
        bt.blocks.push_back(std::move(b));
        return bt;
    }

    std::vector<int> block_count_of_vertex(n, 0);
    std::vector<int> mark(n, -1), local_pos(n, -1);
    for (size_t bi = 0; bi < raw_blocks.size(); ++bi) {
        Block b;
        b.edge_ids = raw_blocks[bi];
        for (int e : b.edge_ids) {
            for (int x : {g.edges[e].first, g.edges[e].second}) {
                if (mark[x] != static_cast<int>(bi)) {
                    mark[x] = static_cast<int>(bi);
                    local_pos[x] = static_cast<int>(b.vertices.size());
                    b.vertices.push_back(x);
                    ++block_count_of_vertex[x];
                }
            }
        }
        b.to_parent = b.vertices;
        b.graph = Multigraph(static_cast<int>(b.vertices.size()));
        for (int e : b.edge_ids)
            b.graph.edges.emplace_back(local_pos[g.edges[e].first], local_pos[g.edges[e].second]);
        bt.blocks.push_back(std::move(b));
    }

    std::vector<int> cut_index(n, -1);
    for (int v = 0; v < n; ++v)
        if (block_count_of_vertex[v] >= 2) {
            cut_index[v] = static_cast<int>(bt.cut_vertices.size());
            bt.cut_vertices.push_back(v);
        }
    for (size_t bi = 0; bi < bt.blocks.size(); ++bi)
        for (int v : bt.blocks[bi].vertices)
            if (cut_index[v] >= 0) bt.tree_edges.emplace_back(cut_index[v], static_cast<int>(bi));

    return bt;
}

} // namespace rfg
