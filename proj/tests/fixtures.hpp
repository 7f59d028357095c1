#pragma once

// Shared test graphs and small generators.

#include <random>
#include <vector>

#include "rfg/graph.hpp"

namespace fixtures {

using rfg::Multigraph;
using rfg::SimpleGraph;

inline SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Multigraph bowtie() {
    Multigraph g(5); // triangles 0,1,2 and 0,3,4 sharing vertex 0
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    return g;
}

inline Multigraph theta() {
    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    return g;
}

inline Multigraph digon_edge_digon() {
    Multigraph g(4); // 0=1 doubled, 1-2 single, 2=3 doubled
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 3);
    return g;
}

inline Multigraph prism() {
    Multigraph g(6); // C3 x K2
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

inline SimpleGraph petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer C5
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

inline SimpleGraph k23() {
    SimpleGraph g(5); // parts {0,1} and {2,3,4}
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) g.add_edge(a, b);
    return g;
}

// random connected multigraph: a random tree plus extra random edges
inline Multigraph random_connected_multigraph(std::mt19937_64& rng, int n, int extra_edges, bool loops = true) {
    Multigraph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra_edges; ++i) {
        int u = pick(rng), v = pick(rng);
        if (!loops && u == v) {
            --i;
            continue;
        }
        g.add_edge(u, v);
    }
    return g;
}

inline SimpleGraph random_tree(std::mt19937_64& rng, int n) {
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    return g;
}

// apply a random relabeling to a multigraph
inline Multigraph relabel(const Multigraph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph out(g.n);
    for (auto [u, v] : g.edges) out.add_edge(perm[u], perm[v]);
    return out;
}

inline SimpleGraph relabel(const SimpleGraph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph out(g.n);
    for (auto [u, v] : g.edge_list()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace fixtures
