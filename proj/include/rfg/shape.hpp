#pragma once

// Shape recognition: paths, chandeliers and luxury chandeliers.
// A chandelier is a tree T plus a pivot adjacent to exactly T's leaves;
// luxury additionally requires each leaf's tree-neighbor to have degree 2.

#include <optional>
#include <stdexcept>
#include <vector>

#include "rfg/graph.hpp"

namespace rfg {

enum class ShapeClass { PathAtMost4, LongerPath, LuxuryChandelier, Chandelier, Other };

struct ShapeResult {
    ShapeClass cls = ShapeClass::Other;
    int pivot = -1; // defined for (luxury) chandeliers
};

inline bool is_path_graph(const SimpleGraph& g) {
    if (g.n == 1) return g.degree(0) == 0;
    int ends = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == 1) ++ends;
        else if (d != 2) return false;
    }
    return ends == 2 && g.edge_count() == g.n - 1 && is_connected(g);
}

inline bool is_tree(const SimpleGraph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

// Does removing pivot leave a tree T (with >= 2 vertices) whose leaves are
// exactly N(pivot)? Sets luxury if each leaf's T-neighbor has degree 2 in T.
inline bool chandelier_pivot_check(const SimpleGraph& g, int pivot, bool& luxury) {
    if (g.n < 3) return false;
    SimpleGraph t(g.n - 1);
    std::vector<int> to_t(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (v != pivot) to_t[v] = k++;
    for (int u = 0; u < g.n; ++u) {
        if (u == pivot) continue;
        for (int v : g.adj[u])
            if (v != pivot && u < v) t.add_edge(to_t[u], to_t[v]);
    }
    if (!is_tree(t) || t.n < 2) return false; // single-vertex T rejected as degenerate
    std::vector<char> is_leaf(t.n, 0);
    for (int v = 0; v < t.n; ++v) is_leaf[v] = (t.degree(v) == 1);
    std::vector<char> is_nbr(t.n, 0);
    for (int v : g.adj[pivot]) is_nbr[to_t[v]] = 1;
    for (int v = 0; v < t.n; ++v)
        if (is_leaf[v] != is_nbr[v]) return false;
    luxury = true;
    for (int v = 0; v < t.n; ++v)
        if (is_leaf[v] && t.degree(t.adj[v][0]) != 2) luxury = false;
    return true;
}

// Most specific class wins: PathAtMost4 > LongerPath > LuxuryChandelier >
// Chandelier > Other.
inline ShapeResult recognize_shape(const SimpleGraph& g) {
    if (!is_connected(g)) throw std::domain_error("recognize_shape: graph must be connected");
    ShapeResult r;
    if (is_path_graph(g)) {
        r.cls = g.n <= 4 ? ShapeClass::PathAtMost4 : ShapeClass::LongerPath;
        return r;
    }
    int plain_pivot = -1;
    for (int pivot = 0; pivot < g.n; ++pivot) {
        bool luxury = false;
        if (chandelier_pivot_check(g, pivot, luxury)) {
            if (luxury) {
                r.cls = ShapeClass::LuxuryChandelier;
                r.pivot = pivot;
                return r;
            }
            if (plain_pivot < 0) plain_pivot = pivot;
        }
    }
    if (plain_pivot >= 0) {
        r.cls = ShapeClass::Chandelier;
        r.pivot = plain_pivot;
        return r;
    }
    return r;
}

} // namespace rfg
