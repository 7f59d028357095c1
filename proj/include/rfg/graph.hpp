#pragma once

// Multigraph / simple-graph data model, edge-list parsing and the basic
// structural predicates everything else builds on.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rfg {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected multigraph. Parallel edges are repeated entries, loops have
// u == v. Edge order is preserved by parsing but carries no meaning.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph() = default;
    explicit Multigraph(int n_) : n(n_) {}
    Multigraph(int n_, std::vector<std::pair<int, int>> e) : n(n_), edges(std::move(e)) {
        for (auto [u, v] : edges) check_vertex(u), check_vertex(v);
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        edges.emplace_back(u, v);
    }

    // adjacency as (neighbor, edge index) lists; loops appear twice on their vertex
    std::vector<std::vector<std::pair<int, int>>> adjacency() const {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            auto [u, v] = edges[i];
            adj[u].push_back({v, i});
            if (u != v) adj[v].push_back({u, i});
        }
        return adj;
    }
};

// Flat compressed adjacency; the representation the linear-time paths use.
struct AdjacencyCSR {
    std::vector<int> offset; // n + 1
    std::vector<int> nbr;    // neighbor per incidence
    std::vector<int> eid;    // edge id per incidence

    explicit AdjacencyCSR(const Multigraph& g) {
        int n = g.n, m = g.edge_count();
        offset.assign(n + 1, 0);
        for (auto [u, v] : g.edges) {
            ++offset[u + 1];
            if (u != v) ++offset[v + 1];
        }
        for (int i = 0; i < n; ++i) offset[i + 1] += offset[i];
        nbr.resize(offset[n]);
        eid.resize(offset[n]);
        std::vector<int> cursor(offset.begin(), offset.end() - 1);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges[e];
            nbr[cursor[u]] = v;
            eid[cursor[u]++] = e;
            if (u != v) {
                nbr[cursor[v]] = u;
                eid[cursor[v]++] = e;
            }
        }
    }
};

// Loop-free, parallel-free undirected graph with adjacency lists kept sorted.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_), adj(n_) {}

    void add_edge(int u, int v) {
        if (u == v) throw std::domain_error("loop in simple graph");
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
        if (adjacent(u, v)) throw std::domain_error("parallel edge in simple graph");
        adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    bool adjacent(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int edge_count() const {
        int m = 0;
        for (const auto& a : adj) m += static_cast<int>(a.size());
        return m / 2;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
};

inline SimpleGraph to_simple(const Multigraph& g) {
    SimpleGraph s(g.n);
    for (auto [u, v] : g.edges) {
        if (u == v) throw std::domain_error("multigraph has a loop; not a simple graph");
        if (s.adjacent(u, v)) throw std::domain_error("multigraph has parallel edges; not a simple graph");
        s.add_edge(u, v);
    }
    return s;
}

inline Multigraph to_multigraph(const SimpleGraph& g) {
    Multigraph m(g.n);
    for (auto [u, v] : g.edge_list()) m.add_edge(u, v);
    return m;
}

// Edge-list text format: first non-comment line is the vertex count, then one
// "u v" pair per line. '#' starts a comment line, repetition encodes
// multiplicity, "u u" is a loop. Accepts LF and CRLF.
inline Multigraph parse_multigraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_count = false;
    Multigraph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_count) {
            long long cnt;
            std::string rest;
            if (!(ls >> cnt) || cnt < 0 || (ls >> rest)) throw parse_error(lineno, "expected vertex count");
            g.n = static_cast<int>(cnt);
            have_count = true;
            continue;
        }
        long long u, v;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest)) throw parse_error(lineno, "expected edge 'u v'");
        if (u < 0 || u >= g.n || v < 0 || v >= g.n)
            throw std::out_of_range("line " + std::to_string(lineno) + ": vertex id out of range");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_count) throw parse_error(lineno == 0 ? 1 : lineno, "empty graph file");
    return g;
}

inline std::string write_multigraph(const Multigraph& g) {
    std::ostringstream out;
    out << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

inline bool is_connected(const Multigraph& g) {
    if (g.n == 0) return false;
    AdjacencyCSR adj(g);
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int i = adj.offset[u]; i < adj.offset[u + 1]; ++i) {
            int v = adj.nbr[i];
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.n;
}

inline bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

inline bool is_triangle_free(const SimpleGraph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            // common neighbor of u and v closes a triangle
            auto itu = g.adj[u].begin(), itv = g.adj[v].begin();
            while (itu != g.adj[u].end() && itv != g.adj[v].end()) {
                if (*itu == *itv) return false;
                if (*itu < *itv) ++itu; else ++itv;
            }
        }
    return true;
}

// Connected components of g restricted to the vertices with alive[v] != 0.
// Returns component id per vertex (-1 for dead vertices) and the count.
inline std::pair<std::vector<int>, int> components_within(const SimpleGraph& g, const std::vector<char>& alive) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (!alive[s] || comp[s] >= 0) continue;
        comp[s] = c;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u])
                if (alive[v] && comp[v] < 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    return {comp, c};
}

// All vertices u such that removing the closed neighborhood N[u] leaves at
// least two connected components ("full star-cutset centers").
inline std::set<int> full_star_cutset_centers(const SimpleGraph& g) {
    if (!is_connected(g)) throw std::domain_error("full_star_cutset_centers: graph must be connected");
    std::set<int> centers;
    for (int u = 0; u < g.n; ++u) {
        std::vector<char> alive(g.n, 1);
        alive[u] = 0;
        for (int v : g.adj[u]) alive[v] = 0;
        auto [comp, c] = components_within(g, alive);
        if (c >= 2) centers.insert(u);
    }
    return centers;
}

// True iff g - v has no cycle. Loops and parallel pairs count as cycles.
inline bool is_feedback_vertex(const Multigraph& g, int v) {
    g.check_vertex(v);
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges) {
        if (a == v || b == v) continue;
        if (a == b) return false; // loop
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

inline bool is_forest(const Multigraph& g) {
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges) {
        if (a == b) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

// Backtracking induced-subgraph search: an injection small -> big preserving
// both adjacency and non-adjacency. Node budget aborts long searches.
inline std::optional<std::vector<int>> is_induced_subgraph(const SimpleGraph& small, const SimpleGraph& big,
                                                           std::uint64_t budget = 50'000'000) {
    if (small.n > big.n) return std::nullopt;
    if (small.n == 0) return std::vector<int>{};

    // order small's vertices so each one (after the first) touches a previous one when possible
    std::vector<int> order;
    {
        std::vector<char> placed(small.n, 0);
        std::vector<int> deg(small.n);
        for (int i = 0; i < small.n; ++i) deg[i] = small.degree(i);
        for (int step = 0; step < small.n; ++step) {
            int best = -1, bestScore = -1;
            for (int v = 0; v < small.n; ++v) {
                if (placed[v]) continue;
                int score = 0;
                for (int u : small.adj[v])
                    if (placed[u]) score += 1000;
                score += deg[v];
                if (score > bestScore) bestScore = score, best = v;
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }

    std::vector<int> map(small.n, -1);
    std::vector<char> used(big.n, 0);
    std::uint64_t nodes = 0;

    // recursive lambda over the chosen order
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == small.n) return true;
        int v = order[idx];
        for (int cand = 0; cand < big.n; ++cand) {
            if (used[cand]) continue;
            if (++nodes > budget) throw budget_error("induced-subgraph search budget exceeded");
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                bool se = small.adjacent(u, v);
                bool be = big.adjacent(map[u], cand);
                if (se != be) ok = false;
            }
            if (!ok) continue;
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

// Exact isomorphism test for small graphs (same size induced embedding).
inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, std::uint64_t budget = 50'000'000) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int i = 0; i < a.n; ++i) da.push_back(a.degree(i));
    for (int i = 0; i < b.n; ++i) db.push_back(b.degree(i));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return is_induced_subgraph(a, b, budget).has_value();
}

} // namespace rfg
