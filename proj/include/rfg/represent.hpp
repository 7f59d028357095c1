#pragma once

// The yes-branch pipeline: representing a >=2-subdivision of a multigraph
// the decision algorithm accepts. The final block's subdivision is drawn as
// a chandelier around its feedback vertex (or as a path), and the pruned
// blocks are re-attached in reverse order by gluing chandeliers or pendant
// paths at their parent cut-vertices.

#include <map>
#include <stdexcept>
#include <vector>

#include "rfg/decision.hpp"
#include "rfg/frame_builders.hpp"
#include "rfg/subdivision.hpp"

namespace rfg {

namespace detail {

// Realized subdivision of one block: the induced subgraph of the realized
// graph on the block's branch vertices and its edges' path interiors.
// Returns local graph + local->realized map.
struct LocalPiece {
    SimpleGraph graph;
    std::vector<int> to_realized;
    std::map<int, int> from_realized;
    int local_of(int realized) const { return from_realized.at(realized); }
};

inline LocalPiece block_subdivision(const Block& blk, const SubdivisionProfile& profile) {
    LocalPiece piece;
    auto touch = [&](int realized) {
        auto it = piece.from_realized.find(realized);
        if (it != piece.from_realized.end()) return it->second;
        int id = static_cast<int>(piece.to_realized.size());
        piece.from_realized[realized] = id;
        piece.to_realized.push_back(realized);
        return id;
    };
    for (int v : blk.vertices) touch(profile.branch_map[v]);
    std::vector<std::pair<int, int>> edges;
    for (int e : blk.edge_ids) {
        const auto& path = profile.path_map[e];
        for (size_t j = 0; j + 1 < path.size(); ++j) edges.emplace_back(touch(path[j]), touch(path[j + 1]));
    }
    piece.graph = SimpleGraph(static_cast<int>(piece.to_realized.size()));
    for (auto [a, b] : edges) piece.graph.add_edge(a, b);
    return piece;
}

} // namespace detail

// Build a valid representation of subdivide(g, counts) (every count >= 2).
// Precondition: decide_ge2_subdivisions(g) answers yes.
inline FrameRepresentation build_ge2_subdivision(const Multigraph& g, const std::vector<int>& counts) {
    for (int c : counts)
        if (c < 2) throw std::invalid_argument("build_ge2_subdivision: all counts must be >= 2");
    DecisionOutcome dec = decide_ge2_subdivisions(g);
    if (!dec.answer)
        throw std::domain_error(
            "build_ge2_subdivision: no >=2-subdivision of this graph has a restricted frame representation");
    SubdivisionProfile profile = subdivide(g, counts);

    FrameRepresentation rep;
    std::map<int, int> placed; // realized id -> current rep id
    std::vector<int> rep_to_realized;

    auto append_mapping = [&](const std::vector<int>& added_realized) {
        for (int r : added_realized) {
            placed[r] = static_cast<int>(rep_to_realized.size());
            rep_to_realized.push_back(r);
        }
    };

    // seed with the final block
    {
        const Block& blk = dec.final_block;
        auto piece = detail::block_subdivision(blk, profile);
        if (piece.graph.n == 1) {
            rep.frames = {Frame{0, 2, 0, 2, 0}};
            rep.target = SimpleGraph(1);
        } else if (blk.edge_ids.size() == 1 && blk.graph.edges[0].first != blk.graph.edges[0].second) {
            // a bridge block: its subdivision is a path
            int root = piece.local_of(profile.branch_map[dec.feedback_vertex]);
            rep = build_tree(piece.graph, root);
        } else {
            int pivot = piece.local_of(profile.branch_map[dec.feedback_vertex]);
            rep = build_chandelier(piece.graph, pivot);
        }
        append_mapping(piece.to_realized);
    }

    // re-attach pruned blocks in reverse order
    for (auto it = dec.trace.rbegin(); it != dec.trace.rend(); ++it) {
        const Block& blk = it->block;
        int cut_realized = profile.branch_map[it->parent_cut_vertex];
        int at = placed.at(cut_realized);
        auto piece = detail::block_subdivision(blk, profile);
        int pivot = piece.local_of(cut_realized);

        if (blk.edge_ids.size() == 1 && blk.graph.edges[0].first != blk.graph.edges[0].second) {
            // bridge: pendant path hanging off the cut vertex
            int e = blk.edge_ids[0];
            auto path = profile.path_map[e]; // ordered along the base edge
            if (path.front() != cut_realized) std::reverse(path.begin(), path.end());
            rep = add_pendant_path(rep, at, static_cast<int>(path.size()) - 1);
            append_mapping({path.begin() + 1, path.end()});
        } else {
            // 2-connected or loop block: its subdivision is a chandelier with
            // the parent cut-vertex as pivot
            rep = glue_chandelier(rep, at, piece.graph, pivot);
            std::vector<int> added;
            for (int lv = 0; lv < piece.graph.n; ++lv)
                if (lv != pivot) added.push_back(piece.to_realized[lv]);
            append_mapping(added);
        }
    }

    // retag everything onto the realized numbering
    FrameRepresentation out;
    out.target = profile.realized;
    out.frames = rep.frames;
    for (auto& f : out.frames) f.vertex = rep_to_realized[f.vertex];
    return out;
}

} // namespace rfg
