#pragma once

// JSON readers/writers for the stable on-disk formats: frame
// representations, graph-stable-set pairs, construction certificates, and
// the structured outputs of the decision operations.

#include <string>

#include <json.hpp>

#include "rfg/burling.hpp"
#include "rfg/decision.hpp"
#include "rfg/frame.hpp"

namespace rfg {

using json = nlohmann::ordered_json;

// --------------------------------------------------------------- graphs

inline json simple_graph_to_json(const SimpleGraph& g) {
    json j;
    j["vertices"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edge_list()) j["edges"].push_back({u, v});
    return j;
}

inline SimpleGraph simple_graph_from_json(const json& j) {
    SimpleGraph g(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

// -------------------------------------------------------- representations

inline json representation_to_json(const FrameRepresentation& rep) {
    json j = simple_graph_to_json(rep.target);
    j["frames"] = json::array();
    for (const auto& f : rep.frames) {
        json jf;
        jf["vertex"] = f.vertex;
        jf["x1"] = f.x1;
        jf["x2"] = f.x2;
        jf["y1"] = f.y1;
        jf["y2"] = f.y2;
        j["frames"].push_back(jf);
    }
    return j;
}

inline FrameRepresentation representation_from_json(const json& j) {
    FrameRepresentation rep;
    rep.target = simple_graph_from_json(j);
    for (const auto& jf : j.at("frames")) {
        Frame f;
        f.vertex = jf.at("vertex").get<int>();
        f.x1 = jf.at("x1").get<std::int64_t>();
        f.x2 = jf.at("x2").get<std::int64_t>();
        f.y1 = jf.at("y1").get<std::int64_t>();
        f.y2 = jf.at("y2").get<std::int64_t>();
        rep.frames.push_back(f);
    }
    return rep;
}

inline const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::BadFrame: return "bad_frame";
        case ViolationKind::GeneralPosition: return "general_position";
        case ViolationKind::CornerContact: return "corner_contact";
        case ViolationKind::LeftSideContact: return "left_side_contact";
        case ViolationKind::RightSidePartial: return "right_side_partial_crossing";
        case ViolationKind::NonCanonical: return "non_canonical_intersection";
        case ViolationKind::FrameInZone: return "frame_in_intersection_zone";
        case ViolationKind::GraphMismatch: return "graph_mismatch";
    }
    return "unknown";
}

inline json violations_to_json(const std::vector<Violation>& vs) {
    json j;
    j["valid"] = vs.empty();
    j["violations"] = json::array();
    for (const auto& v : vs) {
        json jv;
        jv["kind"] = violation_kind_name(v.kind);
        jv["clause"] = v.clause;
        jv["frames"] = v.frames;
        jv["detail"] = v.detail;
        j["violations"].push_back(jv);
    }
    return j;
}

// ------------------------------------------------------------- pairs

inline json pair_to_json(const GraphStableSetPair& p) {
    json j = simple_graph_to_json(p.graph);
    j["stable_sets"] = p.stable_sets;
    return j;
}

inline GraphStableSetPair pair_from_json(const json& j) {
    GraphStableSetPair p;
    p.graph = simple_graph_from_json(j);
    for (const auto& s : j.at("stable_sets")) p.stable_sets.push_back(s.get<std::vector<int>>());
    p.check();
    return p;
}

// ---------------------------------------------------------- certificates

inline json cert_node_to_json(const CertNode& n) {
    json j;
    switch (n.op) {
        case CertOp::Singleton:
            j["op"] = "SINGLETON";
            break;
        case CertOp::Add:
            j["op"] = "ADD";
            j["set"] = n.set_index;
            j["child"] = cert_node_to_json(*n.left);
            break;
        case CertOp::Join:
            j["op"] = "JOIN";
            j["set"] = n.set_index;
            j["left"] = cert_node_to_json(*n.left);
            j["right"] = cert_node_to_json(*n.right);
            break;
        case CertOp::Induce:
            j["op"] = "INDUCE";
            j["vertices"] = n.vertices;
            j["sets"] = n.set_indices;
            j["child"] = cert_node_to_json(*n.left);
            break;
    }
    return j;
}

inline CertNode cert_node_from_json(const json& j, const std::string& path) {
    CertNode n;
    std::string op = j.at("op").get<std::string>();
    if (op == "SINGLETON") {
        n.op = CertOp::Singleton;
    } else if (op == "ADD") {
        n.op = CertOp::Add;
        n.set_index = j.at("set").get<int>();
        n.left = std::make_unique<CertNode>(cert_node_from_json(j.at("child"), path + ".child"));
    } else if (op == "JOIN") {
        n.op = CertOp::Join;
        n.set_index = j.at("set").get<int>();
        n.left = std::make_unique<CertNode>(cert_node_from_json(j.at("left"), path + ".left"));
        n.right = std::make_unique<CertNode>(cert_node_from_json(j.at("right"), path + ".right"));
    } else if (op == "INDUCE") {
        n.op = CertOp::Induce;
        n.vertices = j.at("vertices").get<std::vector<int>>();
        n.set_indices = j.at("sets").get<std::vector<int>>();
        n.left = std::make_unique<CertNode>(cert_node_from_json(j.at("child"), path + ".child"));
    } else {
        throw certificate_error(path, "unknown op '" + op + "'");
    }
    return n;
}

inline json certificate_to_json(const ConstructionCertificate& c) {
    json j;
    j["result"] = pair_to_json(c.claimed);
    j["tree"] = cert_node_to_json(c.root);
    return j;
}

inline ConstructionCertificate certificate_from_json(const json& j) {
    ConstructionCertificate c;
    c.claimed = pair_from_json(j.at("result"));
    c.root = cert_node_from_json(j.at("tree"), "root");
    return c;
}

// ------------------------------------------------------- decision outputs

inline json block_to_json(const Block& b) {
    json j;
    j["vertices"] = b.vertices;
    j["edges"] = json::array();
    for (auto [u, v] : b.graph.edges) j["edges"].push_back({b.to_parent[u], b.to_parent[v]});
    return j;
}

inline json decision_to_json(const DecisionOutcome& d) {
    json j;
    j["answer"] = d.answer ? "yes" : "no";
    j["trace"] = json::array();
    for (const auto& step : d.trace) {
        json js = block_to_json(step.block);
        js["parent_cut_vertex"] = step.parent_cut_vertex;
        j["trace"].push_back(js);
    }
    json ev;
    switch (d.kind) {
        case EvidenceKind::FinalBlockFeedback:
            ev["kind"] = "final_block_feedback";
            ev["block"] = block_to_json(d.final_block);
            ev["feedback_vertex"] = d.feedback_vertex;
            break;
        case EvidenceKind::FullyPruned:
            ev["kind"] = "fully_pruned";
            break;
        case EvidenceKind::SingleBlockNoFeedback:
            ev["kind"] = "single_block_no_feedback";
            ev["block"] = block_to_json(d.final_block);
            break;
        case EvidenceKind::TwoBadLeaves:
            ev["kind"] = "two_bad_leaves";
            ev["block1"] = block_to_json(d.bad_block1);
            ev["cut1"] = d.bad_cut1;
            ev["block2"] = block_to_json(d.bad_block2);
            ev["cut2"] = d.bad_cut2;
            break;
    }
    j["evidence"] = ev;
    return j;
}

inline json scott_to_json(const ScottResult& r) {
    json j;
    switch (r.status) {
        case ScottStatus::Counterexample:
            j["status"] = "Counterexample";
            break;
        case ScottStatus::RepresentableFamily:
            j["status"] = "RepresentableFamily";
            j["family"] = (r.family == ShapeClass::PathAtMost4) ? "PathAtMost4" : "LuxuryChandelier";
            break;
        case ScottStatus::NotDecidedByTheorem:
            j["status"] = "NotDecidedByTheorem";
            switch (r.reason) {
                case ScottReason::Disconnected: j["reason"] = "Disconnected"; break;
                case ScottReason::HasTriangle: j["reason"] = "HasTriangle"; break;
                case ScottReason::HasFullStarCutset: j["reason"] = "HasFullStarCutset"; break;
                default: break;
            }
            break;
    }
    return j;
}

inline json k4_to_json(const K4Status& s) {
    json j;
    switch (s.cls) {
        case K4Class::ContainsTriangle: j["status"] = "ContainsTriangle"; break;
        case K4Class::RestrictedFrameGraph: j["status"] = "RestrictedFrameGraph"; break;
        case K4Class::NotRestrictedFrameGraph: j["status"] = "NotRestrictedFrameGraph"; break;
    }
    j["type"] = s.type;
    return j;
}

} // namespace rfg
