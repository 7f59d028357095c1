// Command-line front end: decide / classify / represent / validate /
// burling / construct / check-cert / k4 over flat files.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rfg/burling.hpp"
#include "rfg/decision.hpp"
#include "rfg/frame_builders.hpp"
#include "rfg/json_io.hpp"
#include "rfg/k4_gallery.hpp"
#include "rfg/represent.hpp"
#include "rfg/svg.hpp"

namespace {

int log_level() {
    const char* v = std::getenv("FRAMES_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

rfg::Multigraph load_graph(const std::string& path) { return rfg::parse_multigraph(slurp(path)); }

rfg::SimpleGraph load_simple(const std::string& path) { return rfg::to_simple(load_graph(path)); }

std::vector<int> parse_counts(const std::string& spec, int edges) {
    std::vector<int> counts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) counts.push_back(std::stoi(tok));
    if (counts.size() == 1) counts.assign(edges, counts[0]);
    if ((int)counts.size() != edges)
        throw std::invalid_argument("expected 1 or " + std::to_string(edges) + " counts, got " +
                                    std::to_string(counts.size()));
    return counts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted frame graph toolkit"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized paths (default 0)");

    std::string graph_file, rep_file, out_file, svg_file, counts_spec, shape = "auto", profile_spec, cert_file,
                                                                       represent_out;
    int steps = 0, materialize = -1;
    std::uint64_t budget = 100'000'000;
    bool chi = false;

    auto* cmd_decide = app.add_subcommand("decide", "decide the >=2-subdivision representability of a multigraph");
    cmd_decide->add_option("graph", graph_file, "edge-list file")->required();

    auto* cmd_classify = app.add_subcommand("classify", "classify a simple graph against the counterexample criterion");
    cmd_classify->add_option("graph", graph_file, "edge-list file")->required();

    auto* cmd_represent = app.add_subcommand("represent", "build a frame representation");
    cmd_represent->add_option("graph", graph_file, "edge-list file")->required();
    cmd_represent->add_option("--counts", counts_spec, "per-edge subdivision counts (single value broadcasts)");
    cmd_represent->add_option("--out", out_file, "representation JSON output path");
    cmd_represent->add_option("--svg", svg_file, "optional SVG output path");
    cmd_represent->add_option("--shape", shape, "auto | tree | chandelier (direct representation, no subdivision)");

    auto* cmd_validate = app.add_subcommand("validate", "check a representation JSON file");
    cmd_validate->add_option("rep", rep_file, "representation JSON")->required();

    auto* cmd_burling = app.add_subcommand("burling", "materialize iterates of the construction");
    cmd_burling->add_option("--steps", steps, "number of iterations from the one-vertex pair")->required();
    cmd_burling->add_option("--out", out_file, "pair JSON output path");
    cmd_burling->add_flag("--chi", chi, "compute the exact chromatic number");
    cmd_burling->add_option("--budget", budget, "node budget for the chromatic search");

    auto* cmd_construct = app.add_subcommand("construct", "build a constructibility certificate for a >=2-subdivision");
    cmd_construct->add_option("graph", graph_file, "edge-list file of the subdivision itself")->required();
    cmd_construct->add_option("--out", out_file, "certificate JSON output path");

    auto* cmd_check = app.add_subcommand("check-cert", "replay and verify a certificate");
    cmd_check->add_option("cert", cert_file, "certificate JSON")->required();
    cmd_check->add_option("--materialize", materialize, "verify embedding into the given construction step");
    cmd_check->add_option("--budget", budget, "node budget for the embedding search");

    auto* cmd_k4 = app.add_subcommand("k4", "status (and representation) of a K4 subdivision profile");
    cmd_k4->add_option("--profile", profile_spec, "six counts a,b,c,d,e,f for edges 01,02,03,12,13,23")->required();
    cmd_k4->add_option("--represent", represent_out, "write a representation JSON when representable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_decide) {
            auto g = load_graph(graph_file);
            auto outcome = rfg::decide_ge2_subdivisions(g);
            log_info("decision computed over " + std::to_string(g.n) + " vertices");
            std::cout << rfg::decision_to_json(outcome).dump(2) << "\n";
            return 0;
        }
        if (*cmd_classify) {
            auto h = load_simple(graph_file);
            std::cout << rfg::scott_to_json(rfg::classify_scott(h)).dump(2) << "\n";
            return 0;
        }
        if (*cmd_represent) {
            rfg::FrameRepresentation rep;
            if (shape == "tree") {
                auto t = load_simple(graph_file);
                rep = rfg::build_tree(t, 0);
            } else if (shape == "chandelier") {
                auto h = load_simple(graph_file);
                auto sh = rfg::recognize_shape(h);
                if (sh.pivot < 0) throw std::domain_error("input is not a chandelier");
                rep = rfg::build_chandelier(h, sh.pivot);
            } else {
                auto g = load_graph(graph_file);
                if (counts_spec.empty()) counts_spec = "2";
                auto counts = parse_counts(counts_spec, g.edge_count());
                rep = rfg::build_ge2_subdivision(g, counts);
            }
            auto violations = rfg::validate(rep);
            if (!violations.empty()) throw std::runtime_error("internal error: built representation is invalid");
            auto j = rfg::representation_to_json(rep);
            if (!out_file.empty())
                spit(out_file, j.dump(2) + "\n");
            else
                std::cout << j.dump(2) << "\n";
            if (!svg_file.empty()) spit(svg_file, rfg::emit_svg(rep));
            return 0;
        }
        if (*cmd_validate) {
            auto rep = rfg::representation_from_json(rfg::json::parse(slurp(rep_file)));
            auto vs = rfg::validate(rep);
            std::cout << rfg::violations_to_json(vs).dump(2) << "\n";
            return vs.empty() ? 0 : 1;
        }
        if (*cmd_burling) {
            if (steps < 0) throw std::invalid_argument("--steps must be non-negative");
            auto p = rfg::singleton_pair();
            for (int i = 0; i < steps; ++i) p = rfg::next(p);
            log_info("pair has " + std::to_string(p.graph.n) + " vertices and " +
                     std::to_string(p.stable_sets.size()) + " stable sets");
            if (!out_file.empty()) spit(out_file, rfg::pair_to_json(p).dump(2) + "\n");
            rfg::json report;
            report["steps"] = steps;
            report["vertices"] = p.graph.n;
            report["edges"] = p.graph.edge_count();
            report["stable_sets"] = p.stable_sets.size();
            if (chi) {
                auto r = rfg::chromatic_number(p.graph, budget);
                if (r.exact) {
                    report["chromatic_number"] = *r.exact;
                } else {
                    report["chromatic_lower"] = r.lower;
                    report["chromatic_upper"] = r.upper;
                    std::cout << report.dump(2) << "\n";
                    std::cerr << "chromatic search budget exceeded\n";
                    return 3;
                }
            }
            std::cout << report.dump(2) << "\n";
            return 0;
        }
        if (*cmd_construct) {
            auto h = load_simple(graph_file);
            auto res = rfg::construct(h);
            auto j = rfg::certificate_to_json(res.certificate);
            j["vertex_of"] = res.vertex_of;
            if (!out_file.empty())
                spit(out_file, j.dump(2) + "\n");
            else
                std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_check) {
            auto cert = rfg::certificate_from_json(rfg::json::parse(slurp(cert_file)));
            rfg::check_certificate(cert);
            auto r = rfg::replay(cert);
            rfg::json report;
            report["ok"] = true;
            report["vertices"] = r.pair.graph.n;
            report["ops"] = r.op_count;
            if (materialize >= 0) {
                if (r.op_count > materialize)
                    throw std::domain_error("certificate has more ADD/JOIN nodes than the materialize depth");
                auto big = rfg::singleton_pair();
                for (int i = 0; i < materialize; ++i) big = rfg::next(big);
                auto emb = rfg::is_induced_subpair(r.pair, big, budget);
                if (!emb) throw std::domain_error("pair does not embed into the materialized construction");
                report["materialized"] = materialize;
            }
            std::cout << report.dump(2) << "\n";
            return 0;
        }
        if (*cmd_k4) {
            std::array<int, 6> profile{};
            {
                std::stringstream ss(profile_spec);
                std::string tok;
                int i = 0;
                while (std::getline(ss, tok, ',')) {
                    if (i >= 6) throw std::invalid_argument("profile needs exactly 6 counts");
                    profile[i++] = std::stoi(tok);
                }
                if (i != 6) throw std::invalid_argument("profile needs exactly 6 counts");
            }
            auto status = rfg::k4_status(profile);
            std::cout << rfg::k4_to_json(status).dump(2) << "\n";
            if (!represent_out.empty()) {
                if (status.cls != rfg::K4Class::RestrictedFrameGraph)
                    throw std::domain_error("profile is not representable; no representation written");
                auto rep = rfg::build_k4_subdivision(profile);
                spit(represent_out, rfg::representation_to_json(rep).dump(2) + "\n");
            }
            return 0;
        }
    } catch (const rfg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const rfg::certificate_error& e) {
        std::cerr << "invalid certificate: " << e.what() << "\n";
        return 1;
    } catch (const rfg::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
