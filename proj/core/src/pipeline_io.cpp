#include <charconv>
#include <sstream>

#include <json.hpp>

#include "hdecomp/error.hpp"
#include "hdecomp/graph6.hpp"
#include "hdecomp/pipeline.hpp"

namespace hdecomp {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

Vertex parse_vertex(std::string_view tok, std::size_t offset) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) {
        throw ParseError("bad vertex '" + std::string(tok) + "'", offset);
    }
    return v;
}

double bound_or_zero(double numerator, std::size_t eh) {
    return eh > 2 ? numerator / static_cast<double>(eh - 2) : 0.0;
}

}  // namespace

std::string format_decomposition(const HDecomposition& d) {
    std::ostringstream out;
    out << kDecompositionHeader << '\n';
    out << "P " << emit_graph6(d.pattern) << '\n';
    for (const auto& c : d.copies) {
        out << 'H';
        for (Vertex v : c.map) {
            out << ' ' << v;
        }
        out << '\n';
    }
    for (const auto& e : d.singles) {
        out << "E " << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

HDecomposition parse_decomposition(std::string_view text) {
    HDecomposition d;
    bool header = false;
    bool pattern = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        const std::size_t at = pos;
        pos = end + 1;
        const auto toks = split_ws(line);
        if (toks.empty()) {
            continue;
        }
        if (!header) {
            std::string_view trimmed = line;
            if (!trimmed.empty() && trimmed.back() == '\r') {
                trimmed.remove_suffix(1);
            }
            if (trimmed != kDecompositionHeader) {
                throw ParseError("missing decomposition header", at);
            }
            header = true;
            continue;
        }
        if (toks[0] == "P") {
            if (pattern || toks.size() != 2) {
                throw ParseError("bad or repeated pattern line", at);
            }
            d.pattern = parse_graph6(toks[1]);
            pattern = true;
        } else if (toks[0] == "H") {
            if (!pattern) {
                throw ParseError("copy line before pattern line", at);
            }
            if (static_cast<int>(toks.size()) - 1 != d.pattern.order()) {
                throw ParseError("copy line needs " + std::to_string(d.pattern.order()) + " vertices", at);
            }
            Embedding e;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                e.map.push_back(parse_vertex(toks[i], at));
            }
            d.copies.push_back(std::move(e));
        } else if (toks[0] == "E") {
            if (toks.size() != 3) {
                throw ParseError("single-edge line needs 2 vertices", at);
            }
            const Vertex a = parse_vertex(toks[1], at);
            const Vertex b = parse_vertex(toks[2], at);
            d.singles.push_back({std::min(a, b), std::max(a, b)});
        } else {
            throw ParseError("unknown line tag '" + std::string(toks[0]) + "'", at);
        }
    }
    if (!header) {
        throw ParseError("missing decomposition header", 0);
    }
    if (!pattern) {
        throw ParseError("missing pattern line", text.size());
    }
    return d;
}

std::string to_json(const PipelineReport& rep) {
    Json j;
    j["format"] = kReportFormat;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["edges"] = rep.edges;
    j["peeled_order"] = rep.peeled_order;
    auto& trace = j["peel_trace"] = Json::array();
    for (const auto& s : rep.peel_trace) {
        trace.push_back({{"vertex", s.vertex}, {"degree", s.degree}});
    }
    j["params"] = {
        {"beta", rep.beta},
        {"gamma", rep.gamma},
        {"beta_theory", rep.beta_theory},
        {"gamma_theory", rep.gamma_theory},
        {"c_over_k", rep.c_per_k},
    };
    j["m"] = rep.m;
    j["m_prime"] = rep.m_prime;
    j["m_x"] = rep.m_x;
    auto& per = j["m_x_per_vertex"] = Json::array();
    for (const auto& [x, mx] : rep.m_x_per_vertex) {
        per.push_back({{"vertex", x}, {"m_x", mx}});
    }
    j["part_sizes"] = rep.part_sizes;
    j["x_sizes"] = rep.x_sizes;
    j["thresholds"] = {
        {"x", rep.x_threshold},
        {"beta_active", rep.active_threshold},
        {"step2", rep.step2_threshold},
        {"step1", rep.step1_threshold},
        {"step1_source", rep.step1_threshold_source},
        {"step1_order", rep.step1_threshold_order},
    };
    j["step1"] = {
        {"copies", rep.step1_copies},
        {"stop", rep.step1_stop},
        {"nodes", rep.step1_nodes},
        {"copy_ids", rep.step1_copy_ids},
    };
    j["step2"] = {
        {"copies", rep.step2_copies},
        {"stop", rep.step2_stop},
        {"nodes", rep.step2_nodes},
        {"copy_ids", rep.step2_copy_ids},
    };
    j["informational_bounds"] = {
        {"step1", bound_or_zero(static_cast<double>(rep.m_prime) -
                                    static_cast<double>(rep.r) * static_cast<double>(rep.step1_threshold),
                                rep.pattern_edges)},
        {"step2", bound_or_zero(static_cast<double>(rep.m_x) - 9 * rep.beta * static_cast<double>(rep.m),
                                rep.pattern_edges)},
    };
    j["t"] = rep.t;
    j["target"] = rep.target;
    j["success"] = rep.success;
    j["flags"] = {
        {"stability_a", rep.flags.stability_a},
        {"stability_b", rep.flags.stability_b},
        {"stability_c", rep.flags.stability_c},
        {"step1_min_degree", rep.flags.step1_min_degree},
        {"step1_sparse_parts", rep.flags.step1_sparse_parts},
        {"step1_max_degree", rep.flags.step1_max_degree},
        {"step2_dense_pairs", rep.flags.step2_dense_pairs},
        {"step2_small_x", rep.flags.step2_small_x},
    };
    j["class_of"] = rep.class_of;
    j["in_x"] = rep.in_x;
    return j.dump(2);
}

std::string to_json(const LowerBoundCertificate& c) {
    Json j;
    j["format"] = "hdecomp-lower-bound/1";
    j["n"] = c.n;
    j["r"] = c.r;
    j["biex"] = c.biex_value;
    j["biex_witness_graph6"] = emit_graph6(c.biex_witness);
    j["plant_graph6"] = emit_graph6(c.plant);
    j["plant_vertices"] = c.plant_vertices;
    j["plant_edges"] = c.plant.size();
    j["selection"] = c.selection;
    j["required_plant_edges"] = c.required_plant_edges;
    j["turan_edges"] = c.turan_edges;
    j["edges"] = c.edges;
    j["bound_holds"] = c.bound_holds;
    j["h_freeness"] = c.h_freeness;
    return j.dump(2);
}

}  // namespace hdecomp
