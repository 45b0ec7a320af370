#include "hdecomp/extremal.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <json.hpp>

#include "hdecomp/canonical.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/enumerate.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/generators.hpp"
#include "hdecomp/graph6.hpp"

namespace hdecomp {

std::size_t turan_number(int n, int r) {
    if (n < 1 || r < 2) {
        throw DomainError("turan_number needs n >= 1 and r >= 2");
    }
    std::size_t squares = 0;
    for (int s : turan_part_sizes(n, r - 1)) {
        squares += static_cast<std::size_t>(s) * s;
    }
    return (static_cast<std::size_t>(n) * n - squares) / 2;
}

const char* to_string(ExtremalStatus status) {
    return status == ExtremalStatus::Exact ? "exact" : "lower-bound";
}

std::string to_json_line(const ExtremalRecord& record) {
    nlohmann::ordered_json j;
    j["n"] = record.n;
    j["family_key"] = record.family_key;
    j["value"] = record.value;
    j["witness_graph6"] = emit_graph6(record.witness);
    j["status"] = to_string(record.status);
    return j.dump();
}

ExtremalRecord record_from_json_line(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    ExtremalRecord r;
    r.n = j.at("n").get<int>();
    r.family_key = j.at("family_key").get<std::string>();
    r.value = j.at("value").get<std::size_t>();
    r.witness = parse_graph6(j.at("witness_graph6").get<std::string>());
    const auto status = j.at("status").get<std::string>();
    if (status == "exact") {
        r.status = ExtremalStatus::Exact;
    } else if (status == "lower-bound") {
        r.status = ExtremalStatus::LowerBound;
    } else {
        throw ParseError("unknown extremal status '" + status + "'", 0);
    }
    if (r.witness.order() != r.n || r.witness.size() != r.value) {
        throw ParseError("cached witness disagrees with its record", 0);
    }
    return r;
}

ExtremalCache::ExtremalCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto rec = record_from_json_line(line);
        if (rec.exact()) {
            entries_.insert_or_assign({rec.n, rec.family_key}, std::move(rec));
        }
    }
}

std::optional<ExtremalRecord> ExtremalCache::lookup(int n, const std::string& family_key) const {
    auto it = entries_.find({n, family_key});
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void ExtremalCache::store(const ExtremalRecord& record) {
    if (!record.exact()) {
        return;
    }
    const auto key = std::pair{record.n, record.family_key};
    if (entries_.contains(key)) {
        return;
    }
    entries_.emplace(key, record);
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        out << to_json_line(record) << '\n';
    }
}

namespace {

ExtremalRecord exact_search(int n, const std::vector<Graph>& patterns, const ExtremalOptions& options) {
    ExtremalRecord rec;
    rec.n = n;
    std::string best_code;
    bool have = false;
    SearchBudget budget{options.budget, 0};
    const auto admissible = [&](const Graph& child, Edge added) {
        return std::none_of(patterns.begin(), patterns.end(), [&](const Graph& p) {
            return contains_subgraph_through(child, p, added, options.limits);
        });
    };
    const auto visit = [&](const Graph& g, const CanonicalForm& cf) {
        if (!have || g.size() > rec.value || (g.size() == rec.value && cf.code < best_code)) {
            have = true;
            rec.value = g.size();
            best_code = cf.code;
        }
    };
    const auto result = orderly_generate(n, admissible, visit, &budget, options.limits);
    rec.nodes = result.graphs_visited;
    rec.status = result.complete ? ExtremalStatus::Exact : ExtremalStatus::LowerBound;
    rec.witness = parse_graph6(best_code);
    return rec;
}

// Seeded edge-addition with pattern repair. Only a lower bound.
ExtremalRecord local_search(int n, const std::vector<Graph>& patterns, const ExtremalOptions& options) {
    Limits wide = options.limits;
    wide.embedding_vertices = Limits::kMaxSearchVertices;
    if (n > wide.embedding_vertices) {
        throw SizeError("extremal local search: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(wide.embedding_vertices));
    }
    std::mt19937_64 rng(options.seed);
    Graph g(n);
    Graph best = g;
    const std::uint64_t steps = std::min(options.local_search_steps, options.budget);
    std::uint64_t nodes = 0;
    for (std::uint64_t step = 0; step < steps; ++step) {
        std::vector<Edge> non_edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) {
                    non_edges.push_back({u, v});
                }
            }
        }
        if (non_edges.empty()) {
            break;
        }
        const Edge e = non_edges[rng() % non_edges.size()];
        g.add_edge(e.u, e.v);
        for (;;) {
            ++nodes;
            std::optional<Embedding> hit;
            for (const auto& p : patterns) {
                auto found = find_embeddings(p, g, 1, {}, wide);
                if (!found.empty()) {
                    hit = std::move(found.front());
                    auto img = image_edges(p, *hit);
                    const Edge drop = img[rng() % img.size()];
                    g.remove_edge(drop.u, drop.v);
                    break;
                }
            }
            if (!hit) {
                break;
            }
        }
        if (g.size() > best.size()) {
            best = g;
        }
    }
    ExtremalRecord rec;
    rec.n = n;
    rec.value = best.size();
    rec.witness = best;
    rec.status = ExtremalStatus::LowerBound;
    rec.nodes = nodes;
    return rec;
}

}  // namespace

ExtremalRecord extremal_number(int n, const GraphFamily& family, const ExtremalOptions& options) {
    if (n < 0) {
        throw DomainError("extremal_number: negative n");
    }
    if (options.cache != nullptr) {
        if (auto hit = options.cache->lookup(n, family.key())) {
            return *hit;
        }
    }

    std::vector<Graph> patterns;
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& m = family.members()[i];
        if (m.order() > n) {
            warnings.push_back("member " + family.codes()[i] + " has more than n vertices; ignored");
        } else {
            patterns.push_back(m);
        }
    }

    if (std::any_of(patterns.begin(), patterns.end(), [](const Graph& p) { return p.size() == 0; })) {
        throw DomainError("extremal_number: an edgeless member is contained in every n-vertex graph");
    }

    ExtremalRecord rec;
    if (patterns.empty()) {
        rec.n = n;
        rec.value = pair_count(n);
        rec.witness = complete_graph(n);
        rec.witness.set_label({});
    } else if (n <= options.limits.enumeration_vertices) {
        rec = exact_search(n, patterns, options);
    } else if (std::any_of(patterns.begin(), patterns.end(), [](const Graph& p) { return p.size() == 1; })) {
        // A lone edge plus enough spare vertices is always present.
        rec.n = n;
        rec.value = 0;
        rec.witness = Graph(n);
    } else {
        rec = local_search(n, patterns, options);
    }
    rec.family_key = family.key();
    rec.warnings = std::move(warnings);

    if (options.cache != nullptr) {
        options.cache->store(rec);
    }
    return rec;
}

ExtremalRecord biex(int n, const Graph& h, const ExtremalOptions& options) {
    const auto family = minimal_subfamily(decomposition_family(h, options.limits), options.limits);
    return extremal_number(n, family, options);
}

BiexSigmaCheck check_fact_biex_sigma(const Graph& h, int n, const ExtremalOptions& options) {
    BiexSigmaCheck out;
    const auto rec = biex(n, h, options);
    out.biex_value = rec.value;
    out.biex_exact = rec.exact();
    out.sigma = chromatic_excess(h, options.limits);
    out.consistent = rec.value + 1 >= static_cast<std::size_t>(n) || out.sigma == 1;
    return out;
}

}  // namespace hdecomp
