#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "hdecomp/canonical.hpp"
#include "hdecomp/coloring.hpp"
#include "hdecomp/enumerate.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/extremal.hpp"
#include "hdecomp/family.hpp"
#include "hdecomp/generators.hpp"
#include "hdecomp/graph6.hpp"
#include "hdecomp/packing.hpp"
#include "hdecomp/pipeline.hpp"

namespace hdecomp::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Config {
    std::string h;
    std::string g;
    std::string family_path;
    std::vector<std::string> forbid;
    std::string out;
    std::string decomposition;
    std::string cache_path;
    int n = -1;
    std::uint64_t budget = 100'000'000;
    int threads = 1;
    std::uint64_t seed = 1;
    double beta = 0.25;
    double gamma = 0.05;
    std::optional<std::size_t> step1_threshold;
    std::uint64_t step1_budget = 2'000'000;
    std::uint64_t step2_budget = 2'000'000;
    int restarts = 8;
    bool count_only = false;
    std::vector<int> only;
    Limits limits;
};

// Writes every (path, content) pair to a temporary and renames once all
// temporaries are complete, so a failure leaves no partial output.
void write_files(const std::vector<std::pair<std::string, std::string>>& files) {
    std::vector<std::string> temps;
    for (const auto& [path, content] : files) {
        const std::string tmp = path + ".tmp";
        std::ofstream f(tmp, std::ios::binary);
        f << content;
        f.close();
        if (!f) {
            for (const auto& t : temps) {
                fs::remove(t);
            }
            fs::remove(tmp);
            throw Error("cannot write " + path);
        }
        temps.push_back(tmp);
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
        fs::rename(temps[i], files[i].first);
    }
}

Graph load_graph(const std::string& spec) {
    if (fs::is_regular_file(spec)) {
        auto graphs = read_graph6_file(spec);
        if (graphs.empty()) {
            throw ParseError("no graph in " + spec, 0);
        }
        return std::move(graphs.front());
    }
    return graph_from_spec(spec);
}

Graph pattern(const Config& c) {
    if (c.h.empty()) {
        throw CLI::RequiredError("--h");
    }
    Graph h = load_graph(c.h);
    if (h.label().empty()) {
        h.set_label(c.h);
    }
    return h;
}

std::unique_ptr<ExtremalCache> open_cache(const Config& c) {
    std::string path = c.cache_path;
    if (path.empty()) {
        if (const char* env = std::getenv("HDECOMP_CACHE")) {
            path = env;
        }
    }
    if (path.empty()) {
        return nullptr;
    }
    return std::make_unique<ExtremalCache>(path);
}

Json members_json(const GraphFamily& f) {
    Json j;
    j["source"] = f.source();
    j["minimal"] = f.minimal();
    j["member_count"] = f.size();
    auto& m = j["members"] = Json::array();
    for (const auto& g : f.members()) {
        m.push_back(emit_graph6(g));
    }
    return j;
}

Json record_json(const ExtremalRecord& r) {
    Json j = Json::parse(to_json_line(r));
    j["nodes"] = r.nodes;
    j["warnings"] = r.warnings;
    return j;
}

Json embedding_json(const Embedding& e) { return Json(e.map); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Each handler returns the exit code.

int cmd_family(const Config& c, std::ostream& out) {
    const Graph h = pattern(c);
    const auto full = decomposition_family(h, c.limits);
    const auto star = minimal_subfamily(full, c.limits);
    Json j;
    j["pattern_graph6"] = emit_graph6(h);
    j["chi"] = chromatic_number(h, c.limits);
    j["F_H"] = members_json(full);
    j["F*_H"] = members_json(star);
    if (!c.out.empty()) {
        std::ostringstream a;
        std::ostringstream b;
        write_graph6_stream(a, full.members());
        write_graph6_stream(b, star.members());
        write_files({{c.out + ".F.g6", a.str()},
                     {c.out + ".F.g6.json", family_sidecar_json(full) + "\n"},
                     {c.out + ".Fstar.g6", b.str()},
                     {c.out + ".Fstar.g6.json", family_sidecar_json(star) + "\n"}});
    }
    out << dump(j);
    return kOk;
}

int cmd_sigma(const Config& c, std::ostream& out) {
    const Graph h = pattern(c);
    Json j;
    j["pattern_graph6"] = emit_graph6(h);
    j["chi"] = chromatic_number(h, c.limits);
    j["sigma"] = chromatic_excess(h, c.limits);
    out << dump(j);
    return kOk;
}

int cmd_critical(const Config& c, std::ostream& out) {
    const Graph h = pattern(c);
    Json j;
    j["pattern_graph6"] = emit_graph6(h);
    j["chi"] = chromatic_number(h, c.limits);
    j["edge_critical"] = is_edge_critical(h, c.limits);
    out << dump(j);
    return kOk;
}

ExtremalOptions extremal_options(const Config& c, ExtremalCache* cache) {
    ExtremalOptions o;
    o.budget = c.budget;
    o.limits = c.limits;
    o.cache = cache;
    o.seed = c.seed;
    return o;
}

int finish_record(const ExtremalRecord& r, Json j, std::ostream& out, std::ostream& err) {
    out << dump(j);
    if (!r.exact()) {
        err << "hdecomp: search incomplete, value is a lower bound\n";
        return kBudgetError;
    }
    return kOk;
}

int cmd_ex(const Config& c, std::ostream& out, std::ostream& err) {
    if ((c.family_path.empty()) == c.forbid.empty()) {
        throw CLI::ValidationError("ex", "give exactly one of --family or --forbid");
    }
    GraphFamily family;
    if (!c.family_path.empty()) {
        if (fs::exists(c.family_path + ".json")) {
            family = read_family_files(c.family_path, c.limits);
        } else {
            family = GraphFamily(read_graph6_file(c.family_path), false, c.family_path, c.limits);
        }
    } else {
        std::vector<Graph> members;
        for (const auto& s : c.forbid) {
            members.push_back(load_graph(s));
        }
        family = GraphFamily(std::move(members), false, "forbidden", c.limits);
    }
    auto cache = open_cache(c);
    const auto r = extremal_number(c.n, family, extremal_options(c, cache.get()));
    return finish_record(r, record_json(r), out, err);
}

int cmd_biex(const Config& c, std::ostream& out, std::ostream& err) {
    const Graph h = pattern(c);
    auto cache = open_cache(c);
    const auto r = biex(c.n, h, extremal_options(c, cache.get()));
    Json j = record_json(r);
    j["pattern_graph6"] = emit_graph6(h);
    return finish_record(r, j, out, err);
}

int cmd_pack(const Config& c, std::ostream& out) {
    const Graph g = load_graph(c.g);
    const Graph h = pattern(c);
    const auto p = max_packing(g, h, c.limits);
    Json j;
    j["pattern_graph6"] = emit_graph6(h);
    j["graph6"] = emit_graph6(g);
    j["packing_size"] = p.copies.size();
    auto& arr = j["copies"] = Json::array();
    for (const auto& e : p.copies) {
        arr.push_back(embedding_json(e));
    }
    out << dump(j);
    return kOk;
}

int cmd_phi(const Config& c, std::ostream& out) {
    const Graph g = load_graph(c.g);
    const Graph h = pattern(c);
    const auto r = phi_exact(g, h, c.limits);
    Json j;
    j["pattern_graph6"] = emit_graph6(h);
    j["graph6"] = emit_graph6(g);
    j["t"] = r.t;
    j["copies"] = r.decomposition.copies.size();
    j["singles"] = r.decomposition.singles.size();
    if (!c.out.empty()) {
        write_files({{c.out, format_decomposition(r.decomposition)}});
    }
    out << dump(j);
    return kOk;
}

int cmd_phi_n(const Config& c, std::ostream& out) {
    const Graph h = pattern(c);
    const auto scan = phi_max_over_n(c.n, h, c.limits, c.threads);
    out << dump(Json::parse(to_json(scan, h)));
    return kOk;
}

int cmd_construct(const Config& c, std::ostream& out) {
    const Graph h = pattern(c);
    auto cache = open_cache(c);
    const auto r = lower_bound_construction(c.n, h, extremal_options(c, cache.get()));
    Json j = Json::parse(to_json(r.certificate));
    j["graph6"] = emit_graph6(r.graph);
    if (!c.out.empty()) {
        write_files({{c.out, emit_graph6(r.graph) + "\n"}});
    }
    out << dump(j);
    return kOk;
}

int cmd_decompose(const Config& c, std::ostream& out) {
    const Graph g = load_graph(c.g);
    const Graph h = pattern(c);
    auto cache = open_cache(c);
    PipelineParams p;
    p.beta = c.beta;
    p.gamma = c.gamma;
    p.seed = c.seed;
    p.step1_threshold = c.step1_threshold;
    p.step1_budget = c.step1_budget;
    p.step2_budget = c.step2_budget;
    p.partition_restarts = c.restarts;
    p.limits = c.limits;
    p.cache = cache.get();
    const auto r = decompose(g, h, p);
    const auto v = verify_decomposition(g, r.decomposition);
    if (!v.ok) {
        throw std::logic_error("decompose produced an invalid decomposition: " + v.violation);
    }
    const std::string report = to_json(r.report) + "\n";
    const std::string prefix = c.out.empty() ? "decomposition" : c.out;
    write_files({{prefix + ".hdec", format_decomposition(r.decomposition)}, {prefix + ".report.json", report}});
    out << report;
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const Graph g = load_graph(c.g);
    std::ifstream in(c.decomposition, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + c.decomposition);
    }
    std::stringstream text;
    text << in.rdbuf();
    const auto d = parse_decomposition(text.str());
    const auto v = verify_decomposition(g, d);
    Json j;
    j["ok"] = v.ok;
    j["violation"] = v.violation;
    j["copies"] = d.copies.size();
    j["singles"] = d.singles.size();
    j["t"] = d.parts();
    out << dump(j);
    return v.ok ? kOk : kDomainError;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    const auto graphs = enumerate_graphs(c.n, c.limits);
    if (c.count_only) {
        Json j;
        j["n"] = c.n;
        j["count"] = graphs.size();
        out << dump(j);
        return kOk;
    }
    std::ostringstream text;
    write_graph6_stream(text, graphs);
    if (!c.out.empty()) {
        write_files({{c.out, text.str()}});
    } else {
        out << text.str();
    }
    return kOk;
}

int cmd_selftest(const Config& c, std::ostream& out) {
    acceptance::Options o;
    o.threads = c.threads;
    const int failures = acceptance::run_all(c.only, o, out);
    out << (failures == 0 ? "selftest: all criteria passed" : "selftest: " + std::to_string(failures) + " failed")
        << "\n";
    return failures == 0 ? kOk : kDomainError;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact H-decomposition tools: decomposition families, biex, phi_H and the deletion pipeline",
                 "hdecomp"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cache-path", c.cache_path, "extremal cache (JSON lines); default $HDECOMP_CACHE");
    app.add_option("--embedding-cap", c.limits.embedding_vertices, "max host order for embedding/canonical search")
        ->check(CLI::Range(1, Limits::kMaxSearchVertices));
    app.add_option("--enumeration-cap", c.limits.enumeration_vertices, "max n for enumeration and exact ex")
        ->check(CLI::Range(0, 16));
    app.add_option("--scan-cap", c.limits.phi_scan_vertices, "max n for phi-n")->check(CLI::Range(0, 16));
    app.add_option("--copy-cap", c.limits.copy_cap, "max pattern copies enumerated by pack/phi");

    const auto add_h = [&](CLI::App* s) { s->add_option("--h", c.h, "pattern: k3, k4, c5, bowtie, k222, ... or graph6")->required(); };
    const auto add_g = [&](CLI::App* s) { s->add_option("--g", c.g, "host graph: graph6 file or literal")->required(); };
    const auto add_n = [&](CLI::App* s) { s->add_option("--n", c.n, "order")->required()->check(CLI::Range(0, 64)); };
    const auto add_budget = [&](CLI::App* s) { s->add_option("--budget", c.budget, "search nodes"); };

    auto* family = app.add_subcommand("family", "print F_H and F*_H");
    add_h(family);
    family->add_option("--out", c.out, "write PREFIX.F.g6 and PREFIX.Fstar.g6 with JSON sidecars");

    auto* sigma = app.add_subcommand("sigma", "chromatic excess of H");
    add_h(sigma);
    auto* critical = app.add_subcommand("critical", "edge-criticality of H");
    add_h(critical);

    auto* ex = app.add_subcommand("ex", "ex(n, family)");
    add_n(ex);
    add_budget(ex);
    ex->add_option("--family", c.family_path, "graph6 file of forbidden graphs");
    ex->add_option("--forbid", c.forbid, "forbidden graph (repeatable)");
    ex->add_option("--seed", c.seed, "local-search seed above the enumeration cap");

    auto* biex_cmd = app.add_subcommand("biex", "biex(n, H) = ex(n, F*_H)");
    add_h(biex_cmd);
    add_n(biex_cmd);
    add_budget(biex_cmd);
    biex_cmd->add_option("--seed", c.seed, "local-search seed above the enumeration cap");

    auto* pack = app.add_subcommand("pack", "maximum edge-disjoint H packing in G");
    add_g(pack);
    add_h(pack);

    auto* phi = app.add_subcommand("phi", "phi_H(G) with an optimal decomposition");
    add_g(phi);
    add_h(phi);
    phi->add_option("--out", c.out, "write the decomposition file");

    auto* phi_n = app.add_subcommand("phi-n", "phi_H(n) over all n-vertex graphs");
    add_h(phi_n);
    add_n(phi_n);
    phi_n->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));

    auto* construct = app.add_subcommand("construct", "lower-bound construction T_{r-1}(n) + F'");
    add_h(construct);
    add_n(construct);
    add_budget(construct);
    construct->add_option("--out", c.out, "write the graph as graph6");

    auto* decomp = app.add_subcommand("decompose", "run the peel / partition / Step 1 / Step 2 pipeline");
    add_g(decomp);
    add_h(decomp);
    decomp->add_option("--beta", c.beta, "beta")->check(CLI::Range(0.0, 1.0));
    decomp->add_option("--gamma", c.gamma, "gamma")->check(CLI::Range(0.0, 1.0));
    decomp->add_option("--seed", c.seed, "partition seed");
    decomp->add_option("--restarts", c.restarts, "partition restarts")->check(CLI::Range(1, 1000));
    decomp->add_option("--step1-threshold", c.step1_threshold, "per-class edge bound (default: exact biex at n')");
    decomp->add_option("--step1-budget", c.step1_budget, "search nodes for Step 1");
    decomp->add_option("--step2-budget", c.step2_budget, "search nodes for Step 2");
    decomp->add_option("--out", c.out, "output prefix; writes PREFIX.hdec and PREFIX.report.json")
        ->default_str("decomposition");

    auto* verify = app.add_subcommand("verify", "check a decomposition file against G");
    add_g(verify);
    verify->add_option("--decomposition", c.decomposition, "decomposition file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all n-vertex graphs up to isomorphism, graph6");
    add_n(enumerate);
    enumerate->add_flag("--count", c.count_only, "print only the count");
    enumerate->add_option("--out", c.out, "write graph6 to a file");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--only", c.only, "criterion ids")->check(CLI::Range(1, acceptance::kCriteria));
    selftest->add_option("--threads", c.threads, "worker threads for the phi scans")->check(CLI::Range(1, 256));

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*family) return cmd_family(c, out);
        if (*sigma) return cmd_sigma(c, out);
        if (*critical) return cmd_critical(c, out);
        if (*ex) return cmd_ex(c, out, err);
        if (*biex_cmd) return cmd_biex(c, out, err);
        if (*pack) return cmd_pack(c, out);
        if (*phi) return cmd_phi(c, out);
        if (*phi_n) return cmd_phi_n(c, out);
        if (*construct) return cmd_construct(c, out);
        if (*decomp) return cmd_decompose(c, out);
        if (*verify) return cmd_verify(c, out);
        if (*enumerate) return cmd_enumerate(c, out);
        if (*selftest) return cmd_selftest(c, out);
    } catch (const CLI::Error& e) {
        err << "hdecomp: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "hdecomp: " << e.what() << "\n";
        return kUsageError;
    } catch (const SizeError& e) {
        err << "hdecomp: " << e.what() << "\n";
        return kBudgetError;
    } catch (const std::exception& e) {
        err << "hdecomp: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace hdecomp::cli
