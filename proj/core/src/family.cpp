#include "hdecomp/family.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include <json.hpp>

#include "hdecomp/canonical.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/graph6.hpp"

namespace hdecomp {

namespace {

bool is_subgraph_of(const Graph& small, const Graph& big, const Limits& limits) {
    if (small.order() > big.order() || small.size() > big.size()) {
        return false;
    }
    return contains_subgraph(big, small, limits);
}

}  // namespace

GraphFamily::GraphFamily(std::vector<Graph> members, bool minimal, std::string source, const Limits& limits)
    : members_(std::move(members)), minimal_(minimal), source_(std::move(source)) {
    codes_.reserve(members_.size());
    for (const auto& g : members_) {
        codes_.push_back(canonical_code(g, limits));
    }
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (codes_[i] == codes_[j]) {
                throw DomainError("family members " + std::to_string(j) + " and " + std::to_string(i) +
                                  " are isomorphic");
            }
        }
    }
    if (minimal_) {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = 0; j < members_.size(); ++j) {
                if (i != j && is_subgraph_of(members_[i], members_[j], limits)) {
                    throw DomainError("minimal family: member " + std::to_string(i) + " is a subgraph of member " +
                                      std::to_string(j));
                }
            }
        }
    }
}

std::string GraphFamily::key() const {
    std::string out;
    for (const auto& c : codes_) {
        if (!out.empty()) {
            out += ',';
        }
        out += c;
    }
    return out;
}

GraphFamily decomposition_family(const Graph& h, const Limits& limits) {
    const int r = chromatic_number(h, limits);
    if (r < 3) {
        throw DomainError("decomposition family needs chi(H) >= 3, got " + std::to_string(r));
    }
    std::map<std::string, Graph> by_code;
    for_each_proper_coloring(
        h, r,
        [&](const ColourPartition& classes) {
            for (int a = 0; a < r; ++a) {
                for (int b = a + 1; b < r; ++b) {
                    std::vector<Vertex> kept = classes[a];
                    kept.insert(kept.end(), classes[b].begin(), classes[b].end());
                    std::sort(kept.begin(), kept.end());
                    Graph member = h.induced(kept);
                    by_code.try_emplace(canonical_code(member, limits), std::move(member));
                }
            }
            return true;
        },
        limits);

    std::vector<Graph> members;
    for (auto& [code, g] : by_code) {
        members.push_back(std::move(g));
    }
    std::stable_sort(members.begin(), members.end(),
                     [&](const Graph& a, const Graph& b) { return canonical_less(a, b, limits); });
    const std::string name = h.label().empty() ? emit_graph6(h) : h.label();
    return GraphFamily(std::move(members), false, "F_H for H=" + name, limits);
}

GraphFamily minimal_subfamily(const GraphFamily& family, const Limits& limits) {
    if (family.empty()) {
        throw DomainError("minimal_subfamily of an empty family");
    }
    const auto& members = family.members();
    std::vector<Graph> kept;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < members.size() && !dominated; ++j) {
            dominated = i != j && is_subgraph_of(members[j], members[i], limits);
        }
        if (!dominated) {
            kept.push_back(members[i]);
        }
    }
    for (const auto& g : members) {
        const bool covered = std::any_of(kept.begin(), kept.end(),
                                         [&](const Graph& k) { return is_subgraph_of(k, g, limits); });
        if (!covered) {
            throw DomainError("minimal_subfamily: covering property failed");
        }
    }
    std::string source = family.source();
    if (source.starts_with("F_H")) {
        source.replace(0, 3, "F*_H");
    } else {
        source = "minimal(" + source + ")";
    }
    return GraphFamily(std::move(kept), true, std::move(source), limits);
}

std::vector<FamilyRealization> family_realizations(const Graph& h, const Graph& member, const Limits& limits) {
    const int r = chromatic_number(h, limits);
    const auto member_cf = canonical_form(member, limits);
    std::vector<Vertex> member_at(member.order());
    for (Vertex i = 0; i < member.order(); ++i) {
        member_at[member_cf.labeling[i]] = i;
    }
    std::vector<FamilyRealization> out;
    for_each_proper_coloring(
        h, r,
        [&](const ColourPartition& classes) {
            for (int a = 0; a < r; ++a) {
                for (int b = a + 1; b < r; ++b) {
                    std::vector<Vertex> kept = classes[a];
                    kept.insert(kept.end(), classes[b].begin(), classes[b].end());
                    std::sort(kept.begin(), kept.end());
                    if (static_cast<int>(kept.size()) != member.order()) {
                        continue;
                    }
                    const Graph sub = h.induced(kept);
                    const auto sub_cf = canonical_form(sub, limits);
                    if (sub_cf.code != member_cf.code) {
                        continue;
                    }
                    FamilyRealization real{classes, a, b, std::vector<Vertex>(member.order())};
                    for (Vertex j = 0; j < sub.order(); ++j) {
                        real.h_vertex[member_at[sub_cf.labeling[j]]] = kept[j];
                    }
                    out.push_back(std::move(real));
                }
            }
            return true;
        },
        limits);
    return out;
}

int chromatic_excess(const Graph& h, const Limits& limits) {
    const int r = chromatic_number(h, limits);
    int best = h.order();
    for_each_proper_coloring(
        h, r,
        [&](const ColourPartition& classes) {
            for (const auto& c : classes) {
                best = std::min(best, static_cast<int>(c.size()));
            }
            return best > 1;
        },
        limits);
    return best;
}

bool is_edge_critical(const Graph& h, const Limits& limits) {
    const int r = chromatic_number(h, limits);
    for (const auto& e : h.edges()) {
        Graph minus = h;
        minus.remove_edge(e.u, e.v);
        if (chromatic_number(minus, limits) < r) {
            return true;
        }
    }
    return false;
}

std::string family_sidecar_json(const GraphFamily& family) {
    nlohmann::ordered_json j;
    j["source"] = family.source();
    j["minimal"] = family.minimal();
    j["member_count"] = family.size();
    return j.dump();
}

void write_family_files(const GraphFamily& family, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path g6(path);
    const fs::path sidecar(path + ".json");
    const fs::path g6_tmp(path + ".tmp");
    const fs::path sidecar_tmp(path + ".json.tmp");
    {
        std::ofstream out(g6_tmp);
        write_graph6_stream(out, family.members());
        std::ofstream side(sidecar_tmp);
        side << family_sidecar_json(family) << '\n';
        if (!out || !side) {
            throw Error("cannot write family files at " + path);
        }
    }
    fs::rename(g6_tmp, g6);
    fs::rename(sidecar_tmp, sidecar);
}

GraphFamily read_family_files(const std::string& path, const Limits& limits) {
    auto members = read_graph6_file(path);
    std::ifstream side(path + ".json");
    if (!side) {
        throw Error("missing family sidecar " + path + ".json");
    }
    const auto j = nlohmann::json::parse(side);
    if (j.at("member_count").get<std::size_t>() != members.size()) {
        throw ParseError("family sidecar member_count disagrees with graph6 file", 0);
    }
    return GraphFamily(std::move(members), j.at("minimal").get<bool>(), j.at("source").get<std::string>(), limits);
}

}  // namespace hdecomp
