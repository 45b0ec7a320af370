#pragma once

#include <string>
#include <vector>

#include "hdecomp/coloring.hpp"
#include "hdecomp/graph.hpp"

namespace hdecomp {

/// Isomorphism-deduplicated set of graphs. Members keep their isolated
/// vertices. Construction verifies pairwise non-isomorphism and, when
/// `minimal` is set, that no member is a subgraph of another.
class GraphFamily {
public:
    GraphFamily() = default;
    GraphFamily(std::vector<Graph> members, bool minimal, std::string source, const Limits& limits = {});

    const std::vector<Graph>& members() const noexcept { return members_; }
    const std::vector<std::string>& codes() const noexcept { return codes_; }
    bool minimal() const noexcept { return minimal_; }
    const std::string& source() const noexcept { return source_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    /// Canonical codes joined by ',' in member order; identifies the family.
    std::string key() const;

private:
    std::vector<Graph> members_;
    std::vector<std::string> codes_;
    bool minimal_ = false;
    std::string source_;
};

/// How a family member arises from H: the colouring, the two kept classes,
/// and `h_vertex[i]`, the vertex of H playing member vertex i.
struct FamilyRealization {
    ColourPartition colouring;
    int kept_first = 0;
    int kept_second = 0;
    std::vector<Vertex> h_vertex;
};

/// All bipartite graphs H[A u B] for proper chi(H)-colourings of H and pairs
/// of classes A, B, deduplicated up to isomorphism and sorted canonically.
/// Throws DomainError when chi(H) < 3.
GraphFamily decomposition_family(const Graph& h, const Limits& limits = {});

/// Drops every member containing another member as a proper subgraph.
GraphFamily minimal_subfamily(const GraphFamily& family, const Limits& limits = {});

/// Every way `member` is realised inside H by keeping two colour classes.
std::vector<FamilyRealization> family_realizations(const Graph& h, const Graph& member, const Limits& limits = {});

/// Smallest colour class over all proper chi(H)-colourings.
int chromatic_excess(const Graph& h, const Limits& limits = {});

/// True iff deleting some single edge lowers the chromatic number.
bool is_edge_critical(const Graph& h, const Limits& limits = {});

/// Members as graph6 lines plus a JSON sidecar at `path + ".json"` holding
/// {source, minimal, member_count}.
void write_family_files(const GraphFamily& family, const std::string& path);
GraphFamily read_family_files(const std::string& path, const Limits& limits = {});
std::string family_sidecar_json(const GraphFamily& family);

}  // namespace hdecomp
