#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdecomp/family.hpp"
#include "hdecomp/graph.hpp"

namespace hdecomp {

/// ex(n, K_r) = e(T_{r-1}(n)). Requires n >= 1, r >= 2.
std::size_t turan_number(int n, int r);

enum class ExtremalStatus { Exact, LowerBound };

const char* to_string(ExtremalStatus status);

/// ex(n, family) with a family-free witness on n vertices.
struct ExtremalRecord {
    int n = 0;
    std::string family_key;
    std::size_t value = 0;
    Graph witness;
    ExtremalStatus status = ExtremalStatus::Exact;
    std::uint64_t nodes = 0;
    std::vector<std::string> warnings;

    bool exact() const noexcept { return status == ExtremalStatus::Exact; }
};

/// Append-only JSON-lines store of records keyed by (n, family key). Only
/// exact records are served back.
class ExtremalCache {
public:
    ExtremalCache() = default;
    explicit ExtremalCache(std::string path);

    std::optional<ExtremalRecord> lookup(int n, const std::string& family_key) const;
    void store(const ExtremalRecord& record);

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
    std::map<std::pair<int, std::string>, ExtremalRecord> entries_;
};

std::string to_json_line(const ExtremalRecord& record);
ExtremalRecord record_from_json_line(const std::string& line);

struct ExtremalOptions {
    /// Search-tree nodes (graphs expanded) before giving up on exactness.
    std::uint64_t budget = 100'000'000;
    Limits limits;
    ExtremalCache* cache = nullptr;
    /// Local search above the enumeration cap.
    std::uint64_t seed = 1;
    std::uint64_t local_search_steps = 20'000;
};

/// Maximum edges in an n-vertex graph containing no member as a subgraph.
///
/// Up to the enumeration cap this is orderly generation in which a graph
/// containing a member is never extended; the record is exact iff the tree
/// was exhausted within budget. Above the cap only a seeded local-search
/// lower bound is offered, except that a one-edge member forces 0 exactly.
ExtremalRecord extremal_number(int n, const GraphFamily& family, const ExtremalOptions& options = {});

/// ex(n, F*_H).
ExtremalRecord biex(int n, const Graph& h, const ExtremalOptions& options = {});

struct BiexSigmaCheck {
    std::size_t biex_value = 0;
    bool biex_exact = true;
    int sigma = 0;
    /// biex >= n - 1 or sigma == 1.
    bool consistent = true;
};

BiexSigmaCheck check_fact_biex_sigma(const Graph& h, int n, const ExtremalOptions& options = {});

}  // namespace hdecomp
