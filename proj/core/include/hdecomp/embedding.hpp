#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "hdecomp/graph.hpp"

namespace hdecomp {

/// Injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge (subgraph, not induced, semantics).
struct Embedding {
    std::vector<Vertex> map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Node budget for a backtracking search. A node is one partial assignment.
struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t used = 0;

    bool exhausted() const noexcept { return used >= max_nodes; }
};

/// Allowed host vertices per pattern vertex. An empty outer vector means
/// unconstrained; otherwise it must have one entry per pattern vertex.
using AllowedSets = std::vector<std::vector<Vertex>>;

enum class SearchStatus { Complete, Stopped, BudgetExhausted };

/// Visits embeddings in deterministic order. The search orders pattern
/// vertices with a single allowed host vertex first, then by descending
/// degree (ties: more already-placed neighbours, then lower index); host
/// candidates ascend by index. Results are therefore lexicographic in the
/// host images taken in that pattern order. `visit` returns false to stop.
SearchStatus for_each_embedding(const Graph& pattern, const Graph& host, const AllowedSets& allowed,
                                const std::function<bool(std::span<const Vertex>)>& visit,
                                SearchBudget* budget = nullptr, const Limits& limits = {});

/// Up to `limit` embeddings; fewer only when the search is exhausted.
std::vector<Embedding> find_embeddings(const Graph& pattern, const Graph& host, std::size_t limit,
                                       const AllowedSets& allowed = {}, const Limits& limits = {});

bool contains_subgraph(const Graph& host, const Graph& pattern, const Limits& limits = {});

/// True if some copy of `pattern` in `host` uses the host edge {u, v}.
bool contains_subgraph_through(const Graph& host, const Graph& pattern, Edge through, const Limits& limits = {});

/// Host edges covered by an embedding, each as (min, max), in pattern edge order.
std::vector<Edge> image_edges(const Graph& pattern, const Embedding& embedding);

/// Checks injectivity, range and edge preservation.
bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& embedding);

}  // namespace hdecomp
