#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hdecomp/canonical.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/graph.hpp"

namespace hdecomp {

struct OrderlyResult {
    std::uint64_t graphs_visited = 0;
    /// False when the node budget ran out before the tree was exhausted.
    bool complete = true;
};

/// Isomorph-free generation of n-vertex graphs by edge augmentation.
///
/// Starting from the empty graph, every accepted graph is extended by each
/// non-edge (lexicographic order). A child G+e is accepted iff it passes
/// `admissible`, deleting its canonical last edge yields a graph isomorphic
/// to G, and no earlier child of G had the same canonical form. Each
/// isomorphism class whose every subgraph is admissible is visited exactly
/// once, in depth-first preorder. `admissible` must be monotone (closed under
/// edge deletion) for completeness. Each expanded graph costs one budget node.
OrderlyResult orderly_generate(int n, const std::function<bool(const Graph& child, Edge added)>& admissible,
                               const std::function<void(const Graph&, const CanonicalForm&)>& visit,
                               SearchBudget* budget = nullptr, const Limits& limits = {});

/// Every n-vertex graph up to isomorphism. Throws SizeError above
/// `limits.enumeration_vertices`.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit, const Limits& limits = {});

std::vector<Graph> enumerate_graphs(int n, const Limits& limits = {});

}  // namespace hdecomp
