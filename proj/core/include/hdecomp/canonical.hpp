#pragma once

#include <string>
#include <vector>

#include "hdecomp/graph.hpp"

namespace hdecomp {

/// Isomorphism-invariant encoding of a graph.
///
/// `code` is the graph6 string of the canonically relabeled graph, so it
/// includes the order; `labeling[v]` is the canonical position of vertex v.
/// Two graphs are isomorphic iff their codes are equal.
struct CanonicalForm {
    std::string code;
    std::vector<Vertex> labeling;
};

/// Partition refinement plus backtracking over the coarsest equitable
/// partition, with twin and root-orbit pruning. Throws SizeError above
/// `limits.embedding_vertices`.
CanonicalForm canonical_form(const Graph& g, const Limits& limits = {});

inline std::string canonical_code(const Graph& g, const Limits& limits = {}) {
    return canonical_form(g, limits).code;
}

bool are_isomorphic(const Graph& a, const Graph& b, const Limits& limits = {});

/// Total order used to list families deterministically: order, then size,
/// then canonical code.
bool canonical_less(const Graph& a, const Graph& b, const Limits& limits = {});

}  // namespace hdecomp
