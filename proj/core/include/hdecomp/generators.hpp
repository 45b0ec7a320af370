#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdecomp/graph.hpp"

namespace hdecomp {

/// Complete multipartite graph; part i occupies a consecutive block of
/// vertices, in the order given.
Graph complete_multipartite(std::span<const int> sizes);

/// Part sizes of T_k(n): balanced, larger parts first.
std::vector<int> turan_part_sizes(int n, int k);

/// Turan graph T_k(n).
Graph turan_graph(int n, int k);

/// G(n, p) with a fixed 64-bit Mersenne twister; each pair (u < v) in
/// lexicographic order consumes one draw.
Graph random_graph(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);

struct PlantResult {
    Graph graph;
    /// Inserted edges that were already present in the base graph.
    int overlapping = 0;
};

/// Places vertex i of `insertion` on targets[i] and adds its edges.
PlantResult plant(const Graph& base, const Graph& insertion, std::span<const Vertex> targets);

/// Disjoint union; vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Builtin patterns: k3, k4, c5, c7, bowtie, k222 (also k<n>, c<n>, p<n>).
Graph named_graph(std::string_view name);

/// A named graph, or else a graph6 literal.
Graph graph_from_spec(std::string_view spec);

}  // namespace hdecomp
