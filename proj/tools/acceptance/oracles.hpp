#pragma once

// Brute-force reference implementations. None of these touch the search
// kernels in core; they only read graphs through has_edge/order.

#include <cstdint>
#include <vector>

#include "hdecomp/graph.hpp"

namespace hdecomp::oracle {

/// Isomorphism by trying every permutation.
bool isomorphic(const Graph& a, const Graph& b);

/// Number of n-vertex graphs up to isomorphism: every labelled graph is
/// reduced to its minimum edge mask over all n! relabelings. n <= 6.
std::size_t unlabeled_count(int n);

/// Subgraph containment over all injections.
bool contains(const Graph& host, const Graph& pattern);

/// Distinct edge sets of copies of `h` in `g`, as sorted edge lists.
std::vector<std::vector<Edge>> copy_edge_sets(const Graph& g, const Graph& h);

/// Minimum number of parts over every partition of E(g) into copies of h and
/// single edges, found by enumerating the partitions themselves.
std::size_t phi(const Graph& g, const Graph& h);

/// Smallest k admitting a proper k-colouring, by trying all assignments.
int chromatic_number(const Graph& h);

/// Smallest colour class over all proper chi-colourings.
int chromatic_excess(const Graph& h);

/// True iff some edge deletion lowers chi.
bool edge_critical(const Graph& h);

/// ex(n, C4) over all labelled C4-free graphs (include/exclude per pair,
/// never building a C4). n <= 7 is quick.
std::size_t ex_c4(int n);

/// max edges of an n-vertex labelled graph containing none of `patterns`,
/// over all 2^(n choose 2) labelled graphs. n <= 6.
std::size_t ex_labeled(int n, const std::vector<Graph>& patterns);

/// e(T_k(n)) counted pair by pair.
std::size_t turan_edges(int n, int k);

}  // namespace hdecomp::oracle
