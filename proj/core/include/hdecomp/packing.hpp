#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hdecomp/embedding.hpp"
#include "hdecomp/graph.hpp"

namespace hdecomp {

/// Pairwise edge-disjoint copies of a pattern in a host.
struct Packing {
    std::vector<Embedding> copies;
};

/// Partition of E(host) into pattern copies and single edges. The number of
/// parts is |copies| + |singles|.
struct HDecomposition {
    Graph pattern;
    std::vector<Embedding> copies;
    std::vector<Edge> singles;

    std::size_t parts() const noexcept { return copies.size() + singles.size(); }
};

/// Distinct copies of `h` in `g`, one embedding per distinct edge set, in
/// branch order: ascending smallest host-edge index, then ascending sorted
/// edge-index list. Throws SizeError when the count exceeds limits.copy_cap.
std::vector<Embedding> enumerate_copies(const Graph& g, const Graph& h, const Limits& limits = {});

/// Maximum number of pairwise edge-disjoint copies of `h` in `g`, by
/// include/exclude branch-and-bound over the copy list with the bound
/// |chosen| + coverable_edges / e(H). Requires e(H) >= 2.
Packing max_packing(const Graph& g, const Graph& h, const Limits& limits = {});

struct PhiResult {
    std::size_t t = 0;
    HDecomposition decomposition;
};

/// phi_H(G) = e(G) - (e(H) - 1) * (maximum packing size). Leftover edges
/// become singles in ascending order.
PhiResult phi_exact(const Graph& g, const Graph& h, const Limits& limits = {});

struct PhiScan {
    int n = 0;
    std::size_t value = 0;
    /// Every isomorphism class attaining the maximum, in enumeration order.
    std::vector<Graph> witnesses;
    std::size_t graphs_scanned = 0;
};

/// phi_H(n), the maximum of phi_exact over all n-vertex graphs. Throws
/// SizeError above limits.phi_scan_vertices. `threads` > 1 evaluates graphs
/// concurrently; the result does not depend on it.
PhiScan phi_max_over_n(int n, const Graph& h, const Limits& limits = {}, int threads = 1);

/// {n, pattern_graph6, value, witnesses, graphs_scanned}
std::string to_json(const PhiScan& scan, const Graph& h);

}  // namespace hdecomp
