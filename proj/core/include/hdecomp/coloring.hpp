#pragma once

#include <functional>
#include <vector>

#include "hdecomp/graph.hpp"

namespace hdecomp {

/// A partition of V(H) into colour classes, each sorted ascending, classes
/// ordered by their smallest vertex.
using ColourPartition = std::vector<std::vector<Vertex>>;

/// Visits every proper colouring with exactly r non-empty classes, once per
/// partition (class relabelings are not repeated). `visit` returns false to stop.
void for_each_proper_coloring(const Graph& h, int r, const std::function<bool(const ColourPartition&)>& visit,
                              const Limits& limits = {});

std::vector<ColourPartition> proper_colorings(const Graph& h, int r, const Limits& limits = {});

int chromatic_number(const Graph& h, const Limits& limits = {});

}  // namespace hdecomp
