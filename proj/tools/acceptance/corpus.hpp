#pragma once

#include <string>
#include <vector>

#include "hdecomp/graph.hpp"
#include "hdecomp/pipeline.hpp"

namespace hdecomp::corpus {

struct PipelineInstance {
    std::string name;
    Graph g;
    Graph h;
    PipelineParams params;
};

/// 50 seeded decompose instances: Turan graphs, complete multipartite graphs
/// with planted edges inside parts, and G(n, p) with n <= 60.
std::vector<PipelineInstance> pipeline_instances();

/// Patterns with e(H) >= 2 used against every graph on <= 5 vertices.
std::vector<Graph> small_patterns();

}  // namespace hdecomp::corpus
