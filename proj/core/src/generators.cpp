#include "hdecomp/generators.hpp"

#include <charconv>
#include <numeric>
#include <random>

#include "hdecomp/error.hpp"
#include "hdecomp/graph6.hpp"

namespace hdecomp {

Graph complete_multipartite(std::span<const int> sizes) {
    int n = 0;
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 0) {
            throw DomainError("negative part size");
        }
        n += sizes[i];
        part.insert(part.end(), sizes[i], static_cast<int>(i));
    }
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (part[u] != part[v]) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::vector<int> turan_part_sizes(int n, int k) {
    if (n < 0 || k < 1) {
        throw DomainError("turan graph needs n >= 0 and k >= 1");
    }
    std::vector<int> sizes(k, n / k);
    for (int i = 0; i < n % k; ++i) {
        ++sizes[i];
    }
    return sizes;
}

Graph turan_graph(int n, int k) {
    const auto sizes = turan_part_sizes(n, k);
    Graph g = complete_multipartite(sizes);
    g.set_label("T_" + std::to_string(k) + "(" + std::to_string(n) + ")");
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) {
        throw DomainError("edge probability must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            // 53-bit uniform in [0, 1), independent of the standard library's distributions.
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n, "K_" + std::to_string(n));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw DomainError("cycle needs at least 3 vertices");
    }
    Graph g(n, "C_" + std::to_string(n));
    for (Vertex v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph path_graph(int n) {
    Graph g(n, "P_" + std::to_string(n));
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
    Graph g(leaves + 1, "K_{1," + std::to_string(leaves) + "}");
    for (Vertex v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

PlantResult plant(const Graph& base, const Graph& insertion, std::span<const Vertex> targets) {
    if (static_cast<int>(targets.size()) != insertion.order()) {
        throw DomainError("plant: need one target vertex per inserted vertex");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= base.order()) {
            throw DomainError("plant: target vertex out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw DomainError("plant: target vertices must be distinct");
            }
        }
    }
    PlantResult out{base, 0};
    for (const auto& e : insertion.edges()) {
        if (!out.graph.add_edge(targets[e.u], targets[e.v])) {
            ++out.overlapping;
        }
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (const auto& e : a.edges()) {
        g.add_edge(e.u, e.v);
    }
    for (const auto& e : b.edges()) {
        g.add_edge(a.order() + e.u, a.order() + e.v);
    }
    return g;
}

namespace {

bool parse_suffix(std::string_view text, int& value) {
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc{} && ptr == end && value >= 0;
}

}  // namespace

Graph named_graph(std::string_view name) {
    Graph g;
    int k = 0;
    if (name == "bowtie") {
        // Two triangles sharing vertex 0.
        g = Graph(5);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(0, 3);
        g.add_edge(0, 4);
        g.add_edge(3, 4);
    } else if (name == "k222") {
        const int sizes[] = {2, 2, 2};
        g = complete_multipartite(sizes);
    } else if (name.size() >= 2 && name[0] == 'k' && parse_suffix(name.substr(1), k)) {
        g = complete_graph(k);
    } else if (name.size() >= 2 && name[0] == 'c' && parse_suffix(name.substr(1), k) && k >= 3) {
        g = cycle_graph(k);
    } else if (name.size() >= 2 && name[0] == 'p' && parse_suffix(name.substr(1), k)) {
        g = path_graph(k);
    } else {
        throw DomainError("unknown builtin graph '" + std::string(name) + "'");
    }
    g.set_label(std::string(name));
    return g;
}

Graph graph_from_spec(std::string_view spec) {
    try {
        return named_graph(spec);
    } catch (const DomainError&) {
        return parse_graph6(spec);
    }
}

}  // namespace hdecomp
