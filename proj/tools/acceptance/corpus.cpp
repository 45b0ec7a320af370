#include "corpus.hpp"

#include <random>

#include "hdecomp/generators.hpp"

namespace hdecomp::corpus {

namespace {

// Plants `count` random pairs inside parts of a complete multipartite graph.
Graph planted_multipartite(const std::vector<int>& sizes, int count, std::uint64_t seed) {
    Graph g = complete_multipartite(sizes);
    std::vector<int> part_of;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        part_of.insert(part_of.end(), sizes[i], static_cast<int>(i));
    }
    std::mt19937_64 rng(seed);
    const int n = g.order();
    int planted = 0;
    for (int tries = 0; planted < count && tries < 100000; ++tries) {
        const auto u = static_cast<Vertex>(rng() % n);
        const auto v = static_cast<Vertex>(rng() % n);
        if (u != v && part_of[u] == part_of[v] && g.add_edge(u, v)) {
            ++planted;
        }
    }
    return g;
}

PipelineInstance make(std::string name, Graph g, const char* h, PipelineParams p = {}) {
    return {std::move(name), std::move(g), named_graph(h), p};
}

}  // namespace

std::vector<PipelineInstance> pipeline_instances() {
    std::vector<PipelineInstance> out;

    // Turan graphs
    for (int n : {6, 8, 10, 12, 14}) {
        out.push_back(make("turan2_" + std::to_string(n) + "_k3", turan_graph(n, 2), "k3"));
    }
    for (int n : {9, 12}) {
        out.push_back(make("turan3_" + std::to_string(n) + "_k4", turan_graph(n, 3), "k4"));
    }
    out.push_back(make("turan2_8_bowtie", turan_graph(8, 2), "bowtie"));
    {
        PipelineParams p;
        p.step1_threshold = 0;
        out.push_back(make("turan2_12_k222", turan_graph(12, 2), "k222", p));
    }

    // Planted instances
    {
        Graph g = complete_multipartite(std::vector<int>{5, 5});
        g.add_edge(0, 1);
        out.push_back(make("k55_plus_edge_k3", g, "k3"));
    }
    {
        Graph g = complete_multipartite(std::vector<int>{5, 5});
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        PipelineParams p;
        p.beta = 0.5;
        p.step1_threshold = 0;
        out.push_back(make("k55_plus_c4_k222", g, "k222", p));
    }
    {
        Graph g = complete_multipartite(std::vector<int>{10, 10});
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(10, 11);
        out.push_back(make("k1010_plus_3_k3", g, "k3"));
    }
    {
        Graph g = complete_multipartite(std::vector<int>{4, 4});
        for (Vertex u = 0; u < 4; ++u) {
            for (Vertex v = u + 1; v < 4; ++v) {
                g.add_edge(u, v);
            }
        }
        out.push_back(make("k44_plus_k4_k3", g, "k3"));
    }
    for (int s = 0; s < 8; ++s) {
        const int a = 6 + s;
        out.push_back(make("planted2_" + std::to_string(s) + "_k3",
                           planted_multipartite({a, a}, 1 + s % 4, 100 + s), "k3"));
    }
    for (int s = 0; s < 4; ++s) {
        const int a = 4 + s;
        out.push_back(make("planted3_" + std::to_string(s) + "_k4",
                           planted_multipartite({a, a, a}, 2 + s, 200 + s), "k4"));
    }
    for (int s = 0; s < 4; ++s) {
        PipelineParams p;
        p.step1_threshold = 1;
        out.push_back(make("planted2_" + std::to_string(s) + "_bowtie",
                           planted_multipartite({7 + s, 7 + s}, 2 + s, 300 + s), "bowtie", p));
    }
    for (int s = 0; s < 3; ++s) {
        out.push_back(make("planted2_" + std::to_string(s) + "_c5",
                           planted_multipartite({6 + s, 6 + s}, 2 + s, 400 + s), "c5"));
    }
    for (int s = 0; s < 2; ++s) {
        PipelineParams p;
        p.beta = 0.5;
        p.step1_threshold = 0;
        out.push_back(make("planted2_" + std::to_string(s) + "_k222",
                           planted_multipartite({8 + s, 8 + s}, 3 + s, 500 + s), "k222", p));
    }

    // G(n, p)
    const struct {
        int n;
        double p;
        const char* h;
    } randoms[] = {
        {12, 0.5, "k3"}, {16, 0.6, "k3"}, {20, 0.5, "k3"}, {24, 0.7, "k3"}, {30, 0.5, "k3"},
        {36, 0.6, "k3"}, {40, 0.7, "k3"}, {48, 0.5, "k3"}, {60, 0.6, "k3"}, {60, 0.8, "k3"},
        {50, 0.7, "k3"}, {15, 0.7, "k4"}, {25, 0.6, "k4"}, {30, 0.8, "k4"}, {45, 0.8, "k4"}, {20, 0.6, "c5"},
    };
    std::uint64_t seed = 1000;
    for (const auto& r : randoms) {
        out.push_back(make("gnp_" + std::to_string(r.n) + "_" + std::to_string(static_cast<int>(r.p * 10)) + "_" + r.h,
                           random_graph(r.n, r.p, seed), r.h));
        ++seed;
    }
    return out;
}

std::vector<Graph> small_patterns() {
    std::vector<Graph> out;
    for (const char* name : {"p3", "k3", "p4", "c4", "k4", "c5", "bowtie"}) {
        out.push_back(named_graph(name));
    }
    out.push_back(star_graph(3));
    Graph two_k2(4, "2k2");
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    out.push_back(two_k2);
    Graph diamond = complete_graph(4);
    diamond.remove_edge(0, 1);
    diamond.set_label("k4-e");
    out.push_back(diamond);
    return out;
}

}  // namespace hdecomp::corpus
