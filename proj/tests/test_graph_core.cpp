#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hdecomp/canonical.hpp"
#include "hdecomp/coloring.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/enumerate.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/generators.hpp"
#include "hdecomp/graph6.hpp"
#include "oracles.hpp"

using namespace hdecomp;

namespace {

Graph labeled(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if (mask >> bit & 1) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::vector<Vertex> shuffled(int n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(5);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.has_edge(1, 0));
    CHECK(g.size() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.min_degree() == 0);
    CHECK(g.remove_edge(0, 1));
    CHECK(g.size() == 0);
    CHECK_THROWS(g.add_edge(0, 0));
    CHECK_THROWS(g.add_edge(0, 5));
}

TEST_CASE("graph6 fixed strings") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    const Graph e2 = parse_graph6("A?");
    CHECK(e2.order() == 2);
    CHECK(e2.size() == 0);
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(emit_graph6(complete_graph(3)) == "Bw");
}

TEST_CASE("graph6 malformed input names the byte") {
    CHECK_THROWS_AS(parse_graph6("Bw~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
    // body byte outside the printable range
    try {
        parse_graph6("B\x01");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    // trailing padding bits must be zero: "Bx" sets the pad bit for n=3
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
    for (int n : {0, 1, 2, 5, 6, 7, 12, 31, 62, 63, 64}) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const Graph g = random_graph(n, 0.4, 17 * n + s);
            CHECK(parse_graph6(emit_graph6(g)) == g);
        }
    }
    std::stringstream ss;
    std::vector<Graph> gs{complete_graph(4), cycle_graph(5), empty_graph(1)};
    write_graph6_stream(ss, gs);
    const auto back = read_graph6_stream(ss);
    REQUIRE(back.size() == 3);
    CHECK(back[1] == cycle_graph(5));
}

TEST_CASE("canonical form examples") {
    Graph a(4);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    a.add_edge(2, 3);
    a.add_edge(3, 0);
    Graph b(4);
    b.add_edge(0, 2);
    b.add_edge(2, 1);
    b.add_edge(1, 3);
    b.add_edge(3, 0);
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(complete_graph(3)) != canonical_code(path_graph(3)));

    std::set<std::string> codes;
    for (std::uint64_t m = 0; m < 64; ++m) {
        codes.insert(canonical_code(labeled(4, m)));
    }
    CHECK(codes.size() == 11);
}

TEST_CASE("canonical form agrees with permutation isomorphism") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 5;
        const std::uint64_t pairs = n * (n - 1) / 2;
        const Graph x = labeled(n, rng() & ((1ULL << pairs) - 1));
        const Graph y = labeled(n, rng() & ((1ULL << pairs) - 1));
        CHECK(are_isomorphic(x, y) == oracle::isomorphic(x, y));
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(9);
    for (int n : {5, 9, 13, 16}) {
        for (int s = 0; s < 10; ++s) {
            const Graph g = random_graph(n, 0.5, 100 * n + s);
            const auto p = shuffled(n, rng);
            const auto cf = canonical_form(g);
            CHECK(canonical_code(g.relabeled(p)) == cf.code);
            CHECK(g.relabeled(cf.labeling) == parse_graph6(cf.code));
        }
    }
    // regular graphs stress the individualization step
    const Graph pet = graph_from_spec("IheA@GUAo");
    const auto p = shuffled(10, rng);
    CHECK(canonical_code(pet.relabeled(p)) == canonical_code(pet));
}

TEST_CASE("canonical form rejects hosts above the cap") {
    Limits small;
    small.embedding_vertices = 8;
    CHECK_THROWS_AS(canonical_form(empty_graph(9), small), SizeError);
}

TEST_CASE("embedding examples") {
    CHECK(find_embeddings(cycle_graph(4), named_graph("k222"), 1).size() == 1);
    CHECK(find_embeddings(complete_graph(3), complete_multipartite(std::vector<int>{2, 2}), 1).empty());
    const auto tri = find_embeddings(complete_graph(3), complete_graph(4), 100);
    CHECK(tri.size() == 24);
    std::set<std::set<Vertex>> images;
    for (const auto& e : find_embeddings(complete_graph(3), complete_graph(4), 10)) {
        images.insert({e.map.begin(), e.map.end()});
        CHECK(is_valid_embedding(complete_graph(3), complete_graph(4), e));
    }
    CHECK(images.size() == 4);
}

TEST_CASE("allowed sets restrict the search") {
    const Graph k4 = complete_graph(4);
    const AllowedSets allowed{{0}, {1, 2, 3}, {1, 2, 3}};
    const auto es = find_embeddings(complete_graph(3), k4, 100, allowed);
    CHECK(es.size() == 6);
    for (const auto& e : es) {
        CHECK(e.map[0] == 0);
    }
}

TEST_CASE("search budget stops the embedding search") {
    SearchBudget budget{5, 0};
    std::size_t seen = 0;
    const auto st = for_each_embedding(
        complete_graph(4), complete_graph(12), {},
        [&](std::span<const Vertex>) {
            ++seen;
            return true;
        },
        &budget);
    CHECK(st == SearchStatus::BudgetExhausted);
    CHECK(seen < 11880);
}

TEST_CASE("containment agrees with the injection oracle") {
    const std::vector<Graph> patterns{complete_graph(3), cycle_graph(4), path_graph(4), star_graph(3),
                                      named_graph("bowtie"), cycle_graph(5)};
    for (std::uint64_t s = 0; s < 60; ++s) {
        const Graph host = random_graph(7, 0.45, 300 + s);
        for (const auto& p : patterns) {
            CHECK(contains_subgraph(host, p) == oracle::contains(host, p));
        }
    }
}

TEST_CASE("proper colourings") {
    const auto k3 = proper_colorings(complete_graph(3), 3);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == ColourPartition{{0}, {1}, {2}});
    CHECK(proper_colorings(cycle_graph(5), 3).size() == 5);
    const auto k222 = proper_colorings(named_graph("k222"), 3);
    REQUIRE(k222.size() == 1);
    for (const auto& cls : k222[0]) {
        CHECK(cls.size() == 2);
    }
    CHECK(proper_colorings(complete_graph(4), 3).empty());
}

TEST_CASE("proper colourings are proper, distinct and counted right") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph h = random_graph(6, 0.4, 700 + s);
        for (int r = 1; r <= 4; ++r) {
            const auto cs = proper_colorings(h, r);
            std::set<ColourPartition> seen(cs.begin(), cs.end());
            CHECK(seen.size() == cs.size());
            for (const auto& c : cs) {
                CHECK(c.size() == static_cast<std::size_t>(r));
                for (const auto& cls : c) {
                    CHECK(is_independent_set(h, cls));
                }
            }
            // labeled colourings with all r colours used, divided by r!
            std::size_t labeled_count = 0;
            std::vector<int> col(6, 0);
            const auto rec = [&](auto&& self, int v) -> void {
                if (v == 6) {
                    std::set<int> used(col.begin(), col.end());
                    labeled_count += used.size() == static_cast<std::size_t>(r);
                    return;
                }
                for (int c = 0; c < r; ++c) {
                    bool ok = true;
                    for (Vertex u = 0; u < v; ++u) {
                        ok = ok && !(h.has_edge(u, v) && col[u] == c);
                    }
                    if (ok) {
                        col[v] = c;
                        self(self, v + 1);
                    }
                }
            };
            rec(rec, 0);
            std::size_t fact = 1;
            for (int i = 2; i <= r; ++i) {
                fact *= i;
            }
            CHECK(cs.size() == labeled_count / fact);
        }
        CHECK(chromatic_number(h) == oracle::chromatic_number(h));
    }
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(complete_graph(3)) == 3);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(named_graph("k222")) == 3);
    CHECK(chromatic_number(empty_graph(3)) == 1);
    CHECK(chromatic_number(path_graph(4)) == 2);
}

TEST_CASE("generators") {
    const Graph t52 = turan_graph(5, 2);
    CHECK(t52.size() == 6);
    CHECK(are_isomorphic(t52, complete_multipartite(std::vector<int>{3, 2})));
    CHECK(turan_graph(7, 3).size() == 16);
    const Graph k55 = complete_multipartite(std::vector<int>{5, 5});
    const std::vector<Vertex> side{0, 1, 2, 3};
    const auto planted = plant(k55, cycle_graph(4), side);
    CHECK(planted.graph.size() == 29);
    CHECK(planted.overlapping == 0);
    const auto again = plant(planted.graph, cycle_graph(4), side);
    CHECK(again.overlapping == 4);
    CHECK(again.graph.size() == 29);
    CHECK(random_graph(20, 0.5, 3) == random_graph(20, 0.5, 3));
    CHECK(turan_part_sizes(7, 3) == std::vector<int>{3, 2, 2});
    CHECK_THROWS(graph_from_spec("nonsense-name"));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(7).size() == 1044);
    for (int n = 0; n <= 6; ++n) {
        CHECK(enumerate_graphs(n).size() == oracle::unlabeled_count(n));
    }
    Limits small;
    small.enumeration_vertices = 5;
    CHECK_THROWS_AS(enumerate_graphs(6, small), SizeError);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    std::set<std::string> codes;
    const auto gs = enumerate_graphs(6);
    for (const auto& g : gs) {
        codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == gs.size());
}
