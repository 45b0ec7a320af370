#include <doctest.h>

#include <algorithm>
#include <random>

#include "hdecomp/canonical.hpp"
#include "hdecomp/coloring.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/extremal.hpp"
#include "hdecomp/family.hpp"
#include "hdecomp/generators.hpp"
#include "hdecomp/packing.hpp"
#include "hdecomp/pipeline.hpp"

using namespace hdecomp;

namespace {

Graph k55_plus_edge() {
    Graph g = complete_multipartite(std::vector<int>{5, 5});
    g.add_edge(0, 1);
    return g;
}

Graph k55_plus_c4() {
    Graph g = complete_multipartite(std::vector<int>{5, 5});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}

std::vector<int> sides(int a, int b) {
    std::vector<int> c(a, 0);
    c.insert(c.end(), b, 1);
    return c;
}

GraphFamily fstar(const Graph& h) { return minimal_subfamily(decomposition_family(h)); }

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

TEST_CASE("peeling") {
    const auto t = peel_min_degree(turan_graph(10, 2), 3);
    CHECK(t.trace.empty());
    CHECK(t.graph == turan_graph(10, 2));

    const auto star = peel_min_degree(star_graph(5), 3);
    CHECK(star.trace.size() == 3);
    CHECK(star.graph.order() == 3);
    CHECK(star.graph.size() == 2);
    CHECK(star.graph.min_degree() == turan_min_degree(3, 2));

    const Graph k4k1 = disjoint_union(complete_graph(4), empty_graph(1));
    const auto k = peel_min_degree(k4k1, 3);
    REQUIRE(k.trace.size() == 1);
    CHECK(k.trace[0].vertex == 4);
    CHECK(k.trace[0].degree == 0);
    CHECK(k.graph == complete_graph(4));
}

TEST_CASE("peeling leaves the Turan minimum degree") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = random_graph(20, 0.3 + 0.01 * s, 11 + s);
        for (int r : {3, 4}) {
            const auto p = peel_min_degree(g, r);
            CHECK(p.kept.size() == static_cast<std::size_t>(p.graph.order()));
            if (p.graph.order() > 0) {
                CHECK(p.graph.min_degree() >= turan_min_degree(p.graph.order(), r - 1));
            }
            CHECK(std::is_sorted(p.kept.begin(), p.kept.end()));
            CHECK(p.graph == g.induced(p.kept));
        }
    }
}

TEST_CASE("stability partition examples") {
    StabilityReport rep;
    const Graph k33 = complete_multipartite(std::vector<int>{3, 3});
    const auto s = stability_partition(k33, 2, 0.05, 1, 1, &rep);
    CHECK(rep.internal_edges == 0);
    CHECK(s.part_edges(0) + s.part_edges(1) == 0);
    CHECK(s.part(0).size() == 3);

    const auto c5 = stability_partition(cycle_graph(5), 2, 0.05, 1, 1, &rep);
    CHECK(rep.internal_edges == 1);
    CHECK(c5.locally_maximal());
    const auto a = c5.part(0).size();
    CHECK(((a == 2) || (a == 3)));

    const auto k4 = stability_partition(complete_graph(4), 2, 0.05, 1, 1, &rep);
    CHECK(k4.part(0).size() == 2);
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(k4.deg_to_part(v, k4.class_of(v)) == 1);
        CHECK(k4.deg_to_part(v, 1 - k4.class_of(v)) == 2);
    }
}

TEST_CASE("stability partition satisfies local maximality") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph g = random_graph(30, 0.5, 500 + s);
        for (int k : {2, 3}) {
            StabilityReport rep;
            const auto st = stability_partition(g, k, 0.05, s, 4, &rep);
            CHECK(st.locally_maximal());
            CHECK(rep.property_a);
            CHECK(st.ledger_matches(g));
            std::size_t internal = 0;
            for (int i = 0; i < k; ++i) {
                internal += st.part_edges(i);
            }
            CHECK(internal == rep.internal_edges);
        }
    }
}

TEST_CASE("more restarts never worsen the cut") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = random_graph(24, 0.6, 800 + s);
        StabilityReport one;
        StabilityReport many;
        stability_partition(g, 2, 0.05, 7, 1, &one);
        stability_partition(g, 2, 0.05, 7, 8, &many);
        CHECK(many.internal_edges <= one.internal_edges);
    }
}

TEST_CASE("identify X") {
    Graph g = complete_multipartite(std::vector<int>{4, 4});
    for (Vertex u = 0; u < 4; ++u) {
        for (Vertex v = u + 1; v < 4; ++v) {
            g.add_edge(u, v);
        }
    }
    PartitionState st(g, sides(4, 4), 2);
    identify_x(st, g, 0.5);
    CHECK(st.x_part(0) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(st.x_part(1).empty());
    CHECK(st.prime_part(0).empty());
    CHECK(st.ledger_matches(g));
    identify_x(st, g, 0.9);
    CHECK(st.x_vertices().empty());

    const Graph t = turan_graph(12, 3);
    auto ts = stability_partition(t, 3, 0.05, 1);
    identify_x(ts, t, 0.1);
    CHECK(ts.x_vertices().empty());
}

TEST_CASE("ledger follows edge deletions") {
    std::mt19937_64 rng(3);
    Graph g = random_graph(25, 0.5, 99);
    auto st = stability_partition(g, 3, 0.05, 1);
    identify_x(st, g, 0.3);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = 0; i < edges.size() / 2; ++i) {
        g.remove_edge(edges[i].u, edges[i].v);
        st.on_edge_removed(edges[i].u, edges[i].v);
    }
    CHECK(st.ledger_matches(g));
}

TEST_CASE("step 1 on K55 plus an edge") {
    Graph g = k55_plus_edge();
    PartitionState st(g, sides(5, 5), 2);
    identify_x(st, g, 0.25);
    const Graph h = complete_graph(3);
    const auto r = step1_deplete(g, st, h, fstar(h), 0.25, 0, 1'000'000);
    REQUIRE(r.copies.size() == 1);
    CHECK(r.stop_reason == "thresholds met");
    const auto& c = r.copies[0];
    CHECK(c.part == 0);
    CHECK(st.prime_edges(0) == 0);
    CHECK(st.prime_edges(1) == 0);
    CHECK(g.size() == 23);
    std::vector<Vertex> img = c.copy.map;
    std::sort(img.begin(), img.end());
    CHECK(img[0] == 0);
    CHECK(img[1] == 1);
    CHECK(img[2] >= 5);
}

TEST_CASE("step 1 on K55 plus a C4 with K222") {
    Graph g = k55_plus_c4();
    PartitionState st(g, sides(5, 5), 2);
    identify_x(st, g, 0.5);
    CHECK(st.x_vertices().empty());
    const Graph h = named_graph("k222");
    const auto r = step1_deplete(g, st, h, fstar(h), 0.5, 0, 1'000'000);
    REQUIRE(r.copies.size() == 1);
    CHECK(g.size() == 29 - 12);
    CHECK(st.prime_edges(0) == 0);
    int in_side_two = 0;
    for (Vertex v : r.copies[0].copy.map) {
        in_side_two += v >= 5;
    }
    CHECK(in_side_two == 2);
}

TEST_CASE("step 1 on a Turan graph does nothing") {
    Graph g = turan_graph(10, 2);
    PartitionState st(g, sides(5, 5), 2);
    const Graph h = named_graph("bowtie");
    const auto r = step1_deplete(g, st, h, fstar(h), 0.25, 0, 1'000'000);
    CHECK(r.copies.empty());
    CHECK(r.stop_reason == "thresholds met");
    CHECK(g == turan_graph(10, 2));
}

TEST_CASE("step 1 stalls cleanly when no copy extends") {
    // an internal edge with no common neighbour across
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    PartitionState st(g, sides(3, 3), 2);
    const Graph h = complete_graph(3);
    const auto r = step1_deplete(g, st, h, fstar(h), 0.25, 0, 1'000'000);
    CHECK(r.copies.empty());
    CHECK(r.stop_reason == "step1-stalled");
    CHECK(g.size() == 4);
}

TEST_CASE("step 2 deletes crossing triangles through x") {
    // K44 on 0..7, x = 8 joined to three vertices on each side
    Graph g = complete_multipartite(std::vector<int>{4, 4});
    g = disjoint_union(g, empty_graph(1));
    for (Vertex v : {0, 1, 2, 4, 5, 6}) {
        g.add_edge(8, v);
    }
    std::vector<int> cls = sides(4, 4);
    cls.push_back(0);
    PartitionState st(g, cls, 2);
    std::vector<bool> in_x(9, false);
    in_x[8] = true;
    st.set_x(g, in_x);
    const double beta = 1.0 / 3.0;
    const auto r = step2_deplete(g, st, complete_graph(3), 1, beta, 1'000'000);
    CHECK(r.copies.size() == 2);
    CHECK(st.deg_to_prime(8, 0) == 1);
    CHECK(st.deg_to_prime(8, 1) == 1);
    for (const auto& c : r.copies) {
        CHECK(c.x_vertices == std::vector<Vertex>{8});
    }
    CHECK(st.ledger_matches(g));
}

TEST_CASE("step 2 with empty X") {
    Graph g = turan_graph(8, 2);
    PartitionState st(g, sides(4, 4), 2);
    const auto r = step2_deplete(g, st, complete_graph(3), 1, 0.25, 1'000'000);
    CHECK(r.copies.empty());
    CHECK(r.stop_reason == "X' empty");
}

TEST_CASE("step 2 needs sigma eligible vertices") {
    Graph g = complete_multipartite(std::vector<int>{4, 4});
    g = disjoint_union(g, empty_graph(1));
    for (Vertex v = 0; v < 8; ++v) {
        g.add_edge(8, v);
    }
    std::vector<int> cls = sides(4, 4);
    cls.push_back(0);
    PartitionState st(g, cls, 2);
    std::vector<bool> in_x(9, false);
    in_x[8] = true;
    st.set_x(g, in_x);
    const auto r = step2_deplete(g, st, named_graph("k222"), 2, 0.25, 1'000'000);
    CHECK(r.copies.empty());
    CHECK(r.stop_reason == "fewer than σ(H) eligible vertices");
}

TEST_CASE("decompose examples") {
    const auto a = decompose(k55_plus_edge(), complete_graph(3));
    CHECK(a.report.t == 24);
    CHECK(a.report.target == 25);
    CHECK(a.report.success);
    CHECK(a.report.step1_copies == 1);

    PipelineParams p;
    p.beta = 0.5;
    p.step1_threshold = 0;
    const auto b = decompose(k55_plus_c4(), named_graph("k222"), p);
    CHECK(b.report.t == 18);
    CHECK(b.report.success);

    const auto c = decompose(turan_graph(12, 2), complete_graph(3));
    CHECK(c.report.t == 36);
    CHECK(c.decomposition.copies.empty());
    CHECK(c.report.target == 36);
}

TEST_CASE("decompose output always verifies") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        const Graph g = random_graph(18 + s, 0.6, 1200 + s);
        for (const char* h : {"k3", "k4"}) {
            const Graph hh = named_graph(h);
            const auto r = decompose(g, hh);
            const auto v = verify_decomposition(g, r.decomposition);
            CHECK_MESSAGE(v.ok, v.violation);
            CHECK(r.report.t == r.decomposition.parts());
            CHECK(r.report.t == g.size() - (hh.size() - 1) * r.decomposition.copies.size());
            CHECK(r.report.class_of.size() == static_cast<std::size_t>(g.order()));
        }
    }
}

TEST_CASE("decompose is deterministic") {
    const Graph g = random_graph(30, 0.7, 4242);
    const auto a = decompose(g, complete_graph(3));
    const auto b = decompose(g, complete_graph(3));
    CHECK(format_decomposition(a.decomposition) == format_decomposition(b.decomposition));
    CHECK(to_json(a.report) == to_json(b.report));
}

TEST_CASE("decompose preconditions") {
    CHECK_THROWS_AS(decompose(complete_graph(5), cycle_graph(4)), DomainError);
    PipelineParams wrong_r;
    wrong_r.r = 4;
    CHECK_THROWS_AS(decompose(complete_graph(5), complete_graph(3), wrong_r), DomainError);
    PipelineParams bad_beta;
    bad_beta.beta = 1.5;
    CHECK_THROWS_AS(decompose(complete_graph(5), complete_graph(3), bad_beta), DomainError);
    CHECK_THROWS_AS(decompose(complete_graph(2), complete_graph(3)), DomainError);
    CHECK_THROWS_AS(decompose(complete_graph(70), complete_graph(3)), SizeError);
}

TEST_CASE("verification catches constructed violations") {
    const Graph g = k55_plus_edge();
    const auto r = decompose(g, complete_graph(3));
    REQUIRE(verify_decomposition(g, r.decomposition).ok);

    auto missing = r.decomposition;
    missing.singles.pop_back();
    const auto v1 = verify_decomposition(g, missing);
    CHECK_FALSE(v1.ok);
    CHECK(starts_with(v1.violation, "edge uncovered"));

    const Graph k6 = complete_graph(6);
    auto shared = phi_exact(k6, complete_graph(3)).decomposition;
    REQUIRE(shared.copies.size() >= 2);
    shared.copies[1] = shared.copies[0];
    const auto v2 = verify_decomposition(k6, shared);
    CHECK_FALSE(v2.ok);
    CHECK(starts_with(v2.violation, "edge covered twice"));

    auto bogus = r.decomposition;
    bogus.singles.push_back({0, 2});
    CHECK(starts_with(verify_decomposition(g, bogus).violation, "single (0,2) is not an edge"));

    auto bent = r.decomposition;
    bent.copies[0].map[0] = bent.copies[0].map[1];
    CHECK(verify_decomposition(g, bent).violation.find("not injective") != std::string::npos);
}

TEST_CASE("decomposition text round trip") {
    const Graph g = random_graph(16, 0.6, 31);
    const auto r = decompose(g, complete_graph(3));
    const auto text = format_decomposition(r.decomposition);
    CHECK(starts_with(text, std::string(kDecompositionHeader)));
    const auto back = parse_decomposition(text);
    CHECK(format_decomposition(back) == text);
    CHECK(verify_decomposition(g, back).ok);
}

TEST_CASE("decomposition parser errors") {
    CHECK_THROWS_AS(parse_decomposition(""), ParseError);
    CHECK_THROWS_AS(parse_decomposition("P Bw\n"), ParseError);
    const std::string head = std::string(kDecompositionHeader) + "\n";
    CHECK_THROWS_AS(parse_decomposition(head + "H 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_decomposition(head + "P Bw\nH 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_decomposition(head + "P Bw\nE 0\n"), ParseError);
    CHECK_THROWS_AS(parse_decomposition(head + "P Bw\nQ 1 2\n"), ParseError);
    try {
        parse_decomposition(head + "P Bw\nE x y\n");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == head.size() + 5);
    }
    const auto ok = parse_decomposition(head + "\nP Bw\nH 0 1 2\nE 3 4\n");
    CHECK(ok.copies.size() == 1);
    CHECK(ok.singles.size() == 1);
}

TEST_CASE("lower-bound construction") {
    const auto a = lower_bound_construction(9, named_graph("k222"));
    CHECK(a.certificate.biex_value == 13);
    CHECK(a.certificate.plant.order() == 5);
    CHECK(a.certificate.plant.size() >= 4);
    CHECK(a.certificate.edges >= 24);
    CHECK(a.graph.size() == a.certificate.edges);
    CHECK(a.certificate.h_freeness == "verified");
    CHECK_FALSE(contains_subgraph(a.graph, named_graph("k222")));

    for (int n : {4, 7, 10}) {
        const auto b = lower_bound_construction(n, complete_graph(4));
        CHECK(b.certificate.biex_value == 0);
        CHECK(are_isomorphic(b.graph, turan_graph(n, 3)));
        CHECK(b.graph.size() == turan_number(n, 4));
    }

    const auto c = lower_bound_construction(8, named_graph("bowtie"));
    CHECK(c.certificate.biex_value == 1);
    CHECK(c.graph.size() == 17);
    CHECK(c.certificate.bound_holds);
    CHECK(c.certificate.h_freeness == "verified");
    CHECK(phi_exact(c.graph, named_graph("bowtie")).t == 17);
}

TEST_CASE("report JSON carries the format tag") {
    const auto r = decompose(k55_plus_edge(), complete_graph(3));
    const auto j = to_json(r.report);
    CHECK(j.find("\"format\": \"hdecomp-report/1\"") != std::string::npos);
    const auto lb = lower_bound_construction(8, named_graph("bowtie"));
    CHECK(to_json(lb.certificate).find("hdecomp-lower-bound/1") != std::string::npos);
}
