#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hdecomp/canonical.hpp"
#include "hdecomp/coloring.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/enumerate.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/extremal.hpp"
#include "hdecomp/family.hpp"
#include "hdecomp/generators.hpp"
#include "oracles.hpp"

using namespace hdecomp;

namespace {

Graph two_k2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

Graph k2_k1() {
    Graph g(3);
    g.add_edge(0, 1);
    return g;
}

bool family_is(const GraphFamily& f, std::vector<Graph> expected) {
    if (f.size() != expected.size()) {
        return false;
    }
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& m : f.members()) {
            found = found || are_isomorphic(m, e);
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

GraphFamily fstar(const Graph& h) { return minimal_subfamily(decomposition_family(h)); }

}  // namespace

TEST_CASE("decomposition families") {
    CHECK(family_is(decomposition_family(complete_graph(4)), {complete_graph(2)}));
    CHECK(family_is(decomposition_family(named_graph("bowtie")), {two_k2(), path_graph(3)}));
    CHECK(family_is(decomposition_family(named_graph("k222")), {cycle_graph(4)}));
    CHECK_THROWS_AS(decomposition_family(cycle_graph(4)), DomainError);
    CHECK_THROWS_AS(decomposition_family(path_graph(3)), DomainError);
}

TEST_CASE("family members keep isolated vertices") {
    // C5 minus one class of a 2+2+1 colouring: the kept classes have 4 vertices
    const auto c5 = decomposition_family(cycle_graph(5));
    for (const auto& m : c5.members()) {
        CHECK(m.order() >= 3);
    }
    const auto f = decomposition_family(complete_graph(5));
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0].order() == 2);
}

TEST_CASE("minimal subfamilies") {
    const GraphFamily a({path_graph(4), k2_k1()}, false, "test");
    CHECK(family_is(minimal_subfamily(a), {k2_k1()}));
    const GraphFamily b({two_k2(), path_graph(3)}, false, "test");
    CHECK(family_is(minimal_subfamily(b), {two_k2(), path_graph(3)}));
    const GraphFamily c({cycle_graph(4)}, false, "test");
    CHECK(minimal_subfamily(c).size() == 1);
    CHECK(minimal_subfamily(c).minimal());
}

TEST_CASE("a minimal family rejects contained members") {
    CHECK_THROWS(GraphFamily({path_graph(4), k2_k1()}, true, "bad"));
    CHECK_THROWS(GraphFamily({cycle_graph(4), cycle_graph(4)}, false, "dup"));
}

TEST_CASE("minimal subfamily covers every member") {
    for (const char* name : {"k3", "k4", "c5", "c7", "bowtie", "k222"}) {
        const auto full = decomposition_family(named_graph(name));
        const auto star = minimal_subfamily(full);
        for (const auto& m : full.members()) {
            bool covered = false;
            for (const auto& s : star.members()) {
                covered = covered || oracle::contains(m, s);
            }
            CHECK_MESSAGE(covered, name);
        }
        for (const auto& a : star.members()) {
            for (const auto& b : star.members()) {
                if (&a != &b) {
                    CHECK_FALSE(oracle::contains(a, b));
                }
            }
        }
    }
}

TEST_CASE("family realizations rebuild H") {
    const Graph h = named_graph("bowtie");
    const auto family = decomposition_family(h);
    for (const auto& m : family.members()) {
        const auto rs = family_realizations(h, m);
        REQUIRE_FALSE(rs.empty());
        for (const auto& r : rs) {
            REQUIRE(r.h_vertex.size() == static_cast<std::size_t>(m.order()));
            for (const auto& e : m.edges()) {
                CHECK(h.has_edge(r.h_vertex[e.u], r.h_vertex[e.v]));
            }
        }
    }
}

TEST_CASE("chromatic excess and edge criticality") {
    CHECK(chromatic_excess(complete_graph(3)) == 1);
    CHECK(chromatic_excess(cycle_graph(5)) == 1);
    CHECK(chromatic_excess(named_graph("k222")) == 2);
    CHECK(is_edge_critical(complete_graph(4)));
    CHECK(is_edge_critical(cycle_graph(5)));
    CHECK_FALSE(is_edge_critical(named_graph("bowtie")));
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph h = random_graph(6, 0.55, 900 + s);
        if (oracle::chromatic_number(h) < 3) {
            continue;
        }
        CHECK(chromatic_excess(h) == oracle::chromatic_excess(h));
        CHECK(is_edge_critical(h) == oracle::edge_critical(h));
    }
}

TEST_CASE("family files round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "hdecomp_family_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "bowtie.g6").string();
    const auto star = fstar(named_graph("bowtie"));
    write_family_files(star, path);
    const auto back = read_family_files(path);
    CHECK(back.key() == star.key());
    CHECK(back.minimal());
    std::filesystem::remove_all(dir);
}

TEST_CASE("turan numbers") {
    CHECK(turan_number(5, 3) == 6);
    CHECK(turan_number(6, 3) == 9);
    CHECK(turan_number(7, 4) == 16);
    for (int n = 1; n <= 20; ++n) {
        for (int r = 2; r <= 6; ++r) {
            CHECK(turan_number(n, r) == oracle::turan_edges(n, r - 1));
        }
    }
}

TEST_CASE("extremal numbers") {
    const GraphFamily one({k2_k1()}, true, "k2+k1");
    CHECK(extremal_number(3, one).value == 0);
    const GraphFamily c4({cycle_graph(4)}, true, "c4");
    const auto r4 = extremal_number(4, c4);
    CHECK(r4.value == 4);
    CHECK(r4.exact());
    CHECK(r4.witness.size() == 4);
    CHECK_FALSE(contains_subgraph(r4.witness, cycle_graph(4)));
    Graph paw = complete_graph(3);
    paw = disjoint_union(paw, empty_graph(1));
    paw.add_edge(0, 3);
    CHECK(are_isomorphic(r4.witness, paw));
    const GraphFamily pair({two_k2(), path_graph(3)}, true, "bowtie*");
    for (int n = 2; n <= 8; ++n) {
        CHECK(extremal_number(n, pair).value == 1);
    }
}

TEST_CASE("ex(n, C4) matches the oracle and known values") {
    const GraphFamily c4({cycle_graph(4)}, true, "c4");
    const std::size_t known[] = {0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 16};
    for (int n = 1; n <= 10; ++n) {
        const auto r = extremal_number(n, c4);
        CHECK(r.exact());
        CHECK(r.value == known[n]);
        CHECK(r.witness.size() == r.value);
        if (n <= 7) {
            CHECK(r.value == oracle::ex_c4(n));
        }
    }
}

TEST_CASE("extremal numbers agree with the labelled oracle") {
    const std::vector<std::vector<Graph>> families{
        {complete_graph(3)}, {path_graph(3)}, {two_k2()}, {cycle_graph(4), complete_graph(3)}, {star_graph(3)},
        {path_graph(4)}};
    for (const auto& f : families) {
        const GraphFamily fam(f, false, "test");
        for (int n = 1; n <= 6; ++n) {
            CHECK(extremal_number(n, fam).value == oracle::ex_labeled(n, f));
        }
    }
}

TEST_CASE("biex examples") {
    for (int n = 3; n <= 12; ++n) {
        const auto r = biex(n, complete_graph(4));
        CHECK(r.value == 0);
        CHECK(r.exact());
    }
    CHECK(biex(6, named_graph("k222")).value == 7);
    CHECK(biex(8, named_graph("k222")).value == 11);
}

TEST_CASE("budget exhaustion gives a lower bound, never a wrong exact") {
    const GraphFamily c4({cycle_graph(4)}, true, "c4");
    ExtremalOptions o;
    o.budget = 3;
    const auto r = extremal_number(9, c4, o);
    CHECK_FALSE(r.exact());
    CHECK(r.value <= 13);
    CHECK_FALSE(contains_subgraph(r.witness, cycle_graph(4)));
}

TEST_CASE("above the enumeration cap a local search bound is reported") {
    const GraphFamily c4({cycle_graph(4)}, true, "c4");
    const auto r = extremal_number(14, c4);
    CHECK_FALSE(r.exact());
    CHECK(r.witness.order() == 14);
    CHECK(r.witness.size() == r.value);
    CHECK_FALSE(contains_subgraph(r.witness, cycle_graph(4)));
    // a one-edge member settles the value at any order
    const auto k4 = biex(40, complete_graph(4));
    CHECK(k4.exact());
    CHECK(k4.value == 0);
}

TEST_CASE("extremal cache persists records") {
    const auto path = (std::filesystem::temp_directory_path() / "hdecomp_cache_test.jsonl").string();
    std::filesystem::remove(path);
    const GraphFamily c4({cycle_graph(4)}, true, "c4");
    {
        ExtremalCache cache(path);
        ExtremalOptions o;
        o.cache = &cache;
        CHECK(extremal_number(7, c4, o).value == 9);
    }
    ExtremalCache reloaded(path);
    const auto hit = reloaded.lookup(7, c4.key());
    REQUIRE(hit.has_value());
    CHECK(hit->value == 9);
    CHECK(hit->exact());
    const auto line = to_json_line(*hit);
    CHECK(record_from_json_line(line).value == 9);
    std::filesystem::remove(path);
}

TEST_CASE("biex and sigma fact") {
    const auto a = check_fact_biex_sigma(complete_graph(4), 6);
    CHECK(a.biex_value == 0);
    CHECK(a.sigma == 1);
    CHECK(a.consistent);
    const auto b = check_fact_biex_sigma(named_graph("k222"), 6);
    CHECK(b.biex_value == 7);
    CHECK(b.sigma == 2);
    CHECK(b.consistent);
    const auto c = check_fact_biex_sigma(named_graph("bowtie"), 6);
    CHECK(c.biex_value == 1);
    CHECK(c.sigma == 1);
    CHECK(c.consistent);
}
