#include "doctest.h"
#include "oracles.hpp"
#include "splitham/config_patterns.hpp"
#include "splitham/generate.hpp"
#include "splitham/patterns.hpp"

using namespace splitham;

namespace {

// The two-center configuration: clique {0,1}, I-vertices 2..6 wired
// u=0 -> {2,3,4}, v=1 -> {5,6}.
Graph config_a_graph() {
    Graph g(7);
    g.add_edge(0, 1);
    for (int b : {2, 3, 4}) g.add_edge(0, b);
    for (int b : {5, 6}) g.add_edge(1, b);
    return g;
}

// Three centers {0,1,2} with two private I-leaves each.
Graph config_b_graph() {
    Graph g(9);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    g.add_edge(1, 6);
    g.add_edge(2, 7);
    g.add_edge(2, 8);
    return g;
}

}  // namespace

TEST_CASE("config A detected on its defining graph") {
    Graph g = config_a_graph();
    auto p = split_partition(g);
    REQUIRE(p.has_value());
    REQUIRE(p->clique == std::vector<int>{0, 1});
    auto w = find_config_A(g, *p);
    REQUIRE(w.has_value());
    CHECK(w->centers == std::vector<int>{0, 1});
    CHECK(w->leaves == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(config_witness_valid(g, *p, *w));
}

TEST_CASE("config B detected on its defining graph") {
    Graph g = config_b_graph();
    auto p = split_partition(g);
    REQUIRE(p.has_value());
    auto w = find_config_B(g, *p);
    REQUIRE(w.has_value());
    CHECK(w->centers == std::vector<int>{0, 1, 2});
    CHECK(w->leaves == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(config_witness_valid(g, *p, *w));
}

TEST_CASE("too few I-vertices: pigeonhole rules both configs out") {
    Graph g = gen_family_complete_split(5, 3);
    auto p = split_partition(g);
    REQUIRE(p.has_value());
    CHECK(!find_config_A(g, *p).has_value());  // needs 5 distinct I-vertices
    CHECK(!find_config_B(g, *p).has_value());  // needs 6
}

TEST_CASE("configs never appear on {K14,K14E}-free split graphs") {
    // The contrapositive of the two forbidden-subgraph lemmas, checked on
    // random split graphs: a witness forces an induced K14 or K14E.
    Rng rng(31337);
    GenSpec spec;
    spec.n_min = 7;
    spec.n_max = 14;
    spec.s_min = 2;
    spec.s_max = 9;
    spec.r = 1;
    int witnesses = 0, free_graphs = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        spec.edge_probability = rng.real();
        Graph g = gen_random_split(spec, rng);
        auto p = split_partition(g);
        REQUIRE(p.has_value());
        bool free = is_free(g, {PatternId::K14, PatternId::K14E});
        auto wa = find_config_A(g, *p);
        auto wb = find_config_B(g, *p);
        if (free) {
            ++free_graphs;
            CHECK(!wa.has_value());
            CHECK(!wb.has_value());
        }
        if (wa) {
            ++witnesses;
            CHECK(config_witness_valid(g, *p, *wa));
            CHECK(!free);
        }
        if (wb) {
            CHECK(config_witness_valid(g, *p, *wb));
            CHECK(!free);
        }
    }
    CHECK(free_graphs > 100);
    CHECK(witnesses > 100);
}

TEST_CASE("first-witness scan is deterministic") {
    Rng rng(31338);
    GenSpec spec;
    spec.n_min = 12;
    spec.n_max = 12;
    spec.s_min = 4;
    spec.s_max = 4;
    spec.edge_probability = 0.8;
    spec.r = 1;
    Graph g = gen_random_split(spec, rng);
    auto p = split_partition(g);
    REQUIRE(p.has_value());
    auto a1 = find_config_A(g, *p), a2 = find_config_A(g, *p);
    CHECK(a1.has_value() == a2.has_value());
    if (a1) {
        CHECK(a1->centers == a2->centers);
        CHECK(a1->leaves == a2->leaves);
    }
}
