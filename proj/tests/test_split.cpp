#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "splitham/errors.hpp"
#include "splitham/generate.hpp"
#include "splitham/split.hpp"

using namespace splitham;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("C4 is not split") { CHECK(!split_partition(cycle(4)).has_value()); }

TEST_CASE("complete graph partitions with empty independent side") {
    auto p = split_partition(complete(3));
    REQUIRE(p.has_value());
    CHECK(p->clique == std::vector<int>{0, 1, 2});
    CHECK(p->independent.empty());
}

TEST_CASE("K_{1,3} splits into the lex-smallest maximum clique {0,1}") {
    Graph g(4);
    for (int v = 1; v <= 3; ++v) g.add_edge(0, v);
    auto p = split_partition(g);
    REQUIRE(p.has_value());
    CHECK(p->clique == std::vector<int>{0, 1});
    CHECK(p->independent == std::vector<int>{2, 3});
    CHECK(!partition_violation(g, *p, true).has_value());
}

TEST_CASE("lexicographic tie-break among maximum cliques") {
    // Path 0-1-2-3: maximum cliques {0,1},{1,2},{2,3}; only {1,2} leaves an
    // independent complement.
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    auto p = split_partition(path);
    REQUIRE(p.has_value());
    CHECK(p->clique == std::vector<int>{1, 2});

    // Triangle {0,1,2} plus vertex 3 adjacent to 0,1: both {0,1,2} and
    // {0,1,3} are valid maximum cliques; lex order picks {0,1,2}.
    Graph tie(4);
    tie.add_edge(0, 1);
    tie.add_edge(0, 2);
    tie.add_edge(1, 2);
    tie.add_edge(3, 0);
    tie.add_edge(3, 1);
    auto q = split_partition(tie);
    REQUIRE(q.has_value());
    CHECK(q->clique == std::vector<int>{0, 1, 2});
}

TEST_CASE("recognition matches brute force over all 2-colorings") {
    Rng rng(90210);
    int split_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng.below(9));
        Graph g = oracles::random_graph(rng, n, 0.2 + 0.6 * rng.real());
        auto p = split_partition(g);
        CHECK(p.has_value() == oracles::is_split_brute(g));
        if (p) {
            ++split_seen;
            CHECK(!partition_violation(g, *p).has_value());
            CHECK(static_cast<int>(p->clique.size()) == oracles::max_clique_brute(g));
        }
    }
    CHECK(split_seen > 30);  // the differential test actually exercised both sides
}

TEST_CASE("split generator output is always recognized") {
    Rng rng(90211);
    GenSpec spec;
    spec.n_min = 6;
    spec.n_max = 12;
    spec.s_min = 3;
    spec.s_max = 9;
    for (int trial = 0; trial < 200; ++trial) {
        spec.edge_probability = rng.real();
        Graph g = gen_random_split(spec, rng);
        auto p = split_partition(g);
        REQUIRE(p.has_value());
        CHECK(!partition_violation(g, *p).has_value());
    }
}

TEST_CASE("partition is deterministic") {
    Rng rng(90212);
    GenSpec spec;
    spec.n_min = spec.n_max = 10;
    spec.s_min = spec.s_max = 6;
    Graph g = gen_random_split(spec, rng);
    auto a = split_partition(g), b = split_partition(g);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->clique == b->clique);
    CHECK(a->independent == b->independent);
}

TEST_CASE("connectivity-clique bound") {
    // 4-clique joined to 3 independent vertices; the maximum clique absorbs
    // one joined vertex, so |S| = 5 >= k+1 = 4.
    Graph g = gen_family_complete_split(4, 3);
    auto p = split_partition(g);
    REQUIRE(p.has_value());
    CHECK(p->clique.size() == 5);
    CHECK(assert_connectivity_clique_bound(g, *p, 3));

    // Empty independent side violates the precondition.
    auto k5 = split_partition(complete(5));
    REQUIRE(k5.has_value());
    CHECK_THROWS_AS(assert_connectivity_clique_bound(complete(5), *k5, 3), PreconditionViolated);
}

TEST_CASE("connectivity-clique bound holds across generated qualifying graphs") {
    Rng rng(90213);
    GenSpec spec;
    spec.n_min = 9;
    spec.n_max = 13;
    spec.s_min = 6;
    spec.s_max = 10;
    spec.edge_probability = 0.7;
    int applied = 0;
    for (int trial = 0; trial < 300 && applied < 50; ++trial) {
        Graph g = gen_random_split(spec, rng);
        if (!is_k_connected(g, 3)) continue;
        auto p = split_partition(g);
        REQUIRE(p.has_value());
        if (p->independent.empty()) continue;
        CHECK(assert_connectivity_clique_bound(g, *p, 3));
        ++applied;
    }
    CHECK(applied == 50);
}
