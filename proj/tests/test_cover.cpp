#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "splitham/assignment.hpp"
#include "splitham/cover_build.hpp"
#include "splitham/errors.hpp"
#include "splitham/generate.hpp"
#include "splitham/patterns.hpp"
#include "splitham/verify.hpp"

using namespace splitham;

namespace {

SplitPartition naive_partition(int s, int n) {
    SplitPartition p;
    for (int v = 0; v < s; ++v) p.clique.push_back(v);
    for (int v = s; v < n; ++v) p.independent.push_back(v);
    return p;
}

// Clique {0..3}; I-vertices 4 and 5 both attached exactly to {0,1}, forcing the
// alternating 4-cycle 0 4 1 5 in every pair assignment.
Graph forced_cycle_graph() {
    Graph g(6);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
    for (int b : {4, 5}) {
        g.add_edge(b, 0);
        g.add_edge(b, 1);
    }
    return g;
}

std::set<int> vertex_set(const PseudoICover& q) {
    std::set<int> out;
    for (const auto& p : q.paths) out.insert(p.seq.begin(), p.seq.end());
    for (const auto& c : q.cycles) out.insert(c.seq.begin(), c.seq.end());
    return out;
}

}  // namespace

TEST_CASE("validators accept good covers and reject bad ones") {
    Graph g = gen_family_complete_split(5, 3);
    SplitPartition p = naive_partition(5, 8);
    REQUIRE(!partition_violation(g, p).has_value());

    AlternatingPath ok{{0, 5, 1}};
    CHECK(!path_violation(g, p, ok).has_value());
    CHECK(path_violation(g, p, AlternatingPath{{0, 5}}).has_value());      // even length
    CHECK(path_violation(g, p, AlternatingPath{{0, 1, 2}}).has_value());   // no I-vertex
    CHECK(path_violation(g, p, AlternatingPath{{5, 0, 6}}).has_value());   // starts in I
    CHECK(path_violation(g, p, AlternatingPath{{0, 5, 0}}).has_value());   // repeated vertex

    AlternatingCycle cyc{{0, 5, 1, 6}};
    CHECK(!cycle_violation(g, p, cyc).has_value());
    CHECK(cycle_violation(g, p, AlternatingCycle{{0, 5, 1}}).has_value());  // odd

    // Coverage: I = {5,6,7} all have to appear.
    PseudoICover part_cover{{AlternatingPath{{0, 5, 1, 6, 2}}}, {}};
    CHECK(cover_violation(g, p, part_cover).has_value());
    PseudoICover full_cover{{AlternatingPath{{0, 5, 1, 6, 2, 7, 3}}}, {}};
    CHECK(!cover_violation(g, p, full_cover).has_value());
    // Disjointness.
    PseudoICover overlapping{{AlternatingPath{{0, 5, 1, 6, 2}}, AlternatingPath{{2, 7, 3}}}, {}};
    CHECK(cover_violation(g, p, overlapping).has_value());
}

TEST_CASE("pseudo I-cover on the fully joined complete split fixture") {
    Graph g = gen_family_complete_split(5, 3);
    SplitPartition p = naive_partition(5, 8);
    PseudoICover q = build_pseudo_icover(g, p);
    CHECK(!cover_violation(g, p, q).has_value());
    CoverStats st = cover_stats(q);
    CHECK(st.path_count == 1);
    CHECK(st.cycle_count == 0);
    // Deterministic output of the tiered backtracking order.
    REQUIRE(q.paths.size() == 1);
    CHECK(q.paths[0].seq == std::vector<int>{2, 6, 0, 5, 1, 7, 3});
}

TEST_CASE("pseudo I-cover with an unavoidable cycle") {
    Graph g = forced_cycle_graph();
    SplitPartition p = naive_partition(4, 6);
    PseudoICover q = build_pseudo_icover(g, p);
    CHECK(!cover_violation(g, p, q).has_value());
    REQUIRE(q.cycles.size() == 1);
    CHECK(q.paths.empty());
    CHECK(q.cycles[0].seq == std::vector<int>{0, 4, 1, 5});
    // Both I-vertices have {0,1} as their only pair, so no acyclic assignment
    // exists and the I-cover builder must report the failure.
    CHECK_THROWS_AS(build_icover(g, p), ExistenceFailure);
}

TEST_CASE("empty independent side yields empty covers") {
    Graph g = gen_family_complete_split(4, 0);
    SplitPartition p = naive_partition(4, 4);
    PseudoICover q = build_pseudo_icover(g, p);
    CHECK(q.paths.empty());
    CHECK(q.cycles.empty());
    ICover c = build_icover(g, p);
    CHECK(c.paths.empty());
    CHECK(bound_lengths(g, p, c).paths.empty());
}

TEST_CASE("cycle opening, case a: outside vertex absorbs the cycle") {
    Graph g(6);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
    for (int b : {4, 5}) {
        g.add_edge(b, 0);
        g.add_edge(b, 1);
    }
    g.add_edge(4, 2);  // y = 2 reaches the cycle at I-vertex 4
    SplitPartition p = naive_partition(4, 6);
    PseudoICover q{{}, {AlternatingCycle{{0, 4, 1, 5}}}};
    REQUIRE(!cover_violation(g, p, q).has_value());

    PseudoICover r = open_cycle_with_outside_vertex(g, p, q, 0, 4, 2);
    CHECK(!cover_violation(g, p, r).has_value());
    CHECK(r.cycles.empty());
    REQUIRE(r.paths.size() == 1);
    CHECK(r.paths[0].seq == std::vector<int>{0, 5, 1, 4, 2});
    // Conservation: exactly V(C) plus {y}.
    CHECK(vertex_set(r) == std::set<int>{0, 1, 2, 4, 5});
}

TEST_CASE("cycle opening, case b: merge with a path through its endpoint") {
    Graph g(7);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
    for (int b : {4, 5}) {
        g.add_edge(b, 0);
        g.add_edge(b, 1);
    }
    g.add_edge(4, 2);
    g.add_edge(6, 2);
    g.add_edge(6, 3);
    SplitPartition p = naive_partition(4, 7);
    PseudoICover q{{AlternatingPath{{2, 6, 3}}}, {AlternatingCycle{{0, 4, 1, 5}}}};
    REQUIRE(!cover_violation(g, p, q).has_value());

    PseudoICover r = open_cycle_with_outside_vertex(g, p, q, 0, 4, 2);
    CHECK(!cover_violation(g, p, r).has_value());
    CHECK(r.cycles.empty());
    REQUIRE(r.paths.size() == 1);
    CHECK(r.paths[0].seq == std::vector<int>{0, 5, 1, 4, 2, 6, 3});
    CHECK(vertex_set(r) == std::set<int>{0, 1, 2, 3, 4, 5, 6});

    SUBCASE("illegal surgeries are rejected") {
        CHECK_THROWS_AS(open_cycle_with_outside_vertex(g, p, q, 0, 4, 1), IllegalSurgery);  // y on cycle
        CHECK_THROWS_AS(open_cycle_with_outside_vertex(g, p, q, 0, 5, 2), IllegalSurgery);  // no edge 5-2
        CHECK_THROWS_AS(open_cycle_with_outside_vertex(g, p, q, 1, 4, 2), IllegalSurgery);  // bad index
        CHECK_THROWS_AS(open_cycle_with_outside_vertex(g, p, q, 0, 0, 2), IllegalSurgery);  // x not I
        CHECK_THROWS_AS(open_cycle_with_outside_vertex(g, p, q, 0, 4, 6), IllegalSurgery);  // y not S
    }
}

TEST_CASE("cycle opening conserves vertices and drops h2 by one") {
    // Synthesize pseudo covers with a forced 2-cycle inside fully joined
    // complete split graphs, then apply every legal opening move.
    Rng rng(777);
    int applied = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int s = 6 + static_cast<int>(rng.below(4));
        Graph g = gen_family_complete_split(s, 3);
        SplitPartition p = naive_partition(s, s + 3);
        // b0, b1 form the cycle on S-vertices {0,1}; b2 rides a separate path.
        PseudoICover q{{AlternatingPath{{2, s + 2, 3}}},
                       {AlternatingCycle{{0, s, 1, s + 1}}}};
        REQUIRE(!cover_violation(g, p, q).has_value());
        std::set<int> before = vertex_set(q);

        for (int x : {s, s + 1}) {
            for (int y = 0; y < s; ++y) {
                if (y == 0 || y == 1) {  // on the cycle
                    CHECK_THROWS_AS(open_cycle_with_outside_vertex(g, p, q, 0, x, y),
                                    IllegalSurgery);
                    continue;
                }
                // Every other y is a path endpoint (2, 3) or outside the cover.
                PseudoICover r = open_cycle_with_outside_vertex(g, p, q, 0, x, y);
                ++applied;
                CHECK(!cover_violation(g, p, r).has_value());
                CHECK(r.cycles.size() == q.cycles.size() - 1);
                std::set<int> expect = before;
                bool merged = (y == 2 || y == 3);  // endpoints of the cover path
                if (!merged) expect.insert(y);
                CHECK(vertex_set(r) == expect);
                CHECK(r.paths.size() == (merged ? q.paths.size() : q.paths.size() + 1));
            }
        }
    }
    CHECK(applied > 200);
}

TEST_CASE("I-cover on the ten-clique family fixture") {
    Graph g = gen_family_complete_split(10, 3);
    SplitPartition p = naive_partition(10, 13);
    ICover c = build_icover(g, p);
    CHECK(!cover_violation(g, p, c).has_value());
    REQUIRE(c.paths.size() == 1);
    CHECK(c.paths[0].length() == 6);

    // The maximum-clique partition absorbs one joined vertex; the cover then
    // holds the remaining two I-vertices.
    auto canonical = split_partition(g);
    REQUIRE(canonical.has_value());
    ICover c2 = build_icover(g, *canonical);
    CHECK(!cover_violation(g, *canonical, c2).has_value());
}

TEST_CASE("cover stats") {
    // One path s0 b0 s1 b1 s2: End {s0,s2}, Inn {s1}, lengths [4].
    CoverStats st = cover_stats(ICover{{AlternatingPath{{0, 5, 1, 6, 2}}}});
    CHECK(st.path_count == 1);
    CHECK(st.lengths == std::vector<int>{4});
    CHECK(st.end_vertices == std::vector<int>{0, 2});
    CHECK(st.inner_clique == std::vector<int>{1});

    CoverStats empty = cover_stats(ICover{});
    CHECK(empty.path_count == 0);
    CHECK(empty.lengths.empty());
    CHECK(empty.end_vertices.empty());
    CHECK(empty.inner_clique.empty());

    CoverStats two = cover_stats(ICover{{AlternatingPath{{0, 5, 1}}, AlternatingPath{{2, 6, 3}}}});
    CHECK(two.path_count == 2);
    CHECK(two.inner_clique.empty());
    CHECK(two.lengths == std::vector<int>{2, 2});
}

TEST_CASE("length bounding: within-bound cover is returned unchanged") {
    Graph g(10);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) g.add_edge(a, b);
    g.add_edge(7, 0);
    g.add_edge(7, 1);
    g.add_edge(8, 1);
    g.add_edge(8, 2);
    g.add_edge(8, 5);  // an outside split point exists but must not be used
    g.add_edge(9, 2);
    g.add_edge(9, 3);
    SplitPartition p = naive_partition(7, 10);
    ICover c{{AlternatingPath{{0, 7, 1, 8, 2, 9, 3}}}};
    REQUIRE(!cover_violation(g, p, c).has_value());
    ICover out = bound_lengths(g, p, c);
    REQUIRE(out.paths.size() == 1);
    CHECK(out.paths[0].seq == c.paths[0].seq);
}

TEST_CASE("length bounding splits a length-8 path at its outside neighbor") {
    Graph g(11);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) g.add_edge(a, b);
    g.add_edge(7, 0);
    g.add_edge(7, 1);
    g.add_edge(8, 1);
    g.add_edge(8, 2);
    g.add_edge(8, 5);  // S_2 neighbor at the middle I-vertex
    g.add_edge(9, 2);
    g.add_edge(9, 3);
    g.add_edge(10, 3);
    g.add_edge(10, 4);
    SplitPartition p = naive_partition(7, 11);
    ICover c{{AlternatingPath{{0, 7, 1, 8, 2, 9, 3, 10, 4}}}};
    REQUIRE(!cover_violation(g, p, c).has_value());
    ICover out = bound_lengths(g, p, c);
    CHECK(!cover_violation(g, p, out).has_value());
    std::multiset<int> lengths;
    for (const auto& path : out.paths) lengths.insert(path.length());
    CHECK(lengths == std::multiset<int>{4, 4});
}

TEST_CASE("length bounding exchanges segments when no outside vertex exists") {
    // Clique {0..6} fully consumed by the cover, so splitting is impossible;
    // the only way down from length 8 is the cross edge 8-5 into the short
    // path [5, 11, 6].
    Graph g(12);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) g.add_edge(a, b);
    int path1[] = {0, 7, 1, 8, 2, 9, 3, 10, 4};
    for (int i = 0; i + 1 < 9; ++i) g.add_edge(path1[i], path1[i + 1]);
    g.add_edge(5, 11);
    g.add_edge(11, 6);
    g.add_edge(8, 5);  // cross edge
    SplitPartition p = naive_partition(7, 12);
    ICover c{{AlternatingPath{{0, 7, 1, 8, 2, 9, 3, 10, 4}}, AlternatingPath{{5, 11, 6}}}};
    REQUIRE(!cover_violation(g, p, c).has_value());
    REQUIRE(outside_clique_vertices(p, c).empty());

    ICover out = bound_lengths(g, p, c);
    CHECK(!cover_violation(g, p, out).has_value());
    std::multiset<int> lengths;
    for (const auto& path : out.paths) lengths.insert(path.length());
    CHECK(lengths == std::multiset<int>{4, 6});
}

TEST_CASE("exhaustive small-order sweep: qualifying graphs always have I-covers") {
    // Subsample of the Lemma sweep at n = 9 (full range runs in acceptance).
    int qualifying = 0;
    VerifyOptions opts;
    EnumOptions enum_opt;
    enum_opt.min_row_degree = 3;
    enum_opt.max_col_degree = 3;
    for (int s = 5; s <= 6; ++s) {
        enumerate_split_labeled(9, s, enum_opt, [&](const Graph& g) {
            Hypotheses h = check_hypotheses(g, 3, 9);
            if (!h.all()) return true;
            ++qualifying;
            auto p = split_partition(g);
            ICover c = build_icover(g, *p);
            CHECK(!cover_violation(g, *p, c).has_value());
            PseudoICover mc = build_pseudo_icover_min_cycles(g, *p);
            CHECK(static_cast<int>(mc.cycles.size()) <= 2);
            return qualifying < 400;
        });
    }
    CHECK(qualifying > 50);
}

TEST_CASE("assignment round-trip through covers") {
    Graph g = gen_family_complete_split(10, 3);
    SplitPartition p = naive_partition(10, 13);
    ICover c = build_icover(g, p);
    PairAssignment asg = to_assignment(p, c);
    ICover back = icover_from_assignment(p, asg);
    REQUIRE(back.paths.size() == c.paths.size());
    for (size_t i = 0; i < c.paths.size(); ++i) CHECK(back.paths[i].seq == c.paths[i].seq);
}
