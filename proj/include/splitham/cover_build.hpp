#pragma once

#include <cstdint>

#include "splitham/cover.hpp"
#include "splitham/graph.hpp"
#include "splitham/split.hpp"

namespace splitham {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Builds a pseudo I-cover by choosing, for every I-vertex, an unordered pair of
// its S-neighbors such that the multigraph of chosen pairs on S has maximum
// degree 2 (components are then paths and cycles, which lift to alternating
// paths and cycles).  Backtracking, most-constrained vertex first, pairs that
// do not close a cycle tried first.  Throws ExistenceFailure when no assignment
// exists: under the hypotheses (3-connected, K_{1,4}-free split) that would be
// a counterexample candidate or a precondition breach.
PseudoICover build_pseudo_icover(const Graph& g, const SplitPartition& p,
                                 std::uint64_t budget = kDefaultSearchBudget);

// Same search, but exhaustive and minimizing the number of cycles (h_2).
PseudoICover build_pseudo_icover_min_cycles(const Graph& g, const SplitPartition& p,
                                            std::uint64_t budget = kDefaultSearchBudget);

// Cycle-opening surgery.  x is an I-vertex on the indexed cycle, y an S-vertex
// off it with xy an edge.  If y lies outside the cover, the cycle becomes the
// path y x ... (cycle walked from x, dropping the edge from x to its stored
// predecessor); if y is an endpoint of a cover path, cycle and path merge into
// one path on the union of their vertex sets.  h_2 drops by exactly one.
// Any unmet precondition throws IllegalSurgery.
PseudoICover open_cycle_with_outside_vertex(const Graph& g, const SplitPartition& p,
                                            const PseudoICover& q, int cycle_index, int x, int y);

// I-cover via pseudo cover + repeated cycle opening (lowest enabled move
// first), falling back to an exhaustive acyclic assignment search.  Throws
// ExistenceFailure when the exhaustive search proves none exists (on a graph
// meeting the Lemma hypotheses: counterexample candidate, escalate) and
// BudgetExceeded when the node cap is hit.
ICover build_icover(const Graph& g, const SplitPartition& p,
                    std::uint64_t budget = kDefaultSearchBudget);

// Transforms a valid I-cover into one whose path lengths all lie in [2,6],
// guided by the two moves of the length-bounding argument: (i) split a path at
// an I-vertex with a neighbor outside the cover, (ii) exchange segments
// between a long path and another path reachable through a cross edge.  Local
// search improves (h, -t_1, -count of longest) lexicographically while any
// path exceeds length 6; falls back to an exhaustive search over assignments
// whose multigraph components have at most 3 edges.  A cover already within
// bounds is returned unchanged.
ICover bound_lengths(const Graph& g, const SplitPartition& p, const ICover& c,
                     std::uint64_t budget = kDefaultSearchBudget);

}  // namespace splitham
