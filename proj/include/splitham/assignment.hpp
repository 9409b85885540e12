#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "splitham/cover.hpp"
#include "splitham/graph.hpp"
#include "splitham/split.hpp"

namespace splitham {

// Internal model behind every cover construction: each I-vertex picks an
// unordered pair of its S-neighbors, and the chosen pairs form a multigraph on
// S.  Maximum degree 2 makes the components paths and cycles, which lift to
// the alternating paths and cycles of a pseudo I-cover; acyclic assignments
// are exactly the I-covers.  pair_of is indexed by position in the sorted
// independent list, pairs stored with the smaller vertex first.
struct PairAssignment {
    std::vector<std::pair<int, int>> pair_of;
};

PairAssignment to_assignment(const SplitPartition& p, const PseudoICover& q);
PseudoICover from_assignment(const SplitPartition& p, const PairAssignment& asg);
ICover icover_from_assignment(const SplitPartition& p, const PairAssignment& asg);

inline PairAssignment to_assignment(const SplitPartition& p, const ICover& c) {
    return to_assignment(p, PseudoICover{c.paths, {}});
}

struct AssignmentConstraints {
    bool forbid_cycles = false;    // multigraph must stay a forest of paths
    int max_component_edges = 0;   // cap per path component when > 0
    int degree_one_a = -1;         // S-vertex whose multigraph degree stays <= 1
    int degree_one_b = -1;
    bool forbid_pair_path = false;  // a and b must not be endpoints of one path
};

// First assignment satisfying the constraints in deterministic search order
// (most-constrained I-vertex first, non-cycle-closing pairs first, pairs in
// lexicographic order), or nullopt when none exists.  Throws BudgetExceeded
// past the node cap.
std::optional<PairAssignment> search_assignment(const Graph& g, const SplitPartition& p,
                                                const AssignmentConstraints& cfg,
                                                std::uint64_t budget);

// Exhaustive branch-and-bound minimizing the number of multigraph cycles.
std::optional<PairAssignment> search_assignment_min_cycles(const Graph& g,
                                                           const SplitPartition& p,
                                                           std::uint64_t budget);

}  // namespace splitham
