#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitham/graph.hpp"

namespace splitham {

// Split partition (S, I): S a clique, I independent, S + I = V.  The partition
// returned by split_partition additionally has |S| equal to the maximum clique
// size and is the lexicographically smallest such clique.
struct SplitPartition {
    std::vector<int> clique;       // S, sorted ascending
    std::vector<int> independent;  // I, sorted ascending

    bool in_clique(int v) const;
};

// Recognition is by the degree-sequence characterization (zero splittance):
// with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1}, the graph is
// split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, in which case the maximum
// clique size equals m.  The clique itself is assembled from the forced
// vertices {v : deg(v) >= m} plus the lex-first consistent choice among
// degree-(m-1) vertices, then checked.
std::optional<SplitPartition> split_partition(const Graph& g);

// Structural validity: partition of V, S a clique, I independent.  When
// require_maximum is set, |S| must also equal the maximum clique size.
// Returns an explanation of the first violation, or nullopt if valid.
std::optional<std::string> partition_violation(const Graph& g, const SplitPartition& p,
                                               bool require_maximum = false);

// Encodes the deduction "kappa(G) >= k implies |S| >= k+1" as a runtime check.
// Preconditions: p = split_partition(g), is_k_connected(g, k), |I| > 0.
// Returns true; a violation throws InvariantViolation (an implementation bug).
bool assert_connectivity_clique_bound(const Graph& g, const SplitPartition& p, int k);

}  // namespace splitham
