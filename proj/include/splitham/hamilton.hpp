#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splitham/cover.hpp"
#include "splitham/cover_build.hpp"
#include "splitham/graph.hpp"
#include "splitham/split.hpp"

namespace splitham {

// Explicit vertex sequence claimed to be a Hamiltonian (u,v)-path.
struct HamPathCertificate {
    std::vector<int> seq;
};

// Trust anchor: true iff seq is a permutation of V(G) whose consecutive
// vertices are adjacent, with endpoints u and v.  Deliberately independent of
// every constructor in this library.
bool verify_certificate(const Graph& g, const HamPathCertificate& cert, int u, int v);

// Hamiltonian (u,v)-path from an I-cover.  Hypotheses (checked): u != v; u, v
// not interior S-vertices of the cover; u, v not the two endpoints of one same
// cover path.  Construction: a path holding u (or v) as an interior I-vertex
// is cut there; each terminal chain is walked outward; all remaining paths are
// chained endpoint-to-endpoint through clique edges in ascending order with
// every uncovered S-vertex spliced in between.  The result is gated through
// verify_certificate; a gate failure throws ConstructionFailure.
HamPathCertificate ham_path_from_icover(const Graph& g, const SplitPartition& p, const ICover& c,
                                        int u, int v);

// I-cover usable by ham_path_from_icover for the pair (u, v): neither endpoint
// interior, not the endpoint pair of a single path.  Starts from
// bound_lengths(build_icover(...)), then local edge-swap search (reattach one
// I-vertex to another S-neighbor) driving u and v out of the path interiors,
// then an exhaustive assignment search with the avoidance constraints.
// Exhaustion means no such cover exists: counterexample candidate, escalated
// as ExistenceFailure.
ICover build_icover_avoiding(const Graph& g, const SplitPartition& p, int u, int v,
                             std::uint64_t budget = kDefaultSearchBudget);

// Same, but local search starts from a caller-supplied valid I-cover (shared
// across the pairs of one graph).
ICover build_icover_avoiding(const Graph& g, const SplitPartition& p, const ICover& base, int u,
                             int v, std::uint64_t budget = kDefaultSearchBudget);

struct HamiltonOracleReport {
    bool connected = false;                          // Hamilton-connected
    std::vector<std::pair<int, int>> failing_pairs;  // unordered pairs u < v
};

inline constexpr int kDefaultOracleCap = 22;

// Exact ground truth via subset dynamic programming over (vertex set, last
// vertex) states seeded at each start vertex.  Independent of the constructive
// pipeline.  Throws OrderCapExceeded above the cap.
HamiltonOracleReport hamilton_connected_oracle(const Graph& g, int order_cap = kDefaultOracleCap);

// Single-pair variant: exact answer whether a Hamiltonian (u,v)-path exists.
bool ham_path_exists_oracle(const Graph& g, int u, int v, int order_cap = kDefaultOracleCap);

}  // namespace splitham
