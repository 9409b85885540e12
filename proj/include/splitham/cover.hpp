#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitham/graph.hpp"
#include "splitham/split.hpp"

namespace splitham {

// (S,I)-alternating path a_1 b_1 a_2 ... a_{t+1}: odd positions in S, even
// positions in I, endpoints distinct S-vertices, consecutive vertices adjacent,
// at least one I-vertex (length >= 2 edges).  Stored with the smaller endpoint
// first (canonical orientation).
struct AlternatingPath {
    std::vector<int> seq;

    int length() const { return static_cast<int>(seq.size()) - 1; }
    int first() const { return seq.front(); }
    int last() const { return seq.back(); }
};

// (S,I)-alternating cycle a_1 b_1 ... a_k b_k (closed, k >= 2).  Stored
// starting at the smallest S-vertex, stepping first to its smaller I-neighbor.
struct AlternatingCycle {
    std::vector<int> seq;  // even length, alternating S/I, cyclically closed

    int half_length() const { return static_cast<int>(seq.size()) / 2; }
};

// Pseudo I-cover: vertex-disjoint alternating paths and cycles whose path
// interiors and cycle vertex sets jointly contain all of I (conditions (C),(D)).
struct PseudoICover {
    std::vector<AlternatingPath> paths;
    std::vector<AlternatingCycle> cycles;
};

// I-cover: vertex-disjoint alternating paths whose interiors contain all of I
// (conditions (A),(B)).
struct ICover {
    std::vector<AlternatingPath> paths;
};

struct CoverStats {
    int path_count = 0;                // h (or h_1)
    int cycle_count = 0;               // h_2 (0 for an ICover)
    std::vector<int> lengths;          // path lengths t_i, in cover order
    std::vector<int> end_vertices;     // End: all path endpoints, sorted
    std::vector<int> inner_clique;     // Inn: interior S-vertices of paths, sorted
};

// Validators re-derive every structural invariant from the graph + partition.
// They return a description of the first violation, or nullopt when valid.
std::optional<std::string> path_violation(const Graph& g, const SplitPartition& p,
                                          const AlternatingPath& path);
std::optional<std::string> cycle_violation(const Graph& g, const SplitPartition& p,
                                           const AlternatingCycle& cycle);
std::optional<std::string> cover_violation(const Graph& g, const SplitPartition& p,
                                           const PseudoICover& q);
std::optional<std::string> cover_violation(const Graph& g, const SplitPartition& p,
                                           const ICover& c);

CoverStats cover_stats(const ICover& c);
CoverStats cover_stats(const PseudoICover& q);

// Clique vertices outside every cover element (S_2).
std::vector<int> outside_clique_vertices(const SplitPartition& p, const PseudoICover& q);
std::vector<int> outside_clique_vertices(const SplitPartition& p, const ICover& c);

}  // namespace splitham
