#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitham/graph.hpp"

namespace splitham {

enum class PatternId { K13, K14, K14E };

std::string pattern_name(PatternId id);

// Witness of an induced star pattern: mapping[0] is the center, the leaves
// follow.  For K14E the two adjacent leaves come first (positions 1,2), the two
// independent leaves last.
struct PatternWitness {
    PatternId pattern_id;
    std::vector<int> mapping;
};

// First witness in lexicographic scan order (centers ascending, leaf sets
// ascending) of an induced subgraph isomorphic to the pattern, if any.
std::optional<PatternWitness> find_induced(const Graph& g, PatternId id);

// Generalized star detector used by the r-parameterized exploration mode:
// K_{1,leaves} when plus_edge is false, K_{1,leaves}+e when true.
// mapping layout matches PatternWitness (adjacent pair first when plus_edge).
std::optional<std::vector<int>> find_induced_star(const Graph& g, int leaves, bool plus_edge);

bool is_free(const Graph& g, const std::vector<PatternId>& patterns);

// Replays a witness: all mapped vertices distinct, required edges present,
// required non-edges absent (the patterns are induced).
bool witness_valid(const Graph& g, const PatternWitness& w);

}  // namespace splitham
