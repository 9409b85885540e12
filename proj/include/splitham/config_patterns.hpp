#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitham/graph.hpp"
#include "splitham/split.hpp"

namespace splitham {

enum class ConfigId { A, B };

// Partition-aware forbidden configuration witness.  Subgraph containment only:
// each listed center-leaf edge must be present; non-edges are unconstrained.
//   CONFIG_A: centers (u, v) in S, leaves (a, b, c | x, y) in I,
//             edges ua, ub, uc, vx, vy   (K_{1,3} + K_{1,2} on two S-centers)
//   CONFIG_B: centers (u, v, w) in S, leaves (a, b | c, d | x, y) in I,
//             edges ua, ub, vc, vd, wx, wy   (3 K_{1,2} on three S-centers)
// On a {K14, K14E}-free split graph neither configuration can occur, so any
// witness certifies a positive find_induced(K14) or find_induced(K14E).
struct ConfigWitness {
    ConfigId config_id;
    std::vector<int> centers;  // 2 for A, 3 for B
    std::vector<int> leaves;   // 5 for A (3 then 2), 6 for B (2 per center)
};

std::optional<ConfigWitness> find_config_A(const Graph& g, const SplitPartition& p);
std::optional<ConfigWitness> find_config_B(const Graph& g, const SplitPartition& p);

bool config_witness_valid(const Graph& g, const SplitPartition& p, const ConfigWitness& w);

}  // namespace splitham
