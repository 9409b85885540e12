#pragma once

#include <cstdint>
#include <functional>

#include "splitham/graph.hpp"

namespace splitham {

// Deterministic, platform-independent stream (splitmix64).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class GenMode { Random, Exhaustive, Family };

struct GenSpec {
    GenMode mode = GenMode::Random;
    int n_min = 13, n_max = 16;      // order range (single order: n_min == n_max)
    int s_min = 0, s_max = 0;        // clique-side range; 0 means derived from n
    double edge_probability = 0.5;   // per I-to-S edge
    std::uint64_t seed = 1;
    int r = 3;                       // top-up minimum degree for I-vertices
    std::uint64_t count = 1;         // graphs to produce in random mode

    void validate() const;  // throws InvalidSpec
};

// Random split graph: clique on {0..s-1}, independent vertices s..n-1 with
// neighborhoods sampled from S at edge_probability, then topped up with
// uniformly chosen missing S-neighbors until each I-vertex has degree
// min(r, s).  Split by construction; byte-deterministic under the seed.
Graph gen_random_split(GenSpec spec, Rng& rng);

struct EnumOptions {
    int min_row_degree = 0;   // filter pushdown: every I-vertex degree >= this
    int max_col_degree = -1;  // filter pushdown: every S-vertex <= this I-neighbors
};

// All labeled split graphs with clique side {0..s-1} and independent side of
// size n-s, enumerated as I-to-S incidence matrices with both row and column
// symmetry pruned (rows non-increasing as bit strings, columns non-increasing
// as bit vectors).  Every isomorphism class keeps at least one representative:
// alternately sorting rows and columns only relabels the two sides and
// terminates in a doubly sorted matrix.  Duplicates are permitted, misses are
// not.  The callback returns false to stop; enumerate returns false when
// stopped early.  n is capped at 12.
bool enumerate_split_labeled(int n, int s, const EnumOptions& opt,
                             const std::function<bool(const Graph&)>& emit);

// Clique K_s joined completely to i_count independent vertices.  Requires
// s >= 4 and 0 <= i_count <= 3 (the range in which the family stays
// {K14, K14E}-free).
Graph gen_family_complete_split(int s, int i_count);

}  // namespace splitham
