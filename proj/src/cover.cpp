#include "splitham/cover.hpp"

#include <algorithm>

namespace splitham {

namespace {

std::optional<std::string> alternation_violation(const Graph& g, const SplitPartition& p,
                                                 const std::vector<int>& seq, bool cycle) {
    for (int v : seq)
        if (v < 0 || v >= g.order()) return "vertex out of range";
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return "repeated vertex";
    for (size_t i = 0; i < seq.size(); ++i) {
        bool want_clique = (i % 2 == 0);
        if (p.in_clique(seq[i]) != want_clique)
            return want_clique ? "even position not in S" : "odd position not in I";
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1])) return "consecutive vertices not adjacent";
    if (cycle && !g.adjacent(seq.back(), seq.front())) return "cycle not closed by an edge";
    return std::nullopt;
}

void collect(const std::vector<AlternatingPath>& paths, const std::vector<AlternatingCycle>& cycles,
             std::vector<int>& all) {
    for (const auto& p : paths) all.insert(all.end(), p.seq.begin(), p.seq.end());
    for (const auto& c : cycles) all.insert(all.end(), c.seq.begin(), c.seq.end());
}

std::optional<std::string> joint_violation(const Graph& g, const SplitPartition& p,
                                           const std::vector<AlternatingPath>& paths,
                                           const std::vector<AlternatingCycle>& cycles) {
    for (const auto& path : paths)
        if (auto why = path_violation(g, p, path)) return why;
    for (const auto& cyc : cycles)
        if (auto why = cycle_violation(g, p, cyc)) return why;

    std::vector<int> all;
    collect(paths, cycles, all);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return "cover elements are not vertex-disjoint";

    // Coverage: I inside path interiors and cycle vertex sets.  Path interiors
    // contain every path vertex except the two S-endpoints, so it suffices
    // that every I-vertex appears somewhere in the cover.
    for (int b : p.independent)
        if (!std::binary_search(all.begin(), all.end(), b)) return "I-vertex not covered";
    return std::nullopt;
}

}  // namespace

std::optional<std::string> path_violation(const Graph& g, const SplitPartition& p,
                                          const AlternatingPath& path) {
    if (path.seq.size() < 3) return "alternating path needs at least 3 vertices";
    if (path.seq.size() % 2 == 0) return "alternating path has even vertex count";
    return alternation_violation(g, p, path.seq, false);
}

std::optional<std::string> cycle_violation(const Graph& g, const SplitPartition& p,
                                           const AlternatingCycle& cycle) {
    if (cycle.seq.size() < 4) return "alternating cycle needs at least 4 vertices";
    if (cycle.seq.size() % 2 != 0) return "alternating cycle has odd vertex count";
    return alternation_violation(g, p, cycle.seq, true);
}

std::optional<std::string> cover_violation(const Graph& g, const SplitPartition& p,
                                           const PseudoICover& q) {
    return joint_violation(g, p, q.paths, q.cycles);
}

std::optional<std::string> cover_violation(const Graph& g, const SplitPartition& p,
                                           const ICover& c) {
    return joint_violation(g, p, c.paths, {});
}

namespace {

CoverStats stats_impl(const std::vector<AlternatingPath>& paths,
                      const std::vector<AlternatingCycle>& cycles) {
    CoverStats s;
    s.path_count = static_cast<int>(paths.size());
    s.cycle_count = static_cast<int>(cycles.size());
    for (const auto& p : paths) {
        s.lengths.push_back(p.length());
        s.end_vertices.push_back(p.first());
        s.end_vertices.push_back(p.last());
        for (size_t i = 2; i + 2 < p.seq.size(); i += 2) s.inner_clique.push_back(p.seq[i]);
    }
    std::sort(s.end_vertices.begin(), s.end_vertices.end());
    std::sort(s.inner_clique.begin(), s.inner_clique.end());
    return s;
}

}  // namespace

CoverStats cover_stats(const ICover& c) { return stats_impl(c.paths, {}); }
CoverStats cover_stats(const PseudoICover& q) { return stats_impl(q.paths, q.cycles); }

namespace {

std::vector<int> outside_impl(const SplitPartition& p, const std::vector<AlternatingPath>& paths,
                              const std::vector<AlternatingCycle>& cycles) {
    std::vector<int> used;
    collect(paths, cycles, used);
    std::sort(used.begin(), used.end());
    std::vector<int> out;
    for (int v : p.clique)
        if (!std::binary_search(used.begin(), used.end(), v)) out.push_back(v);
    return out;
}

}  // namespace

std::vector<int> outside_clique_vertices(const SplitPartition& p, const PseudoICover& q) {
    return outside_impl(p, q.paths, q.cycles);
}

std::vector<int> outside_clique_vertices(const SplitPartition& p, const ICover& c) {
    return outside_impl(p, c.paths, {});
}

}  // namespace splitham
