#include "splitham/config_patterns.hpp"

#include <algorithm>

#include "splitham/errors.hpp"

namespace splitham {

namespace {

// Assign `want[i]` leaves to center i from its I-neighborhood, all leaves
// distinct across centers, lowest indices first with backtracking over the
// constant-size role set.
bool assign_leaves(const std::vector<std::vector<int>>& cand, const std::vector<int>& want,
                   size_t center, size_t from, int need, std::vector<char>& used,
                   std::vector<int>& out) {
    if (need == 0) {
        if (center + 1 == cand.size()) return true;
        return assign_leaves(cand, want, center + 1, 0, want[center + 1], used, out);
    }
    const std::vector<int>& pool = cand[center];
    for (size_t i = from; i + need <= pool.size(); ++i) {
        int v = pool[i];
        if (used[v]) continue;
        used[v] = 1;
        out.push_back(v);
        if (assign_leaves(cand, want, center, i + 1, need - 1, used, out)) return true;
        used[v] = 0;
        out.pop_back();
    }
    return false;
}

std::optional<ConfigWitness> find_config(const Graph& g, const SplitPartition& p, ConfigId id) {
    if (auto why = partition_violation(g, p))
        throw PreconditionViolated("invalid split partition: " + *why);
    const std::vector<int>& s_side = p.clique;
    std::vector<int> want = id == ConfigId::A ? std::vector<int>{3, 2} : std::vector<int>{2, 2, 2};
    size_t roles = want.size();
    if (s_side.size() < roles) return std::nullopt;

    std::vector<std::vector<int>> i_nbrs(s_side.size());
    for (size_t i = 0; i < s_side.size(); ++i)
        for (int b : p.independent)
            if (g.adjacent(s_side[i], b)) i_nbrs[i].push_back(b);

    // Centers scanned in lexicographic order of the (ordered) role tuple.
    std::vector<size_t> c(roles);
    std::vector<char> used(g.order(), 0);
    auto scan = [&](auto&& self, size_t depth) -> std::optional<ConfigWitness> {
        if (depth == roles) {
            std::vector<std::vector<int>> cand(roles);
            for (size_t i = 0; i < roles; ++i) cand[i] = i_nbrs[c[i]];
            std::vector<int> leaves;
            if (assign_leaves(cand, want, 0, 0, want[0], used, leaves)) {
                ConfigWitness w;
                w.config_id = id;
                for (size_t i = 0; i < roles; ++i) w.centers.push_back(s_side[c[i]]);
                w.leaves = leaves;
                for (int v : leaves) used[v] = 0;
                return w;
            }
            return std::nullopt;
        }
        for (c[depth] = 0; c[depth] < s_side.size(); ++c[depth]) {
            bool dup = false;
            for (size_t j = 0; j < depth; ++j)
                if (c[j] == c[depth]) dup = true;
            if (dup) continue;
            if (static_cast<int>(i_nbrs[c[depth]].size()) < want[depth]) continue;
            if (auto w = self(self, depth + 1)) return w;
        }
        return std::nullopt;
    };
    return scan(scan, 0);
}

}  // namespace

std::optional<ConfigWitness> find_config_A(const Graph& g, const SplitPartition& p) {
    return find_config(g, p, ConfigId::A);
}

std::optional<ConfigWitness> find_config_B(const Graph& g, const SplitPartition& p) {
    return find_config(g, p, ConfigId::B);
}

bool config_witness_valid(const Graph& g, const SplitPartition& p, const ConfigWitness& w) {
    std::vector<int> want = w.config_id == ConfigId::A ? std::vector<int>{3, 2}
                                                       : std::vector<int>{2, 2, 2};
    if (w.centers.size() != want.size()) return false;
    size_t leaf_total = 0;
    for (int k : want) leaf_total += k;
    if (w.leaves.size() != leaf_total) return false;

    std::vector<int> all = w.centers;
    all.insert(all.end(), w.leaves.begin(), w.leaves.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int v : all)
        if (v < 0 || v >= g.order()) return false;

    for (int u : w.centers)
        if (!p.in_clique(u)) return false;
    for (int b : w.leaves)
        if (p.in_clique(b)) return false;

    size_t at = 0;
    for (size_t i = 0; i < want.size(); ++i)
        for (int k = 0; k < want[i]; ++k, ++at)
            if (!g.adjacent(w.centers[i], w.leaves[at])) return false;
    return true;
}

}  // namespace splitham
