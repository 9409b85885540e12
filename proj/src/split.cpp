#include "splitham/split.hpp"

#include <algorithm>
#include <numeric>

#include "splitham/errors.hpp"

namespace splitham {

bool SplitPartition::in_clique(int v) const {
    return std::binary_search(clique.begin(), clique.end(), v);
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    int n = g.order();
    if (n == 0) return SplitPartition{{}, {}};

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    int m = 0;
    while (m < n && sorted[m] >= m) ++m;  // sorted[i] is d_{i+1}; condition d_i >= i-1

    long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
    for (int i = 0; i < m; ++i) lhs += sorted[i];
    for (int i = m; i < n; ++i) rhs += sorted[i];
    if (lhs != rhs) return std::nullopt;

    // Forced clique members: degree > m-1.  Degree-(m-1) vertices are flexible;
    // a flexible vertex x in S must have N(x) = S \ {x}, so the first valid
    // choice of one determines the rest and is lexicographically minimal.
    std::vector<int> forced, flexible;
    for (int v = 0; v < n; ++v) {
        if (deg[v] >= m) forced.push_back(v);
        else if (deg[v] == m - 1) flexible.push_back(v);
    }
    int need = m - static_cast<int>(forced.size());
    if (need < 0) throw InvariantViolation("splittance test passed but clique head oversized");

    auto try_clique = [&](const std::vector<int>& s) -> std::optional<SplitPartition> {
        SplitPartition p;
        p.clique = s;
        std::sort(p.clique.begin(), p.clique.end());
        std::vector<char> in_s(n, 0);
        for (int v : p.clique) in_s[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!in_s[v]) p.independent.push_back(v);
        if (partition_violation(g, p)) return std::nullopt;
        return p;
    };

    if (need == 0) {
        auto p = try_clique(forced);
        if (!p) throw InvariantViolation("splittance test passed but forced set is not a split clique");
        return p;
    }

    for (int x : flexible) {
        // If x is in S, its whole neighborhood is the rest of S.
        std::vector<int> s = g.neighbors(x);
        s.push_back(x);
        if (static_cast<int>(s.size()) != m) continue;
        if (auto p = try_clique(s)) return p;
    }
    throw InvariantViolation("splittance test passed but no valid split clique found");
}

std::optional<std::string> partition_violation(const Graph& g, const SplitPartition& p,
                                               bool require_maximum) {
    int n = g.order();
    std::vector<int> count(n, 0);
    for (int v : p.clique) {
        if (v < 0 || v >= n) return "clique vertex out of range";
        ++count[v];
    }
    for (int v : p.independent) {
        if (v < 0 || v >= n) return "independent vertex out of range";
        ++count[v];
    }
    for (int v = 0; v < n; ++v)
        if (count[v] != 1) return "S and I must partition the vertex set";
    for (size_t i = 0; i < p.clique.size(); ++i)
        for (size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.adjacent(p.clique[i], p.clique[j])) return "S is not a clique";
    for (size_t i = 0; i < p.independent.size(); ++i)
        for (size_t j = i + 1; j < p.independent.size(); ++j)
            if (g.adjacent(p.independent[i], p.independent[j])) return "I is not independent";
    if (require_maximum) {
        auto canonical = split_partition(g);
        if (!canonical || canonical->clique.size() != p.clique.size())
            return "|S| is not the maximum clique size";
    }
    return std::nullopt;
}

bool assert_connectivity_clique_bound(const Graph& g, const SplitPartition& p, int k) {
    if (k < 1) throw PreconditionViolated("k must be positive");
    if (p.independent.empty()) throw PreconditionViolated("bound applies only when |I| > 0");
    if (auto why = partition_violation(g, p, true))
        throw PreconditionViolated("not a maximum split partition: " + *why);
    if (!is_k_connected(g, k)) throw PreconditionViolated("graph is not k-connected");
    if (static_cast<int>(p.clique.size()) < k + 1)
        throw InvariantViolation("maximum clique smaller than k+1 despite k-connectivity");
    return true;
}

}  // namespace splitham
