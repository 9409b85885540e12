#include "splitham/patterns.hpp"

#include <algorithm>

#include "splitham/errors.hpp"

namespace splitham {

std::string pattern_name(PatternId id) {
    switch (id) {
        case PatternId::K13: return "K13";
        case PatternId::K14: return "K14";
        case PatternId::K14E: return "K14E";
    }
    return "?";
}

namespace {

// Lexicographically first independent subset of `need` vertices among cand
// (ascending), appended to out.  Returns true on success.
bool pick_independent(const Graph& g, const std::vector<int>& cand, size_t from, int need,
                      std::vector<int>& out) {
    if (need == 0) return true;
    for (size_t i = from; i + need <= cand.size() + 0u; ++i) {
        int v = cand[i];
        bool ok = true;
        for (int u : out)
            if (g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        out.push_back(v);
        if (pick_independent(g, cand, i + 1, need - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

// Lexicographically first subset of `need` vertices among cand with exactly one
// internal edge; the adjacent pair is reported first in out.
bool pick_one_edge(const Graph& g, const std::vector<int>& cand, size_t from, int need,
                   int edges_so_far, std::vector<int>& out) {
    if (need == 0) {
        if (edges_so_far != 1) return false;
        // Rotate the adjacent pair to the front, both halves kept ascending.
        std::vector<int> pair, rest;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (g.adjacent(out[i], out[j])) {
                    pair = {out[i], out[j]};
                }
        for (int v : out)
            if (v != pair[0] && v != pair[1]) rest.push_back(v);
        out = pair;
        out.insert(out.end(), rest.begin(), rest.end());
        return true;
    }
    for (size_t i = from; i + need <= cand.size() + 0u; ++i) {
        int v = cand[i];
        int extra = 0;
        for (int u : out)
            if (g.adjacent(u, v)) ++extra;
        if (edges_so_far + extra > 1) continue;
        out.push_back(v);
        if (pick_one_edge(g, cand, i + 1, need - 1, edges_so_far + extra, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_star(const Graph& g, int leaves, bool plus_edge) {
    if (leaves < 2) throw InvalidSpec("star pattern needs at least 2 leaves");
    for (int c = 0; c < g.order(); ++c) {
        if (g.degree(c) < leaves) continue;
        std::vector<int> nbrs = g.neighbors(c);
        std::vector<int> out;
        bool found = plus_edge ? pick_one_edge(g, nbrs, 0, leaves, 0, out)
                               : pick_independent(g, nbrs, 0, leaves, out);
        if (found) {
            out.insert(out.begin(), c);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_induced(const Graph& g, PatternId id) {
    int leaves = id == PatternId::K13 ? 3 : 4;
    bool plus_edge = id == PatternId::K14E;
    auto m = find_induced_star(g, leaves, plus_edge);
    if (!m) return std::nullopt;
    return PatternWitness{id, std::move(*m)};
}

bool is_free(const Graph& g, const std::vector<PatternId>& patterns) {
    for (PatternId p : patterns)
        if (find_induced(g, p)) return false;
    return true;
}

bool witness_valid(const Graph& g, const PatternWitness& w) {
    int leaves = w.pattern_id == PatternId::K13 ? 3 : 4;
    bool plus_edge = w.pattern_id == PatternId::K14E;
    if (static_cast<int>(w.mapping.size()) != leaves + 1) return false;
    for (int v : w.mapping)
        if (v < 0 || v >= g.order()) return false;
    std::vector<int> sorted = w.mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    int c = w.mapping[0];
    for (int i = 1; i <= leaves; ++i)
        if (!g.adjacent(c, w.mapping[i])) return false;
    for (int i = 1; i <= leaves; ++i)
        for (int j = i + 1; j <= leaves; ++j) {
            bool adj = g.adjacent(w.mapping[i], w.mapping[j]);
            bool required = plus_edge && i == 1 && j == 2;
            if (adj != required) return false;
        }
    return true;
}

}  // namespace splitham
