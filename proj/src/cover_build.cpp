#include "splitham/cover_build.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "splitham/assignment.hpp"
#include "splitham/errors.hpp"

namespace splitham {

// ------------------------------------------------------------ assignment model

PairAssignment to_assignment(const SplitPartition& p, const PseudoICover& q) {
    PairAssignment asg;
    asg.pair_of.assign(p.independent.size(), {-1, -1});
    auto slot = [&](int b) {
        auto it = std::lower_bound(p.independent.begin(), p.independent.end(), b);
        return static_cast<size_t>(it - p.independent.begin());
    };
    auto put = [&](int b, int x, int y) {
        if (x > y) std::swap(x, y);
        asg.pair_of[slot(b)] = {x, y};
    };
    for (const auto& path : q.paths)
        for (size_t i = 1; i + 1 < path.seq.size(); i += 2)
            put(path.seq[i], path.seq[i - 1], path.seq[i + 1]);
    for (const auto& cyc : q.cycles)
        for (size_t i = 1; i < cyc.seq.size(); i += 2)
            put(cyc.seq[i], cyc.seq[i - 1], cyc.seq[(i + 1) % cyc.seq.size()]);
    return asg;
}

PseudoICover from_assignment(const SplitPartition& p, const PairAssignment& asg) {
    // Multigraph on S; each I-vertex contributes one edge between its pair.
    struct Inc {
        int other, via;  // neighbor S-vertex, I-vertex labelling the edge
    };
    int n_i = static_cast<int>(p.independent.size());
    std::vector<std::vector<Inc>> inc(p.clique.size());
    auto s_slot = [&](int v) {
        auto it = std::lower_bound(p.clique.begin(), p.clique.end(), v);
        return static_cast<size_t>(it - p.clique.begin());
    };
    for (int i = 0; i < n_i; ++i) {
        auto [x, y] = asg.pair_of[i];
        if (x < 0) throw InvariantViolation("unassigned I-vertex in assignment");
        inc[s_slot(x)].push_back({y, p.independent[i]});
        inc[s_slot(y)].push_back({x, p.independent[i]});
    }
    for (auto& v : inc) {
        if (v.size() > 2) throw InvariantViolation("assignment multigraph degree exceeds 2");
        std::sort(v.begin(), v.end(), [](const Inc& a, const Inc& b) { return a.via < b.via; });
    }

    PseudoICover out;
    std::vector<char> edge_done(n_i, 0);
    auto i_slot = [&](int b) {
        auto it = std::lower_bound(p.independent.begin(), p.independent.end(), b);
        return static_cast<size_t>(it - p.independent.begin());
    };
    auto walk = [&](size_t start_slot) {
        std::vector<int> seq{p.clique[start_slot]};
        size_t cur = start_slot;
        while (true) {
            Inc* next = nullptr;
            for (auto& e : inc[cur])
                if (!edge_done[i_slot(e.via)] && (!next || e.via < next->via)) next = &e;
            if (!next) break;
            edge_done[i_slot(next->via)] = 1;
            seq.push_back(next->via);
            if (next->other == seq.front() && seq.size() >= 4) return seq;  // closed a cycle
            seq.push_back(next->other);
            cur = s_slot(next->other);
        }
        return seq;
    };

    // Path components first, entered from their degree-1 ends (ascending).
    for (size_t s = 0; s < inc.size(); ++s) {
        if (inc[s].size() != 1) continue;
        bool fresh = !edge_done[i_slot(inc[s][0].via)];
        if (!fresh) continue;
        std::vector<int> seq = walk(s);
        AlternatingPath path{std::move(seq)};
        if (path.last() < path.first()) std::reverse(path.seq.begin(), path.seq.end());
        out.paths.push_back(std::move(path));
    }
    // Remaining edges form cycles; start each at its smallest S-vertex.
    for (size_t s = 0; s < inc.size(); ++s) {
        bool fresh = false;
        for (auto& e : inc[s])
            if (!edge_done[i_slot(e.via)]) fresh = true;
        if (!fresh) continue;
        std::vector<int> seq = walk(s);
        out.cycles.push_back(AlternatingCycle{std::move(seq)});
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const AlternatingPath& a, const AlternatingPath& b) { return a.first() < b.first(); });
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const AlternatingCycle& a, const AlternatingCycle& b) { return a.seq[0] < b.seq[0]; });
    return out;
}

ICover icover_from_assignment(const SplitPartition& p, const PairAssignment& asg) {
    PseudoICover q = from_assignment(p, asg);
    if (!q.cycles.empty()) throw InvariantViolation("acyclic assignment produced cycles");
    return ICover{std::move(q.paths)};
}

// ------------------------------------------------------------ backtracking search

namespace {

struct SearchState {
    std::vector<int> deg;     // multigraph degree per S-slot
    std::vector<int> parent;  // union-find over S-slots
    std::vector<int> comp_edges;
    int cycles = 0;

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
};

struct Searcher {
    const Graph& g;
    const SplitPartition& p;
    AssignmentConstraints cfg;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    std::vector<std::vector<int>> s_nbrs;  // S-slots adjacent to each I-slot
    int best_cycles = std::numeric_limits<int>::max();
    std::optional<PairAssignment> best;

    Searcher(const Graph& g_, const SplitPartition& p_, AssignmentConstraints cfg_,
             std::uint64_t budget_)
        : g(g_), p(p_), cfg(cfg_), budget(budget_) {
        s_nbrs.resize(p.independent.size());
        for (size_t i = 0; i < p.independent.size(); ++i)
            for (size_t s = 0; s < p.clique.size(); ++s)
                if (g.adjacent(p.independent[i], p.clique[s]))
                    s_nbrs[i].push_back(static_cast<int>(s));
    }

    int slot_cap(int s_slot) const {
        int v = p.clique[s_slot];
        if ((cfg.degree_one_a >= 0 && v == cfg.degree_one_a) ||
            (cfg.degree_one_b >= 0 && v == cfg.degree_one_b))
            return 1;
        return 2;
    }

    bool edge_ok(SearchState& s, int a, int b, bool& closes_cycle) const {
        if (s.deg[a] >= slot_cap(a) || s.deg[b] >= slot_cap(b)) return false;
        int ra = s.find(a), rb = s.find(b);
        closes_cycle = (ra == rb);
        if (closes_cycle && cfg.forbid_cycles) return false;
        if (cfg.max_component_edges > 0) {
            int total = closes_cycle ? s.comp_edges[ra] + 1
                                     : s.comp_edges[ra] + s.comp_edges[rb] + 1;
            if (total > cfg.max_component_edges) return false;
        }
        return true;
    }

    void apply_edge(SearchState& s, int a, int b) {
        int ra = s.find(a), rb = s.find(b);
        ++s.deg[a];
        ++s.deg[b];
        if (ra == rb) {
            ++s.cycles;
            ++s.comp_edges[ra];
        } else {
            s.parent[ra] = rb;
            s.comp_edges[rb] += s.comp_edges[ra] + 1;
        }
    }

    bool separation_violated(SearchState& s) const {
        // u, v must not end up as the two endpoints of one path component.
        if (cfg.degree_one_a < 0 || cfg.degree_one_b < 0 || !cfg.forbid_pair_path) return false;
        auto slot_of = [&](int v) {
            auto it = std::lower_bound(p.clique.begin(), p.clique.end(), v);
            return it != p.clique.end() && *it == v ? static_cast<int>(it - p.clique.begin()) : -1;
        };
        int a = slot_of(cfg.degree_one_a), b = slot_of(cfg.degree_one_b);
        if (a < 0 || b < 0) return false;
        if (s.deg[a] != 1 || s.deg[b] != 1) return false;
        return s.find(a) == s.find(b);
    }

    // Candidate pairs for I-slot i, split into non-cycle-closing and closing.
    void candidates(SearchState& s, size_t i, std::vector<std::pair<int, int>>& open,
                    std::vector<std::pair<int, int>>& closing) {
        const auto& nb = s_nbrs[i];
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                bool closes = false;
                if (!edge_ok(s, nb[a], nb[b], closes)) continue;
                (closes ? closing : open).push_back({nb[a], nb[b]});
            }
    }

    // Depth-first over I-slots, most-constrained first.  minimize_cycles turns
    // the search into exhaustive branch-and-bound on the cycle count.
    bool dfs(SearchState s, std::vector<std::pair<int, int>>& chosen, std::vector<char>& done,
             bool minimize_cycles) {
        if (++nodes > budget) throw BudgetExceeded("assignment search exceeded node budget");
        if (minimize_cycles && s.cycles >= best_cycles) return false;

        size_t pick = done.size();
        size_t fewest = std::numeric_limits<size_t>::max();
        std::vector<std::pair<int, int>> open, closing, pick_open, pick_closing;
        for (size_t i = 0; i < done.size(); ++i) {
            if (done[i]) continue;
            open.clear();
            closing.clear();
            candidates(s, i, open, closing);
            size_t total = open.size() + closing.size();
            if (total == 0) return false;  // dead end
            if (total < fewest) {
                fewest = total;
                pick = i;
                pick_open = open;
                pick_closing = closing;
                if (total == 1) break;
            }
        }
        if (pick == done.size()) {
            if (separation_violated(s)) return false;
            PairAssignment asg;
            asg.pair_of.resize(done.size());
            for (size_t i = 0; i < done.size(); ++i)
                asg.pair_of[i] = {p.clique[chosen[i].first], p.clique[chosen[i].second]};
            if (minimize_cycles) {
                best_cycles = s.cycles;
                best = asg;
                return false;  // keep searching for fewer cycles
            }
            best = asg;
            return true;
        }

        done[pick] = 1;
        for (const auto& tier : {pick_open, pick_closing}) {
            for (auto [a, b] : tier) {
                SearchState next = s;
                apply_edge(next, a, b);
                if (separation_violated(next)) continue;
                chosen[pick] = {a, b};
                if (dfs(std::move(next), chosen, done, minimize_cycles)) {
                    done[pick] = 0;
                    return true;
                }
            }
        }
        done[pick] = 0;
        return false;
    }

    std::optional<PairAssignment> run(bool minimize_cycles) {
        size_t k = p.independent.size();
        if (k == 0) return PairAssignment{};
        SearchState s;
        s.deg.assign(p.clique.size(), 0);
        s.parent.resize(p.clique.size());
        for (size_t i = 0; i < p.clique.size(); ++i) s.parent[i] = static_cast<int>(i);
        s.comp_edges.assign(p.clique.size(), 0);
        std::vector<std::pair<int, int>> chosen(k, {-1, -1});
        std::vector<char> done(k, 0);
        dfs(std::move(s), chosen, done, minimize_cycles);
        return best;
    }
};

}  // namespace

std::optional<PairAssignment> search_assignment(const Graph& g, const SplitPartition& p,
                                                const AssignmentConstraints& cfg,
                                                std::uint64_t budget) {
    Searcher s(g, p, cfg, budget);
    return s.run(false);
}

std::optional<PairAssignment> search_assignment_min_cycles(const Graph& g,
                                                           const SplitPartition& p,
                                                           std::uint64_t budget) {
    Searcher s(g, p, AssignmentConstraints{}, budget);
    return s.run(true);
}

// ------------------------------------------------------------ public builders

namespace {

void require_partition(const Graph& g, const SplitPartition& p) {
    if (auto why = partition_violation(g, p))
        throw PreconditionViolated("invalid split partition: " + *why);
}

}  // namespace

PseudoICover build_pseudo_icover(const Graph& g, const SplitPartition& p, std::uint64_t budget) {
    require_partition(g, p);
    if (p.independent.empty()) return {};
    auto asg = search_assignment(g, p, AssignmentConstraints{}, budget);
    if (!asg)
        throw ExistenceFailure("no pseudo I-cover exists: hypotheses violated or bug", to_graph6(g));
    PseudoICover q = from_assignment(p, *asg);
    if (auto why = cover_violation(g, p, q))
        throw InvariantViolation("built pseudo I-cover is invalid: " + *why);
    return q;
}

PseudoICover build_pseudo_icover_min_cycles(const Graph& g, const SplitPartition& p,
                                            std::uint64_t budget) {
    require_partition(g, p);
    if (p.independent.empty()) return {};
    auto asg = search_assignment_min_cycles(g, p, budget);
    if (!asg)
        throw ExistenceFailure("no pseudo I-cover exists: hypotheses violated or bug", to_graph6(g));
    PseudoICover q = from_assignment(p, *asg);
    if (auto why = cover_violation(g, p, q))
        throw InvariantViolation("built pseudo I-cover is invalid: " + *why);
    return q;
}

PseudoICover open_cycle_with_outside_vertex(const Graph& g, const SplitPartition& p,
                                            const PseudoICover& q, int cycle_index, int x, int y) {
    if (cycle_index < 0 || cycle_index >= static_cast<int>(q.cycles.size()))
        throw IllegalSurgery("cycle index out of range");
    const AlternatingCycle& cyc = q.cycles[cycle_index];

    size_t pos = cyc.seq.size();
    for (size_t i = 1; i < cyc.seq.size(); i += 2)
        if (cyc.seq[i] == x) pos = i;
    if (pos == cyc.seq.size()) throw IllegalSurgery("x is not an I-vertex of the indexed cycle");
    for (int v : cyc.seq)
        if (v == y) throw IllegalSurgery("y lies on the indexed cycle");
    if (y < 0 || y >= g.order() || !p.in_clique(y)) throw IllegalSurgery("y must be an S-vertex");
    if (!g.adjacent(x, y)) throw IllegalSurgery("xy is not an edge");

    // y must be outside the cover entirely, or an endpoint of a cover path.
    int host_path = -1;
    for (size_t i = 0; i < q.paths.size(); ++i) {
        for (size_t j = 0; j < q.paths[i].seq.size(); ++j) {
            if (q.paths[i].seq[j] != y) continue;
            if (j == 0 || j + 1 == q.paths[i].seq.size()) {
                host_path = static_cast<int>(i);
            } else {
                throw IllegalSurgery("y is interior to a cover path");
            }
        }
    }
    if (host_path < 0) {
        for (size_t i = 0; i < q.cycles.size(); ++i)
            for (int v : q.cycles[i].seq)
                if (v == y) throw IllegalSurgery("y lies on another cover cycle");
    }

    // Cycle walked from x onward, dropping the edge from x back to its stored
    // predecessor; y is prepended (case a) or the host path is (case b).
    std::vector<int> tail;
    for (size_t i = 0; i < cyc.seq.size(); ++i) tail.push_back(cyc.seq[(pos + i) % cyc.seq.size()]);

    PseudoICover out;
    out.cycles.reserve(q.cycles.size() - 1);
    for (size_t i = 0; i < q.cycles.size(); ++i)
        if (static_cast<int>(i) != cycle_index) out.cycles.push_back(q.cycles[i]);

    AlternatingPath merged;
    if (host_path < 0) {
        merged.seq.push_back(y);
    } else {
        merged.seq = q.paths[host_path].seq;
        if (merged.seq.front() == y) std::reverse(merged.seq.begin(), merged.seq.end());
    }
    merged.seq.insert(merged.seq.end(), tail.begin(), tail.end());
    if (merged.last() < merged.first()) std::reverse(merged.seq.begin(), merged.seq.end());

    for (size_t i = 0; i < q.paths.size(); ++i)
        if (static_cast<int>(i) != host_path) out.paths.push_back(q.paths[i]);
    out.paths.push_back(std::move(merged));
    std::sort(out.paths.begin(), out.paths.end(),
              [](const AlternatingPath& a, const AlternatingPath& b) { return a.first() < b.first(); });

    if (auto why = cover_violation(g, p, out))
        throw IllegalSurgery("surgery produced an invalid cover: " + *why);
    return out;
}

ICover build_icover(const Graph& g, const SplitPartition& p, std::uint64_t budget) {
    require_partition(g, p);
    if (p.independent.empty()) return {};
    PseudoICover q = build_pseudo_icover(g, p, budget);

    // Lowest enabled (cycle index, I-vertex index, target index) move first.
    while (!q.cycles.empty()) {
        bool applied = false;
        for (size_t ci = 0; ci < q.cycles.size() && !applied; ++ci) {
            std::vector<int> on_cycle;
            for (size_t i = 1; i < q.cycles[ci].seq.size(); i += 2)
                on_cycle.push_back(q.cycles[ci].seq[i]);
            std::sort(on_cycle.begin(), on_cycle.end());
            for (int x : on_cycle) {
                for (int y : g.neighbors(x)) {
                    try {
                        q = open_cycle_with_outside_vertex(g, p, q, static_cast<int>(ci), x, y);
                        applied = true;
                    } catch (const IllegalSurgery&) {
                        continue;
                    }
                    break;
                }
                if (applied) break;
            }
        }
        if (!applied) break;
    }
    if (q.cycles.empty()) return ICover{std::move(q.paths)};

    AssignmentConstraints cfg;
    cfg.forbid_cycles = true;
    auto asg = search_assignment(g, p, cfg, budget);
    if (!asg)
        throw ExistenceFailure("no I-cover exists: counterexample candidate", to_graph6(g));
    ICover c = icover_from_assignment(p, *asg);
    if (auto why = cover_violation(g, p, c))
        throw InvariantViolation("built I-cover is invalid: " + *why);
    return c;
}

// ------------------------------------------------------------ length bounding

namespace {

struct Objective {
    int h;
    int longest;
    int longest_count;

    bool better_than(const Objective& o) const {
        if (h != o.h) return h > o.h;
        if (longest != o.longest) return longest < o.longest;
        return longest_count < o.longest_count;
    }
};

Objective objective_of(const ICover& c) {
    Objective o{static_cast<int>(c.paths.size()), 0, 0};
    for (const auto& p : c.paths) o.longest = std::max(o.longest, p.length());
    for (const auto& p : c.paths)
        if (p.length() == o.longest) ++o.longest_count;
    return o;
}

ICover replace_paths(const ICover& c, size_t drop_a, size_t drop_b, std::vector<AlternatingPath> add) {
    ICover out;
    for (size_t i = 0; i < c.paths.size(); ++i)
        if (i != drop_a && i != drop_b) out.paths.push_back(c.paths[i]);
    for (auto& p : add) {
        if (p.last() < p.first()) std::reverse(p.seq.begin(), p.seq.end());
        out.paths.push_back(std::move(p));
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const AlternatingPath& a, const AlternatingPath& b) { return a.first() < b.first(); });
    return out;
}

std::vector<int> slice(const std::vector<int>& v, size_t from, size_t to) {
    return std::vector<int>(v.begin() + from, v.begin() + to + 1);
}

}  // namespace

ICover bound_lengths(const Graph& g, const SplitPartition& p, const ICover& c,
                     std::uint64_t budget) {
    require_partition(g, p);
    if (auto why = cover_violation(g, p, c))
        throw PreconditionViolated("input is not a valid I-cover: " + *why);

    ICover cur = c;
    std::uint64_t steps = 0;
    while (true) {
        Objective cur_obj = objective_of(cur);
        if (cur_obj.longest <= 6) return cur;

        std::vector<int> outside = outside_clique_vertices(p, cur);
        ICover best_cover;
        Objective best_obj = cur_obj;
        bool improved = false;
        auto consider = [&](ICover cand) {
            if (++steps > budget) throw BudgetExceeded("length bounding exceeded node budget");
            Objective o = objective_of(cand);
            if (o.better_than(best_obj)) {
                best_obj = o;
                best_cover = std::move(cand);
                improved = true;
            }
        };

        for (size_t pi = 0; pi < cur.paths.size(); ++pi) {
            const std::vector<int>& seq = cur.paths[pi].seq;
            for (size_t idx = 1; idx < seq.size(); idx += 2) {
                int b = seq[idx];
                // (i) split at b, attaching an outside vertex y as a new endpoint.
                for (int y : outside) {
                    if (!g.adjacent(b, y)) continue;
                    if (idx + 3 < seq.size()) {  // right remainder keeps an I-vertex
                        auto left = slice(seq, 0, idx);
                        left.push_back(y);
                        consider(replace_paths(cur, pi, pi,
                                               {AlternatingPath{std::move(left)},
                                                AlternatingPath{slice(seq, idx + 1, seq.size() - 1)}}));
                    }
                    if (idx >= 3) {  // left remainder keeps an I-vertex
                        std::vector<int> right{y};
                        auto rest = slice(seq, idx, seq.size() - 1);
                        right.insert(right.end(), rest.begin(), rest.end());
                        consider(replace_paths(cur, pi, pi,
                                               {AlternatingPath{slice(seq, 0, idx - 1)},
                                                AlternatingPath{std::move(right)}}));
                    }
                }
                // (ii) segment exchange with another path entered at an endpoint.
                for (size_t pj = 0; pj < cur.paths.size(); ++pj) {
                    if (pj == pi) continue;
                    for (int end : {cur.paths[pj].first(), cur.paths[pj].last()}) {
                        if (!g.adjacent(b, end)) continue;
                        std::vector<int> other = cur.paths[pj].seq;
                        if (other.front() != end) std::reverse(other.begin(), other.end());
                        if (idx + 3 < seq.size()) {
                            auto left = slice(seq, 0, idx);
                            left.insert(left.end(), other.begin(), other.end());
                            consider(replace_paths(cur, pi, pj,
                                                   {AlternatingPath{std::move(left)},
                                                    AlternatingPath{slice(seq, idx + 1, seq.size() - 1)}}));
                        }
                        if (idx >= 3) {
                            auto right = slice(seq, idx, seq.size() - 1);
                            std::reverse(right.begin(), right.end());
                            right.insert(right.end(), other.begin(), other.end());
                            consider(replace_paths(cur, pi, pj,
                                                   {AlternatingPath{slice(seq, 0, idx - 1)},
                                                    AlternatingPath{std::move(right)}}));
                        }
                    }
                }
            }
        }
        if (!improved) break;
        cur = std::move(best_cover);
        if (auto why = cover_violation(g, p, cur))
            throw InvariantViolation("length-bounding move produced an invalid cover: " + *why);
    }

    AssignmentConstraints cfg;
    cfg.forbid_cycles = true;
    cfg.max_component_edges = 3;
    auto asg = search_assignment(g, p, cfg, budget);
    if (!asg)
        throw ExistenceFailure("no I-cover with all path lengths <= 6 exists: counterexample candidate",
                               to_graph6(g));
    ICover out = icover_from_assignment(p, *asg);
    if (auto why = cover_violation(g, p, out))
        throw InvariantViolation("fallback cover is invalid: " + *why);
    return out;
}

}  // namespace splitham
