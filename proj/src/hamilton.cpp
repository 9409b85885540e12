#include "splitham/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "splitham/assignment.hpp"
#include "splitham/errors.hpp"

namespace splitham {

bool verify_certificate(const Graph& g, const HamPathCertificate& cert, int u, int v) {
    int n = g.order();
    if (static_cast<int>(cert.seq.size()) != n || n == 0) return false;
    std::vector<char> seen(n, 0);
    for (int x : cert.seq) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    for (size_t i = 0; i + 1 < cert.seq.size(); ++i)
        if (!g.adjacent(cert.seq[i], cert.seq[i + 1])) return false;
    return cert.seq.front() == u && cert.seq.back() == v;
}

// ------------------------------------------------------------ threading

namespace {

struct Location {
    int path = -1;  // index into cover paths, -1 for S-vertices outside the cover
    int pos = -1;
};

Location locate(const ICover& c, int v) {
    for (size_t i = 0; i < c.paths.size(); ++i)
        for (size_t j = 0; j < c.paths[i].seq.size(); ++j)
            if (c.paths[i].seq[j] == v) return {static_cast<int>(i), static_cast<int>(j)};
    return {};
}

bool is_inner_clique_position(const AlternatingPath& p, int pos) {
    return pos % 2 == 0 && pos != 0 && pos + 1 != static_cast<int>(p.seq.size());
}

std::vector<int> segment(const std::vector<int>& v, int from, int to) {  // inclusive, may reverse
    std::vector<int> out;
    if (from <= to)
        for (int i = from; i <= to; ++i) out.push_back(v[i]);
    else
        for (int i = from; i >= to; --i) out.push_back(v[i]);
    return out;
}

}  // namespace

HamPathCertificate ham_path_from_icover(const Graph& g, const SplitPartition& p, const ICover& c,
                                        int u, int v) {
    if (u == v) throw PreconditionViolated("u and v must be distinct");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw PreconditionViolated("u or v out of range");
    if (auto why = cover_violation(g, p, c))
        throw PreconditionViolated("invalid I-cover: " + *why);

    Location lu = locate(c, u), lv = locate(c, v);
    if (lu.path >= 0 && is_inner_clique_position(c.paths[lu.path], lu.pos))
        throw PreconditionViolated("u is an interior S-vertex of the cover");
    if (lv.path >= 0 && is_inner_clique_position(c.paths[lv.path], lv.pos))
        throw PreconditionViolated("v is an interior S-vertex of the cover");
    bool u_is_end = lu.path >= 0 && lu.pos % 2 == 0;
    bool v_is_end = lv.path >= 0 && lv.pos % 2 == 0;
    if (u_is_end && v_is_end && lu.path == lv.path)
        throw PreconditionViolated("u and v are the endpoints of one cover path");

    // chain_u starts at u, chain_v ends at v, both with an S-vertex at the
    // junction side.  Everything else: whole paths (middle) and loose
    // S-vertices (splice pool), all joined through clique edges.
    std::vector<int> chain_u, chain_v;
    std::vector<std::vector<int>> middle;
    std::vector<int> splice = outside_clique_vertices(p, c);
    std::vector<char> path_used(c.paths.size(), 0);

    auto leftover = [&](std::vector<int> piece) {
        if (piece.size() >= 3)
            middle.push_back(std::move(piece));
        else if (piece.size() == 1)
            splice.push_back(piece[0]);
        else if (!piece.empty())
            throw InvariantViolation("leftover piece of even size");
    };

    if (lu.path >= 0 && lv.path >= 0 && lu.path == lv.path) {
        // Same path: cut around u and v.
        const std::vector<int>& seq = c.paths[lu.path].seq;
        int pu = lu.pos, pv = lv.pos;
        int last = static_cast<int>(seq.size()) - 1;
        if (pu > pv) {
            // Mirror so the walk formulas below can assume u left of v.
            std::vector<int> rev(seq.rbegin(), seq.rend());
            ICover flipped = c;
            flipped.paths[lu.path].seq = rev;
            HamPathCertificate cert = ham_path_from_icover(g, p, flipped, u, v);
            return cert;
        }
        path_used[lu.path] = 1;
        if (pu == 0) {  // u is the left endpoint, v interior
            chain_u = segment(seq, 0, pv - 1);
            chain_v = segment(seq, last, pv);
        } else if (pv == last) {  // v is the right endpoint, u interior
            chain_u = segment(seq, pu, 0);
            chain_v = segment(seq, pu + 1, last);
        } else {  // both interior I-vertices
            chain_u = segment(seq, pu, 0);
            chain_v = segment(seq, last, pv);
            leftover(segment(seq, pu + 1, pv - 1));
        }
    } else {
        if (lu.path < 0) {
            chain_u = {u};
            splice.erase(std::remove(splice.begin(), splice.end(), u), splice.end());
        } else {
            const std::vector<int>& seq = c.paths[lu.path].seq;
            int last = static_cast<int>(seq.size()) - 1;
            path_used[lu.path] = 1;
            if (lu.pos == 0) {
                chain_u = segment(seq, 0, last);
            } else if (lu.pos == last) {
                chain_u = segment(seq, last, 0);
            } else {
                chain_u = segment(seq, lu.pos, 0);
                leftover(segment(seq, lu.pos + 1, last));
            }
        }
        if (lv.path < 0) {
            chain_v = {v};
            splice.erase(std::remove(splice.begin(), splice.end(), v), splice.end());
        } else {
            const std::vector<int>& seq = c.paths[lv.path].seq;
            int last = static_cast<int>(seq.size()) - 1;
            path_used[lv.path] = 1;
            if (lv.pos == 0) {
                chain_v = segment(seq, last, 0);
            } else if (lv.pos == last) {
                chain_v = segment(seq, 0, last);
            } else {
                chain_v = segment(seq, last, lv.pos);
                leftover(segment(seq, 0, lv.pos - 1));
            }
        }
    }

    for (size_t i = 0; i < c.paths.size(); ++i)
        if (!path_used[i]) middle.push_back(c.paths[i].seq);

    // Ascending splice and chaining order; middle paths entered at their
    // smaller endpoint.
    std::sort(splice.begin(), splice.end());
    for (auto& seq : middle)
        if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
    std::sort(middle.begin(), middle.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });

    HamPathCertificate cert;
    cert.seq = chain_u;
    for (int w : splice) cert.seq.push_back(w);
    for (const auto& seq : middle) cert.seq.insert(cert.seq.end(), seq.begin(), seq.end());
    cert.seq.insert(cert.seq.end(), chain_v.begin(), chain_v.end());

    if (!verify_certificate(g, cert, u, v)) {
        std::ostringstream os;
        os << "threading produced an invalid certificate for u=" << u << " v=" << v
           << " on graph6 " << to_graph6(g) << "; sequence:";
        for (int x : cert.seq) os << ' ' << x;
        throw ConstructionFailure(os.str());
    }
    return cert;
}

// ------------------------------------------------------------ avoiding cover

namespace {

struct AvoidScore {
    int inn_hits;   // how many of u, v sit interior to cover paths
    int same_path;   // 1 if u,v are the endpoint pair of a single path
    int neg_h;

    bool better_than(const AvoidScore& o) const {
        if (inn_hits != o.inn_hits) return inn_hits < o.inn_hits;
        if (same_path != o.same_path) return same_path < o.same_path;
        return neg_h < o.neg_h;
    }
    bool admissible() const { return inn_hits == 0 && same_path == 0; }
};

AvoidScore score_cover(const ICover& c, int u, int v) {
    AvoidScore s{0, 0, -static_cast<int>(c.paths.size())};
    for (const auto& path : c.paths) {
        for (size_t i = 2; i + 2 < path.seq.size(); i += 2) {
            if (path.seq[i] == u) ++s.inn_hits;
            if (path.seq[i] == v) ++s.inn_hits;
        }
        bool ue = path.first() == u || path.last() == u;
        bool ve = path.first() == v || path.last() == v;
        if (ue && ve) s.same_path = 1;
    }
    return s;
}

}  // namespace

ICover build_icover_avoiding(const Graph& g, const SplitPartition& p, int u, int v,
                             std::uint64_t budget) {
    return build_icover_avoiding(g, p, bound_lengths(g, p, build_icover(g, p, budget), budget), u,
                                 v, budget);
}

ICover build_icover_avoiding(const Graph& g, const SplitPartition& p, const ICover& base_cover,
                             int u, int v, std::uint64_t budget) {
    if (u == v) throw PreconditionViolated("u and v must be distinct");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw PreconditionViolated("u or v out of range");

    ICover cur = base_cover;
    AvoidScore cur_score = score_cover(cur, u, v);

    // Local edge-swap search: detach one I-vertex from one side of its pair and
    // reattach it to another S-neighbor, keeping the multigraph acyclic.
    std::uint64_t steps = 0;
    while (!cur_score.admissible()) {
        PairAssignment base = to_assignment(p, cur);
        std::vector<int> deg(g.order(), 0);
        for (auto [x, y] : base.pair_of) ++deg[x], ++deg[y];
        bool improved = false;
        for (size_t i = 0; i < base.pair_of.size() && !improved; ++i) {
            int b = p.independent[i];
            auto [x, y] = base.pair_of[i];
            for (int keep : {y, x}) {
                for (int alt : g.neighbors(b)) {
                    if (alt == x || alt == y || deg[alt] >= 2) continue;
                    if (++steps > budget) throw BudgetExceeded("avoiding search exceeded budget");
                    PairAssignment cand = base;
                    cand.pair_of[i] = {std::min(keep, alt), std::max(keep, alt)};
                    PseudoICover lifted = from_assignment(p, cand);
                    if (!lifted.cycles.empty()) continue;
                    ICover cand_cover{std::move(lifted.paths)};
                    AvoidScore sc = score_cover(cand_cover, u, v);
                    if (sc.better_than(cur_score)) {
                        cur = std::move(cand_cover);
                        cur_score = sc;
                        improved = true;
                        break;
                    }
                }
                if (improved) break;
            }
        }
        if (!improved) break;
    }

    if (!cur_score.admissible()) {
        AssignmentConstraints cfg;
        cfg.forbid_cycles = true;
        cfg.degree_one_a = p.in_clique(u) ? u : -1;
        cfg.degree_one_b = p.in_clique(v) ? v : -1;
        cfg.forbid_pair_path = cfg.degree_one_a >= 0 && cfg.degree_one_b >= 0;
        auto asg = search_assignment(g, p, cfg, budget);
        if (!asg)
            throw ExistenceFailure("no I-cover avoiding the pair exists: counterexample candidate",
                                   to_graph6(g));
        cur = icover_from_assignment(p, *asg);
        cur_score = score_cover(cur, u, v);
        if (!cur_score.admissible())
            throw InvariantViolation("constrained search returned a non-avoiding cover");
    }

    if (auto why = cover_violation(g, p, cur))
        throw InvariantViolation("avoiding cover is invalid: " + *why);
    return cur;
}

// ------------------------------------------------------------ exact oracle

namespace {

// Bitmask DP: ends(mask) = set of vertices w such that some path visits
// exactly `mask` and stops at w, seeded at u.  A Hamiltonian (u,v)-path exists
// iff v is in ends(full).
std::uint32_t reachable_ends(const Graph& g, int u) {
    int n = g.order();
    std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    std::vector<std::uint32_t> dp(static_cast<size_t>(full) + 1, 0);
    std::vector<std::uint32_t> nbr(n);
    for (int w = 0; w < n; ++w) nbr[w] = static_cast<std::uint32_t>(g.row_word(w));
    dp[1u << u] = 1u << u;
    for (std::uint32_t mask = 1u << u; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        std::uint32_t rest = full & ~mask;
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (ends & nbr[w]) dp[mask | (1u << w)] |= 1u << w;
        }
    }
    return dp[full];
}

}  // namespace

HamiltonOracleReport hamilton_connected_oracle(const Graph& g, int order_cap) {
    int n = g.order();
    if (order_cap < 1 || order_cap > 31) throw InvalidSpec("oracle cap must be in 1..31");
    if (n > order_cap) throw OrderCapExceeded("graph order exceeds the oracle cap");
    HamiltonOracleReport rep;
    if (n <= 1) {
        rep.connected = true;  // no pairs to fail
        return rep;
    }
    if (!is_connected(g)) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) rep.failing_pairs.push_back({u, v});
        rep.connected = false;
        return rep;
    }
    for (int u = 0; u < n; ++u) {
        std::uint32_t ends = reachable_ends(g, u);
        for (int v = u + 1; v < n; ++v)
            if (!(ends & (1u << v))) rep.failing_pairs.push_back({u, v});
    }
    std::sort(rep.failing_pairs.begin(), rep.failing_pairs.end());
    rep.connected = rep.failing_pairs.empty();
    return rep;
}

bool ham_path_exists_oracle(const Graph& g, int u, int v, int order_cap) {
    int n = g.order();
    if (order_cap < 1 || order_cap > 31) throw InvalidSpec("oracle cap must be in 1..31");
    if (n > order_cap) throw OrderCapExceeded("graph order exceeds the oracle cap");
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw PreconditionViolated("u, v must be distinct vertices");
    std::uint32_t ends = reachable_ends(g, u);
    return (ends & (1u << v)) != 0;
}

}  // namespace splitham
