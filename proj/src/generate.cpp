#include "splitham/generate.hpp"

#include <algorithm>
#include <bit>

#include "splitham/errors.hpp"

namespace splitham {

void GenSpec::validate() const {
    if (n_min < 0 || n_max < n_min) throw InvalidSpec("bad order range");
    if (n_max > kMaxOrder) throw InvalidSpec("order exceeds supported maximum 512");
    if (s_min < 0 || s_max < s_min) throw InvalidSpec("bad clique-size range");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InvalidSpec("edge probability must lie in [0,1]");
    if (r < 1) throw InvalidSpec("r must be positive");
}

Graph gen_random_split(GenSpec spec, Rng& rng) {
    spec.validate();
    int n = spec.n_min + (spec.n_max > spec.n_min
                              ? static_cast<int>(rng.below(spec.n_max - spec.n_min + 1))
                              : 0);
    int s_lo = spec.s_min > 0 ? spec.s_min : std::max(1, (2 * n) / 3);
    int s_hi = spec.s_max > 0 ? spec.s_max : std::max(1, n - 1);
    s_lo = std::min(s_lo, n);
    s_hi = std::min(s_hi, n);
    if (s_lo > s_hi) s_lo = s_hi;
    int s = s_lo + (s_hi > s_lo ? static_cast<int>(rng.below(s_hi - s_lo + 1)) : 0);
    if (n == 0) return Graph(0);
    if (s == 0) s = 1;

    Graph g(n);
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) g.add_edge(a, b);
    int want = std::min(spec.r, s);
    for (int b = s; b < n; ++b) {
        std::vector<char> has(s, 0);
        int deg = 0;
        for (int a = 0; a < s; ++a)
            if (rng.real() < spec.edge_probability) {
                g.add_edge(b, a);
                has[a] = 1;
                ++deg;
            }
        while (deg < want) {  // top-up to the minimum degree
            int a = static_cast<int>(rng.below(s));
            if (has[a]) continue;
            g.add_edge(b, a);
            has[a] = 1;
            ++deg;
        }
    }
    return g;
}

bool enumerate_split_labeled(int n, int s, const EnumOptions& opt,
                             const std::function<bool(const Graph&)>& emit) {
    if (n < 1 || n > 12) throw OrderCapExceeded("exhaustive enumeration supports 1 <= n <= 12");
    if (s < 1 || s > n) throw InvalidSpec("clique side must satisfy 1 <= s <= n");
    int k = n - s;
    int max_col = opt.max_col_degree >= 0 ? opt.max_col_degree : k;

    // Row value: bit (s-1-j) holds column j, so integer order equals bit-string
    // order with column 0 most significant.
    auto col_bit = [&](std::uint32_t row, int j) { return (row >> (s - 1 - j)) & 1u; };

    std::vector<std::uint32_t> rows(k);
    std::vector<int> col_deg(s, 0);
    bool keep_going = true;

    auto build_and_emit = [&]() {
        Graph g(n);
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) g.add_edge(a, b);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < s; ++j)
                if (col_bit(rows[i], j)) g.add_edge(s + i, j);
        keep_going = emit(g);
    };

    // undecided: bitmask over adjacent column pairs (j, j+1) still equal so far;
    // a row with bit_j < bit_{j+1} on an undecided pair would break the
    // non-increasing column order and is skipped.
    auto dfs = [&](auto&& self, int depth, std::uint32_t prev, std::uint32_t undecided) -> void {
        if (!keep_going) return;
        if (depth == k) {
            build_and_emit();
            return;
        }
        for (std::uint32_t row = prev; keep_going; --row) {
            if (std::popcount(row) >= opt.min_row_degree) {
                std::uint32_t next_undecided = undecided;
                bool ok = true;
                for (int j = 0; j + 1 < s && ok; ++j) {
                    if (!(undecided & (1u << j))) continue;
                    std::uint32_t a = col_bit(row, j), b = col_bit(row, j + 1);
                    if (a < b) ok = false;
                    else if (a > b) next_undecided &= ~(1u << j);
                }
                if (ok && max_col < k) {
                    for (int j = 0; j < s && ok; ++j)
                        if (col_bit(row, j) && col_deg[j] + 1 > max_col) ok = false;
                }
                if (ok) {
                    rows[depth] = row;
                    for (int j = 0; j < s; ++j) col_deg[j] += static_cast<int>(col_bit(row, j));
                    self(self, depth + 1, row, next_undecided);
                    for (int j = 0; j < s; ++j) col_deg[j] -= static_cast<int>(col_bit(row, j));
                }
            }
            if (row == 0) break;
        }
    };

    std::uint32_t top = (s >= 32) ? 0xFFFFFFFFu : ((1u << s) - 1);
    std::uint32_t all_pairs = s >= 2 ? ((1u << (s - 1)) - 1) : 0;
    dfs(dfs, 0, top, all_pairs);
    return keep_going;
}

Graph gen_family_complete_split(int s, int i_count) {
    if (s < 4) throw InvalidSpec("complete split family needs clique size >= 4");
    if (i_count < 0 || i_count > 3)
        throw InvalidSpec("complete split family supports 0..3 independent vertices");
    Graph g(s + i_count);
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) g.add_edge(a, b);
    for (int b = s; b < s + i_count; ++b)
        for (int a = 0; a < s; ++a) g.add_edge(b, a);
    return g;
}

}  // namespace splitham
