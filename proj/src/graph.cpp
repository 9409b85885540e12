#include "splitham/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "json.hpp"
#include "splitham/errors.hpp"

namespace splitham {

Graph::Graph(int n) : n_(n), words_(n <= 0 ? 1 : (n + 63) / 64) {
    if (n < 0) throw InvalidSpec("graph order must be non-negative");
    bits_.assign(static_cast<size_t>(n_ == 0 ? 1 : n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidSpec("edge endpoint out of range");
    if (u == v) throw InvalidSpec("self-loops are not representable");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t m = bits_[static_cast<size_t>(v) * words_ + w];
        while (m) {
            int b = std::countr_zero(m);
            out.push_back(w * 64 + b);
            m &= m - 1;
        }
    }
    return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------- graph6

namespace {

int decode_order(std::string_view t, size_t& pos) {
    if (t.empty()) throw Graph6Error("empty graph6 input");
    auto byte = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(t[i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range 63..126");
        return c - 63;
    };
    if (byte(0) != 63) {
        pos = 1;
        return byte(0);
    }
    if (t.size() < 4) throw Graph6Error("truncated graph6 length prefix");
    if (byte(1) == 63) throw Graph6Error("graph6 orders above 258047 are not supported");
    pos = 4;
    return (byte(1) << 12) | (byte(2) << 6) | byte(3);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // Tolerate the optional ">>graph6<<" header and trailing line ends.
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    size_t pos = 0;
    int n = decode_order(text, pos);
    if (n > kMaxOrder) throw Graph6Error("graph order exceeds supported maximum 512");

    long bit_count = static_cast<long>(n) * (n - 1) / 2;
    size_t body_len = static_cast<size_t>((bit_count + 5) / 6);
    if (text.size() - pos != body_len) throw Graph6Error("graph6 body has wrong length");

    Graph g(n);
    long bit = 0;
    int row = 0, col = 1;  // walks the upper triangle column by column
    for (size_t i = pos; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range 63..126");
        int chunk = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (chunk >> b) & 1;
            if (bit >= bit_count) {
                if (on) throw Graph6Error("nonzero padding bits in graph6 body");
                continue;
            }
            if (on) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > kMaxOrder) throw InvalidSpec("graph order exceeds supported maximum 512");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InvalidSpec("expected JSON object {\"n\": int, \"edges\": [[u,v],...]}");
    int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxOrder) throw InvalidSpec("JSON graph order out of range");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidSpec("edge must be a pair [u,v]");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

// ---------------------------------------------------------------- connectivity

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

namespace {

// Max number of internally vertex-disjoint u-v paths for non-adjacent u, v,
// stopping as soon as `want` paths are found.  Vertex-splitting flow network:
// node 2w = w_in, 2w+1 = w_out; interior vertices carry capacity 1.
int disjoint_paths_at_least(const Graph& g, int u, int v, int want) {
    int n = g.order();
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj(2 * n);
    auto add_arc = [&](int a, int b, int cap) {
        adj[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        adj[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    int big = n + 1;
    for (int w = 0; w < n; ++w) add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? big : 1);
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a))
            add_arc(2 * a + 1, 2 * b, big);

    int source = 2 * u + 1, sink = 2 * v;
    int flow = 0;
    std::vector<int> prev_arc(2 * n);
    while (flow < want) {
        std::fill(prev_arc.begin(), prev_arc.end(), -1);
        std::queue<int> q;
        q.push(source);
        prev_arc[source] = -2;
        while (!q.empty() && prev_arc[sink] == -1) {
            int a = q.front();
            q.pop();
            for (int id : adj[a]) {
                if (arcs[id].cap > 0 && prev_arc[arcs[id].to] == -1) {
                    prev_arc[arcs[id].to] = id;
                    q.push(arcs[id].to);
                }
            }
        }
        if (prev_arc[sink] == -1) break;
        for (int node = sink; node != source;) {
            int id = prev_arc[node];
            arcs[id].cap -= 1;
            arcs[id ^ 1].cap += 1;
            node = arcs[id ^ 1].to;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw InvalidSpec("connectivity parameter must be positive");
    int n = g.order();
    if (n < k + 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k) return false;
    bool complete = true;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            complete = false;
            if (disjoint_paths_at_least(g, u, v, k) < k) return false;
        }
    }
    (void)complete;  // complete graphs pass vacuously: no cut exists at all
    return true;
}

}  // namespace splitham
