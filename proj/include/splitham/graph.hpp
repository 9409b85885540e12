#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitham {

// Simple undirected graph on vertices 0..n-1 with bit-vector adjacency rows.
// Rows are ceil(n/64) words each; for n <= 64 every row is a single word and
// row_word() gives the whole neighborhood as one mask.  Symmetry and
// irreflexivity are maintained by add_edge; vertices are identified by index.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const;
    int edge_count() const;
    std::vector<int> neighbors(int v) const;

    // Whole neighborhood of v as one mask; only valid while order <= 64.
    std::uint64_t row_word(int v) const { return bits_[static_cast<size_t>(v) * words_]; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Largest order accepted by the serialization layer.
inline constexpr int kMaxOrder = 512;

// graph6: printable-ASCII encoding, bytes 63..126, 6 bits per byte MSB first,
// upper adjacency triangle by columns.  parse rejects bad lengths, out-of-range
// bytes and nonzero padding bits; to_graph6 uses the short form for n <= 62 and
// the 3-byte extended length prefix above that.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Convenience input: {"n": int, "edges": [[u,v],...]}.
Graph parse_json_graph(std::string_view text);

// Connectivity.  The 0- and 1-vertex graphs count as connected.
bool is_connected(const Graph& g);

// True iff g has >= k+1 vertices and no vertex cut of size < k; complete graphs
// are (n-1)-connected under this definition.  Decided via Menger: max vertex-
// disjoint paths between every non-adjacent pair, with early exit at k.
bool is_k_connected(const Graph& g, int k);

}  // namespace splitham
