#ifndef QCOUNT_GRAPH_HPP
#define QCOUNT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcount {

constexpr int kMaxVertices = 32;

// Simple undirected graph on at most 32 vertices. adj[i] is the neighbour
// bitmask of vertex i (bit j set iff ij is an edge). Values are cheap to copy
// and treated as immutable once built; all operations below return new graphs.
struct Graph {
    int n = 0;
    std::array<uint32_t, kMaxVertices> adj{};

    Graph() = default;
    explicit Graph(int order) : n(order) {
        if (order < 0 || order > kMaxVertices) throw std::invalid_argument("Graph: order out of range");
    }

    uint32_t vertex_mask() const { return n == 32 ? 0xffffffffu : ((1u << n) - 1); }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("add_edge: loop");
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
    }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    bool operator==(const Graph& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (adj[i] != o.adj[i]) return false;
        return true;
    }
};

struct Graph6Error : std::runtime_error {
    size_t offset;
    Graph6Error(size_t off, const std::string& what)
        : std::runtime_error("graph6: " + what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// graph6 codec for 1 <= n <= 32 (single-byte order field; 6-bit big-endian
// packing of the upper triangle, column-major). Trailing '\n' / '\r' tolerated.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Editing. Vertex removal relabels by order-preserving compaction: every
// label above the removed vertex shifts down by one.
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
// contract_edge requires uv in E; identify_vertices requires u,v non-adjacent.
// Both merge v into min(u,v), keep the graph simple, and compact labels.
Graph contract_edge(const Graph& g, int u, int v);
Graph identify_vertices(const Graph& g, int u, int v);
Graph complement(const Graph& g);

bool is_connected(const Graph& g);
std::vector<uint32_t> components(const Graph& g);

int chromatic_number(const Graph& g);
bool is_colorable(const Graph& g, int k);
bool is_edge_critical(const Graph& g, int k);
bool is_vertex_critical(const Graph& g, int k);

bool has_clique(const Graph& g, int t);
bool has_independent_set(const Graph& g, int t);

// Isomorphism-invariant key: the lexicographically smallest graph6 string over
// the labellings explored by degree refinement with individualization. Equal
// keys iff isomorphic; self-consistent, not nauty-compatible.
std::string canonical_key(const Graph& g);
// The relabelled graph realizing canonical_key (parse of the key).
Graph canonical_form(const Graph& g);

// One representative (the canonical form) per isomorphism class; n <= 7.
std::vector<Graph> enumerate_unlabeled(int n);

}  // namespace qcount

#endif
