#include "qcount/graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace qcount {

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error(0, "empty line");
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) throw Graph6Error(0, "multi-byte order field: n > 62 unsupported");
    if (c0 < 63 || c0 > 126) throw Graph6Error(0, "order byte outside printable range");
    int n = c0 - 63;
    if (n < 1 || n > kMaxVertices) throw Graph6Error(0, "order " + std::to_string(n) + " out of supported range 1..32");
    Graph g(n);
    int nbits = n * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes)
        throw Graph6Error(line.size() < 1 + nbytes ? line.size() : 1 + nbytes,
                          line.size() < 1 + nbytes ? "truncated edge data" : "trailing bytes after edge data");
    int bit = 0;
    for (size_t b = 0; b < nbytes; ++b) {
        unsigned char ch = static_cast<unsigned char>(line[1 + b]);
        if (ch < 63 || ch > 126) throw Graph6Error(1 + b, "edge byte outside printable range");
        int v = ch - 63;
        for (int s = 5; s >= 0; --s, ++bit) {
            int set = (v >> s) & 1;
            if (bit >= nbits) {
                if (set) throw Graph6Error(1 + b, "nonzero padding bits");
                continue;
            }
            if (set) {
                // bit index -> (i, j) with column-major upper triangle order
                int j = 1, acc = 0;
                while (acc + j <= bit) acc += j, ++j;
                int i = bit - acc;
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    if (g.n < 1 || g.n > kMaxVertices) throw std::invalid_argument("encode_graph6: order out of range");
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int nbits = g.n * (g.n - 1) / 2;
    int bit = 0, cur = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit % 6 == 0) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        cur <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(63 + cur));
    }
    return out;
}

namespace {

uint32_t drop_bit(uint32_t mask, int v) {
    uint32_t lo = mask & ((1u << v) - 1);
    uint32_t hi = (v + 1 < 32) ? (mask >> (v + 1)) << v : 0;
    return lo | hi;
}

Graph remove_and_compact(const Graph& g, int removed) {
    Graph out(g.n - 1);
    for (int w = 0; w < g.n; ++w) {
        if (w == removed) continue;
        int wl = w > removed ? w - 1 : w;
        out.adj[wl] = drop_bit(g.adj[w] & ~(1u << removed), removed);
    }
    return out;
}

}  // namespace

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("delete_vertex: no such vertex");
    if (g.n == 1) throw std::invalid_argument("delete_vertex: would leave empty graph");
    return remove_and_compact(g, v);
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: no such edge");
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

namespace {

Graph merge_vertices(const Graph& g, int u, int v) {
    // merge v into u, then compact away v
    Graph tmp = g;
    uint32_t nb = g.adj[v] & ~(1u << u);
    tmp.adj[u] = (tmp.adj[u] | nb) & ~(1u << v) & ~(1u << u);
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        if ((nb >> w) & 1) tmp.adj[w] |= 1u << u;
        tmp.adj[w] &= ~(1u << v);
    }
    tmp.adj[v] = 0;
    return remove_and_compact(tmp, v);
}

}  // namespace

Graph contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v || !g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: uv is not an edge");
    if (u > v) std::swap(u, v);
    return merge_vertices(g, u, v);
}

Graph identify_vertices(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v || g.has_edge(u, v))
        throw std::invalid_argument("identify_vertices: vertices must be distinct and non-adjacent");
    if (u > v) std::swap(u, v);
    return merge_vertices(g, u, v);
}

Graph complement(const Graph& g) {
    Graph out(g.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.vertex_mask() & ~g.adj[v] & ~(1u << v);
    return out;
}

std::vector<uint32_t> components(const Graph& g) {
    std::vector<uint32_t> comps;
    uint32_t seen = 0;
    for (int s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1) continue;
        uint32_t comp = 1u << s, frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            while (frontier) {
                int v = __builtin_ctz(frontier);
                frontier &= frontier - 1;
                next |= g.adj[v] & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) { return g.n <= 1 || components(g).size() == 1; }

namespace {

int greedy_clique_bound(const Graph& g) {
    // grow a clique by repeatedly taking the highest-degree candidate
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        uint32_t cand = g.adj[s];
        int size = 1;
        while (cand) {
            int pick = -1, pd = -1;
            uint32_t m = cand;
            while (m) {
                int v = __builtin_ctz(m);
                m &= m - 1;
                int d = __builtin_popcount(g.adj[v] & cand);
                if (d > pd) pd = d, pick = v;
            }
            ++size;
            cand &= g.adj[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

int greedy_coloring_bound(const Graph& g) {
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(g.n, -1);
    int used = 0;
    for (int v : order) {
        uint32_t taken = 0;
        uint32_t m = g.adj[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            if (color[w] >= 0) taken |= 1u << color[w];
        }
        int c = __builtin_ctz(~taken);
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

bool color_rec(const Graph& g, std::vector<uint32_t>& avail, uint32_t colored, int k, int max_used) {
    if (colored == g.vertex_mask()) return true;
    // most-constrained uncolored vertex
    int pick = -1, best_opts = k + 1;
    for (int v = 0; v < g.n; ++v) {
        if ((colored >> v) & 1) continue;
        int opts = __builtin_popcount(avail[v] & ((1u << std::min(k, max_used + 1)) - 1));
        if (opts == 0) return false;
        if (opts < best_opts) best_opts = opts, pick = v;
    }
    int limit = std::min(k, max_used + 1);  // at most one fresh colour index
    uint32_t opts = avail[pick] & ((1u << limit) - 1);
    while (opts) {
        int c = __builtin_ctz(opts);
        opts &= opts - 1;
        std::vector<uint32_t> saved;
        uint32_t m = g.adj[pick] & ~colored;
        uint32_t changed = m;
        saved.reserve(__builtin_popcount(m));
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            saved.push_back(avail[w]);
            avail[w] &= ~(1u << c);
        }
        if (color_rec(g, avail, colored | (1u << pick), k, std::max(max_used, c + 1)))
            return true;
        m = changed;
        size_t idx = 0;
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            avail[w] = saved[idx++];
        }
    }
    return false;
}

}  // namespace

bool is_colorable(const Graph& g, int k) {
    if (k <= 0) return g.n == 0;
    if (k >= g.n) return true;
    std::vector<uint32_t> avail(g.n, (k == 32 ? 0xffffffffu : (1u << k) - 1));
    return color_rec(g, avail, 0, k, 0);
}

int chromatic_number(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("chromatic_number: empty graph");
    if (g.edge_count() == 0) return 1;
    int lo = std::max(2, greedy_clique_bound(g));
    int hi = greedy_coloring_bound(g);
    for (int k = lo; k < hi; ++k)
        if (is_colorable(g, k)) return k;
    return hi;
}

bool is_edge_critical(const Graph& g, int k) {
    if (chromatic_number(g) != k) return false;
    for (int u = 0; u < g.n; ++u) {
        uint32_t m = g.adj[u] >> (u + 1);
        while (m) {
            int v = u + 1 + __builtin_ctz(m);
            m &= m - 1;
            if (!is_colorable(delete_edge(g, u, v), k - 1)) return false;
        }
    }
    return true;
}

bool is_vertex_critical(const Graph& g, int k) {
    if (chromatic_number(g) != k) return false;
    if (g.n == 1) return true;
    for (int v = 0; v < g.n; ++v)
        if (!is_colorable(delete_vertex(g, v), k - 1)) return false;
    return true;
}

namespace {

bool clique_rec(const Graph& g, uint32_t cand, int need) {
    if (need == 0) return true;
    if (__builtin_popcount(cand) < need) return false;
    while (cand) {
        int v = __builtin_ctz(cand);
        cand &= cand - 1;
        if (clique_rec(g, cand & g.adj[v], need - 1)) return true;
        if (__builtin_popcount(cand) < need) return false;
    }
    return false;
}

}  // namespace

bool has_clique(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("has_clique: t >= 1");
    if (t > g.n) return false;
    return clique_rec(g, g.vertex_mask(), t);
}

bool has_independent_set(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("has_independent_set: t >= 1");
    if (t > g.n) return false;
    return has_clique(complement(g), t);
}

namespace {

// Ordered-partition refinement: split cells by the multiset of neighbour
// counts into every cell, until stable. Cell order is canonical because new
// cells are ordered by their (sorted) signatures.
using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() <= 1) continue;
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cells[ci]) {
                std::vector<int> sig(cells.size());
                for (size_t cj = 0; cj < cells.size(); ++cj) {
                    int cnt = 0;
                    for (int w : cells[cj]) cnt += g.has_edge(v, w) ? 1 : 0;
                    sig[cj] = cnt;
                }
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) {
                Cells next(cells.begin(), cells.begin() + ci);
                for (auto& [sig, vs] : groups) next.push_back(vs);
                next.insert(next.end(), cells.begin() + ci + 1, cells.end());
                cells.swap(next);
                changed = true;
                break;
            }
        }
    }
}

void canon_rec(const Graph& g, Cells cells, std::string& best) {
    refine(g, cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) { target = static_cast<int>(i); break; }
    if (target < 0) {
        // discrete: cell index = new label
        Graph h(g.n);
        std::vector<int> label(g.n);
        for (size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<int>(i);
        for (int u = 0; u < g.n; ++u) {
            uint32_t m = g.adj[u] >> (u + 1);
            while (m) {
                int v = u + 1 + __builtin_ctz(m);
                m &= m - 1;
                h.add_edge(label[u], label[v]);
            }
        }
        std::string key = encode_graph6(h);
        if (best.empty() || key < best) best = key;
        return;
    }
    for (int v : cells[target]) {
        Cells next(cells.begin(), cells.begin() + target);
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[target])
            if (w != v) rest.push_back(w);
        next.push_back(rest);
        next.insert(next.end(), cells.begin() + target + 1, cells.end());
        canon_rec(g, std::move(next), best);
    }
}

}  // namespace

std::string canonical_key(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("canonical_key: empty graph");
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < g.n; ++v) by_degree[g.degree(v)].push_back(v);
    Cells cells;
    for (auto& [d, vs] : by_degree) cells.push_back(vs);
    std::string best;
    canon_rec(g, std::move(cells), best);
    return best;
}

Graph canonical_form(const Graph& g) { return parse_graph6(canonical_key(g)); }

std::vector<Graph> enumerate_unlabeled(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_unlabeled: supported for 1 <= n <= 7");
    // grow representatives one vertex at a time: every class on k vertices
    // extends some class on k-1 (delete any vertex), so attaching a new vertex
    // with every neighbourhood mask and re-canonicalizing covers everything
    std::vector<Graph> reps = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : reps) {
            for (uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                Graph h(k);
                for (int i = 0; i < k - 1; ++i) h.adj[i] = g.adj[i];
                uint32_t m = nb;
                while (m) {
                    int v = __builtin_ctz(m);
                    m &= m - 1;
                    h.add_edge(v, k - 1);
                }
                std::string key = canonical_key(h);
                if (seen.insert(key).second) next.push_back(parse_graph6(key));
            }
        }
        reps.swap(next);
    }
    std::sort(reps.begin(), reps.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return encode_graph6(a) < encode_graph6(b);
    });
    return reps;
}

}  // namespace qcount
