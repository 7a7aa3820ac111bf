#include "qcount/chromatic.hpp"

#include <fstream>
#include <sstream>

namespace qcount {

bool PolyCache::lookup(const std::string& key, IntPoly& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
}

void PolyCache::insert(const std::string& key, const IntPoly& value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_[key] = value;
}

size_t PolyCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

size_t PolyCache::load(const std::string& path, size_t* corrupt_lines, int audit) {
    std::ifstream in(path);
    if (!in) return 0;
    size_t loaded = 0, corrupt = 0;
    std::string line;
    std::vector<std::pair<std::string, IntPoly>> audit_pool;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        bool ok = tab != std::string::npos;
        Graph g;
        IntPoly poly;
        if (ok) {
            try {
                g = parse_graph6(line.substr(0, tab));
            } catch (const Graph6Error&) {
                ok = false;
            }
        }
        if (ok) {
            std::vector<BigInt> coeffs;
            std::stringstream ss(line.substr(tab + 1));
            std::string tok;
            while (ok && std::getline(ss, tok, ',')) {
                try {
                    coeffs.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    ok = false;
                }
            }
            if (ok && coeffs.empty()) ok = false;
            if (ok) poly = IntPoly(std::move(coeffs));
        }
        if (!ok) {
            ++corrupt;
            continue;
        }
        std::string key = line.substr(0, tab);
        insert(key, poly);
        ++loaded;
        if (static_cast<int>(audit_pool.size()) < audit) audit_pool.push_back({key, poly});
    }
    if (corrupt_lines) *corrupt_lines = corrupt;
    for (auto& [key, poly] : audit_pool) {
        if (q_poly(parse_graph6(key), nullptr) != poly)
            throw std::runtime_error("PolyCache::load: audit failed for entry " + key);
    }
    return loaded;
}

size_t PolyCache::save(const std::string& path) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("PolyCache::save: cannot open " + path);
    for (const auto& [key, poly] : map_) {
        out << key << '\t';
        const auto& cs = poly.coeffs();
        for (size_t i = 0; i < cs.size(); ++i) {
            if (i) out << ',';
            out << cs[i].get_str();
        }
        out << '\n';
    }
    return map_.size();
}

namespace {

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] != (g.vertex_mask() & ~(1u << v))) return false;
    return true;
}

IntPoly q_complete(int n) {
    IntPoly p = IntPoly::constant(1);
    for (int i = 0; i < n; ++i) p = p * IntPoly::linear(1 - i);  // y + 1 - i
    return p;
}

Graph induced(const Graph& g, uint32_t mask) {
    std::vector<int> verts;
    uint32_t m = mask;
    while (m) {
        verts.push_back(__builtin_ctz(m));
        m &= m - 1;
    }
    Graph h(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

IntPoly q_rec(const Graph& g, PolyCache* cache) {
    if (g.n == 0) return IntPoly::constant(1);
    auto comps = components(g);
    if (comps.size() > 1) {
        IntPoly p = IntPoly::constant(1);
        for (uint32_t comp : comps) p = p * q_rec(induced(g, comp), cache);
        return p;
    }
    // peel isolated (factor y+1) and pendant (factor y) vertices
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == 0) return IntPoly::linear(1) * (g.n == 1 ? IntPoly::constant(1) : q_rec(delete_vertex(g, v), cache));
        if (d == 1) return IntPoly::linear(0) * q_rec(delete_vertex(g, v), cache);
    }
    if (is_complete(g)) return q_complete(g.n);

    std::string key;
    if (cache) {
        key = canonical_key(g);
        IntPoly hit;
        if (cache->lookup(key, hit)) return hit;
    }

    // branch on the edge whose endpoints share the most common neighbours;
    // ties broken by smallest (u, v) for reproducible cache files
    int bu = -1, bv = -1, best = -1;
    for (int u = 0; u < g.n; ++u) {
        uint32_t m = g.adj[u] >> (u + 1);
        while (m) {
            int v = u + 1 + __builtin_ctz(m);
            m &= m - 1;
            int common = __builtin_popcount(g.adj[u] & g.adj[v]);
            if (common > best) best = common, bu = u, bv = v;
        }
    }
    IntPoly result = q_rec(delete_edge(g, bu, bv), cache) - q_rec(contract_edge(g, bu, bv), cache);
    if (cache) cache->insert(key, result);
    return result;
}

}  // namespace

IntPoly q_poly(const Graph& g, PolyCache* cache) {
    if (g.n < 1) throw std::invalid_argument("q_poly: empty graph");
    return q_rec(g, cache);
}

namespace {

long count_rec(const Graph& g, std::vector<int>& color, int v, int x) {
    if (v == g.n) return 1;
    long total = 0;
    uint32_t taken = 0;
    uint32_t m = g.adj[v] & ((1u << v) - 1);
    while (m) {
        int w = __builtin_ctz(m);
        m &= m - 1;
        taken |= 1u << color[w];
    }
    for (int c = 0; c < x; ++c) {
        if ((taken >> c) & 1) continue;
        color[v] = c;
        total += count_rec(g, color, v + 1, x);
    }
    return total;
}

}  // namespace

BigInt count_colourings_bruteforce(const Graph& g, int x) {
    if (g.n > 10 || x > 8) throw std::invalid_argument("count_colourings_bruteforce: limits are n <= 10, x <= 8");
    if (x < 1) throw std::invalid_argument("count_colourings_bruteforce: x >= 1");
    std::vector<int> color(g.n, -1);
    return BigInt(count_rec(g, color, 0, x));
}

BoundCheck verify_bound(const Graph& g, int k, PolyCache* cache) {
    if (!is_connected(g)) throw std::invalid_argument("verify_bound: graph must be connected");
    if (chromatic_number(g) != k) throw std::invalid_argument("verify_bound: chi(g) != k");
    BoundCheck r;
    r.q = q_poly(g, cache);
    r.bound = bound_poly(k, g.n);
    if (r.q == r.bound) {
        r.verdict = BoundVerdict::equality;
        return r;
    }
    if (ll_leq(r.q, r.bound, k)) {
        r.verdict = BoundVerdict::strict;
        r.ll_certified = true;
        return r;
    }
    // pointwise fallback; this checks only the listed integers, not dominance
    r.checked_from = k;
    r.checked_to = k + r.q.degree() + 1;
    for (long y = r.checked_from; y <= r.checked_to; ++y) {
        if (r.q.eval(BigInt(y)) > r.bound.eval(BigInt(y))) {
            r.verdict = BoundVerdict::violation;
            r.witness_y = y;
            return r;
        }
    }
    r.verdict = BoundVerdict::strict;
    r.ll_certified = false;
    return r;
}

}  // namespace qcount
