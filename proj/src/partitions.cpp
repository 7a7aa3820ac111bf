#include "qcount/partitions.hpp"

#include <stdexcept>

namespace qcount {

std::string IndepPartition::to_string() const {
    static const char* names = "abcdefghijklmnopqrstuvwxyzABCDEF";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '|';
        uint32_t m = parts[i];
        while (m) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            out += names[v];
        }
    }
    return out;
}

namespace {

void enumerate_rgs(const Graph& g, const std::vector<int>& verts, size_t idx, int r,
                   std::vector<uint32_t>& blocks, std::vector<IndepPartition>& out, uint32_t ground) {
    size_t remaining = verts.size() - idx;
    if (blocks.size() > static_cast<size_t>(r)) return;
    if (static_cast<size_t>(r) - blocks.size() > remaining) return;  // cannot reach r blocks
    if (idx == verts.size()) {
        if (blocks.size() == static_cast<size_t>(r)) out.push_back({ground, blocks});
        return;
    }
    int v = verts[idx];
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (g.adj[v] & blocks[b]) continue;  // independence pruning
        blocks[b] |= 1u << v;
        enumerate_rgs(g, verts, idx + 1, r, blocks, out, ground);
        blocks[b] &= ~(1u << v);
    }
    blocks.push_back(1u << v);
    enumerate_rgs(g, verts, idx + 1, r, blocks, out, ground);
    blocks.pop_back();
}

}  // namespace

std::vector<IndepPartition> independent_partitions(const Graph& g, uint32_t U, int r) {
    if (r < 1) throw std::invalid_argument("independent_partitions: r >= 1");
    std::vector<int> verts;
    uint32_t m = U;
    while (m) {
        int v = __builtin_ctz(m);
        m &= m - 1;
        if (v >= g.n) throw std::invalid_argument("independent_partitions: vertex outside graph");
        verts.push_back(v);
    }
    if (r > static_cast<int>(verts.size())) throw std::invalid_argument("independent_partitions: r > |U|");
    std::vector<IndepPartition> out;
    std::vector<uint32_t> blocks;
    enumerate_rgs(g, verts, 0, r, blocks, out, U);
    return out;
}

bool refines(const IndepPartition& p, const IndepPartition& q) {
    if (p.ground != q.ground) throw std::invalid_argument("refines: ground sets differ");
    for (uint32_t part : p.parts) {
        bool inside = false;
        for (uint32_t whole : q.parts) {
            if ((part & whole) == part) { inside = true; break; }
        }
        if (!inside) return false;
    }
    return true;
}

IntPoly single_vertex_bound(const IntPoly& Qprime, const BigInt& Nr, int r, int d, const IntPoly& B) {
    if (r < 1 || r > d - 1) throw std::invalid_argument("single_vertex_bound: requires 1 <= r <= d-1");
    auto reduced = B.divide_by_power(d - r);
    if (!reduced) throw std::invalid_argument("single_vertex_bound: B not divisible by y^(d-r)");
    return IntPoly::linear(-r) * Qprime + reduced->scale(Nr);
}

}  // namespace qcount
