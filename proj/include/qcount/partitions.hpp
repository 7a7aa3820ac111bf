#ifndef QCOUNT_PARTITIONS_HPP
#define QCOUNT_PARTITIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcount/graph.hpp"
#include "qcount/poly.hpp"

namespace qcount {

// Partition of a ground set of vertices into non-empty independent sets.
// Parts are kept sorted by smallest element, which the restricted-growth
// enumeration produces for free.
struct IndepPartition {
    uint32_t ground = 0;
    std::vector<uint32_t> parts;

    std::string to_string() const;  // "ab|c|d" with vertices 0..31 as a..z,A..F
};

// All partitions of U into exactly r non-empty sets that are independent in g.
// N_r(U) is the size of the returned list.
std::vector<IndepPartition> independent_partitions(const Graph& g, uint32_t U, int r);

// p refines q: every part of p is contained in some part of q.
// Both partitions must share the ground set.
bool refines(const IndepPartition& p, const IndepPartition& q);

// (y - r) * Qprime + Nr * (B / y^(d-r)); the division must be exact.
IntPoly single_vertex_bound(const IntPoly& Qprime, const BigInt& Nr, int r, int d, const IntPoly& B);

}  // namespace qcount

#endif
