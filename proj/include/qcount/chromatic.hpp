#ifndef QCOUNT_CHROMATIC_HPP
#define QCOUNT_CHROMATIC_HPP

#include <mutex>
#include <string>
#include <unordered_map>

#include "qcount/graph.hpp"
#include "qcount/poly.hpp"

namespace qcount {

// Memo table for shifted chromatic polynomials, keyed on canonical_key so
// isomorphic subproblems share entries. Safe for concurrent use; all writers
// compute identical values so overwrites are benign.
class PolyCache {
public:
    bool lookup(const std::string& key, IntPoly& out) const;
    void insert(const std::string& key, const IntPoly& value);
    size_t size() const;

    // File format: one record per line, "graph6-of-canonical-form<TAB>c0,c1,...".
    // Loading is best effort: corrupt lines are skipped and counted. A few
    // loaded entries are re-derived from scratch as an audit; a mismatch throws.
    size_t load(const std::string& path, size_t* corrupt_lines = nullptr, int audit = 3);
    size_t save(const std::string& path) const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, IntPoly> map_;
};

// Q_G(y) = P_G(y+1), the shifted chromatic polynomial, by deletion-contraction
// with reductions: component products, isolated/pendant peeling, complete-graph
// closed form, then branching on an edge whose endpoints share the most common
// neighbours. cache may be null.
IntPoly q_poly(const Graph& g, PolyCache* cache = nullptr);

// Exact number of proper x-colourings by exhaustive assignment with pruning.
// Guarded to n <= 10 and x <= 8.
BigInt count_colourings_bruteforce(const Graph& g, int x);

enum class BoundVerdict { equality, strict, violation };

struct BoundCheck {
    BoundVerdict verdict = BoundVerdict::violation;
    bool ll_certified = false;  // strict via <<_k; otherwise pointwise on [k, k+deg+1]
    long checked_from = 0, checked_to = 0;
    long witness_y = 0;  // first failing y when verdict == violation
    IntPoly q, bound;
};

// Compares Q_G against bound_poly(k, n). Requires g connected with chi(g) = k.
BoundCheck verify_bound(const Graph& g, int k, PolyCache* cache = nullptr);

}  // namespace qcount

#endif
