#ifndef QCOUNT_EXTENSION_HPP
#define QCOUNT_EXTENSION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcount/graph.hpp"
#include "qcount/poly.hpp"

namespace qcount {

// Case-analysis engine for colourings extended to a 5-vertex set S with
// forbidden colours induced by the coloured outside neighbourhood.
//
// For a 5-set S with induced graph h = G[S], d'(v) = 4 - deg_h(v) is a lower
// bound on the outside neighbours of v (minimum degree 4 in the host graph),
// and S' collects the vertices with d'(v) >= 2. For each T subseteq S' the
// engine bounds the number of extensions of an outside colouring to S, given
// that the outside neighbourhood of v is monochromatic for v in T and not
// monochromatic for v in S' \ T.

struct SPrimeProfile {
    Graph h;  // exactly 5 vertices
    std::array<int, 5> dprime{};
    uint32_t sprime = 0;          // vertices with d'(v) >= 2
    std::vector<int> universal;   // vertices adjacent to all others (d' == 0, deg 4)

    static SPrimeProfile from(const Graph& h);
};

// Forbidden-colour slot counts: 1 for v in T (monochromatic outside), 2 for
// v in S' \ T (two distinct outside colours), d'(v) in {0,1} otherwise.
std::array<int, 5> forbidden_slots(const SPrimeProfile& profile, uint32_t T);

// Exact number of proper (y+1)-colourings of h where vertex v must avoid the
// colour of every class c with v in class_masks[c]; distinct classes are
// distinct colours. Deletion-contraction; an edgeless graph contributes
// prod_v (y + 1 - #classes at v), contraction unions class membership.
IntPoly count_extensions(const Graph& h, const std::vector<uint32_t>& class_masks);

struct ETResult {
    IntPoly value;                 // E_T
    bool unique_max = true;        // the <<-maximal scenario polynomial was unique
    std::vector<IntPoly> maximal;  // all <<-maximal scenario polynomials
    uint64_t scenarios = 0;        // equality patterns enumerated (pre-dedup)
    uint64_t distinct_configs = 0;
};

struct EngineOptions {
    // Adds, for every even-sized set W of universal vertices of h, the
    // <<-maximal scenario count of h - W with |W| extra globally forbidden
    // colours. Matches the embedded reference tables on graphs with two or
    // more universal vertices; disable for the bare worst-case bound.
    bool universal_set_terms = true;
    int jobs = 1;
};

// E_T: the unique <<_4-maximal scenario polynomial over all equality patterns
// of the forbidden-colour slots (same-vertex slots stay distinct). When the
// maximal set is not a singleton the largest-at-infinity element is taken and
// unique_max is false.
ETResult extension_bound(const SPrimeProfile& profile, uint32_t T, const EngineOptions& opts = {});

// Subset Moebius inversion: E'_T = sum_{U subseteq T} (-1)^{|T \ U|} E_U.
// Verifies the inverse identity E_T = sum_{U subseteq T} E'_U and throws on
// failure.
std::map<uint32_t, IntPoly> moebius_inverse(const std::map<uint32_t, IntPoly>& E);

// max({d'(v) : v in T} united with {1})
int delta_prime(const SPrimeProfile& profile, uint32_t T);

struct TRecord {
    uint32_t T = 0;
    int delta = 1;
    IntPoly E, Eprime;
    SignCertificate sign;
    bool unique_max = true;
    uint64_t scenarios = 0;
};

struct FiveSetReport {
    std::string key;    // canonical_key(h)
    std::string label;  // reference row label, empty if unknown
    Graph h;
    std::vector<TRecord> records;
    IntPoly R_all;   // sum over all T of E'_T y^(4 - delta'(T))
    IntPoly R_plus;  // sum over T with E'_T certified non-negative on y >= 4
    IntPoly W_plus;  // (z+4)^7 (z+1) - R_plus(z+4)
    IntPoly W_all;
    bool w_plus_nonneg = false;
    bool w_all_nonneg = false;
    bool matches_reference_R = false;  // R_plus equals the reference row
    bool matches_reference_W = false;
    bool any_nonunique_max = false;
    bool any_inconclusive_sign = false;
};

FiveSetReport analyze_five_set(const Graph& h, const EngineOptions& opts = {});

// Runs the analysis for every unlabelled 5-vertex graph, in reference row
// order. Parallelises over graphs when opts.jobs > 1.
std::vector<FiveSetReport> run_all_five_sets(const EngineOptions& opts = {});

// W(z) = (z+4)^7 (z+1) - R(z+4); second member is true iff all coefficients
// of W are non-negative, certifying R <<_4 y^7 (y-3).
std::pair<IntPoly, bool> certify_against_cap(const IntPoly& R);

// Embedded reference rows (label, construction, expected R and W).
struct ReferenceRow {
    const char* label;
    const char* edges;       // base-graph edge list, e.g. "01 12"; vertices 0..4
    bool complement;         // row graph is the complement of the edge list
    const char* R;
    const char* W;
};
const std::array<ReferenceRow, 34>& reference_rows();
// Graph of a reference row on vertices 0..4.
Graph reference_graph(const ReferenceRow& row);
// canonical_key -> row index
const std::map<std::string, int>& reference_index();

}  // namespace qcount

#endif
