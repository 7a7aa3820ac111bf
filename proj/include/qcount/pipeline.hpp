#ifndef QCOUNT_PIPELINE_HPP
#define QCOUNT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcount/chromatic.hpp"
#include "qcount/extension.hpp"
#include "qcount/graph.hpp"
#include "qcount/partitions.hpp"
#include "qcount/poly.hpp"

namespace qcount {

enum class CatalogFilter { none, edge_critical_5, ramsey44 };

std::optional<CatalogFilter> parse_filter_name(const std::string& name);
std::string filter_name(CatalogFilter f);

struct CatalogSpec {
    std::string path;
    CatalogFilter filter = CatalogFilter::none;
    std::optional<long> expected_count;
};

// Manifest: one spec per line, "path<TAB>filter<TAB>expected_count" where the
// filter is one of 5-edge-critical / ramsey44 / none and the count may be "-".
// Lines starting with '#' are skipped.
std::vector<CatalogSpec> parse_manifest(const std::string& path);

struct CatalogReport {
    std::string path;
    CatalogFilter filter = CatalogFilter::none;
    size_t parsed = 0;        // successfully decoded graph6 lines
    size_t parse_errors = 0;  // skipped lines
    size_t filtered = 0;      // passed the filter
    size_t rejected = 0;      // parsed - filtered
    size_t gate_rejected = 0; // passed filter but not connected 5-chromatic
    size_t checked = 0;       // graphs that reached the bound check
    size_t strict = 0;        // strict bound, <<-certified
    size_t strict_pointwise = 0;
    size_t equalities = 0;
    std::vector<std::string> violations;  // graph6 of failing graphs
    bool expected_count_ok = true;
    std::optional<long> expected_count;
    double wall_seconds = 0;
};

struct VerifyOptions {
    int jobs = 1;
    size_t sample = 0;  // bound-check only ~this many filtered graphs (0 = all)
    PolyCache* cache = nullptr;
};

// true iff g has no clique of size 4 and no independent set of size 4
bool ramsey44_filter(const Graph& g);

CatalogReport verify_catalog(const CatalogSpec& spec, const VerifyOptions& opts = {});

// The four single-vertex bound applications eliminating an independent 4-set,
// starting from the cofactor y^2 and the partition count N_2 = 7 of a 4-set.
struct ChainStep {
    int b_exponent;   // B = y^b * Q0
    int r;
    long nr;
    IntPoly cofactor; // resulting cofactor of Q0
};

struct ChainTranscript {
    long n2_independent_4set = 0;  // computed partition count, expected 7
    std::vector<ChainStep> steps;
    IntPoly final_cap;    // y^6 - 3y^5
    bool final_ll_ok = false;
    bool cofactors_ok = false;  // all four match the expected polynomials
    bool ok = false;
    std::string to_string() const;
};

ChainTranscript replay_theorem_chain();

// K5 plus n-5 vertices attached one at a time to a uniformly chosen existing
// vertex (deterministic in seed); Q equals bound_poly(5, n) exactly.
Graph extremal_family(int n, uint64_t seed);

// Random graphs on n vertices (each pair an independent coin flip); connected
// 5-chromatic samples are bound-checked. 6 <= n <= 11.
CatalogReport random_critical_search(int n, long trials, uint64_t seed, const VerifyOptions& opts = {});

struct SmallCheckSlice {
    int n = 0;
    bool available = true;   // false for the n = 8 slice without a catalog
    size_t critical = 0;     // vertex-critical 5-chromatic graphs found
    size_t passed = 0;
    std::vector<std::string> violations;
};

struct SmallCheckReport {
    std::vector<SmallCheckSlice> slices;
    bool all_passed = true;
};

// Exhaustively checks every 5-critical graph on n <= max_n (max 7) vertices
// against the bound; an optional graph6 catalog provides the n = 8 slice.
SmallCheckReport small_critical_check(int max_n = 7, const std::string& n8_catalog = "",
                                      const VerifyOptions& opts = {});

enum class ReportFormat { text, csv, json };
std::optional<ReportFormat> parse_format_name(const std::string& name);

std::string emit_r_table(const std::vector<FiveSetReport>& reports, ReportFormat fmt);
std::string emit_w_table(const std::vector<FiveSetReport>& reports, ReportFormat fmt);
std::string emit_catalog_report(const CatalogReport& report, ReportFormat fmt);

}  // namespace qcount

#endif
