#include <CLI11.hpp>

#include <iostream>

#include "qcount/pipeline.hpp"

using namespace qcount;

namespace {

ReportFormat to_format(const std::string& name) {
    auto f = parse_format_name(name);
    if (!f) throw CLI::ValidationError("--format", "expected text, csv or json");
    return *f;
}

int run_verify_catalog(const std::string& manifest, const VerifyOptions& opts, ReportFormat fmt, bool full,
                       size_t sample) {
    auto specs = parse_manifest(manifest);
    VerifyOptions vo = opts;
    vo.sample = full ? 0 : sample;
    bool count_mismatch = false, violations = false;
    for (const auto& spec : specs) {
        CatalogReport rep = verify_catalog(spec, vo);
        std::cout << emit_catalog_report(rep, fmt);
        if (!rep.expected_count_ok) count_mismatch = true;
        if (!rep.violations.empty()) violations = true;
    }
    if (violations) return 2;
    if (count_mismatch) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact shifted-chromatic-polynomial toolkit: colouring-count bounds for 5-chromatic graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    int jobs = 1;
    std::string cache_path, format = "text";
    app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
    app.add_option("--cache", cache_path, "polynomial cache file (loaded if present, saved on exit)");
    app.add_option("--format", format, "output format: text, csv or json")->capture_default_str();

    auto* cmd_qpoly = app.add_subcommand("qpoly", "print Q_G(y) for a graph6 string");
    std::string g6;
    cmd_qpoly->add_option("graph6", g6, "graph6 line")->required();

    auto* cmd_cmp = app.add_subcommand("cmp", "compare two polynomials under the shifted-coefficient order");
    std::string p1s, p2s;
    long cmp_k = 4;
    cmd_cmp->add_option("p1", p1s)->required();
    cmd_cmp->add_option("p2", p2s)->required();
    cmd_cmp->add_option("--k", cmp_k, "shift parameter")->capture_default_str();

    bool strict_engine = false;
    auto* cmd_t1 = app.add_subcommand("table1", "emit R(y) for all 34 five-vertex graphs");
    cmd_t1->add_flag("--strict", strict_engine, "bare worst-case bounds (no universal-set terms)");
    auto* cmd_t2 = app.add_subcommand("table2", "emit W(z) certificates for all 34 five-vertex graphs");
    cmd_t2->add_flag("--strict", strict_engine, "bare worst-case bounds (no universal-set terms)");

    app.add_subcommand("theorem-chain", "replay the four single-vertex bound applications");

    auto* cmd_vc = app.add_subcommand("verify-catalog", "verify graph6 catalogs listed in a manifest");
    std::string manifest;
    bool full = false;
    size_t sample = 5000;
    cmd_vc->add_option("--manifest", manifest, "manifest file")->required();
    cmd_vc->add_flag("--full", full, "bound-check every filtered graph");
    cmd_vc->add_option("--sample", sample, "bound-check a stratified sample of this size")->capture_default_str();

    auto* cmd_ex = app.add_subcommand("extremal", "build a seeded extremal-family graph and verify equality");
    int ex_n = 5;
    uint64_t ex_seed = 0;
    cmd_ex->add_option("--n", ex_n, "order")->required();
    cmd_ex->add_option("--seed", ex_seed, "seed")->capture_default_str();

    auto* cmd_search = app.add_subcommand("search", "random connected 5-chromatic graphs vs the bound");
    int s_n = 8;
    long s_trials = 1000;
    uint64_t s_seed = 0;
    cmd_search->add_option("--n", s_n, "order (6..11)")->required();
    cmd_search->add_option("--trials", s_trials, "number of random graphs")->capture_default_str();
    cmd_search->add_option("--seed", s_seed, "seed")->capture_default_str();

    auto* cmd_small = app.add_subcommand("small-check", "exhaustive 5-critical check for n <= 7");
    std::string n8_catalog;
    cmd_small->add_option("--catalog", n8_catalog, "graph6 file supplying the n = 8 slice");

    CLI11_PARSE(app, argc, argv);

    PolyCache cache;
    PolyCache* cache_ptr = nullptr;
    if (!cache_path.empty()) {
        size_t corrupt = 0;
        size_t loaded = cache.load(cache_path, &corrupt);
        if (corrupt) std::cerr << "cache: skipped " << corrupt << " corrupt lines\n";
        if (loaded) std::cerr << "cache: loaded " << loaded << " entries\n";
        cache_ptr = &cache;
    }
    ReportFormat fmt = to_format(format);
    VerifyOptions vopts;
    vopts.jobs = jobs;
    vopts.cache = cache_ptr;

    int rc = 0;
    try {
        if (cmd_qpoly->parsed()) {
            Graph g = parse_graph6(g6);
            IntPoly q = q_poly(g, cache_ptr);
            if (fmt == ReportFormat::json) {
                std::cout << "{\"graph6\":\"" << g6 << "\",\"Q\":\"" << q.to_string() << "\"}\n";
            } else {
                std::cout << q.to_string() << "\n";
            }
        } else if (cmd_cmp->parsed()) {
            auto p1 = IntPoly::parse(p1s), p2 = IntPoly::parse(p2s);
            if (!p1 || !p2) {
                std::cerr << "cannot parse polynomial\n";
                return 4;
            }
            bool le = ll_leq(*p1, *p2, cmp_k), ge = ll_leq(*p2, *p1, cmp_k);
            if (*p1 == *p2) std::cout << "equal\n";
            else if (le) std::cout << "p1 <<_" << cmp_k << " p2\n";
            else if (ge) std::cout << "p2 <<_" << cmp_k << " p1\n";
            else std::cout << "incomparable under <<_" << cmp_k << "\n";
        } else if (cmd_t1->parsed() || cmd_t2->parsed()) {
            EngineOptions eo;
            eo.jobs = jobs;
            eo.universal_set_terms = !strict_engine;
            auto reports = run_all_five_sets(eo);
            std::cout << (cmd_t1->parsed() ? emit_r_table(reports, fmt) : emit_w_table(reports, fmt));
            for (const auto& r : reports)
                if (!r.w_plus_nonneg) rc = 2;
        } else if (app.get_subcommand("theorem-chain")->parsed()) {
            ChainTranscript t = replay_theorem_chain();
            std::cout << t.to_string();
            rc = t.ok ? 0 : 2;
        } else if (cmd_vc->parsed()) {
            rc = run_verify_catalog(manifest, vopts, fmt, full, sample);
        } else if (cmd_ex->parsed()) {
            Graph g = extremal_family(ex_n, ex_seed);
            IntPoly q = q_poly(g, cache_ptr);
            bool equal = (q == bound_poly(5, ex_n));
            std::cout << encode_graph6(g) << "\n";
            std::cout << "Q = " << q.to_string() << "\n";
            std::cout << (equal ? "matches the extremal bound exactly" : "DOES NOT match the bound") << "\n";
            rc = equal ? 0 : 2;
        } else if (cmd_search->parsed()) {
            CatalogReport rep = random_critical_search(s_n, s_trials, s_seed, vopts);
            std::cout << emit_catalog_report(rep, fmt);
            rc = rep.violations.empty() ? 0 : 2;
        } else if (cmd_small->parsed()) {
            SmallCheckReport rep = small_critical_check(7, n8_catalog, vopts);
            for (const auto& s : rep.slices) {
                std::cout << "n = " << s.n << ": ";
                if (!s.available) {
                    std::cout << "skipped: data unavailable\n";
                    continue;
                }
                std::cout << s.critical << " critical graphs, " << s.passed << " pass";
                for (const auto& v : s.violations) std::cout << ", VIOLATION " << v;
                std::cout << "\n";
            }
            rc = rep.all_passed ? 0 : 2;
        }
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    if (cache_ptr && !cache_path.empty()) cache.save(cache_path);
    return rc;
}
