#include "qcount/pipeline.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace qcount {

std::optional<CatalogFilter> parse_filter_name(const std::string& name) {
    if (name == "none") return CatalogFilter::none;
    if (name == "5-edge-critical") return CatalogFilter::edge_critical_5;
    if (name == "ramsey44") return CatalogFilter::ramsey44;
    return std::nullopt;
}

std::string filter_name(CatalogFilter f) {
    switch (f) {
        case CatalogFilter::none: return "none";
        case CatalogFilter::edge_critical_5: return "5-edge-critical";
        case CatalogFilter::ramsey44: return "ramsey44";
    }
    return "?";
}

std::vector<CatalogSpec> parse_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("manifest: cannot open " + path);
    std::vector<CatalogSpec> specs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 2)
            throw std::runtime_error("manifest line " + std::to_string(lineno) + ": expected path<TAB>filter[<TAB>count]");
        CatalogSpec spec;
        spec.path = fields[0];
        auto f = parse_filter_name(fields[1]);
        if (!f) throw std::runtime_error("manifest line " + std::to_string(lineno) + ": unknown filter " + fields[1]);
        spec.filter = *f;
        if (fields.size() >= 3 && !fields[2].empty() && fields[2] != "-") spec.expected_count = std::stol(fields[2]);
        specs.push_back(spec);
    }
    return specs;
}

bool ramsey44_filter(const Graph& g) {
    return !has_clique(g, 4) && !has_independent_set(g, 4);
}

namespace {

bool passes_filter(const Graph& g, CatalogFilter f) {
    switch (f) {
        case CatalogFilter::none: return true;
        case CatalogFilter::edge_critical_5: return is_edge_critical(g, 5);
        case CatalogFilter::ramsey44: return ramsey44_filter(g);
    }
    return false;
}

struct GateResult {
    bool checked = false;
    BoundVerdict verdict = BoundVerdict::violation;
    bool ll_certified = false;
};

void run_parallel(size_t items, int jobs, const std::function<void(size_t)>& work) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || items <= 1) {
        for (size_t i = 0; i < items; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto loop = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= items) break;
            work(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(loop);
    for (auto& th : pool) th.join();
}

}  // namespace

CatalogReport verify_catalog(const CatalogSpec& spec, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    CatalogReport rep;
    rep.path = spec.path;
    rep.filter = spec.filter;
    rep.expected_count = spec.expected_count;

    std::ifstream in(spec.path);
    if (!in) throw std::runtime_error("verify_catalog: cannot open " + spec.path);
    std::vector<std::string> lines;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        first = false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }

    std::vector<int> status(lines.size(), 0);  // 0 parse error, 1 rejected, 2 filtered
    std::vector<Graph> graphs(lines.size());
    run_parallel(lines.size(), opts.jobs, [&](size_t i) {
        try {
            graphs[i] = parse_graph6(lines[i]);
        } catch (const Graph6Error&) {
            return;
        }
        status[i] = passes_filter(graphs[i], spec.filter) ? 2 : 1;
    });

    std::vector<size_t> kept;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (status[i] == 0) ++rep.parse_errors;
        else {
            ++rep.parsed;
            if (status[i] == 2) { ++rep.filtered; kept.push_back(i); }
            else ++rep.rejected;
        }
    }
    if (rep.expected_count && *rep.expected_count != static_cast<long>(rep.filtered))
        rep.expected_count_ok = false;

    // stratified sample of the filtered graphs for the bound stage
    std::vector<size_t> stage = kept;
    if (opts.sample > 0 && kept.size() > opts.sample) {
        stage.clear();
        size_t step = (kept.size() + opts.sample - 1) / opts.sample;
        for (size_t i = 0; i < kept.size(); i += step) stage.push_back(kept[i]);
    }

    std::vector<GateResult> results(stage.size());
    run_parallel(stage.size(), opts.jobs, [&](size_t i) {
        const Graph& g = graphs[stage[i]];
        if (!is_connected(g) || chromatic_number(g) != 5) return;  // gate
        BoundCheck chk = verify_bound(g, 5, opts.cache);
        results[i].checked = true;
        results[i].verdict = chk.verdict;
        results[i].ll_certified = chk.ll_certified;
    });
    for (size_t i = 0; i < stage.size(); ++i) {
        if (!results[i].checked) { ++rep.gate_rejected; continue; }
        ++rep.checked;
        switch (results[i].verdict) {
            case BoundVerdict::equality: ++rep.equalities; break;
            case BoundVerdict::strict:
                if (results[i].ll_certified) ++rep.strict;
                else ++rep.strict_pointwise;
                break;
            case BoundVerdict::violation: rep.violations.push_back(lines[stage[i]]); break;
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string ChainTranscript::to_string() const {
    std::ostringstream out;
    out << "independent 4-set partitions into two non-empty sets: " << n2_independent_4set << "\n";
    for (size_t i = 0; i < steps.size(); ++i) {
        const ChainStep& s = steps[i];
        out << "step " << i + 1 << ": B = y^" << s.b_exponent << " Q0, r = " << s.r << ", N_r = " << s.nr
            << "  ->  (" << s.cofactor.to_string() << ") Q0\n";
    }
    out << "final: last cofactor <<_4 " << final_cap.to_string() << " : " << (final_ll_ok ? "yes" : "NO") << "\n";
    out << (ok ? "chain verified" : "CHAIN FAILED") << "\n";
    return out.str();
}

ChainTranscript replay_theorem_chain() {
    ChainTranscript t;
    // N_2 of an independent 4-set, computed from the partitions module
    Graph empty4(4);
    t.n2_independent_4set = static_cast<long>(independent_partitions(empty4, 0xF, 2).size());

    static const char* expected[4] = {
        "y^3 - 2y^2 + 7",
        "y^4 - 4y^3 + 4y^2 + 14y - 14",
        "y^5 - 5y^4 + 8y^3 + 10y^2 - 27y + 14",
        "y^6 - 6y^5 + 13y^4 + 2y^3 - 36y^2 + 41y - 14",
    };
    struct Application { int b_exp, r; long nr; };
    const Application apps[4] = {{2, 2, 7}, {3, 2, 7}, {4, 1, 1}, {5, 1, 1}};

    IntPoly cofactor = IntPoly::monomial(1, 2);  // Q_{G0} <= y^2 Q0
    t.cofactors_ok = true;
    for (const auto& app : apps) {
        IntPoly B = IntPoly::monomial(1, app.b_exp);
        cofactor = single_vertex_bound(cofactor, BigInt(app.nr), app.r, 4, B);
        t.steps.push_back({app.b_exp, app.r, app.nr, cofactor});
    }
    for (int i = 0; i < 4; ++i)
        if (t.steps[i].cofactor != *IntPoly::parse(expected[i])) t.cofactors_ok = false;

    t.final_cap = *IntPoly::parse("y^6 - 3y^5");
    t.final_ll_ok = ll_leq(t.steps.back().cofactor, t.final_cap, 4);
    t.ok = t.cofactors_ok && t.final_ll_ok && t.n2_independent_4set == 7;
    return t;
}

Graph extremal_family(int n, uint64_t seed) {
    if (n < 5) throw std::invalid_argument("extremal_family: n >= 5");
    if (n > kMaxVertices) throw std::invalid_argument("extremal_family: n <= 32");
    Graph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    std::mt19937_64 rng(seed);
    for (int v = 5; v < n; ++v) {
        Graph next(v + 1);
        next.adj = g.adj;
        next.n = v + 1;
        int target = static_cast<int>(rng() % v);
        next.add_edge(v, target);
        g = next;
    }
    return g;
}

CatalogReport random_critical_search(int n, long trials, uint64_t seed, const VerifyOptions& opts) {
    if (n < 6 || n > 11) throw std::invalid_argument("random_critical_search: 6 <= n <= 11");
    auto t0 = std::chrono::steady_clock::now();
    CatalogReport rep;
    rep.path = "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
    rep.filter = CatalogFilter::none;

    int pairs = n * (n - 1) / 2;
    std::mt19937_64 rng(seed);
    std::vector<Graph> batch(trials > 0 ? trials : 0);
    for (long tidx = 0; tidx < trials; ++tidx) {
        uint64_t bits = rng();  // pairs <= 55 for n <= 11
        Graph g(n);
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if ((bits >> b) & 1) g.add_edge(u, v);
        batch[tidx] = g;
    }
    rep.parsed = batch.size();

    std::vector<int> verdicts(batch.size(), -1);  // -1 skip, else BoundVerdict
    std::vector<char> certified(batch.size(), 0);
    run_parallel(batch.size(), opts.jobs, [&](size_t i) {
        const Graph& g = batch[i];
        if (!is_connected(g) || chromatic_number(g) != 5) return;
        BoundCheck chk = verify_bound(g, 5, opts.cache);
        verdicts[i] = static_cast<int>(chk.verdict);
        certified[i] = chk.ll_certified ? 1 : 0;
    });
    for (size_t i = 0; i < batch.size(); ++i) {
        if (verdicts[i] < 0) { ++rep.rejected; continue; }
        ++rep.filtered;
        ++rep.checked;
        switch (static_cast<BoundVerdict>(verdicts[i])) {
            case BoundVerdict::equality: ++rep.equalities; break;
            case BoundVerdict::strict:
                if (certified[i]) ++rep.strict;
                else ++rep.strict_pointwise;
                break;
            case BoundVerdict::violation: rep.violations.push_back(encode_graph6(batch[i])); break;
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SmallCheckReport small_critical_check(int max_n, const std::string& n8_catalog, const VerifyOptions& opts) {
    if (max_n > 7) throw std::invalid_argument("small_critical_check: exhaustive slices go up to n = 7");
    SmallCheckReport rep;
    for (int n = 5; n <= max_n; ++n) {
        SmallCheckSlice slice;
        slice.n = n;
        auto all = enumerate_unlabeled(n);
        std::vector<Graph> critical;
        for (const Graph& g : all)
            if (is_vertex_critical(g, 5)) critical.push_back(g);
        slice.critical = critical.size();
        for (const Graph& g : critical) {
            BoundCheck chk = verify_bound(g, 5, opts.cache);
            if (chk.verdict == BoundVerdict::violation) slice.violations.push_back(encode_graph6(g));
            else ++slice.passed;
        }
        if (!slice.violations.empty()) rep.all_passed = false;
        rep.slices.push_back(slice);
    }
    SmallCheckSlice eight;
    eight.n = 8;
    if (n8_catalog.empty()) {
        eight.available = false;  // skipped: data unavailable
    } else {
        CatalogSpec spec{n8_catalog, CatalogFilter::none, std::nullopt};
        CatalogReport cat = verify_catalog(spec, opts);
        eight.critical = cat.checked;
        eight.passed = cat.equalities + cat.strict + cat.strict_pointwise;
        eight.violations = cat.violations;
        if (!cat.violations.empty()) rep.all_passed = false;
    }
    rep.slices.push_back(eight);
    return rep;
}

std::optional<ReportFormat> parse_format_name(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    return std::nullopt;
}

namespace {

nlohmann::json poly_json(const IntPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

std::string table_common(const std::vector<FiveSetReport>& reports, ReportFormat fmt, bool w_table) {
    std::ostringstream out;
    if (fmt == ReportFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json row;
            row["label"] = r.label;
            row["graph6"] = r.key;
            if (w_table) {
                row["W"] = r.W_plus.to_string("z");
                row["W_coeffs"] = poly_json(r.W_plus);
                row["nonneg"] = r.w_plus_nonneg;
                row["matches_reference"] = r.matches_reference_W;
            } else {
                row["R"] = r.R_plus.to_string();
                row["R_coeffs"] = poly_json(r.R_plus);
                row["R_all_terms"] = r.R_all.to_string();
                row["matches_reference"] = r.matches_reference_R;
            }
            arr.push_back(row);
        }
        out << arr.dump(2) << "\n";
        return out.str();
    }
    if (fmt == ReportFormat::csv) {
        auto coeff_list = [](const IntPoly& p) {
            std::string s;
            for (size_t i = 0; i < p.coeffs().size(); ++i) {
                if (i) s += ';';
                s += p.coeffs()[i].get_str();
            }
            return s;
        };
        out << "label,graph6,R_coeffs,W_coeffs,verdict,matches_reference\n";
        for (const auto& r : reports) {
            out << r.label << "," << r.key << "," << coeff_list(r.R_plus) << "," << coeff_list(r.W_plus)
                << "," << (r.w_plus_nonneg ? "nonneg" : "NEGATIVE") << ","
                << ((w_table ? r.matches_reference_W : r.matches_reference_R) ? 1 : 0) << "\n";
        }
        return out.str();
    }
    for (const auto& r : reports) {
        out << (w_table ? (r.matches_reference_W ? "  ok  " : " DIFF ")
                        : (r.matches_reference_R ? "  ok  " : " DIFF "));
        out << r.label;
        for (size_t i = r.label.size(); i < 14; ++i) out << ' ';
        out << (w_table ? r.W_plus.to_string("z") : r.R_plus.to_string()) << "\n";
    }
    size_t good = 0;
    for (const auto& r : reports) good += w_table ? r.matches_reference_W : r.matches_reference_R;
    out << good << "/" << reports.size() << " rows match the reference table\n";
    return out.str();
}

}  // namespace

std::string emit_r_table(const std::vector<FiveSetReport>& reports, ReportFormat fmt) {
    return table_common(reports, fmt, false);
}

std::string emit_w_table(const std::vector<FiveSetReport>& reports, ReportFormat fmt) {
    return table_common(reports, fmt, true);
}

std::string emit_catalog_report(const CatalogReport& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        nlohmann::json j;
        j["path"] = rep.path;
        j["filter"] = filter_name(rep.filter);
        j["parsed"] = rep.parsed;
        j["parse_errors"] = rep.parse_errors;
        j["filtered"] = rep.filtered;
        j["rejected"] = rep.rejected;
        j["gate_rejected"] = rep.gate_rejected;
        j["checked"] = rep.checked;
        j["strict"] = rep.strict;
        j["strict_pointwise"] = rep.strict_pointwise;
        j["equalities"] = rep.equalities;
        j["violations"] = rep.violations;
        if (rep.expected_count) {
            j["expected_count"] = *rep.expected_count;
            j["expected_count_ok"] = rep.expected_count_ok;
        }
        j["wall_seconds"] = rep.wall_seconds;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (fmt == ReportFormat::csv) {
        out << "path,filter,parsed,parse_errors,filtered,rejected,gate_rejected,checked,strict,"
               "strict_pointwise,equalities,violations,expected_ok,wall_seconds\n";
        out << rep.path << "," << filter_name(rep.filter) << "," << rep.parsed << "," << rep.parse_errors
            << "," << rep.filtered << "," << rep.rejected << "," << rep.gate_rejected << "," << rep.checked
            << "," << rep.strict << "," << rep.strict_pointwise << "," << rep.equalities << ","
            << rep.violations.size() << "," << (rep.expected_count_ok ? 1 : 0) << "," << rep.wall_seconds
            << "\n";
        return out.str();
    }
    out << rep.path << " [" << filter_name(rep.filter) << "]\n";
    out << "  parsed " << rep.parsed << " (+" << rep.parse_errors << " parse errors), filtered "
        << rep.filtered << ", rejected " << rep.rejected << "\n";
    out << "  bound-checked " << rep.checked << " (gate rejected " << rep.gate_rejected << "): strict "
        << rep.strict << ", pointwise " << rep.strict_pointwise << ", equality " << rep.equalities
        << ", violations " << rep.violations.size() << "\n";
    if (rep.expected_count)
        out << "  expected filtered count " << *rep.expected_count << ": "
            << (rep.expected_count_ok ? "ok" : "MISMATCH") << "\n";
    for (const auto& v : rep.violations) out << "  VIOLATION " << v << "\n";
    out << "  wall time " << rep.wall_seconds << " s\n";
    return out.str();
}

}  // namespace qcount
