#include "qcount/extension.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace qcount {

SPrimeProfile SPrimeProfile::from(const Graph& h) {
    if (h.n != 5) throw std::invalid_argument("SPrimeProfile: needs a 5-vertex graph");
    SPrimeProfile p;
    p.h = h;
    for (int v = 0; v < 5; ++v) {
        p.dprime[v] = 4 - h.degree(v);
        if (p.dprime[v] >= 2) p.sprime |= 1u << v;
        if (p.dprime[v] == 0) p.universal.push_back(v);
    }
    return p;
}

std::array<int, 5> forbidden_slots(const SPrimeProfile& profile, uint32_t T) {
    if (T & ~profile.sprime) throw std::invalid_argument("forbidden_slots: T must be a subset of S'");
    std::array<int, 5> slots{};
    for (int v = 0; v < 5; ++v) {
        if ((T >> v) & 1)
            slots[v] = 1;
        else if ((profile.sprime >> v) & 1)
            slots[v] = 2;
        else
            slots[v] = profile.dprime[v];  // 0 or 1
    }
    return slots;
}

int delta_prime(const SPrimeProfile& profile, uint32_t T) {
    int d = 1;
    for (int v = 0; v < 5; ++v)
        if ((T >> v) & 1) d = std::max(d, profile.dprime[v]);
    return d;
}

namespace {

using Masks = std::vector<uint32_t>;

struct CountMemo {
    std::unordered_map<std::string, IntPoly> map;
};

std::string memo_key(int n, const uint32_t* adj, const Masks& masks) {
    std::string k;
    k.reserve(2 + n + masks.size());
    k.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) k.push_back(static_cast<char>(adj[i]));
    k.push_back('\x7f');
    for (uint32_t m : masks) k.push_back(static_cast<char>(m));
    return k;
}

uint32_t drop_bit(uint32_t mask, int v) {
    uint32_t lo = mask & ((1u << v) - 1);
    uint32_t hi = (v + 1 < 32) ? (mask >> (v + 1)) << v : 0;
    return lo | hi;
}

IntPoly count_rec(int n, uint32_t* adj, Masks masks, CountMemo& memo) {
    int eu = -1, ev = -1;
    for (int u = 0; u < n && eu < 0; ++u) {
        uint32_t m = adj[u] >> (u + 1);
        if (m) {
            eu = u;
            ev = u + 1 + __builtin_ctz(m);
        }
    }
    if (eu < 0) {
        IntPoly p = IntPoly::constant(1);
        for (int v = 0; v < n; ++v) {
            int cnt = 0;
            for (uint32_t m : masks) cnt += (m >> v) & 1;
            p = p * IntPoly::linear(1 - cnt);  // y + 1 - cnt
        }
        return p;
    }
    std::sort(masks.begin(), masks.end());
    std::string key = memo_key(n, adj, masks);
    auto it = memo.map.find(key);
    if (it != memo.map.end()) return it->second;

    // delete eu-ev
    uint32_t dadj[5];
    std::copy(adj, adj + n, dadj);
    dadj[eu] &= ~(1u << ev);
    dadj[ev] &= ~(1u << eu);
    IntPoly del = count_rec(n, dadj, masks, memo);

    // contract ev into eu, compact labels above ev
    uint32_t cadj[5] = {0, 0, 0, 0, 0};
    uint32_t extra = adj[ev] & ~(1u << eu);
    for (int w = 0; w < n; ++w) {
        if (w == ev) continue;
        uint32_t nw = adj[w] & ~(1u << ev);
        if (w == eu) nw = (nw | extra) & ~(1u << eu);
        cadj[w > ev ? w - 1 : w] = drop_bit(nw, ev);
    }
    for (int w = 0; w < n - 1; ++w)
        if ((cadj[eu] >> w) & 1) cadj[w] |= 1u << eu;
    Masks cmasks;
    cmasks.reserve(masks.size());
    for (uint32_t m : masks) {
        if ((m >> ev) & 1) m = (m & ~(1u << ev)) | (1u << eu);
        cmasks.push_back(drop_bit(m, ev));
    }
    IntPoly con = count_rec(n - 1, cadj, std::move(cmasks), memo);

    IntPoly result = del - con;
    memo.map.emplace(std::move(key), result);
    return result;
}

struct PatternMaxResult {
    IntPoly value;
    bool unique = true;
    std::vector<IntPoly> maximal;
    uint64_t raw = 0;
    uint64_t configs = 0;
};

void enum_configs(const std::vector<int>& slotv, size_t i, Masks& blocks, uint64_t& raw,
                  std::set<Masks>& configs) {
    if (i == slotv.size()) {
        ++raw;
        Masks sorted = blocks;
        std::sort(sorted.begin(), sorted.end());
        configs.insert(std::move(sorted));
        return;
    }
    int v = slotv[i];
    size_t nblocks = blocks.size();  // recursion grows the vector; don't iterate past the snapshot
    for (size_t b = 0; b < nblocks; ++b) {
        if ((blocks[b] >> v) & 1) continue;  // slots of one vertex are distinct colours
        blocks[b] |= 1u << v;
        enum_configs(slotv, i + 1, blocks, raw, configs);
        blocks[b] &= ~(1u << v);
    }
    blocks.push_back(1u << v);
    enum_configs(slotv, i + 1, blocks, raw, configs);
    blocks.pop_back();
}

bool less_at_infinity(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

// <<_4-maximal scenario count over all equality patterns of the slots, with
// `shared` additional classes forbidden at every vertex (kept outside the
// pattern space).
PatternMaxResult pattern_max(int n, const uint32_t* adj, const std::array<int, 5>& slots, int shared,
                             CountMemo& memo) {
    std::vector<int> slotv;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < slots[v]; ++i) slotv.push_back(v);
    uint32_t all = (n == 32) ? 0xffffffffu : ((1u << n) - 1);

    PatternMaxResult out;
    std::set<Masks> configs;
    Masks blocks;
    enum_configs(slotv, 0, blocks, out.raw, configs);
    out.configs = configs.size();

    std::set<std::vector<BigInt>> values;
    for (const Masks& cfg : configs) {
        Masks masks = cfg;
        for (int s = 0; s < shared; ++s) masks.push_back(all);
        uint32_t a[5];
        std::copy(adj, adj + n, a);
        values.insert(count_rec(n, a, std::move(masks), memo).coeffs());
    }
    std::vector<IntPoly> polys;
    polys.reserve(values.size());
    for (auto& v : values) polys.emplace_back(std::vector<BigInt>(v));

    for (const IntPoly& p : polys) {
        bool dominated = false;
        for (const IntPoly& q : polys) {
            if (q != p && ll_leq(p, q, 4)) { dominated = true; break; }
        }
        if (!dominated) out.maximal.push_back(p);
    }
    out.unique = out.maximal.size() == 1;
    out.value = *std::max_element(out.maximal.begin(), out.maximal.end(), less_at_infinity);
    return out;
}

}  // namespace

IntPoly count_extensions(const Graph& h, const std::vector<uint32_t>& class_masks) {
    if (h.n < 1 || h.n > 5) throw std::invalid_argument("count_extensions: 1..5 vertices");
    for (uint32_t m : class_masks)
        if (m & ~h.vertex_mask()) throw std::invalid_argument("count_extensions: class outside vertex set");
    CountMemo memo;
    uint32_t adj[5];
    std::copy(h.adj.begin(), h.adj.begin() + h.n, adj);
    return count_rec(h.n, adj, class_masks, memo);
}

namespace {

ETResult extension_bound_impl(const SPrimeProfile& profile, uint32_t T, const EngineOptions& opts,
                              CountMemo& memo) {
    auto slots = forbidden_slots(profile, T);
    uint32_t adj[5];
    std::copy(profile.h.adj.begin(), profile.h.adj.begin() + 5, adj);
    PatternMaxResult base = pattern_max(5, adj, slots, 0, memo);

    ETResult r;
    r.value = base.value;
    r.unique_max = base.unique;
    r.maximal = base.maximal;
    r.scenarios = base.raw;
    r.distinct_configs = base.configs;

    if (opts.universal_set_terms && profile.universal.size() >= 2) {
        int u = static_cast<int>(profile.universal.size());
        for (uint32_t sub = 1; sub < (1u << u); ++sub) {
            int w = __builtin_popcount(sub);
            if (w < 2 || w % 2) continue;
            uint32_t Wmask = 0;
            for (int i = 0; i < u; ++i)
                if ((sub >> i) & 1) Wmask |= 1u << profile.universal[i];
            // induced subgraph on the kept vertices, labels compacted
            std::vector<int> keep;
            for (int v = 0; v < 5; ++v)
                if (!((Wmask >> v) & 1)) keep.push_back(v);
            int m = static_cast<int>(keep.size());
            uint32_t sadj[5] = {0, 0, 0, 0, 0};
            std::array<int, 5> sslots{};
            for (int a = 0; a < m; ++a) {
                sslots[a] = slots[keep[a]];
                for (int b = 0; b < m; ++b)
                    if (b != a && profile.h.has_edge(keep[a], keep[b])) sadj[a] |= 1u << b;
            }
            PatternMaxResult extra = pattern_max(m, sadj, sslots, w, memo);
            r.value = r.value + extra.value;
            r.unique_max = r.unique_max && extra.unique;
            r.scenarios += extra.raw;
            r.distinct_configs += extra.configs;
        }
    }
    return r;
}

}  // namespace

ETResult extension_bound(const SPrimeProfile& profile, uint32_t T, const EngineOptions& opts) {
    CountMemo memo;
    return extension_bound_impl(profile, T, opts, memo);
}

std::map<uint32_t, IntPoly> moebius_inverse(const std::map<uint32_t, IntPoly>& E) {
    std::map<uint32_t, IntPoly> Ep;
    for (const auto& [T, et] : E) {
        IntPoly acc;
        uint32_t sub = T;
        while (true) {
            auto it = E.find(sub);
            if (it == E.end()) throw std::invalid_argument("moebius_inverse: missing subset value");
            if (__builtin_popcount(T ^ sub) % 2 == 0)
                acc = acc + it->second;
            else
                acc = acc - it->second;
            if (sub == 0) break;
            sub = (sub - 1) & T;
        }
        Ep[T] = acc;
    }
    // inverse identity: E_T = sum over subsets of E'_U
    for (const auto& [T, et] : E) {
        IntPoly acc;
        uint32_t sub = T;
        while (true) {
            acc = acc + Ep.at(sub);
            if (sub == 0) break;
            sub = (sub - 1) & T;
        }
        if (acc != et) throw std::runtime_error("moebius_inverse: inverse identity failed");
    }
    return Ep;
}

std::pair<IntPoly, bool> certify_against_cap(const IntPoly& R) {
    IntPoly cap = IntPoly::linear(-3).mul_power(7);  // y^7 (y - 3)
    IntPoly W = (cap - R).compose_shift(4);
    return {W, W.all_coeffs_nonneg()};
}

FiveSetReport analyze_five_set(const Graph& h, const EngineOptions& opts) {
    SPrimeProfile profile = SPrimeProfile::from(h);
    CountMemo memo;
    FiveSetReport rep;
    rep.h = h;
    rep.key = canonical_key(h);
    auto& index = reference_index();
    auto it = index.find(rep.key);
    if (it != index.end()) rep.label = reference_rows()[it->second].label;

    std::map<uint32_t, IntPoly> E;
    std::map<uint32_t, ETResult> results;
    uint32_t sp = profile.sprime;
    uint32_t sub = sp;
    while (true) {
        results[sub] = extension_bound_impl(profile, sub, opts, memo);
        E[sub] = results[sub].value;
        if (sub == 0) break;
        sub = (sub - 1) & sp;
    }
    auto Ep = moebius_inverse(E);

    for (auto& [T, et] : E) {
        TRecord rec;
        rec.T = T;
        rec.delta = delta_prime(profile, T);
        rec.E = et;
        rec.Eprime = Ep.at(T);
        rec.sign = classify_sign(rec.Eprime, 4);
        rec.unique_max = results[T].unique_max;
        rec.scenarios = results[T].scenarios;
        if (!rec.unique_max) rep.any_nonunique_max = true;
        if (rec.sign.verdict == Sign::inconclusive) rep.any_inconclusive_sign = true;
        rep.records.push_back(rec);
    }
    std::sort(rep.records.begin(), rep.records.end(), [](const TRecord& a, const TRecord& b) {
        if (__builtin_popcount(a.T) != __builtin_popcount(b.T))
            return __builtin_popcount(a.T) < __builtin_popcount(b.T);
        return a.T < b.T;
    });

    for (const TRecord& rec : rep.records) {
        IntPoly term = rec.Eprime.mul_power(4 - rec.delta);
        rep.R_all = rep.R_all + term;
        if (rec.sign.verdict == Sign::positive) rep.R_plus = rep.R_plus + term;
    }
    std::tie(rep.W_plus, rep.w_plus_nonneg) = certify_against_cap(rep.R_plus);
    std::tie(rep.W_all, rep.w_all_nonneg) = certify_against_cap(rep.R_all);

    if (it != index.end()) {
        const ReferenceRow& row = reference_rows()[it->second];
        rep.matches_reference_R = (rep.R_plus == *IntPoly::parse(row.R));
        rep.matches_reference_W = (rep.W_plus == *IntPoly::parse(row.W));
    }
    return rep;
}

std::vector<FiveSetReport> run_all_five_sets(const EngineOptions& opts) {
    std::vector<Graph> graphs = enumerate_unlabeled(5);
    std::vector<FiveSetReport> reports(graphs.size());
    int jobs = std::max(1, opts.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            reports[i] = analyze_five_set(graphs[i], opts);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    // reference row order; unknown keys (impossible for n = 5) would sort last
    auto& index = reference_index();
    std::sort(reports.begin(), reports.end(), [&](const FiveSetReport& a, const FiveSetReport& b) {
        auto ia = index.find(a.key), ib = index.find(b.key);
        int ra = ia == index.end() ? 99 : ia->second;
        int rb = ib == index.end() ? 99 : ib->second;
        return ra < rb;
    });
    return reports;
}

const std::array<ReferenceRow, 34>& reference_rows() {
    static const std::array<ReferenceRow, 34> rows = {{
        {"5K1", "", false,
         "y^8 - 5y^7 + 10y^6 - 10y^5 + 10y^4 - 11y^3 + 10y^2 - 5y + 1",
         "2z^7 + 46z^6 + 442z^5 + 2270z^4 + 6571z^3 + 10170z^2 + 6597z + 51"},
        {"K2+3K1", "01", false,
         "y^8 - 6y^7 + 16y^6 - 20y^5 + 9y^4 + 5y^3 - 4y^2 - y + 1",
         "3z^7 + 68z^6 + 644z^5 + 3271z^4 + 9451z^3 + 14952z^2 + 10801z + 1539"},
        {"P3+2K1", "01 12", false,
         "y^8 - 7y^7 + 24y^6 - 43y^5 + 38y^4 - 10y^3 - 3y^2 + 1",
         "4z^7 + 88z^6 + 811z^5 + 4022z^4 + 11402z^3 + 17851z^2 + 13048z + 2223"},
        {"K3+2K1", "01 12 02", false,
         "y^8 - 8y^7 + 33y^6 - 78y^5 + 102y^4 - 71y^3 + 29y^2 - 13y + 4",
         "5z^7 + 107z^6 + 966z^5 + 4738z^4 + 13479z^3 + 21751z^2 + 17525z + 4640"},
        {"K13+K1", "01 02 03", false,
         "y^8 - 7y^7 + 24y^6 - 41y^5 + 26y^4 + 17y^3 - 29y^2 + 9y + 1",
         "4z^7 + 88z^6 + 809z^5 + 3994z^4 + 11247z^3 + 17425z^2 + 12463z + 1899"},
        {"K14", "01 02 03 04", false,
         "y^8 - 7y^7 + 24y^6 - 40y^5 + 22y^4 + 26y^3 - 39y^2 + 14y",
         "4z^7 + 88z^6 + 808z^5 + 3978z^4 + 11142z^3 + 17071z^2 + 11850z + 1464"},
        {"2K2+K1", "01 23", false,
         "y^8 - 7y^7 + 23y^6 - 37y^5 + 23y^4 + 18y^3 - 34y^2 + 13y + 1",
         "4z^7 + 89z^6 + 829z^5 + 4157z^4 + 11934z^3 + 18986z^2 + 14243z + 2667"},
        {"P4+K1", "01 12 23", false,
         "y^8 - 8y^7 + 33y^6 - 75y^5 + 93y^4 - 49y^3 - y^2 + 5y + 2",
         "5z^7 + 107z^6 + 963z^5 + 4687z^4 + 13121z^3 + 20461z^2 + 15155z + 2874"},
        {"paw+K1", "01 12 02 03", false,
         "y^8 - 8y^7 + 33y^6 - 80y^5 + 111y^4 - 77y^3 + 21y^2 - 6y + 5",
         "5z^7 + 107z^6 + 968z^5 + 4769z^4 + 13661z^3 + 22247z^2 + 18126z + 4867"},
        {"C4+K1", "01 12 23 03", false,
         "y^8 - 9y^7 + 44y^6 - 121y^5 + 190y^4 - 155y^3 + 57y^2 - 11y + 5",
         "6z^7 + 124z^6 + 1081z^5 + 5110z^4 + 13915z^3 + 21067z^2 + 14931z + 2391"},
        {"co-(K14+e)", "01 02 03 04 12", true,
         "y^8 - 8y^7 + 33y^6 - 80y^5 + 113y^4 - 86y^3 + 36y^2 - 18y + 10",
         "5z^7 + 107z^6 + 968z^5 + 4767z^4 + 13638z^3 + 22148z^2 + 17938z + 4734"},
        {"K4+K1", "01 02 03 12 13 23", false,
         "y^8 - 7y^7 + 23y^6 - 45y^5 + 50y^4 - 27y^3 + 17y^2 - 28y + 21",
         "4z^7 + 89z^6 + 837z^5 + 4290z^4 + 12827z^3 + 22003z^2 + 19364z + 6155"},
        {"P3+K2", "01 12 34", false,
         "y^8 - 8y^7 + 32y^6 - 69y^5 + 80y^4 - 28y^3 - 30y^2 + 23y",
         "5z^7 + 108z^6 + 981z^5 + 4820z^4 + 13628z^3 + 21486z^2 + 16153z + 3204"},
        {"fork", "01 12 23 24", false,
         "y^8 - 8y^7 + 33y^6 - 75y^5 + 91y^4 - 32y^3 - 37y^2 + 28y",
         "5z^7 + 107z^6 + 963z^5 + 4689z^4 + 13136z^3 + 20485z^2 + 15116z + 2784"},
        {"K14+e", "01 02 03 04 12", false,
         "y^8 - 8y^7 + 33y^6 - 81y^5 + 118y^4 - 87y^3 + 16y^2 + 8y",
         "5z^7 + 107z^6 + 969z^5 + 4782z^4 + 13719z^3 + 22340z^2 + 18120z + 4768"},
        {"P5", "01 12 23 34", false,
         "y^8 - 9y^7 + 43y^6 - 117y^5 + 186y^4 - 148y^3 + 29y^2 + 16y",
         "6z^7 + 125z^6 + 1101z^5 + 5274z^4 + 14612z^3 + 22675z^2 + 16840z + 3312"},
        {"bull", "01 12 02 03 14", false,
         "y^8 - 8y^7 + 33y^6 - 80y^5 + 110y^4 - 64y^3 - 13y^2 + 21y",
         "5z^7 + 107z^6 + 968z^5 + 4770z^4 + 13664z^3 + 22221z^2 + 18003z + 4732"},
        {"C4+leaf", "01 12 23 03 04", false,
         "y^8 - 9y^7 + 44y^6 - 124y^5 + 207y^4 - 179y^3 + 50y^2 + 11y",
         "6z^7 + 124z^6 + 1084z^5 + 5153z^4 + 14147z^3 + 21650z^2 + 15605z + 2676"},
        {"co-(paw+K1)", "01 12 02 03", true,
         "y^8 - 8y^7 + 33y^6 - 80y^5 + 114y^4 - 84y^3 + 18y^2 + 6y",
         "5z^7 + 107z^6 + 968z^5 + 4766z^4 + 13620z^3 + 22046z^2 + 17706z + 4552"},
        {"K23", "03 04 13 14 23 24", false,
         "y^8 - 9y^7 + 45y^6 - 129y^5 + 219y^4 - 199y^3 + 73y^2",
         "6z^7 + 123z^6 + 1065z^5 + 5001z^4 + 13495z^3 + 20075z^2 + 13576z + 1584"},
        {"co-(K3+2K1)", "01 12 02", true,
         "y^8 - 8y^7 + 34y^6 - 87y^5 + 137y^4 - 121y^3 + 43y^2",
         "5z^7 + 106z^6 + 951z^5 + 4643z^4 + 13129z^3 + 20897z^2 + 16216z + 3728"},
        {"C5", "01 12 23 34 04", false,
         "y^8 - 10y^7 + 55y^6 - 180y^5 + 374y^4 - 512y^3 + 415y^2",
         "7z^7 + 141z^6 + 1212z^5 + 5706z^4 + 15648z^3 + 24353z^2 + 18696z + 4112"},
        {"co-P5", "01 12 23 34", true,
         "y^8 - 9y^7 + 44y^6 - 130y^5 + 233y^4 - 227y^3 + 85y^2",
         "6z^7 + 124z^6 + 1090z^5 + 5247z^4 + 14739z^3 + 23535z^2 + 18664z + 4720"},
        {"co-(P4+K1)", "01 12 23", true,
         "y^8 - 8y^7 + 33y^6 - 83y^5 + 127y^4 - 106y^3 + 36y^2",
         "5z^7 + 107z^6 + 971z^5 + 4813z^4 + 13914z^3 + 22964z^2 + 19136z + 5440"},
        {"co-(P3+K2)", "01 12 34", true,
         "y^8 - 8y^7 + 34y^6 - 85y^5 + 123y^4 - 90y^3 + 21y^2",
         "5z^7 + 106z^6 + 949z^5 + 4617z^4 + 13002z^3 + 20611z^2 + 15928z + 3632"},
        {"co-(P3+2K1)", "01 12", true,
         "y^8 - 7y^7 + 24y^6 - 52y^5 + 66y^4 - 36y^3 - y^2",
         "4z^7 + 88z^6 + 820z^5 + 4174z^4 + 12420z^3 + 21233z^2 + 18632z + 5904"},
        {"co-(2K2+K1)", "01 23", true,
         "y^8 - 7y^7 + 24y^6 - 45y^5 + 44y^4 - 17y^3",
         "4z^7 + 88z^6 + 813z^5 + 4056z^4 + 11633z^3 + 18636z^2 + 14384z + 3136"},
        {"K5-e", "01 02 03 04 12 13 14 23 24", false,
         "y^8 - 6y^7 + 17y^6 - 36y^5 + 57y^4 - 42y^3",
         "3z^7 + 67z^6 + 636z^5 + 3303z^4 + 10010z^3 + 17304z^2 + 15072z + 4480"},
        {"K5", "01 02 03 04 12 13 14 23 24 34", false,
         "y^8 - 5y^7 + 15y^6 - 55y^5 + 109y^4 - 75y^3",
         "2z^7 + 41z^6 + 367z^5 + 1871z^4 + 5851z^3 + 11044z^2 + 11280z + 4544"},
        {"K3+K2", "01 12 02 34", false,
         "y^8 - 9y^7 + 42y^6 - 114y^5 + 183y^4 - 157y^3 + 41y^2 + 12y",
         "6z^7 + 126z^6 + 1122z^5 + 5457z^4 + 15469z^3 + 24979z^2 + 20252z + 5504"},
        {"co-(C4+leaf)", "01 12 23 03 04", true,
         "y^8 - 9y^7 + 43y^6 - 123y^5 + 213y^4 - 198y^3 + 60y^2 + 12y",
         "6z^7 + 125z^6 + 1107z^5 + 5367z^4 + 15190z^3 + 24492z^2 + 19764z + 5264"},
        {"co-fork", "01 12 23 24", true,
         "y^8 - 8y^7 + 33y^6 - 81y^5 + 117y^4 - 81y^3 + 3y^2 + 15y",
         "5z^7 + 107z^6 + 969z^5 + 4783z^4 + 13729z^3 + 22377z^2 + 18185z + 4820"},
        {"co-(K13+K1)", "01 02 03", true,
         "y^8 - 7y^7 + 23y^6 - 45y^5 + 48y^4 - 12y^3 - 23y^2 + 14y",
         "4z^7 + 89z^6 + 837z^5 + 4292z^4 + 12844z^3 + 22055z^2 + 19434z + 6200"},
        {"co-(C4+K1)", "01 12 23 03", true,
         "y^8 - 9y^7 + 43y^6 - 125y^5 + 222y^4 - 217y^3 + 85y^2",
         "6z^7 + 125z^6 + 1109z^5 + 5398z^4 + 15385z^3 + 25111z^2 + 20744z + 5872"},
    }};
    return rows;
}

Graph reference_graph(const ReferenceRow& row) {
    Graph g(5);
    std::istringstream ss(row.edges);
    std::string tok;
    while (ss >> tok) g.add_edge(tok[0] - '0', tok[1] - '0');
    return row.complement ? complement(g) : g;
}

const std::map<std::string, int>& reference_index() {
    static const std::map<std::string, int> index = [] {
        std::map<std::string, int> m;
        const auto& rows = reference_rows();
        for (size_t i = 0; i < rows.size(); ++i) {
            std::string key = canonical_key(reference_graph(rows[i]));
            if (!m.emplace(key, static_cast<int>(i)).second)
                throw std::logic_error("reference rows contain isomorphic graphs");
        }
        return m;
    }();
    return index;
}

}  // namespace qcount
