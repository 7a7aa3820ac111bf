#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qcount/chromatic.hpp"

using namespace qcount;

namespace {

IntPoly P(const std::string& s) { return *IntPoly::parse(s); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed) {}
    uint64_t next() { return s = s * 6364136223846793005ull + 1442695040888963407ull; }
};

Graph random_graph(Lcg& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("closed forms") {
    CHECK(q_poly(complete(5)) == P("y+1") * P("y") * P("y-1") * P("y-2") * P("y-3"));
    // trees
    Graph star(6);
    for (int v = 1; v < 6; ++v) star.add_edge(0, v);
    CHECK(q_poly(star) == IntPoly::linear(1).mul_power(5));
    Graph pth(7);
    for (int v = 0; v < 6; ++v) pth.add_edge(v, v + 1);
    CHECK(q_poly(pth) == IntPoly::linear(1).mul_power(6));
    // C_5: brute-force interpolation fixed this polynomial
    CHECK(q_poly(cycle(5)) == P("y^5 - y"));
    // disconnected: product over components
    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(0, 2);
    two.add_edge(3, 4);
    CHECK(q_poly(two) == q_poly(complete(3)) * q_poly(complete(2)) * IntPoly::linear(1));
}

TEST_CASE("extremal family equality") {
    // K_5 with a tree grown from each clique vertex attains the bound exactly
    Graph g = complete(5);
    Lcg rng(9);
    for (int v = 5; v < 11; ++v) {
        Graph next(v + 1);
        next.adj = g.adj;
        next.n = v + 1;
        next.add_edge(v, static_cast<int>(rng.next() % v));
        g = next;
        CHECK(q_poly(g) == bound_poly(5, g.n));
    }
}

TEST_CASE("brute force oracle equivalence") {
    CHECK(count_colourings_bruteforce(complete(3), 3) == 6);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(count_colourings_bruteforce(p3, 2) == 2);
    CHECK_THROWS_AS(count_colourings_bruteforce(Graph(11), 2), std::invalid_argument);
    CHECK_THROWS_AS(count_colourings_bruteforce(Graph(3), 9), std::invalid_argument);

    // eval(Q, x-1) equals the brute count for every graph up to 6 vertices
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_unlabeled(n)) {
            IntPoly q = q_poly(g);
            for (int x = 1; x <= 5; ++x)
                CHECK(q.eval(x - 1) == count_colourings_bruteforce(g, x));
        }
    }
}

TEST_CASE("deletion-contraction identity") {
    Lcg rng(606);
    int done = 0;
    while (done < 25) {
        int n = 4 + static_cast<int>(rng.next() % 6);  // 4..9
        Graph g = random_graph(rng, n);
        if (g.edge_count() == 0) continue;
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a) {
            uint32_t m = g.adj[a] >> (a + 1);
            if (m) { u = a; v = a + 1 + __builtin_ctz(m); }
        }
        CHECK(q_poly(g) == q_poly(delete_edge(g, u, v)) - q_poly(contract_edge(g, u, v)));
        ++done;
    }
}

TEST_CASE("shape of Q") {
    Lcg rng(11);
    for (int i = 0; i < 30; ++i) {
        int n = 2 + static_cast<int>(rng.next() % 8);
        Graph g = random_graph(rng, n);
        IntPoly q = q_poly(g);
        CHECK(q.degree() == n);
        CHECK(q.coeff(n) == 1);
        CHECK(q.eval(-1) == 0);  // zero colours
        // in the unshifted variable the coefficient signs alternate
        IntPoly p = q.compose_shift(-1);
        for (int j = 0; j <= n; ++j) {
            BigInt c = p.coeff(j);
            if ((n - j) % 2 == 0) CHECK(c >= 0);
            else CHECK(c <= 0);
        }
    }
}

TEST_CASE("cache transparency and persistence") {
    Lcg rng(70221);
    PolyCache cache;
    std::vector<Graph> gs;
    for (int i = 0; i < 10; ++i) gs.push_back(random_graph(rng, 8));
    for (const Graph& g : gs) CHECK(q_poly(g, &cache) == q_poly(g, nullptr));
    CHECK(cache.size() > 0);

    std::string path = "qcount_cache_test.tmp";
    size_t saved = cache.save(path);
    CHECK(saved == cache.size());

    PolyCache loaded;
    size_t corrupt = 0;
    CHECK(loaded.load(path, &corrupt) == saved);
    CHECK(corrupt == 0);
    for (const Graph& g : gs) CHECK(q_poly(g, &loaded) == q_poly(g, nullptr));

    // corrupt lines are skipped and counted
    {
        std::ofstream out(path, std::ios::app);
        out << "not a record\n";
        out << "@\tnot,a,number\n";
    }
    PolyCache reloaded;
    reloaded.load(path, &corrupt);
    CHECK(corrupt == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify_bound verdicts") {
    auto eq = verify_bound(complete(5), 5);
    CHECK(eq.verdict == BoundVerdict::equality);

    // odd cycles beat the k = 3 bound: the reason k >= 4 is required
    auto viol = verify_bound(cycle(5), 3);
    CHECK(viol.verdict == BoundVerdict::violation);
    CHECK(viol.witness_y == 3);

    // W_5 = C_5 joined with one vertex is 4-chromatic and strictly below
    Graph w5(6);
    for (int v = 0; v < 5; ++v) {
        w5.add_edge(v, (v + 1) % 5);
        w5.add_edge(v, 5);
    }
    auto strict = verify_bound(w5, 4);
    CHECK(strict.verdict == BoundVerdict::strict);
    CHECK(strict.ll_certified);

    CHECK_THROWS_AS(verify_bound(cycle(5), 4), std::invalid_argument);
    Graph disconnected(6);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(verify_bound(disconnected, 2), std::invalid_argument);
}
