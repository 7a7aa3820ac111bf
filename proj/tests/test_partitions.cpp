#include <doctest.h>

#include "qcount/partitions.hpp"

using namespace qcount;

namespace {

IntPoly P(const std::string& s) { return *IntPoly::parse(s); }

long bell(int n) {
    static const long b[] = {1, 1, 2, 5, 15, 52, 203};
    return b[n];
}

long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("partition counts on independent sets match Stirling numbers") {
    // the four neighbours of an eliminated vertex: 7 ways into two parts
    CHECK(independent_partitions(empty_graph(4), 0xF, 2).size() == 7);
    CHECK(independent_partitions(empty_graph(4), 0xF, 1).size() == 1);

    for (int n = 1; n <= 5; ++n) {
        Graph g = empty_graph(n);
        uint32_t U = (1u << n) - 1;
        long total = 0;
        for (int r = 1; r <= n; ++r) {
            long nr = static_cast<long>(independent_partitions(g, U, r).size());
            CHECK(nr == stirling2(n, r));
            total += nr;
        }
        CHECK(total == bell(n));
    }
}

TEST_CASE("independence pruning") {
    CHECK(independent_partitions(complete(4), 0xF, 2).empty());
    CHECK(independent_partitions(complete(4), 0xF, 4).size() == 1);

    // P_3 a-b-c: only {b | ac} splits into two independent parts
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    auto parts = independent_partitions(p3, 0x7, 2);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].parts.size() == 2);
    CHECK(((parts[0].parts[0] == 0x5 && parts[0].parts[1] == 0x2) ||
           (parts[0].parts[0] == 0x2 && parts[0].parts[1] == 0x5)));

    // subsets of the ground set work too
    CHECK(independent_partitions(complete(4), 0x7, 3).size() == 1);
    CHECK_THROWS_AS(independent_partitions(p3, 0x7, 4), std::invalid_argument);
}

TEST_CASE("parts are disjoint, non-empty, independent, sorted by least element") {
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    for (int r = 1; r <= 4; ++r) {
        for (const auto& part : independent_partitions(p4, 0xF, r)) {
            uint32_t seen = 0;
            int prev_low = -1;
            for (uint32_t block : part.parts) {
                CHECK(block != 0);
                CHECK((seen & block) == 0);
                seen |= block;
                uint32_t m = block;
                while (m) {
                    int v = __builtin_ctz(m);
                    m &= m - 1;
                    CHECK((p4.adj[v] & block) == 0);
                }
                int low = __builtin_ctz(block);
                CHECK(low > prev_low);
                prev_low = low;
            }
            CHECK(seen == 0xF);
        }
    }
}

TEST_CASE("refinement") {
    Graph g = empty_graph(4);
    auto ones = independent_partitions(g, 0xF, 4);  // all singletons
    auto twos = independent_partitions(g, 0xF, 2);
    auto whole = independent_partitions(g, 0xF, 1);
    REQUIRE(ones.size() == 1);
    REQUIRE(whole.size() == 1);

    for (const auto& p : twos) {
        CHECK(refines(ones[0], p));
        CHECK(refines(p, p));
        CHECK(refines(p, whole[0]));
    }
    // the one-block partition is refined by each of the 7 two-block partitions
    int refining = 0;
    for (const auto& p : twos) refining += refines(p, whole[0]) ? 1 : 0;
    CHECK(refining == 7);

    // antisymmetry and transitivity over all pairs/triples at |U| = 4
    std::vector<IndepPartition> all;
    for (int r = 1; r <= 4; ++r)
        for (auto& p : independent_partitions(g, 0xF, r)) all.push_back(p);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (refines(a, b) && refines(b, a)) CHECK(a.parts == b.parts);
            for (const auto& c : all)
                if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
        }

    IndepPartition other;
    other.ground = 0x7;
    other.parts = {0x7};
    CHECK_THROWS_AS(refines(ones[0], other), std::invalid_argument);
}

TEST_CASE("partition rendering") {
    Graph g = empty_graph(4);
    auto whole = independent_partitions(g, 0xF, 1);
    CHECK(whole[0].to_string() == "abcd");
    auto ones = independent_partitions(g, 0xF, 4);
    CHECK(ones[0].to_string() == "a|b|c|d");
}

TEST_CASE("single vertex bound steps") {
    // the four applications used to eliminate an independent 4-set
    IntPoly s1 = single_vertex_bound(P("y^2"), 7, 2, 4, P("y^2"));
    CHECK(s1 == P("y^3 - 2y^2 + 7"));
    IntPoly s2 = single_vertex_bound(s1, 7, 2, 4, P("y^3"));
    CHECK(s2 == P("y^4 - 4y^3 + 4y^2 + 14y - 14"));
    IntPoly s3 = single_vertex_bound(s2, 1, 1, 4, P("y^4"));
    CHECK(s3 == P("y^5 - 5y^4 + 8y^3 + 10y^2 - 27y + 14"));
    IntPoly s4 = single_vertex_bound(s3, 1, 1, 4, P("y^5"));
    CHECK(s4 == P("y^6 - 6y^5 + 13y^4 + 2y^3 - 36y^2 + 41y - 14"));

    CHECK_THROWS_AS(single_vertex_bound(P("y"), 1, 2, 4, P("y^2 + y")), std::invalid_argument);
    CHECK_THROWS_AS(single_vertex_bound(P("y"), 1, 4, 4, P("y^2")), std::invalid_argument);
}
