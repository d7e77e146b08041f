#include <set>

#include "doctest.h"

#include "cotough/generate.hpp"
#include "testutil.hpp"

using namespace cotough;
using namespace testutil;

TEST_CASE("connected cotree counts match brute-force isomorphism classes") {
    for (int n = 1; n <= 6; ++n) {
        int brute = 0;
        for (const Graph& g : all_graphs_up_to_iso(n))
            if (is_connected(g) && is_p4_free_oracle(g)) ++brute;
        CHECK(static_cast<int>(enumerate_connected_cotrees(n).size()) == brute);

        int brute_all = 0;
        for (const Graph& g : all_graphs_up_to_iso(n))
            if (is_p4_free_oracle(g)) ++brute_all;
        CHECK(static_cast<int>(enumerate_cotrees(n).size()) == brute_all);
    }
}

TEST_CASE("enumerated cotrees realize valid distinct connected cographs") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> g6s;
        for (const Cotree& t : enumerate_connected_cotrees(n)) {
            CHECK(cotree_well_formed(t));
            const Graph g = realize_cotree(t, n);
            CHECK(is_connected(g));
            CHECK(is_p4_free_oracle(g));
            g6s.insert(emit_graph(g, GraphFormat::graph6));
        }
        // labeled encodings may collide only for isomorphic graphs; these are
        // canonical shapes so they must all differ
        CHECK(g6s.size() == enumerate_connected_cotrees(n).size());
    }
}

TEST_CASE("random cographs are deterministic, connected, and P4-free") {
    std::mt19937_64 a(42), b(42), c(43);
    std::vector<std::string> out_a, out_b, out_c;
    for (int i = 0; i < 40; ++i) {
        const int n = 5 + i % 12;
        out_a.push_back(emit_graph(random_cograph(n, a), GraphFormat::graph6));
        out_b.push_back(emit_graph(random_cograph(n, b), GraphFormat::graph6));
        out_c.push_back(emit_graph(random_cograph(n, c), GraphFormat::graph6));
    }
    CHECK(out_a == out_b);
    CHECK(out_a != out_c);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_cograph(4 + i % 10, rng);
        CHECK(is_connected(g));
        CHECK(is_p4_free_oracle(g));
    }

    // unconnected model still yields cographs
    RandomCographOptions opt;
    opt.connected = false;
    std::mt19937_64 rng2(11);
    for (int i = 0; i < 30; ++i) CHECK(is_p4_free_oracle(random_cograph(6, rng2, opt)));
}
