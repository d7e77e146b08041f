#include "doctest.h"

#include "cotough/generate.hpp"
#include "cotough/oracle.hpp"
#include "cotough/toughness.hpp"
#include "testutil.hpp"

using namespace cotough;
using namespace testutil;

TEST_CASE("Rational") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(0, 5) == Rational(0, 1));
    CHECK(3 * Rational(1, 2) == Rational(3, 2));
    CHECK(ceil_div_by(3, Rational(2, 3)) == 5);  // ceil(9/2)
    CHECK(ceil_div_by(2, Rational(1, 2)) == 4);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(ToughnessValue::infinite().at_least(Rational(100, 1)));
    CHECK(ToughnessValue::finite(Rational(1, 2)).str() == "1/2");
    CHECK(ToughnessValue::infinite().str() == "inf");
}

TEST_CASE("toughness_exact on the named families") {
    auto r = toughness_exact(join_clique_independent(2, 3));
    CHECK(r.value == ToughnessValue::finite(Rational(2, 3)));
    CHECK(*r.witness == VertexSet{0, 1});

    auto fam = toughness_exact(family_with_pendant_triple(2));
    CHECK(fam.value == ToughnessValue::finite(Rational(2, 3)));
    CHECK(*fam.witness == VertexSet{0, 1});

    CHECK(toughness_exact(complete_graph(4)).value.is_infinite());

    auto p3 = toughness_exact(path_graph(3));
    CHECK(p3.value == ToughnessValue::finite(Rational(1, 2)));
    CHECK(*p3.witness == VertexSet{1});

    // disconnected: empty set already separates
    auto dis = toughness_exact(Graph(3));
    CHECK(dis.value == ToughnessValue::finite(Rational(0, 1)));
    CHECK(dis.witness->empty());
}

TEST_CASE("toughness_exact matches the exhaustive oracle on all graphs n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            const auto fast = toughness_exact(g);
            const auto slow = oracle::oracle_toughness(g);
            CHECK(fast.value == slow.value);
            if (!fast.value.is_infinite()) CHECK(*fast.witness == *slow.witness);
        }
}

TEST_CASE("is_t_tough") {
    CHECK(is_t_tough(cycle_graph(4), Rational(1, 1)));
    CHECK(is_t_tough(path_graph(3), Rational(1, 2)));
    CHECK_FALSE(is_t_tough(path_graph(3), Rational(2, 3)));
    CHECK(is_t_tough(join_clique_independent(2, 4), Rational(1, 2)));
}

TEST_CASE("maximal_tough_set") {
    CHECK(maximal_tough_set(family_with_pendant_triple(2)) == VertexSet{0, 1});
    CHECK(maximal_tough_set(path_graph(3)) == VertexSet{1});
    CHECK(maximal_tough_set(cycle_graph(4)) == VertexSet{0, 2});
    CHECK_THROWS_AS(maximal_tough_set(complete_graph(3)), std::invalid_argument);
}

TEST_CASE("greedy maximal tough-sets are inclusion-maximal (exhaustive n <= 7)") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            if (!is_connected(g) || is_complete(g)) continue;
            const auto tr = toughness_exact(g);
            const Rational tau = tr.value.ratio();
            const VertexSet s = maximal_tough_set(g, tr);
            const auto comps = components_after_removal(g, s);
            CHECK(comps.size() >= 2);
            CHECK(Rational(s.size(), static_cast<long long>(comps.size())) == tau);
            // no strict superset is a tough-set
            const VertexSet rest = set_difference(full_vertex_set(n), s);
            const int r = rest.size();
            for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
                std::vector<int> extra(s.begin(), s.end());
                for (int i = 0; i < r; ++i)
                    if ((mask >> i) & 1) extra.push_back(rest[i]);
                const VertexSet sup(extra);
                const auto cs = components_after_removal(g, sup);
                if (cs.size() < 2) continue;
                CHECK(Rational(sup.size(), static_cast<long long>(cs.size())) != tau);
            }
        }
}

TEST_CASE("adjacency_count") {
    CHECK(adjacency_count(path_graph(3), VertexSet{1}, VertexSet{1}) == 2);
    CHECK(adjacency_count(join_clique_independent(2, 4), VertexSet{0, 1}, VertexSet{0}) == 4);
    CHECK_THROWS_AS(adjacency_count(path_graph(3), VertexSet{1}, VertexSet{0}),
                    std::invalid_argument);
}

TEST_CASE("tough-set adjacency bounds hold on all connected cographs n <= 7") {
    // c(G,S,S') >= ceil(|S'|/t) for S' c= S, and +1 when S' != S and t <= 1
    for (int n = 2; n <= 7; ++n)
        for (const Cotree& t : enumerate_connected_cotrees(n)) {
            const Graph g = realize_cotree(t, n);
            if (is_complete(g)) continue;
            const auto tr = toughness_exact(g);
            const Rational tau = tr.value.ratio();
            const VertexSet s = maximal_tough_set(g, tr);
            const int sz = s.size();
            for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < sz; ++i)
                    if ((mask >> i) & 1) sub.push_back(s[i]);
                const VertexSet sp(sub);
                const int cnt = adjacency_count(g, s, sp);
                long long bound = ceil_div_by(sp.size(), tau);
                if (sp.size() != s.size() && tau <= Rational(1, 1)) bound += 1;
                CHECK(cnt >= bound);
            }
            // every tough-set vertex sees >= 2 components when t <= 1
            if (tau <= Rational(1, 1))
                for (int v : s) CHECK(adjacency_count(g, s, VertexSet{v}) >= 2);
        }
}

TEST_CASE("walk and cycle existence force toughness lower bounds on all graphs n <= 6") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            const auto tv = toughness_exact(g).value;
            if (oracle::oracle_hamiltonian(g, oracle::HamKind::cycle).holds)
                CHECK(tv.at_least(Rational(1, 1)));
            for (int k = 2; k <= 3; ++k)
                if (oracle::oracle_k_walk(g, k).holds) CHECK(tv.at_least(Rational(1, k)));
        }
}

TEST_CASE("minimal_cutset_within") {
    CHECK(minimal_cutset_within(path_graph(3), VertexSet{1}) == VertexSet{1});
    // for s={1,2} on the path 0-1-2-3 the greedy deletes vertex 1 first
    CHECK(minimal_cutset_within(path_graph(4), VertexSet{1, 2}) == VertexSet{2});
    // C4 with three vertices: ends at an opposite pair
    auto m = minimal_cutset_within(cycle_graph(4), VertexSet{0, 1, 2});
    CHECK(m.size() == 2);
    CHECK(is_cutset(cycle_graph(4), m));
    CHECK((m == VertexSet{0, 2} || m == VertexSet{1, 3}));
    CHECK_THROWS_AS(minimal_cutset_within(complete_graph(3), VertexSet{0}),
                    std::invalid_argument);
}

namespace {

// K1 + (K1 u (K2 + (K1 u K_{1,2}))), numbered outside-in:
//   0 = outer join vertex, 1 = outer isolated,
//   2,3 = inner K2, 4 = inner isolated, 5 = star center, 6,7 = star leaves
Graph nested_tripartite_fixture() {
    Graph g(8);
    g.add_edge(2, 3);
    g.add_edge(5, 6);
    g.add_edge(5, 7);
    for (int v = 4; v <= 7; ++v) {
        g.add_edge(2, v);
        g.add_edge(3, v);
    }
    for (int v = 1; v <= 7; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace

TEST_CASE("find_tripartite_witness") {
    // depth-0: K2 + (K1 u K_{1,2}) with s = {join pair, star center}
    Graph g0(6);
    g0.add_edge(0, 1);
    g0.add_edge(3, 4);
    g0.add_edge(3, 5);
    for (int v = 2; v <= 5; ++v) {
        g0.add_edge(0, v);
        g0.add_edge(1, v);
    }
    const VertexSet s0{0, 1, 3};
    auto w0 = find_tripartite_witness(g0, s0);
    CHECK(validate_tripartite_witness(g0, s0, w0));
    CHECK(w0.u_set == minimal_cutset_within(g0, s0));  // base case: U = U0
    CHECK(w0.u_set == VertexSet{0, 1});
    CHECK(w0.x_set == VertexSet{3});
    CHECK(w0.y_set == VertexSet{4, 5});

    // depth-2 nesting: U grows past the first minimal cutset
    const Graph g = nested_tripartite_fixture();
    const VertexSet s{0, 2, 3, 5};
    auto w = find_tripartite_witness(g, s);
    CHECK(validate_tripartite_witness(g, s, w));
    CHECK(w.u_set != minimal_cutset_within(g, s));
    CHECK(w.u_set == VertexSet{0, 2, 3});
    CHECK(w.x_set == VertexSet{5});
    CHECK(w.y_set == VertexSet{6, 7});

    // minimal cutsets are rejected
    CHECK_THROWS_AS(find_tripartite_witness(path_graph(3), VertexSet{1}), std::invalid_argument);
}

TEST_CASE("tripartite witness invariants across all cographs n <= 7") {
    int cases = 0, nested = 0;
    for (int n = 3; n <= 7; ++n)
        for (const Cotree& t : enumerate_connected_cotrees(n)) {
            const Graph g = realize_cotree(t, n);
            // scan all cutsets that satisfy the preconditions
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> sv;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) sv.push_back(v);
                const VertexSet s(sv);
                const auto comps = components_after_removal(g, s);
                if (comps.size() < 2) continue;
                bool all_two = true;
                for (int u : s) {
                    int seen = 0;
                    for (const auto& comp : comps)
                        for (int v : comp)
                            if (g.adjacent(u, v)) {
                                ++seen;
                                break;
                            }
                    if (seen < 2) all_two = false;
                }
                if (!all_two) continue;
                if (minimal_cutset_within(g, s) == s) continue;
                auto w = find_tripartite_witness(g, s);
                CHECK(validate_tripartite_witness(g, s, w));
                ++cases;
                if (w.u_set != minimal_cutset_within(g, s)) ++nested;
            }
        }
    CHECK(cases > 0);
    CHECK(nested > 0);
}

TEST_CASE("check_contraction_toughness") {
    // the pendant-triple family: R = K_{1,2} is 1/2-tough but not p/(2p-1)-tough
    for (int p = 2; p <= 3; ++p) {
        const Graph g = family_with_pendant_triple(p);
        const VertexSet s = maximal_tough_set(g);
        std::vector<int> kvec;
        for (int i = 0; i < p; ++i) kvec.push_back(i);
        REQUIRE(s == VertexSet(kvec));
        VertexSet r;
        for (const auto& comp : components_after_removal(g, s))
            if (comp.size() == 3) r = comp;
        REQUIRE(r.size() == 3);
        auto flags = check_contraction_toughness(g, s, r);
        CHECK(flags.component_tough);
        CHECK(flags.contracted_tough);
        const Graph rind = induced_subgraph(g, r);
        CHECK(is_t_tough(rind, Rational(1, 2)));
        CHECK_FALSE(is_t_tough(rind, Rational(p, 2 * p - 1)));
    }

    // single-vertex component: contraction is the graph itself
    const Graph p3 = path_graph(3);
    auto f = check_contraction_toughness(p3, VertexSet{1}, VertexSet{0});
    CHECK(f.component_tough);
    CHECK(f.contracted_tough);

    // exhaustive sweep: both flags hold on all cographs with tau <= 1
    for (int n = 2; n <= 7; ++n)
        for (const Cotree& t : enumerate_connected_cotrees(n)) {
            const Graph g = realize_cotree(t, n);
            if (is_complete(g)) continue;
            const auto tr = toughness_exact(g);
            if (!(tr.value.ratio() <= Rational(1, 1))) continue;
            const VertexSet s = maximal_tough_set(g, tr);
            for (const auto& comp : components_after_removal(g, s)) {
                auto flags = check_contraction_toughness(g, s, comp, tr);
                CHECK(flags.component_tough);
                CHECK(flags.contracted_tough);
            }
        }
}
