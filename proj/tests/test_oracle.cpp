#include "doctest.h"

#include "cotough/oracle.hpp"
#include "cotough/prism_walks.hpp"
#include "testutil.hpp"

using namespace cotough;
using namespace testutil;
using namespace cotough::oracle;

TEST_CASE("oracle_hamiltonian") {
    CHECK(oracle_hamiltonian(cycle_graph(5), HamKind::cycle).holds);
    CHECK_FALSE(oracle_hamiltonian(star(3), HamKind::cycle).holds);
    CHECK(oracle_hamiltonian(path_graph(4), HamKind::path).holds);
    CHECK(oracle_hamiltonian(Graph(1), HamKind::path).holds);
    CHECK_FALSE(oracle_hamiltonian(Graph(2), HamKind::path).holds);

    auto v = oracle_hamiltonian(cycle_graph(6), HamKind::cycle);
    REQUIRE(v.vertex_sequence.has_value());
    CHECK(v.vertex_sequence->size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(cycle_graph(6).adjacent((*v.vertex_sequence)[i], (*v.vertex_sequence)[(i + 1) % 6]));

    CHECK_THROWS_AS(oracle_hamiltonian(Graph(19), HamKind::cycle), std::invalid_argument);
}

TEST_CASE("oracle_prism_hamiltonian") {
    CHECK_FALSE(oracle_prism_hamiltonian(Graph(1)).holds);  // prism(K1)=K2 has no cycle
    CHECK(oracle_prism_hamiltonian(complete_graph(2)).holds);
    CHECK_FALSE(oracle_prism_hamiltonian(star(4)).holds);   // K_{1,4} is 1/4-tough
    CHECK_FALSE(oracle_prism_hamiltonian(star(3)).holds);

    auto v = oracle_prism_hamiltonian(path_graph(3));
    CHECK(v.holds);
    REQUIRE(v.prism_cycle.has_value());
    CHECK(validate_prism_cycle(path_graph(3), *v.prism_cycle));

    CHECK_THROWS_AS(oracle_prism_hamiltonian(Graph(10)), std::invalid_argument);
}

TEST_CASE("oracle_k_walk") {
    CHECK(oracle_k_walk(path_graph(3), 2).holds);
    CHECK_FALSE(oracle_k_walk(star(3), 2).holds);  // tau = 1/3
    CHECK(oracle_k_walk(cycle_graph(5), 1).holds);
    CHECK(oracle_k_walk(Graph(1), 3).holds);
    CHECK_FALSE(oracle_k_walk(Graph(2), 2).holds);

    auto v = oracle_k_walk(path_graph(3), 2);
    REQUIRE(v.walk.has_value());
    CHECK(validate_k_walk(path_graph(3), *v.walk));

    CHECK_THROWS_AS(oracle_k_walk(path_graph(10), 2), std::invalid_argument);
}

TEST_CASE("oracle_toughness") {
    CHECK(oracle_toughness(path_graph(3)).value == ToughnessValue::finite(Rational(1, 2)));
    CHECK(oracle_toughness(cycle_graph(4)).value == ToughnessValue::finite(Rational(1, 1)));
    CHECK(oracle_toughness(complete_graph(5)).value.is_infinite());
    CHECK_THROWS_AS(oracle_toughness(Graph(11)), std::invalid_argument);
}

TEST_CASE("oracle_sbep_spanning") {
    CHECK(oracle_sbep_spanning(complete_graph(2)).holds);
    CHECK(oracle_sbep_spanning(cycle_graph(4)).holds);
    CHECK_FALSE(oracle_sbep_spanning(star(3)).holds);  // center would need 3 blocks
    CHECK(oracle_sbep_spanning(cycle_graph(5)).holds);  // via a spanning path
    CHECK(oracle_sbep_spanning(path_graph(5)).holds);
    CHECK_FALSE(oracle_sbep_spanning(Graph(1)).holds);
}
