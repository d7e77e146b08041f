#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cotough/cograph.hpp"
#include "cotough/graph.hpp"
#include "cotough/sbep.hpp"
#include "cotough/toughness.hpp"

namespace cotough {

// Hamiltonian cycle of a prism, stored as (vertex, side) pairs in cyclic
// order and canonicalized (least pair first, lexicographically smaller
// direction).
struct PrismCycle {
    std::vector<std::pair<int, int>> seq;
};

// Spanning closed walk; consecutive entries are adjacent or equal (an equal
// step is a stall left by a projected vertical or clique edge), and every
// vertex appears between 1 and k times.
struct KWalk {
    int k = 0;
    std::vector<int> seq;
};

// Hamiltonian cycle of prism(union of s's blocks) that uses the vertical edge
// at every single-block vertex of s. Built by splitting at cutvertices; the
// base cases are the 4-cycle over an edge block and the weave over an even
// cycle block (which uses every vertical edge).
PrismCycle prism_cycle_from_sbep(const Graph& host, const SbepGraph& s);

// Position-wise projection (v, side) -> v; every host vertex shows up twice.
KWalk two_walk_from_prism_cycle(const PrismCycle& c);

// Hamiltonian cycle via minimum path covers on the cotree: union nodes
// concatenate path lists, join nodes stitch the two sides, and the root join
// closes the interleaving into a cycle when both sides have enough vertices.
// Returns nothing when no hamiltonian cycle exists.
std::optional<std::vector<int>> cograph_ham_cycle(const Graph& g, const Cotree& ct);

// Spanning k-walk of a connected P4-free graph, via a hamiltonian cycle of
// the k-fold blow-up, or the violating cutset when the graph is not
// 1/k-tough.
std::variant<KWalk, NotTough> find_k_walk(const Graph& g, int k);

bool validate_k_walk(const Graph& g, const KWalk& w);
bool validate_prism_cycle(const Graph& host, const PrismCycle& c);
bool prism_cycle_uses_single_block_verticals(const SbepGraph& s, const PrismCycle& c);

// Minimum path cover realization for a cotree (exposed for tests).
std::vector<std::vector<int>> minimum_path_cover(const Cotree& ct);

}  // namespace cotough
