#pragma once

#include <optional>

#include "cotough/graph.hpp"
#include "cotough/rational.hpp"

namespace cotough {

// Exact toughness with an optimal tough-set. The witness is absent exactly
// when the value is infinite (complete graph); a disconnected graph has
// toughness 0 with the empty witness.
struct ToughnessResult {
    ToughnessValue value;
    std::optional<VertexSet> witness;
};

// Evidence that a property requiring t-toughness fails: a vertex set whose
// removal leaves too many components.
struct NotTough {
    VertexSet witness;
};

// Cutset U and nonempty X, Y spanning a complete tripartite subgraph, where
// X u Y induces one full component of g-U.
struct TripartiteWitness {
    VertexSet u_set, x_set, y_set;
};

// Minimum of |S|/c(g-S) over all S with c(g-S) >= 2, by increasing |S| with a
// branch-and-bound cutoff; the witness is the lexicographically least optimal
// set. Supports up to 64 vertices.
ToughnessResult toughness_exact(const Graph& g);

bool is_t_tough(const Graph& g, const Rational& t);

// Grows the lexicographically least optimal tough-set by repeatedly adding
// the least vertex that keeps the set a tough-set.
VertexSet maximal_tough_set(const Graph& g);
VertexSet maximal_tough_set(const Graph& g, const ToughnessResult& precomputed);

// Number of components of g-s adjacent to some vertex of x. Requires x c= s.
int adjacency_count(const Graph& g, const VertexSet& s, const VertexSet& x);

// Inclusion-minimal cutset contained in s, by greedy deletion of the least
// removable vertex.
VertexSet minimal_cutset_within(const Graph& g, const VertexSet& s);

// Constructive recursion: peel a minimal cutset U0 c= s, descend into the
// nontrivial component meeting s, and accumulate U. Requires s to be a
// non-minimal cutset whose vertices each see >= 2 components of g-s, on a
// P4-free g.
TripartiteWitness find_tripartite_witness(const Graph& g, const VertexSet& s);
bool validate_tripartite_witness(const Graph& g, const VertexSet& s, const TripartiteWitness& w);

// Runtime assertions for the induction step: the component r of g-s is
// 1/ceil(1/t)-tough and the contraction of r is t-tough. Requires s to be a
// (greedy-maximal) tough-set and tau(g) <= 1.
struct ContractionToughness {
    bool component_tough = false;
    bool contracted_tough = false;
};
ContractionToughness check_contraction_toughness(const Graph& g, const VertexSet& s,
                                                 const VertexSet& r);
ContractionToughness check_contraction_toughness(const Graph& g, const VertexSet& s,
                                                 const VertexSet& r,
                                                 const ToughnessResult& precomputed);

}  // namespace cotough
