#pragma once

#include <optional>

#include "cotough/graph.hpp"
#include "cotough/prism_walks.hpp"
#include "cotough/toughness.hpp"

namespace cotough::oracle {

// Ground-truth verdicts by exhaustive search. Beyond the Graph type and the
// plain certificate structs, nothing here shares code with the constructive
// modules; the point is independence, not speed. Every routine refuses inputs
// past its size guard instead of truncating.

enum class Property {
    hamiltonian_cycle,
    hamiltonian_path,
    prism_hamiltonian,
    k_walk,
    toughness_at_least,
    sbep_spanning,
};

struct OracleVerdict {
    Property property;
    bool holds = false;
    int k = 0;                                        // for k_walk
    std::optional<std::vector<int>> vertex_sequence;  // ham cycle/path
    std::optional<PrismCycle> prism_cycle;            // prism_hamiltonian
    std::optional<KWalk> walk;                        // k_walk
};

enum class HamKind { cycle, path };

// Backtracking with connectivity pruning; n <= 18.
OracleVerdict oracle_hamiltonian(const Graph& g, HamKind kind);

// Builds its own prism and backtracks on it; n <= 9.
OracleVerdict oracle_prism_hamiltonian(const Graph& g);

// Builds its own k-fold blow-up and backtracks on it; n*k <= 18. Graphs on
// one or two vertices are decided directly (degenerate closed walks).
OracleVerdict oracle_k_walk(const Graph& g, int k);

// Plain 2^n sweep over all vertex subsets, no pruning; n <= 10.
ToughnessResult oracle_toughness(const Graph& g);

// Sweeps all edge subsets for a spanning SBEP subgraph, with its own block
// decomposition; |E| <= 20.
OracleVerdict oracle_sbep_spanning(const Graph& g);

}  // namespace cotough::oracle
