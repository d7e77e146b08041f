#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cotough/cograph.hpp"
#include "cotough/graph.hpp"

namespace cotough {

// Every connected cograph on n vertices, one per isomorphism class, realized
// with leaves numbered in cotree DFS order. Enumerated by multisets of
// alternating union/join subtrees.
std::vector<Cotree> enumerate_connected_cotrees(int n);

// All cographs on n vertices up to isomorphism (connected or not).
std::vector<Cotree> enumerate_cotrees(int n);

struct RandomCographOptions {
    // Probability (in millionths) that an internal node is a join; same-type
    // children flatten into their parent, so the realized cotree alternates.
    int join_bias_ppm = 500000;
    bool connected = true;  // force a join root
};

// Random cotree: child count uniform on 2..budget, composition uniform, type
// per join_bias; deterministic for a fixed generator state.
Cotree random_cotree(int n, std::mt19937_64& rng, const RandomCographOptions& opt = {});

Graph random_cograph(int n, std::mt19937_64& rng, const RandomCographOptions& opt = {});

}  // namespace cotough
