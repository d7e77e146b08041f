#pragma once

#include <variant>
#include <vector>

#include "cotough/cograph.hpp"
#include "cotough/graph.hpp"
#include "cotough/toughness.hpp"

namespace cotough {

// One block of an SBEP subgraph: a single edge or an even cycle (length >= 4).
// Edge blocks store {u, v} with u < v; cycle blocks store the canonical
// rotation of the vertex sequence.
struct SbepBlock {
    enum class Kind { edge, cycle };
    Kind kind = Kind::edge;
    std::vector<int> vertices;

    std::vector<std::pair<int, int>> block_edges() const;
};

SbepBlock edge_block(int u, int v);
SbepBlock cycle_block(std::vector<int> seq);

// Spanning or partial SBEP subgraph of a host graph: a connected union of
// blocks, each an edge or even cycle, with every vertex in at most two blocks.
struct SbepGraph {
    std::vector<SbepBlock> blocks;
};

// Full independent certificate checker; coded against the definition, not the
// constructors. Verifies block shapes, host-edge containment, the <=2 blocks
// per vertex bound, connectivity, agreement with the biconnected
// decomposition of the union, and the two single-block vertices bound.
bool validate_sbep(const Graph& host, const SbepGraph& s);

VertexSet sbep_vertices(const SbepGraph& s);
std::vector<int> sbep_block_counts(const SbepGraph& s, int n);
VertexSet single_block_vertices(const SbepGraph& s);
Graph sbep_union_graph(const SbepGraph& s, int n);
std::vector<std::pair<int, int>> sbep_edges(const SbepGraph& s);
SbepGraph map_sbep_vertices(const SbepGraph& s, const std::vector<int>& to_host);

// Spanning SBEP of the complete bipartite subgraph g[x, y], with every
// y-vertex a single-block vertex. Requires |x| <= |y| <= 2|x|.
SbepGraph bipartite_sbep(const Graph& g, const VertexSet& x, const VertexSet& y);

// Splits an SBEP graph at a vertex contained in exactly two blocks into the
// two sides that meet only there; the cut vertex is single-block in each.
std::pair<SbepGraph, SbepGraph> split_sbep_at(const SbepGraph& s, int cut);

// Merges two vertex-disjoint SBEP subgraphs into one spanning their union,
// given an edge (x1,y1) of s1, an edge (x2,y2) of s2, and host edges x1-y2
// and x2-y1. The two chosen blocks fuse into a single even cycle; every other
// block and every per-vertex block count is unchanged.
SbepGraph combine(const Graph& host, const SbepGraph& s1, const SbepGraph& s2,
                  std::pair<int, int> e1, std::pair<int, int> e2);

// Constructs a spanning SBEP subgraph of a connected P4-free graph with at
// least two vertices whenever tau(g) >= 1/2, or returns the violating cutset.
// Throws NotCographError when g has an induced P4.
std::variant<SbepGraph, NotTough> spanning_sbep(const Graph& g);

}  // namespace cotough
