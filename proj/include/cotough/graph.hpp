#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotough {

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    int operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }
    bool operator!=(const VertexSet& o) const { return ids_ != o.ids_; }
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }  // lexicographic

private:
    std::vector<int> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet full_vertex_set(int n);

// Immutable-after-construction simple undirected graph on dense ids 0..n-1.
// Labels track vertex provenance through contractions and products.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    void add_edge(int u, int v);
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
    bool same_adjacency(const Graph& o) const;

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_label(int v, std::string s) { labels_[static_cast<std::size_t>(v)] = std::move(s); }

    // One adjacency word per vertex; requires n <= 64.
    std::vector<std::uint64_t> adjacency_bitmasks() const;

private:
    int n_ = 0;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::string> labels_;
};

struct ContractionResult {
    Graph graph;
    int contracted_vertex = -1;
    std::vector<VertexSet> origin;  // new id -> old ids
};

struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cutvertices;
};

enum class GraphFormat { graph6, edge_list, dot };

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6 (<= 62 vertices) and edge_list ("n" header, one "u v" per line).
// Duplicate edges are merged with a warning; self-loops are errors.
Graph parse_graph(const std::string& text, GraphFormat format,
                  std::vector<std::string>* warnings = nullptr);
std::string emit_graph(const Graph& g, GraphFormat format);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed);
bool is_cutset(const Graph& g, const VertexSet& s);

// New id i corresponds to keep[i]; labels carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Replaces the connected set r by a single vertex (placed last) adjacent to
// every external neighbor of r.
ContractionResult contract(const Graph& g, const VertexSet& r);

// Maximal 2-connected subgraphs and bridges of a connected graph.
BlockDecomposition blocks(const Graph& g);

// Two copies of g plus the perfect matching of vertical edges; copy (v, s)
// gets id s*n + v and label "<label>|s".
Graph prism(const Graph& g);

// Blow-up: vertex (u, i) gets id u*k + i; (u,i)~(v,j) iff u~v or (u=v, i!=j).
Graph lex_product_k(const Graph& g, int k);

}  // namespace cotough
