#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cotough/graph.hpp"

namespace cotough {

// Union/join decomposition tree. Union and Join alternate along every
// root-to-leaf path; internal nodes have at least two children; the leaves
// carry the vertex ids of the realized graph.
struct Cotree {
    enum class Op { leaf, join, unite };
    Op op = Op::leaf;
    int vertex = -1;
    std::vector<Cotree> children;

    static Cotree leaf(int v) {
        Cotree t;
        t.op = Op::leaf;
        t.vertex = v;
        return t;
    }
    static Cotree join(std::vector<Cotree> ch) {
        Cotree t;
        t.op = Op::join;
        t.children = std::move(ch);
        return t;
    }
    static Cotree unite(std::vector<Cotree> ch) {
        Cotree t;
        t.op = Op::unite;
        t.children = std::move(ch);
        return t;
    }
};

// Induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd.
struct P4Witness {
    int a, b, c, d;
    bool verify(const Graph& g) const;
};

class NotCographError : public std::runtime_error {
public:
    NotCographError(const std::string& msg, P4Witness w)
        : std::runtime_error(msg), witness(w) {}
    P4Witness witness;
};

// Either a cotree realizing g exactly, or an explicit induced P4.
std::variant<Cotree, P4Witness> recognize(const Graph& g);

// Exhaustive quadruple scan, independent of recognize.
bool is_p4_free_oracle(const Graph& g);

// Checks that every vertex of s is adjacent to all-or-none of each component
// of g-s. False signals a logic error upstream (non-cograph input), not a
// recoverable condition.
bool neighbor_saturation_check(const Graph& g, const VertexSet& s);

Graph realize_cotree(const Cotree& t, int n);
std::vector<int> cotree_leaves(const Cotree& t);
int cotree_size(const Cotree& t);
std::string cotree_to_text(const Cotree& t);  // e.g. J(U(0,1),2)
bool cotree_well_formed(const Cotree& t);     // alternation, arity >= 2

}  // namespace cotough
