#include "cotough/cograph.hpp"

#include <algorithm>

#include "cotough/util.hpp"

namespace cotough {

bool P4Witness::verify(const Graph& g) const {
    const int n = g.vertex_count();
    int vs[4] = {a, b, c, d};
    for (int v : vs)
        if (v < 0 || v >= n) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) return false;
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
           !g.adjacent(a, d) && !g.adjacent(b, d);
}

namespace {

// Connected pieces of g restricted to verts, grouping by host adjacency or,
// when in_complement, by host non-adjacency.
std::vector<std::vector<int>> pieces_within(const Graph& g, const std::vector<int>& verts,
                                            bool in_complement) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(verts.size(), false);
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack{s};
        std::vector<int> piece;
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t iu = stack.back();
            stack.pop_back();
            piece.push_back(verts[iu]);
            for (std::size_t iv = 0; iv < verts.size(); ++iv) {
                if (seen[iv] || iv == iu) continue;
                bool adj = g.adjacent(verts[iu], verts[iv]);
                if (in_complement ? !adj : adj) {
                    seen[iv] = true;
                    stack.push_back(iv);
                }
            }
        }
        std::sort(piece.begin(), piece.end());
        out.push_back(std::move(piece));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Looks for an induced P4 among the given vertices; the pattern is
// 3 edges with degree multiset {1,1,2,2} inside the quadruple.
std::optional<P4Witness> find_p4_within(const Graph& g, const std::vector<int>& verts) {
    const std::size_t k = verts.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                for (std::size_t m = l + 1; m < k; ++m) {
                    int q[4] = {verts[i], verts[j], verts[l], verts[m]};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (g.adjacent(q[x], q[y])) {
                                ++edges;
                                ++deg[x];
                                ++deg[y];
                            }
                    if (edges != 3) continue;
                    bool path = true;
                    for (int x = 0; x < 4; ++x)
                        if (deg[x] > 2) path = false;
                    bool has_deg1 = deg[0] == 1 || deg[1] == 1 || deg[2] == 1 || deg[3] == 1;
                    if (!path || !has_deg1) continue;
                    // order endpoints a < d, then midpoints follow
                    std::vector<int> ends, mids;
                    for (int x = 0; x < 4; ++x) (deg[x] == 1 ? ends : mids).push_back(q[x]);
                    internal_check(ends.size() == 2 && mids.size() == 2, "P4 shape");
                    int a = std::min(ends[0], ends[1]);
                    int d = std::max(ends[0], ends[1]);
                    int b = g.adjacent(a, mids[0]) ? mids[0] : mids[1];
                    int c = b == mids[0] ? mids[1] : mids[0];
                    P4Witness w{a, b, c, d};
                    internal_check(w.verify(g), "P4 witness pattern");
                    return w;
                }
    return std::nullopt;
}

std::variant<Cotree, P4Witness> recognize_within(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return Cotree::unite({});
    if (verts.size() == 1) return Cotree::leaf(verts[0]);

    auto comps = pieces_within(g, verts, false);
    if (comps.size() >= 2) {
        std::vector<Cotree> children;
        for (const auto& c : comps) {
            auto r = recognize_within(g, c);
            if (std::holds_alternative<P4Witness>(r)) return r;
            children.push_back(std::get<Cotree>(std::move(r)));
        }
        return Cotree::unite(std::move(children));
    }
    auto cocomps = pieces_within(g, verts, true);
    if (cocomps.size() >= 2) {
        std::vector<Cotree> children;
        for (const auto& c : cocomps) {
            auto r = recognize_within(g, c);
            if (std::holds_alternative<P4Witness>(r)) return r;
            children.push_back(std::get<Cotree>(std::move(r)));
        }
        return Cotree::join(std::move(children));
    }
    // both g[verts] and its complement are connected: an induced P4 exists here
    auto w = find_p4_within(g, verts);
    internal_check(w.has_value(), "stuck subgraph without induced P4");
    return *w;
}

}  // namespace

std::variant<Cotree, P4Witness> recognize(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<std::size_t>(i)] = i;
    return recognize_within(g, all);
}

bool is_p4_free_oracle(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<std::size_t>(i)] = i;
    return !find_p4_within(g, all).has_value();
}

bool neighbor_saturation_check(const Graph& g, const VertexSet& s) {
    for (const auto& comp : components_after_removal(g, s)) {
        for (int u : s) {
            int cnt = 0;
            for (int v : comp)
                if (g.adjacent(u, v)) ++cnt;
            if (cnt != 0 && cnt != comp.size()) return false;
        }
    }
    return true;
}

namespace {

void collect_leaves(const Cotree& t, std::vector<int>& out) {
    if (t.op == Cotree::Op::leaf) {
        out.push_back(t.vertex);
        return;
    }
    for (const auto& c : t.children) collect_leaves(c, out);
}

void realize_into(const Cotree& t, Graph& g, std::vector<int>& leaves_out) {
    if (t.op == Cotree::Op::leaf) {
        leaves_out.push_back(t.vertex);
        return;
    }
    std::vector<std::vector<int>> child_leaves;
    for (const auto& c : t.children) {
        std::vector<int> lv;
        realize_into(c, g, lv);
        child_leaves.push_back(lv);
        leaves_out.insert(leaves_out.end(), lv.begin(), lv.end());
    }
    if (t.op == Cotree::Op::join) {
        for (std::size_t i = 0; i < child_leaves.size(); ++i)
            for (std::size_t j = i + 1; j < child_leaves.size(); ++j)
                for (int u : child_leaves[i])
                    for (int v : child_leaves[j]) g.add_edge(u, v);
    }
}

}  // namespace

Graph realize_cotree(const Cotree& t, int n) {
    Graph g(n);
    std::vector<int> leaves;
    realize_into(t, g, leaves);
    std::sort(leaves.begin(), leaves.end());
    if (static_cast<int>(leaves.size()) != n)
        throw std::invalid_argument("realize_cotree: leaf count does not match n");
    for (int i = 0; i < n; ++i)
        if (leaves[static_cast<std::size_t>(i)] != i)
            throw std::invalid_argument("realize_cotree: leaves do not biject with 0..n-1");
    return g;
}

std::vector<int> cotree_leaves(const Cotree& t) {
    std::vector<int> out;
    collect_leaves(t, out);
    return out;
}

int cotree_size(const Cotree& t) {
    if (t.op == Cotree::Op::leaf) return 1;
    int s = 0;
    for (const auto& c : t.children) s += cotree_size(c);
    return s;
}

std::string cotree_to_text(const Cotree& t) {
    if (t.op == Cotree::Op::leaf) return std::to_string(t.vertex);
    std::string out = t.op == Cotree::Op::join ? "J(" : "U(";
    for (std::size_t i = 0; i < t.children.size(); ++i)
        out += (i ? "," : "") + cotree_to_text(t.children[i]);
    return out + ")";
}

bool cotree_well_formed(const Cotree& t) {
    if (t.op == Cotree::Op::leaf) return t.vertex >= 0 && t.children.empty();
    if (t.children.size() < 2 && !(t.op == Cotree::Op::unite && t.children.empty()))
        return false;  // empty Union allowed as the empty-graph convention
    for (const auto& c : t.children) {
        if (c.op == t.op) return false;
        if (!cotree_well_formed(c)) return false;
    }
    return true;
}

}  // namespace cotough
