#include "cotough/sbep.hpp"

#include <algorithm>
#include <set>

#include "cotough/prism_walks.hpp"
#include "cotough/util.hpp"

namespace cotough {

std::vector<std::pair<int, int>> SbepBlock::block_edges() const {
    std::vector<std::pair<int, int>> out;
    if (kind == Kind::edge) {
        out.emplace_back(vertices[0], vertices[1]);
    } else {
        const std::size_t L = vertices.size();
        for (std::size_t i = 0; i < L; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % L]);
    }
    return out;
}

SbepBlock edge_block(int u, int v) {
    if (u == v) throw std::invalid_argument("edge_block: identical endpoints");
    SbepBlock b;
    b.kind = SbepBlock::Kind::edge;
    b.vertices = {std::min(u, v), std::max(u, v)};
    return b;
}

SbepBlock cycle_block(std::vector<int> seq) {
    if (seq.size() < 4 || seq.size() % 2 != 0)
        throw std::invalid_argument("cycle_block: length must be even and at least 4");
    std::set<int> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) throw std::invalid_argument("cycle_block: repeated vertex");
    SbepBlock b;
    b.kind = SbepBlock::Kind::cycle;
    b.vertices = canonical_cycle(seq);
    return b;
}

VertexSet sbep_vertices(const SbepGraph& s) {
    std::vector<int> all;
    for (const auto& b : s.blocks) all.insert(all.end(), b.vertices.begin(), b.vertices.end());
    return VertexSet(std::move(all));
}

std::vector<int> sbep_block_counts(const SbepGraph& s, int n) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (const auto& b : s.blocks)
        for (int v : b.vertices) {
            if (v < 0 || v >= n) throw std::invalid_argument("sbep_block_counts: vertex out of range");
            ++counts[static_cast<std::size_t>(v)];
        }
    return counts;
}

VertexSet single_block_vertices(const SbepGraph& s) {
    const VertexSet verts = sbep_vertices(s);
    const int n = verts.empty() ? 0 : verts.ids().back() + 1;
    const auto counts = sbep_block_counts(s, n);
    std::vector<int> out;
    for (int v : verts)
        if (counts[static_cast<std::size_t>(v)] == 1) out.push_back(v);
    return VertexSet(std::move(out));
}

Graph sbep_union_graph(const SbepGraph& s, int n) {
    Graph g(n);
    for (const auto& b : s.blocks)
        for (auto [u, v] : b.block_edges()) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> sbep_edges(const SbepGraph& s) {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : s.blocks)
        for (auto e : b.block_edges()) out.push_back(e);
    return out;
}

SbepGraph map_sbep_vertices(const SbepGraph& s, const std::vector<int>& to_host) {
    SbepGraph out;
    for (const auto& b : s.blocks) {
        std::vector<int> mapped;
        for (int v : b.vertices) mapped.push_back(to_host.at(static_cast<std::size_t>(v)));
        if (b.kind == SbepBlock::Kind::edge)
            out.blocks.push_back(edge_block(mapped[0], mapped[1]));
        else
            out.blocks.push_back(cycle_block(std::move(mapped)));
    }
    return out;
}

bool validate_sbep(const Graph& host, const SbepGraph& s) {
    const int n = host.vertex_count();
    if (s.blocks.empty()) return false;

    int declared_edges = 0;
    for (const auto& b : s.blocks) {
        for (int v : b.vertices)
            if (v < 0 || v >= n) return false;
        if (b.kind == SbepBlock::Kind::edge) {
            if (b.vertices.size() != 2 || b.vertices[0] == b.vertices[1]) return false;
        } else {
            if (b.vertices.size() < 4 || b.vertices.size() % 2 != 0) return false;
            std::set<int> distinct(b.vertices.begin(), b.vertices.end());
            if (distinct.size() != b.vertices.size()) return false;
        }
        for (auto [u, v] : b.block_edges())
            if (!host.adjacent(u, v)) return false;
        declared_edges += static_cast<int>(b.block_edges().size());
    }

    const auto counts = sbep_block_counts(s, n);
    for (int c : counts)
        if (c > 2) return false;

    // union of the blocks, restricted to the covered vertices
    const VertexSet covered = sbep_vertices(s);
    std::vector<int> dense(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < covered.size(); ++i) dense[static_cast<std::size_t>(covered[i])] = i;
    Graph un(covered.size());
    for (const auto& b : s.blocks)
        for (auto [u, v] : b.block_edges())
            un.add_edge(dense[static_cast<std::size_t>(u)], dense[static_cast<std::size_t>(v)]);
    if (!is_connected(un)) return false;
    if (un.edge_count() != declared_edges) return false;  // an edge reused across blocks

    // declared blocks must be exactly the biconnected blocks of the union
    const auto decomposition = blocks(un);
    std::vector<std::pair<std::vector<int>, int>> computed, declared;
    for (const auto& blk : decomposition.blocks) {
        std::vector<int> host_ids;
        int edge_cnt = 0;
        for (int a : blk) host_ids.push_back(covered[a]);
        for (int i = 0; i < blk.size(); ++i)
            for (int j = i + 1; j < blk.size(); ++j)
                if (un.adjacent(blk[i], blk[j])) ++edge_cnt;
        std::sort(host_ids.begin(), host_ids.end());
        computed.emplace_back(std::move(host_ids), edge_cnt);
    }
    for (const auto& b : s.blocks) {
        std::vector<int> ids = b.vertices;
        std::sort(ids.begin(), ids.end());
        declared.emplace_back(std::move(ids), static_cast<int>(b.block_edges().size()));
    }
    std::sort(computed.begin(), computed.end());
    std::sort(declared.begin(), declared.end());
    if (computed != declared) return false;

    int single = 0;
    for (int v : covered)
        if (counts[static_cast<std::size_t>(v)] == 1) ++single;
    return single >= 2;
}

SbepGraph bipartite_sbep(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("bipartite_sbep: empty side");
    if (!set_intersection(x, y).empty())
        throw std::invalid_argument("bipartite_sbep: sides not disjoint");
    if (!(x.size() <= y.size() && y.size() <= 2 * x.size()))
        throw std::invalid_argument("bipartite_sbep: requires |x| <= |y| <= 2|x|");
    for (int a : x)
        for (int b : y)
            if (!g.adjacent(a, b))
                throw std::invalid_argument("bipartite_sbep: g[x,y] is not complete bipartite");

    SbepGraph out;
    if (x.size() == 1) {
        for (int b : y) out.blocks.push_back(edge_block(x[0], b));
    } else {
        const int m = x.size();
        std::vector<int> cyc;
        for (int i = 0; i < m; ++i) {
            cyc.push_back(x[i]);
            cyc.push_back(y[i]);
        }
        out.blocks.push_back(cycle_block(std::move(cyc)));
        for (int j = 0; m + j < y.size(); ++j) out.blocks.push_back(edge_block(x[j], y[m + j]));
    }
    // every y-vertex ends up in exactly one block
    const auto counts = sbep_block_counts(out, g.vertex_count());
    for (int b : y)
        internal_check(counts[static_cast<std::size_t>(b)] == 1,
                       "bipartite_sbep: y-vertex not single-block");
    return out;
}

namespace {

// Index of the unique block containing edge {u,v}, or -1.
int find_block_with_edge(const SbepGraph& s, int u, int v) {
    for (std::size_t i = 0; i < s.blocks.size(); ++i)
        for (auto [a, b] : s.blocks[i].block_edges())
            if ((a == u && b == v) || (a == v && b == u)) return static_cast<int>(i);
    return -1;
}

// Path from u to v inside block b that uses every block vertex and avoids the
// edge u-v itself (for an edge block this is just [u, v]).
std::vector<int> block_segment(const SbepBlock& b, int u, int v) {
    if (b.kind == SbepBlock::Kind::edge) {
        internal_check((b.vertices[0] == u && b.vertices[1] == v) ||
                           (b.vertices[0] == v && b.vertices[1] == u),
                       "block_segment: edge mismatch");
        return {u, v};
    }
    const std::size_t L = b.vertices.size();
    std::size_t pu = L;
    for (std::size_t i = 0; i < L; ++i)
        if (b.vertices[i] == u) pu = i;
    internal_check(pu < L, "block_segment: u not in block");
    std::vector<int> rot;
    for (std::size_t i = 0; i < L; ++i) rot.push_back(b.vertices[(pu + i) % L]);
    if (rot[1] == v) {
        std::vector<int> out{u};
        for (std::size_t i = L - 1; i >= 1; --i) out.push_back(rot[i]);
        return out;
    }
    internal_check(rot[L - 1] == v, "block_segment: u-v is not a block edge");
    return rot;
}

}  // namespace

SbepGraph combine(const Graph& host, const SbepGraph& s1, const SbepGraph& s2,
                  std::pair<int, int> e1, std::pair<int, int> e2) {
    const auto [x1, y1] = e1;
    const auto [x2, y2] = e2;
    if (!set_intersection(sbep_vertices(s1), sbep_vertices(s2)).empty())
        throw std::invalid_argument("combine: subgraphs share vertices");
    if (!host.adjacent(x1, y2) || !host.adjacent(x2, y1))
        throw std::invalid_argument("combine: required cross edges missing in host");
    const int i1 = find_block_with_edge(s1, x1, y1);
    const int i2 = find_block_with_edge(s2, x2, y2);
    if (i1 < 0) throw std::invalid_argument("combine: e1 is not an edge of s1");
    if (i2 < 0) throw std::invalid_argument("combine: e2 is not an edge of s2");

    const auto seg1 = block_segment(s1.blocks[static_cast<std::size_t>(i1)], x1, y1);
    const auto seg2 = block_segment(s2.blocks[static_cast<std::size_t>(i2)], x2, y2);
    std::vector<int> merged = seg1;
    merged.insert(merged.end(), seg2.begin(), seg2.end());

    SbepGraph out;
    for (std::size_t i = 0; i < s1.blocks.size(); ++i)
        if (static_cast<int>(i) != i1) out.blocks.push_back(s1.blocks[i]);
    for (std::size_t i = 0; i < s2.blocks.size(); ++i)
        if (static_cast<int>(i) != i2) out.blocks.push_back(s2.blocks[i]);
    out.blocks.push_back(cycle_block(std::move(merged)));

    // per-vertex block counts are preserved exactly
    const int n = host.vertex_count();
    auto before = sbep_block_counts(s1, n);
    const auto b2 = sbep_block_counts(s2, n);
    for (int v = 0; v < n; ++v)
        before[static_cast<std::size_t>(v)] += b2[static_cast<std::size_t>(v)];
    internal_check(before == sbep_block_counts(out, n), "combine: block membership changed");
    return out;
}

std::pair<SbepGraph, SbepGraph> split_sbep_at(const SbepGraph& s, int cut) {
    std::vector<int> holding;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        const auto& vs = s.blocks[i].vertices;
        if (std::find(vs.begin(), vs.end(), cut) != vs.end()) holding.push_back(static_cast<int>(i));
    }
    if (holding.size() != 2)
        throw std::invalid_argument("split_sbep_at: vertex is not in exactly two blocks");

    // blocks connect when they share any vertex other than the cut vertex
    const std::size_t nb = s.blocks.size();
    std::vector<bool> side1(nb, false);
    std::vector<int> stack{holding[0]};
    side1[static_cast<std::size_t>(holding[0])] = true;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < nb; ++j) {
            if (side1[j]) continue;
            bool share = false;
            for (int a : s.blocks[static_cast<std::size_t>(i)].vertices) {
                if (a == cut) continue;
                const auto& vj = s.blocks[j].vertices;
                if (std::find(vj.begin(), vj.end(), a) != vj.end()) share = true;
            }
            if (share) {
                side1[j] = true;
                stack.push_back(static_cast<int>(j));
            }
        }
    }
    internal_check(!side1[static_cast<std::size_t>(holding[1])],
                   "split_sbep_at: sides meet away from the cut vertex");
    SbepGraph a, b;
    for (std::size_t i = 0; i < nb; ++i) (side1[i] ? a : b).blocks.push_back(s.blocks[i]);
    return {a, b};
}

// ---------------------------------------------------------------------------
// Spanning construction

namespace {

SbepGraph expect_sbep(std::variant<SbepGraph, NotTough>&& r, const char* what) {
    internal_check(std::holds_alternative<SbepGraph>(r), what);
    return std::get<SbepGraph>(std::move(r));
}

void check_edges_in_host(const Graph& host, const SbepGraph& s, const char* what) {
    for (auto [u, v] : sbep_edges(s)) internal_check(host.adjacent(u, v), what);
}

std::variant<SbepGraph, NotTough> spanning_sbep_step(const Graph& g) {
    const int n = g.vertex_count();
    const ToughnessResult tr = toughness_exact(g);
    if (!tr.value.at_least(Rational(1, 2))) return NotTough{*tr.witness};

    if (tr.value.at_least(Rational(1, 1))) {
        if (n == 2) {
            internal_check(g.adjacent(0, 1), "two-vertex graph with toughness >= 1 must be K2");
            return SbepGraph{{edge_block(0, 1)}};
        }
        auto rec = recognize(g);
        internal_check(std::holds_alternative<Cotree>(rec), "recursion produced a non-cograph");
        auto cyc = cograph_ham_cycle(g, std::get<Cotree>(rec));
        internal_check(cyc.has_value(), "1-tough cograph must have a hamiltonian cycle");
        if (cyc->size() % 2 == 0) return SbepGraph{{cycle_block(*cyc)}};
        // an odd cycle is not an SBEP block; chain the hamiltonian path instead
        SbepGraph chain;
        for (std::size_t i = 0; i + 1 < cyc->size(); ++i)
            chain.blocks.push_back(edge_block((*cyc)[i], (*cyc)[i + 1]));
        return chain;
    }

    // 1/2 <= t < 1
    const Rational t = tr.value.ratio();
    const VertexSet S = maximal_tough_set(g, tr);
    internal_check(neighbor_saturation_check(g, S), "saturation check failed on a tough-set");
    const auto comps = components_after_removal(g, S);

    std::optional<VertexSet> nontrivial;
    for (const auto& comp : comps)
        if (comp.size() >= 2) {
            nontrivial = comp;
            break;
        }

    if (nontrivial) {
        // A nontrivial component exists: recurse on it and on its contraction, then
        // embed the contracted side back by substituting single-block vertices.
        const VertexSet& R = *nontrivial;
        const auto flags = check_contraction_toughness(g, S, R, tr);
        internal_check(flags.component_tough, "component of tough-set complement not 1/2-tough");
        internal_check(flags.contracted_tough, "contraction lost toughness");

        const Graph rg = induced_subgraph(g, R);
        const SbepGraph TR = map_sbep_vertices(
            expect_sbep(spanning_sbep_step(rg), "component recursion failed"), R.ids());

        const ContractionResult cr = contract(g, R);
        const SbepGraph tp =
            expect_sbep(spanning_sbep_step(cr.graph), "contraction recursion failed");

        const VertexSet sbv = single_block_vertices(TR);
        internal_check(sbv.size() >= 2, "SBEP graph with fewer than two single-block vertices");
        const int x = sbv[0];
        const int y = sbv[1];
        const int vR = cr.contracted_vertex;

        auto host_map = [&](int sub_x) {
            std::vector<int> m(static_cast<std::size_t>(cr.graph.vertex_count()));
            for (int v = 0; v < cr.graph.vertex_count(); ++v)
                m[static_cast<std::size_t>(v)] =
                    v == vR ? sub_x : cr.origin[static_cast<std::size_t>(v)][0];
            return m;
        };

        const int vr_blocks =
            sbep_block_counts(tp, cr.graph.vertex_count())[static_cast<std::size_t>(vR)];
        SbepGraph result;
        if (vr_blocks == 1) {
            const SbepGraph mapped = map_sbep_vertices(tp, host_map(x));
            check_edges_in_host(g, mapped, "substituted edge missing in host");
            result.blocks = mapped.blocks;
        } else {
            internal_check(vr_blocks == 2, "contracted vertex in more than two blocks");
            auto [p1, p2] = split_sbep_at(tp, vR);
            const SbepGraph m1 = map_sbep_vertices(p1, host_map(x));
            const SbepGraph m2 = map_sbep_vertices(p2, host_map(y));
            check_edges_in_host(g, m1, "substituted edge missing in host");
            check_edges_in_host(g, m2, "substituted edge missing in host");
            result.blocks = m1.blocks;
            result.blocks.insert(result.blocks.end(), m2.blocks.begin(), m2.blocks.end());
        }
        result.blocks.insert(result.blocks.end(), TR.blocks.begin(), TR.blocks.end());
        return result;
    }

    // Every component of g-S is a single vertex.
    if (minimal_cutset_within(g, S) == S) {
        const VertexSet rest = set_difference(full_vertex_set(n), S);
        internal_check(S.size() < rest.size() && rest.size() <= 2 * S.size(),
                       "bipartite case out of size bounds");
        return bipartite_sbep(g, S, rest);
    }

    const TripartiteWitness w = find_tripartite_witness(g, S);
    const long long need = ceil_div_by(w.x_set.size(), t);
    internal_check(w.y_set.size() >= need + 1, "tripartite Y too small");
    std::vector<int> y1(w.y_set.begin(), w.y_set.begin() + need);
    std::vector<int> y2(w.y_set.begin() + need, w.y_set.end());
    const VertexSet Y1(y1), Y2(y2);
    internal_check(w.x_set.size() < Y1.size() && Y1.size() <= 2 * w.x_set.size(),
                   "Y1 size out of bounds");

    const SbepGraph TR = bipartite_sbep(g, w.x_set, Y1);

    const VertexSet gp_keep = set_difference(set_difference(full_vertex_set(n), w.x_set), Y1);
    const Graph gp = induced_subgraph(g, gp_keep);
    const SbepGraph Tp = map_sbep_vertices(
        expect_sbep(spanning_sbep_step(gp), "residual graph recursion lost 1/2-toughness"),
        gp_keep.ids());

    // an X-Y1 edge of TR and a U-Y2 edge of Tp
    const auto tr_edges = sbep_edges(TR);
    internal_check(!tr_edges.empty(), "empty SBEP");
    int x = tr_edges[0].first, py1 = tr_edges[0].second;
    if (!w.x_set.contains(x)) std::swap(x, py1);
    internal_check(w.x_set.contains(x) && Y1.contains(py1), "TR edge not across X-Y1");

    int z = -1, py2 = -1;
    for (auto [a, b] : sbep_edges(Tp)) {
        if (Y2.contains(a)) {
            z = b;
            py2 = a;
            break;
        }
        if (Y2.contains(b)) {
            z = a;
            py2 = b;
            break;
        }
    }
    internal_check(z >= 0, "no residual SBEP edge touches Y2");
    internal_check(w.u_set.contains(z), "Y2 neighbor in residual SBEP lies outside U");
    internal_check(g.adjacent(z, py1) && g.adjacent(x, py2), "tripartite cross edges missing");

    return combine(g, TR, Tp, {x, py1}, {z, py2});
}

}  // namespace

std::variant<SbepGraph, NotTough> spanning_sbep(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("spanning_sbep: need at least two vertices");
    auto rec = recognize(g);
    if (std::holds_alternative<P4Witness>(rec))
        throw NotCographError("spanning_sbep: input has an induced P4", std::get<P4Witness>(rec));
    if (!is_connected(g)) return NotTough{VertexSet{}};
    return spanning_sbep_step(g);
}

}  // namespace cotough
