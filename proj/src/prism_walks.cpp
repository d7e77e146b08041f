#include "cotough/prism_walks.hpp"

#include <algorithm>
#include <set>

#include "cotough/util.hpp"

namespace cotough {

// ---------------------------------------------------------------------------
// Prism cycles from SBEP certificates

namespace {

using PrismSeq = std::vector<std::pair<int, int>>;

// Cycle minus the vertical edge at x, starting just after it; the result runs
// from one copy of x to the other.
PrismSeq open_at_vertical(const PrismSeq& c, int x) {
    const std::size_t L = c.size();
    for (std::size_t i = 0; i < L; ++i) {
        if (c[i].first == x && c[(i + 1) % L].first == x) {
            PrismSeq p;
            for (std::size_t j = 0; j < L; ++j) p.push_back(c[(i + 1 + j) % L]);
            return p;
        }
    }
    internal_check(false, "vertical edge at cut vertex not in cycle");
    return {};
}

PrismSeq cycle_for(const SbepGraph& s) {
    if (s.blocks.size() == 1) {
        const auto& b = s.blocks[0];
        if (b.kind == SbepBlock::Kind::edge) {
            const int u = b.vertices[0], v = b.vertices[1];
            return {{u, 0}, {v, 0}, {v, 1}, {u, 1}};
        }
        // weave across the two layers, switching sides at every vertex, so the
        // vertical edge of every cycle vertex is used
        PrismSeq out;
        for (std::size_t i = 0; i < b.vertices.size(); ++i) {
            const int v = b.vertices[i];
            if (i % 2 == 0) {
                out.push_back({v, 0});
                out.push_back({v, 1});
            } else {
                out.push_back({v, 1});
                out.push_back({v, 0});
            }
        }
        return out;
    }

    // least vertex lying in exactly two blocks
    int maxv = 0;
    for (const auto& b : s.blocks)
        for (int v : b.vertices) maxv = std::max(maxv, v);
    const auto counts = sbep_block_counts(s, maxv + 1);
    int cut = -1;
    for (int v = 0; v <= maxv && cut < 0; ++v)
        if (counts[static_cast<std::size_t>(v)] == 2) cut = v;
    internal_check(cut >= 0, "multi-block SBEP graph without a cutvertex");

    auto [s1, s2] = split_sbep_at(s, cut);
    PrismSeq p1 = open_at_vertical(cycle_for(s1), cut);
    PrismSeq p2 = open_at_vertical(cycle_for(s2), cut);
    if (p2.front().second != p1.back().second) std::reverse(p2.begin(), p2.end());
    internal_check(p2.front() == p1.back() && p2.back() == p1.front(),
                   "cut vertex copies do not line up");
    PrismSeq out = p1;
    for (std::size_t j = 1; j + 1 < p2.size(); ++j) out.push_back(p2[j]);
    return out;
}

}  // namespace

PrismCycle prism_cycle_from_sbep(const Graph& host, const SbepGraph& s) {
    if (!validate_sbep(host, s))
        throw std::invalid_argument("prism_cycle_from_sbep: invalid SBEP graph");
    PrismCycle out;
    out.seq = canonical_cycle(cycle_for(s));
    internal_check(prism_cycle_uses_single_block_verticals(s, out),
                   "prism cycle misses a single-block vertical edge");
    return out;
}

KWalk two_walk_from_prism_cycle(const PrismCycle& c) {
    std::vector<int> walk;
    walk.reserve(c.seq.size());
    for (auto [v, side] : c.seq) walk.push_back(v);
    return KWalk{2, canonical_cycle(walk)};
}

bool validate_prism_cycle(const Graph& host, const PrismCycle& c) {
    const int n = host.vertex_count();
    const std::size_t L = c.seq.size();
    if (L != static_cast<std::size_t>(2 * n) || L < 3) return false;
    std::set<std::pair<int, int>> seen;
    for (auto [v, side] : c.seq) {
        if (v < 0 || v >= n || (side != 0 && side != 1)) return false;
        if (!seen.insert({v, side}).second) return false;
    }
    for (std::size_t i = 0; i < L; ++i) {
        const auto a = c.seq[i];
        const auto b = c.seq[(i + 1) % L];
        const bool vertical = a.first == b.first && a.second != b.second;
        const bool horizontal = a.second == b.second && host.adjacent(a.first, b.first);
        if (!vertical && !horizontal) return false;
    }
    return true;
}

bool prism_cycle_uses_single_block_verticals(const SbepGraph& s, const PrismCycle& c) {
    const std::size_t L = c.seq.size();
    std::set<int> verticals;
    for (std::size_t i = 0; i < L; ++i) {
        const auto a = c.seq[i];
        const auto b = c.seq[(i + 1) % L];
        if (a.first == b.first && a.second != b.second) verticals.insert(a.first);
    }
    for (int v : single_block_vertices(s))
        if (!verticals.count(v)) return false;
    return true;
}

bool validate_k_walk(const Graph& g, const KWalk& w) {
    const int n = g.vertex_count();
    if (w.k < 1 || w.seq.empty()) return false;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    const std::size_t L = w.seq.size();
    for (std::size_t i = 0; i < L; ++i) {
        const int a = w.seq[i];
        const int b = w.seq[(i + 1) % L];
        if (a < 0 || a >= n) return false;
        ++count[static_cast<std::size_t>(a)];
        if (a != b && !g.adjacent(a, b)) return false;
    }
    for (int v = 0; v < n; ++v)
        if (count[static_cast<std::size_t>(v)] < 1 || count[static_cast<std::size_t>(v)] > w.k)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles via cotree path covers

namespace {

struct Cover {
    std::vector<std::vector<int>> paths;
    int n = 0;
};

// Cuts path ends off until the list has exactly s pieces.
std::vector<std::vector<int>> split_to(std::vector<std::vector<int>> paths, int s) {
    internal_check(static_cast<int>(paths.size()) <= s, "split_to: too many pieces already");
    while (static_cast<int>(paths.size()) < s) {
        bool done = false;
        for (auto& p : paths) {
            if (p.size() >= 2) {
                const int last = p.back();
                p.pop_back();
                paths.push_back({last});
                done = true;
                break;
            }
        }
        internal_check(done, "split_to: not enough vertices");
    }
    return paths;
}

// Minimum path cover of the join A + B. With p paths covering each side,
// max(1, pA - nB, pB - nA) paths are optimal: each path alternates segments
// of the two sides, so one side can save at most the other's vertex count.
Cover join_covers(const Cover& A, const Cover& B) {
    const int pA = static_cast<int>(A.paths.size());
    const int pB = static_cast<int>(B.paths.size());
    Cover out;
    out.n = A.n + B.n;

    auto glue = [&out](const Cover& big, const Cover& small) {
        // singletonize the small side; each of its vertices joins two paths
        std::vector<int> glue_vs;
        for (const auto& p : small.paths) glue_vs.insert(glue_vs.end(), p.begin(), p.end());
        std::vector<int> long_path = big.paths[0];
        for (std::size_t i = 0; i < glue_vs.size(); ++i) {
            long_path.push_back(glue_vs[i]);
            const auto& next = big.paths[i + 1];
            long_path.insert(long_path.end(), next.begin(), next.end());
        }
        out.paths.push_back(std::move(long_path));
        for (std::size_t i = glue_vs.size() + 1; i < big.paths.size(); ++i)
            out.paths.push_back(big.paths[i]);
    };

    if (pA - B.n >= 1 && pA - B.n >= pB - A.n) {
        glue(A, B);
    } else if (pB - A.n >= 1) {
        glue(B, A);
    } else {
        // pA <= nB and pB <= nA: a single path exists
        const int s = std::max(pA, pB);
        const auto as = split_to(A.paths, s);
        const auto bs = split_to(B.paths, s);
        std::vector<int> path;
        for (int i = 0; i < s; ++i) {
            path.insert(path.end(), as[static_cast<std::size_t>(i)].begin(),
                        as[static_cast<std::size_t>(i)].end());
            path.insert(path.end(), bs[static_cast<std::size_t>(i)].begin(),
                        bs[static_cast<std::size_t>(i)].end());
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

Cover realize_cover(const Cotree& t) {
    Cover out;
    if (t.op == Cotree::Op::leaf) {
        out.paths = {{t.vertex}};
        out.n = 1;
        return out;
    }
    if (t.op == Cotree::Op::unite) {
        for (const auto& c : t.children) {
            Cover sub = realize_cover(c);
            out.n += sub.n;
            for (auto& p : sub.paths) out.paths.push_back(std::move(p));
        }
        return out;
    }
    out = realize_cover(t.children[0]);
    for (std::size_t i = 1; i < t.children.size(); ++i)
        out = join_covers(out, realize_cover(t.children[i]));
    return out;
}

}  // namespace

std::vector<std::vector<int>> minimum_path_cover(const Cotree& ct) {
    return realize_cover(ct).paths;
}

std::optional<std::vector<int>> cograph_ham_cycle(const Graph& g, const Cotree& ct) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("cograph_ham_cycle: need at least three vertices");
    if (!cotree_well_formed(ct))
        throw std::invalid_argument("cograph_ham_cycle: malformed cotree");
    if (!realize_cotree(ct, n).same_adjacency(g))
        throw std::invalid_argument("cograph_ham_cycle: cotree does not realize g");
    if (ct.op != Cotree::Op::join) return std::nullopt;  // union root: disconnected

    Cover A = realize_cover(ct.children[0]);
    for (std::size_t i = 1; i + 1 < ct.children.size(); ++i)
        A = join_covers(A, realize_cover(ct.children[i]));
    const Cover B = realize_cover(ct.children.back());

    const int pA = static_cast<int>(A.paths.size());
    const int pB = static_cast<int>(B.paths.size());
    // a hamiltonian cycle alternates segments: each side needs at most as many
    // segments as the other side has vertices
    if (pA > B.n || pB > A.n) return std::nullopt;
    const int s = std::max(pA, pB);
    const auto as = split_to(A.paths, s);
    const auto bs = split_to(B.paths, s);
    std::vector<int> cyc;
    for (int i = 0; i < s; ++i) {
        cyc.insert(cyc.end(), as[static_cast<std::size_t>(i)].begin(),
                   as[static_cast<std::size_t>(i)].end());
        cyc.insert(cyc.end(), bs[static_cast<std::size_t>(i)].begin(),
                   bs[static_cast<std::size_t>(i)].end());
    }
    return canonical_cycle(cyc);
}

std::variant<KWalk, NotTough> find_k_walk(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_k_walk: k must be positive");
    auto rec = recognize(g);
    if (std::holds_alternative<P4Witness>(rec))
        throw NotCographError("find_k_walk: input has an induced P4", std::get<P4Witness>(rec));
    if (!is_connected(g)) throw std::invalid_argument("find_k_walk: graph must be connected");

    const int n = g.vertex_count();
    // degenerate closed walks; the hamiltonian-cycle equivalence starts at n=3
    if (n == 1) return KWalk{k, {0}};
    if (n == 2) return KWalk{k, {0, 1}};

    std::optional<std::vector<int>> cyc;
    if (k == 1) {
        cyc = cograph_ham_cycle(g, std::get<Cotree>(rec));
    } else {
        const Graph prod = lex_product_k(g, k);
        auto prec = recognize(prod);
        internal_check(std::holds_alternative<Cotree>(prec), "blow-up of a cograph not a cograph");
        cyc = cograph_ham_cycle(prod, std::get<Cotree>(prec));
    }
    if (cyc) {
        std::vector<int> walk;
        walk.reserve(cyc->size());
        for (int pv : *cyc) walk.push_back(k == 1 ? pv : pv / k);
        return KWalk{k, canonical_cycle(walk)};
    }
    const ToughnessResult tr = toughness_exact(g);
    internal_check(tr.value.less_than(Rational(1, k)),
                   "no spanning walk found despite sufficient toughness");
    return NotTough{*tr.witness};
}

}  // namespace cotough
