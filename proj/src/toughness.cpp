#include "cotough/toughness.hpp"

#include <algorithm>

#include "cotough/cograph.hpp"
#include "cotough/util.hpp"

namespace cotough {

namespace {

int count_components_u64(const std::vector<std::uint64_t>& adj, std::uint64_t live) {
    int c = 0;
    std::uint64_t rem = live;
    while (rem) {
        ++c;
        std::uint64_t comp = rem & (~rem + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj[static_cast<std::size_t>(v)];
            }
            next &= live & ~comp;
            comp |= next;
            frontier = next;
        }
        rem &= ~comp;
    }
    return c;
}

std::uint64_t all_mask(int n) {
    return n == 64 ? ~0ull : ((1ull << n) - 1);
}

Rational ratio_of(const Graph& g, const VertexSet& s) {
    const auto comps = components_after_removal(g, s);
    internal_check(comps.size() >= 2, "ratio_of: not a cutset");
    return Rational(s.size(), static_cast<long long>(comps.size()));
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("toughness_exact: supports at most 64 vertices");
    if (n == 0) return {ToughnessValue::infinite(), std::nullopt};

    const auto adj = g.adjacency_bitmasks();
    const std::uint64_t all = all_mask(n);
    if (count_components_u64(adj, all) >= 2)
        return {ToughnessValue::finite(Rational(0, 1)), VertexSet{}};
    if (is_complete(g)) return {ToughnessValue::infinite(), std::nullopt};

    std::optional<Rational> best;
    std::vector<int> best_set;
    for (int s = 1; s <= n - 2; ++s) {
        // no cutset of this or larger size can do better than s/(n-s)
        if (best && Rational(s, n - s) > *best) break;
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::uint64_t mask = 0;
            for (int v : idx) mask |= 1ull << v;
            const int c = count_components_u64(adj, all & ~mask);
            if (c >= 2) {
                Rational r(s, c);
                if (!best || r < *best) {
                    best = r;
                    best_set = idx;
                } else if (r == *best && idx < best_set) {
                    best_set = idx;
                }
            }
            int i = s - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    internal_check(best.has_value(), "connected non-complete graph must have a cutset");
    return {ToughnessValue::finite(*best), VertexSet(best_set)};
}

bool is_t_tough(const Graph& g, const Rational& t) {
    return toughness_exact(g).value.at_least(t);
}

VertexSet maximal_tough_set(const Graph& g) {
    return maximal_tough_set(g, toughness_exact(g));
}

VertexSet maximal_tough_set(const Graph& g, const ToughnessResult& precomputed) {
    if (precomputed.value.is_infinite())
        throw std::invalid_argument("maximal_tough_set: complete graph has no cutset");
    if (!is_connected(g))
        throw std::invalid_argument("maximal_tough_set: graph must be connected");
    const Rational tau = precomputed.value.ratio();
    VertexSet s = *precomputed.witness;
    const int n = g.vertex_count();
    for (bool grew = true; grew;) {
        grew = false;
        for (int v = 0; v < n; ++v) {
            if (s.contains(v)) continue;
            VertexSet cand = set_union(s, VertexSet{v});
            const auto comps = components_after_removal(g, cand);
            if (comps.size() < 2) continue;
            if (Rational(cand.size(), static_cast<long long>(comps.size())) == tau) {
                s = std::move(cand);
                grew = true;
                break;
            }
        }
    }
    return s;
}

int adjacency_count(const Graph& g, const VertexSet& s, const VertexSet& x) {
    if (!is_subset(x, s)) throw std::invalid_argument("adjacency_count: x must be a subset of s");
    if (!is_cutset(g, s)) throw std::invalid_argument("adjacency_count: s must be a cutset");
    int count = 0;
    for (const auto& comp : components_after_removal(g, s)) {
        bool touched = false;
        for (int u : x) {
            for (int v : comp)
                if (g.adjacent(u, v)) {
                    touched = true;
                    break;
                }
            if (touched) break;
        }
        if (touched) ++count;
    }
    return count;
}

VertexSet minimal_cutset_within(const Graph& g, const VertexSet& s) {
    // s may also be a superset of a cutset without cutting itself (removing
    // too much can leave a single component); peeling still reaches one then.
    VertexSet u = s;
    for (bool shrunk = true; shrunk;) {
        shrunk = false;
        for (int v : u) {
            VertexSet cand = set_difference(u, VertexSet{v});
            if (is_cutset(g, cand)) {
                u = std::move(cand);
                shrunk = true;
                break;
            }
        }
    }
    if (!is_cutset(g, u))
        throw std::invalid_argument("minimal_cutset_within: s contains no reachable cutset");
    return u;
}

TripartiteWitness find_tripartite_witness(const Graph& g, const VertexSet& s) {
    if (!is_cutset(g, s)) throw std::invalid_argument("find_tripartite_witness: s is not a cutset");
    // precondition: every vertex of s sees >= 2 components of g-s
    {
        const auto comps = components_after_removal(g, s);
        for (int u : s) {
            int seen = 0;
            for (const auto& comp : comps)
                for (int v : comp)
                    if (g.adjacent(u, v)) {
                        ++seen;
                        break;
                    }
            if (seen < 2)
                throw std::invalid_argument(
                    "find_tripartite_witness: a vertex of s is adjacent to fewer than two "
                    "components");
        }
    }

    // Work over (active vertex set, cutset) pairs in host ids; each round peels
    // a minimal cutset and descends into the nontrivial component meeting s.
    VertexSet active = full_vertex_set(g.vertex_count());
    VertexSet cur_s = s;
    std::vector<int> accumulated_u;

    for (;;) {
        const Graph sub = induced_subgraph(g, active);
        std::vector<int> local_s;
        for (int i = 0; i < active.size(); ++i)
            if (cur_s.contains(active[i])) local_s.push_back(i);
        const VertexSet sl(local_s);
        internal_check(is_cutset(sub, sl), "tripartite: cutset lost during recursion");

        const VertexSet u0_local = minimal_cutset_within(sub, sl);
        if (u0_local.size() == sl.size())
            throw std::invalid_argument("find_tripartite_witness: s is a minimal cutset");

        // saturation inside the current subgraph (cograph structure)
        if (!neighbor_saturation_check(sub, sl))
            throw std::invalid_argument("find_tripartite_witness: saturation failed (input not P4-free?)");

        // nontrivial component of sub - u0 meeting s, least vertex first
        const auto comps = components_after_removal(sub, u0_local);
        const VertexSet sl_rem = set_difference(sl, u0_local);
        internal_check(!sl_rem.empty(), "tripartite: s minus minimal cutset empty");
        std::optional<VertexSet> g1_local;
        for (const auto& comp : comps) {
            if (comp.size() < 2) continue;
            if (!set_intersection(comp, sl_rem).empty()) {
                g1_local = comp;
                break;
            }
        }
        internal_check(g1_local.has_value(), "tripartite: no nontrivial component meets s");

        for (int v : u0_local) accumulated_u.push_back(active[v]);
        const VertexSet s1_local = set_intersection(*g1_local, sl_rem);

        // base case: s1 is a minimal cutset of g1
        const Graph g1 = induced_subgraph(sub, *g1_local);
        std::vector<int> s1_in_g1;
        for (int i = 0; i < g1_local->size(); ++i)
            if (s1_local.contains((*g1_local)[i])) s1_in_g1.push_back(i);
        internal_check(is_cutset(g1, VertexSet(s1_in_g1)), "tripartite: s1 not a cutset of g1");

        auto local_to_host = [&](int v_in_sub) { return active[v_in_sub]; };
        if (minimal_cutset_within(g1, VertexSet(s1_in_g1)) == VertexSet(s1_in_g1)) {
            // s1 minimal: U = accumulated, X = s1, Y = V(g1) - s1
            std::vector<int> xs, ys;
            for (int v : *g1_local) {
                if (s1_local.contains(v))
                    xs.push_back(local_to_host(v));
                else
                    ys.push_back(local_to_host(v));
            }
            TripartiteWitness w{VertexSet(accumulated_u), VertexSet(xs), VertexSet(ys)};
            internal_check(validate_tripartite_witness(g, s, w),
                           "tripartite: constructed witness failed validation");
            return w;
        }

        // recurse: active becomes g1 (in host ids), cutset becomes s1
        std::vector<int> next_active, next_s;
        for (int v : *g1_local) next_active.push_back(local_to_host(v));
        for (int v : s1_local) next_s.push_back(local_to_host(v));
        active = VertexSet(next_active);
        cur_s = VertexSet(next_s);
    }
}

bool validate_tripartite_witness(const Graph& g, const VertexSet& s, const TripartiteWitness& w) {
    if (w.x_set.empty() || w.y_set.empty()) return false;
    if (!is_cutset(g, w.u_set)) return false;
    if (!is_subset(w.u_set, s)) return false;
    if (!is_subset(w.x_set, set_difference(s, w.u_set))) return false;
    if (!set_intersection(w.y_set, s).empty()) return false;
    // X u Y is one full component of g-U
    const VertexSet xy = set_union(w.x_set, w.y_set);
    bool found = false;
    for (const auto& comp : components_after_removal(g, w.u_set))
        if (comp == xy) found = true;
    if (!found) return false;
    // complete tripartite across parts
    const VertexSet* parts[3] = {&w.u_set, &w.x_set, &w.y_set};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int a : *parts[i])
                for (int b : *parts[j])
                    if (!g.adjacent(a, b)) return false;
    return true;
}

ContractionToughness check_contraction_toughness(const Graph& g, const VertexSet& s,
                                                 const VertexSet& r) {
    return check_contraction_toughness(g, s, r, toughness_exact(g));
}

ContractionToughness check_contraction_toughness(const Graph& g, const VertexSet& s,
                                                 const VertexSet& r,
                                                 const ToughnessResult& precomputed) {
    if (precomputed.value.is_infinite())
        throw std::invalid_argument("check_contraction_toughness: complete graph");
    const Rational t = precomputed.value.ratio();
    if (t > Rational(1, 1))
        throw std::invalid_argument("check_contraction_toughness: requires tau(g) <= 1");
    if (ratio_of(g, s) != t)
        throw std::invalid_argument("check_contraction_toughness: s is not a tough-set");
    // r must be a component of g-s
    bool is_component = false;
    for (const auto& comp : components_after_removal(g, s))
        if (comp == r) is_component = true;
    if (!is_component)
        throw std::invalid_argument("check_contraction_toughness: r is not a component of g-s");

    ContractionToughness out;
    const long long k = ceil_div_by(1, t);
    out.component_tough = toughness_exact(induced_subgraph(g, r)).value.at_least(Rational(1, k));
    out.contracted_tough = toughness_exact(contract(g, r).graph).value.at_least(t);
    return out;
}

}  // namespace cotough
