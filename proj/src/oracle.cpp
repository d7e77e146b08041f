#include "cotough/oracle.hpp"

#include <algorithm>
#include <set>

#include "cotough/util.hpp"

namespace cotough::oracle {

namespace {

// Adjacency as one 32-bit mask per vertex (the oracles stop at 18 vertices).
std::vector<std::uint32_t> masks_of(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= 1u << v;
    return adj;
}

bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t live) {
    if (live == 0) return true;
    std::uint32_t comp = live & (~live + 1);
    std::uint32_t frontier = comp;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            const int v = __builtin_ctz(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(v)];
        }
        next &= live & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp == live;
}

bool ham_backtrack(const std::vector<std::uint32_t>& adj, int n, bool want_cycle, int start,
                   std::vector<int>& path, std::uint32_t visited) {
    const int cur = path.back();
    if (static_cast<int>(path.size()) == n)
        return !want_cycle || (adj[static_cast<std::size_t>(cur)] >> start) & 1;
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    const std::uint32_t rest = all & ~visited;
    // the unvisited vertices plus the current endpoint must stay connected
    if (!mask_connected(adj, rest | (1u << cur))) return false;
    for (int v = 0; v < n; ++v) {
        if (!((adj[static_cast<std::size_t>(cur)] >> v) & 1) || ((visited >> v) & 1)) continue;
        path.push_back(v);
        if (ham_backtrack(adj, n, want_cycle, start, path, visited | (1u << v))) return true;
        path.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_ham(const Graph& g, bool want_cycle) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (want_cycle && n < 3) return std::nullopt;
    if (!want_cycle && n == 1) return std::vector<int>{0};
    if (!is_connected(g)) return std::nullopt;
    const auto adj = masks_of(g);
    if (want_cycle) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) < 2) return std::nullopt;
        std::vector<int> path{0};
        if (ham_backtrack(adj, n, true, 0, path, 1u)) return path;
        return std::nullopt;
    }
    for (int start = 0; start < n; ++start) {
        std::vector<int> path{start};
        if (ham_backtrack(adj, n, false, start, path, 1u << start)) return path;
    }
    return std::nullopt;
}

}  // namespace

OracleVerdict oracle_hamiltonian(const Graph& g, HamKind kind) {
    if (g.vertex_count() > 18)
        throw std::invalid_argument("oracle_hamiltonian: size guard (n <= 18) exceeded");
    OracleVerdict out;
    out.property = kind == HamKind::cycle ? Property::hamiltonian_cycle : Property::hamiltonian_path;
    auto found = find_ham(g, kind == HamKind::cycle);
    out.holds = found.has_value();
    if (found) {
        if (kind == HamKind::cycle) *found = canonical_cycle(*found);
        out.vertex_sequence = std::move(found);
    }
    return out;
}

OracleVerdict oracle_prism_hamiltonian(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 9) throw std::invalid_argument("oracle_prism_hamiltonian: size guard (n <= 9) exceeded");
    OracleVerdict out;
    out.property = Property::prism_hamiltonian;

    // own prism: copy (v, s) -> s*n + v
    Graph pr(2 * n);
    for (int v = 0; v < n; ++v) pr.add_edge(v, n + v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                pr.add_edge(u, v);
                pr.add_edge(n + u, n + v);
            }

    auto found = find_ham(pr, true);
    out.holds = found.has_value();
    if (found) {
        PrismCycle pc;
        for (int pv : *found) pc.seq.emplace_back(pv % n, pv / n);
        pc.seq = canonical_cycle(pc.seq);
        out.prism_cycle = std::move(pc);
    }
    return out;
}

OracleVerdict oracle_k_walk(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("oracle_k_walk: k must be positive");
    const int n = g.vertex_count();
    if (n * k > 18) throw std::invalid_argument("oracle_k_walk: size guard (n*k <= 18) exceeded");
    OracleVerdict out;
    out.property = Property::k_walk;
    out.k = k;

    if (n == 1) {
        out.holds = true;
        out.walk = KWalk{k, {0}};
        return out;
    }
    if (n == 2) {
        out.holds = g.adjacent(0, 1);
        if (out.holds) out.walk = KWalk{k, {0, 1}};
        return out;
    }

    // own blow-up: copy (u, i) -> u*k + i; a spanning k-walk of g corresponds
    // to a hamiltonian cycle here
    Graph bl(n * k);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) bl.add_edge(u * k + i, u * k + j);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v))
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) bl.add_edge(u * k + i, v * k + j);

    auto found = find_ham(bl, true);
    out.holds = found.has_value();
    if (found) {
        std::vector<int> walk;
        for (int pv : *found) walk.push_back(pv / k);
        out.walk = KWalk{k, canonical_cycle(walk)};
    }
    return out;
}

ToughnessResult oracle_toughness(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("oracle_toughness: size guard (n <= 10) exceeded");
    if (n == 0) return {ToughnessValue::infinite(), std::nullopt};

    std::optional<Rational> best;
    std::vector<int> best_set;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> removed;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) removed.push_back(v);
        const auto comps = components_after_removal(g, VertexSet(removed));
        if (comps.size() < 2) continue;
        Rational r(static_cast<long long>(removed.size()), static_cast<long long>(comps.size()));
        if (!best || r < *best || (r == *best && removed < best_set)) {
            best = r;
            best_set = removed;
        }
    }
    if (!best) return {ToughnessValue::infinite(), std::nullopt};
    return {ToughnessValue::finite(*best), VertexSet(best_set)};
}

namespace {

// Own biconnected decomposition (plain recursive lowpoint), returning each
// block as its edge list.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    int timer = 0;

    explicit BlockFinder(const Graph& gr)
        : g(gr),
          disc(static_cast<std::size_t>(gr.vertex_count()), -1),
          low(static_cast<std::size_t>(gr.vertex_count()), 0) {}

    void dfs(int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v) || v == parent) continue;
            if (disc[static_cast<std::size_t>(v)] == -1) {
                estack.emplace_back(u, v);
                dfs(v, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    std::vector<std::pair<int, int>> blk;
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e.first == u && e.second == v) break;
                    }
                    block_edges.push_back(std::move(blk));
                }
            } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                estack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        }
    }
};

// Definition check on an explicit spanning subgraph: connected, every block
// an edge or even cycle, every vertex in at most two blocks.
bool subgraph_is_spanning_sbep(const Graph& host, const std::vector<std::pair<int, int>>& sub_edges) {
    const int n = host.vertex_count();
    Graph sub(n);
    for (auto [u, v] : sub_edges) sub.add_edge(u, v);
    if (!is_connected(sub)) return false;  // also fails when some vertex is isolated (n >= 2)

    BlockFinder bf(sub);
    bf.dfs(0, -1);
    std::vector<int> membership(static_cast<std::size_t>(n), 0);
    for (const auto& blk : bf.block_edges) {
        std::set<int> vs;
        for (auto [u, v] : blk) {
            vs.insert(u);
            vs.insert(v);
        }
        for (int v : vs) ++membership[static_cast<std::size_t>(v)];
        if (blk.size() == 1) continue;  // an edge block
        // otherwise must be a single even cycle: |E| = |V|, even, all degrees 2
        if (blk.size() != vs.size() || blk.size() % 2 != 0) return false;
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : blk) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        for (int v : vs)
            if (deg[static_cast<std::size_t>(v)] != 2) return false;
    }
    for (int v = 0; v < n; ++v)
        if (membership[static_cast<std::size_t>(v)] > 2) return false;
    return true;
}

}  // namespace

OracleVerdict oracle_sbep_spanning(const Graph& g) {
    const auto all_edges = g.edges();
    const int m = static_cast<int>(all_edges.size());
    if (m > 20) throw std::invalid_argument("oracle_sbep_spanning: size guard (|E| <= 20) exceeded");
    OracleVerdict out;
    out.property = Property::sbep_spanning;
    if (g.vertex_count() < 2) return out;

    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::pair<int, int>> sub;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) sub.push_back(all_edges[static_cast<std::size_t>(i)]);
        if (sub.empty()) continue;
        if (subgraph_is_spanning_sbep(g, sub)) {
            out.holds = true;
            return out;
        }
    }
    return out;
}

}  // namespace cotough::oracle
