#include "testutil.hpp"

#include <numeric>
#include <random>

#include "cotough/util.hpp"

namespace testutil {

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("all_graphs_up_to_iso: 1 <= n <= 7");
    const int m = n * (n - 1) / 2;
    // edge index table
    std::vector<std::vector<int>> eidx(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            eidx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            eidx[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
            ++e;
        }

    // per-permutation remap of edge positions
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> remap(static_cast<std::size_t>(m));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                remap[static_cast<std::size_t>(eidx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] =
                    eidx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                        [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(1ull << m, false);
    std::vector<Graph> reps;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (seen[mask]) continue;
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> eidx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) & 1)
                    g.add_edge(i, j);
        reps.push_back(std::move(g));
        for (const auto& remap : remaps) {
            std::uint32_t img = 0;
            for (int b = 0; b < m; ++b)
                if ((mask >> b) & 1) img |= 1u << remap[static_cast<std::size_t>(b)];
            seen[img] = true;
        }
    }
    return reps;
}

Graph pseudo_random_graph(int n, std::uint64_t seed, int edge_percent) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cotough::rand_below(rng, 100) < static_cast<std::uint64_t>(edge_percent))
                g.add_edge(i, j);
    return g;
}

}  // namespace testutil
