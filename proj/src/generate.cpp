#include "cotough/generate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cotough/util.hpp"

namespace cotough {

namespace {

// Catalogs of unlabeled shapes. A "connected" shape is a leaf or join-rooted;
// a "scattered" shape is union-rooted (at least two connected parts). Leaves
// are numbered later, at composition time.
struct Catalogs {
    std::map<int, std::vector<Cotree>> connected, scattered;
};

// Renumbers leaves in DFS order starting at base.
Cotree shift_leaves(const Cotree& t, int& next) {
    if (t.op == Cotree::Op::leaf) return Cotree::leaf(next++);
    Cotree out;
    out.op = t.op;
    for (const auto& c : t.children) out.children.push_back(shift_leaves(c, next));
    return out;
}

// All multisets of shapes for parts sizes; picks with nondecreasing catalog
// index inside runs of equal part sizes so each multiset appears once.
void multiset_pick(const std::vector<int>& parts, std::size_t pos, int min_index,
                   const std::vector<const std::vector<Cotree>*>& pools,
                   std::vector<const Cotree*>& chosen,
                   const std::function<void(const std::vector<const Cotree*>&)>& emit) {
    if (pos == parts.size()) {
        emit(chosen);
        return;
    }
    const auto& pool = *pools[pos];
    const bool same_size_as_prev = pos > 0 && parts[pos] == parts[pos - 1];
    const int lo = same_size_as_prev ? min_index : 0;
    for (int i = lo; i < static_cast<int>(pool.size()); ++i) {
        chosen.push_back(&pool[static_cast<std::size_t>(i)]);
        multiset_pick(parts, pos + 1, i, pools, chosen, emit);
        chosen.pop_back();
    }
}

// Partitions of n into at least two parts, nonincreasing.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

void build_catalog(int n, Catalogs& cat);

const std::vector<Cotree>& connected_shapes(int n, Catalogs& cat) {
    build_catalog(n, cat);
    return cat.connected[n];
}

const std::vector<Cotree>& scattered_shapes(int n, Catalogs& cat) {
    build_catalog(n, cat);
    return cat.scattered[n];
}

void build_catalog(int n, Catalogs& cat) {
    if (cat.connected.count(n)) return;
    if (n == 1) {
        cat.connected[1] = {Cotree::leaf(0)};
        cat.scattered[1] = {};
        return;
    }
    for (int m = 1; m < n; ++m) build_catalog(m, cat);
    cat.connected[n] = {};
    cat.scattered[n] = {};

    std::vector<std::vector<int>> parts_list;
    std::vector<int> cur;
    partitions(n, n - 1, cur, parts_list);

    for (const auto& parts : parts_list) {
        // join children are leaves or union-rooted; union children are leaves
        // or join-rooted
        for (int as_join = 0; as_join < 2; ++as_join) {
            std::vector<const std::vector<Cotree>*> pools;
            bool ok = true;
            for (int p : parts) {
                const std::vector<Cotree>* pool =
                    p == 1 ? &cat.connected[1]
                           : (as_join ? &cat.scattered[p] : &cat.connected[p]);
                if (pool->empty()) ok = false;
                pools.push_back(pool);
            }
            if (!ok) continue;
            std::vector<const Cotree*> chosen;
            std::function<void(const std::vector<const Cotree*>&)> emit =
                [&](const std::vector<const Cotree*>& picks) {
                    std::vector<Cotree> children;
                    children.reserve(picks.size());
                    for (const Cotree* c : picks) children.push_back(*c);
                    if (as_join)
                        cat.connected[n].push_back(Cotree::join(std::move(children)));
                    else
                        cat.scattered[n].push_back(Cotree::unite(std::move(children)));
                };
            multiset_pick(parts, 0, 0, pools, chosen, emit);
        }
    }
}

std::vector<Cotree> number_all(const std::vector<Cotree>& shapes) {
    std::vector<Cotree> out;
    out.reserve(shapes.size());
    for (const auto& s : shapes) {
        int next = 0;
        out.push_back(shift_leaves(s, next));
    }
    return out;
}

}  // namespace

std::vector<Cotree> enumerate_connected_cotrees(int n) {
    if (n < 1) return {};
    Catalogs cat;
    return number_all(connected_shapes(n, cat));
}

std::vector<Cotree> enumerate_cotrees(int n) {
    if (n < 1) return {};
    Catalogs cat;
    std::vector<Cotree> all = number_all(connected_shapes(n, cat));
    for (const auto& s : number_all(scattered_shapes(n, cat))) all.push_back(s);
    return all;
}

namespace {

// n into c parts >= 1, uniformly: a random (c-1)-subset of the n-1 gaps.
std::vector<int> random_composition(int n, int c, std::mt19937_64& rng) {
    std::vector<int> gaps(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) gaps[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < c - 1; ++i) {
        const auto j = i + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n - 1 - i)));
        std::swap(gaps[static_cast<std::size_t>(i)], gaps[static_cast<std::size_t>(j)]);
    }
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (c - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> parts;
    int prev = 0;
    for (int cut : cuts) {
        parts.push_back(cut - prev);
        prev = cut;
    }
    parts.push_back(n - prev);
    return parts;
}

Cotree random_tree(int n, std::mt19937_64& rng, const RandomCographOptions& opt,
                   int forced_op /* -1 none, 0 union, 1 join */) {
    if (n == 1) return Cotree::leaf(0);
    int op;
    if (forced_op >= 0)
        op = forced_op;
    else
        op = rand_below(rng, 1000000) < static_cast<std::uint64_t>(opt.join_bias_ppm) ? 1 : 0;
    const int c = 2 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n - 1)));
    const auto parts = random_composition(n, c, rng);
    std::vector<Cotree> children;
    for (int p : parts) {
        Cotree child = random_tree(p, rng, opt, -1);
        // same-type child collapses into this node
        if (child.op != Cotree::Op::leaf && static_cast<int>(child.op == Cotree::Op::join) == op) {
            for (auto& gc : child.children) children.push_back(std::move(gc));
        } else {
            children.push_back(std::move(child));
        }
    }
    return op ? Cotree::join(std::move(children)) : Cotree::unite(std::move(children));
}

}  // namespace

Cotree random_cotree(int n, std::mt19937_64& rng, const RandomCographOptions& opt) {
    if (n < 1) throw std::invalid_argument("random_cotree: n must be positive");
    Cotree shape = random_tree(n, rng, opt, opt.connected && n >= 2 ? 1 : -1);
    int next = 0;
    return shift_leaves(shape, next);
}

Graph random_cograph(int n, std::mt19937_64& rng, const RandomCographOptions& opt) {
    return realize_cotree(random_cotree(n, rng, opt), n);
}

}  // namespace cotough
