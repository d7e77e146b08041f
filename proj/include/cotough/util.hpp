#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotough {

// Internal consistency check. A failure here is a bug, not bad input.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Unbiased draw from [0, m). Uses the raw mt19937_64 stream so results are
// identical across standard libraries (uniform_int_distribution is not).
template <typename Rng>
std::uint64_t rand_below(Rng& rng, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("rand_below: m must be positive");
    std::uint64_t threshold = (0 - m) % m;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % m;
    }
}

// Canonical form of a cyclic sequence: among all rotations in both directions,
// the lexicographically least sequence.
template <typename T>
std::vector<T> canonical_cycle(const std::vector<T>& seq) {
    const std::size_t n = seq.size();
    if (n <= 1) return seq;
    std::vector<T> best;
    for (std::size_t start = 0; start < n; ++start) {
        for (int dir : {1, -1}) {
            std::vector<T> cand(n);
            for (std::size_t i = 0; i < n; ++i)
                cand[i] = seq[(start + n + dir * static_cast<long long>(i)) % n];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace cotough
