#pragma once

// Brute-force reference for N_n(Z_p): every n-subset of the squares, plain
// std::set sumsets, no pruning. Shares nothing with the search beyond the
// primality check and is only meant for small p.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace sqsum::oracle {

struct NaiveMinimum {
    std::uint64_t minimum = 0;
    std::vector<std::uint64_t> witness;  // lexicographically least optimal set
    std::uint64_t subsets = 0;
};

inline NaiveMinimum naive_min_sumset(std::uint64_t n, std::uint64_t p) {
    std::set<std::uint64_t> sq;
    for (std::uint64_t a = 0; a < p; ++a) sq.insert(a * a % p);
    const std::vector<std::uint64_t> pool(sq.begin(), sq.end());
    if (n < 1 || n > pool.size()) throw std::invalid_argument("naive_min_sumset: infeasible n");

    // selection mask, first n slots set; prev_permutation walks subsets in
    // lexicographic order of their index lists
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);

    NaiveMinimum best;
    best.minimum = UINT64_MAX;
    do {
        std::vector<std::uint64_t> a;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pick[i]) a.push_back(pool[i]);
        std::set<std::uint64_t> sums;
        for (auto x : a)
            for (auto y : a) sums.insert((x + y) % p);
        ++best.subsets;
        if (sums.size() < best.minimum) {
            best.minimum = sums.size();
            best.witness = a;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace sqsum::oracle
