#pragma once

// Test-only ground truth that shares no code with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gstir::testing {

// Proper colourings of a graph on n vertices with x colours, by trying all
// x^n maps.
inline std::uint64_t count_proper_colorings(std::size_t n,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                            std::size_t x) {
    if (n == 0) {
        return 1;
    }
    if (x == 0) {
        return 0;
    }
    std::vector<std::size_t> colour(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : edges) {
            if (colour[u] == colour[v]) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
        std::size_t i = 0;
        while (i < n && ++colour[i] == x) {
            colour[i] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
    }
    return count;
}

// Number of partitions of {0..n-1} into k independent blocks: proper
// colourings using all k colours, divided by k!.
inline mpz_class count_partitions_by_surjection(std::size_t n,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                                std::size_t k) {
    if (k == 0) {
        return n == 0 ? 1 : 0;
    }
    std::vector<std::size_t> colour(n, 0);
    std::uint64_t surjections = 0;
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : edges) {
            if (colour[u] == colour[v]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> used(k, false);
            std::size_t distinct = 0;
            for (auto c : colour) {
                if (!used[c]) {
                    used[c] = true;
                    ++distinct;
                }
            }
            surjections += distinct == k ? 1 : 0;
        }
        std::size_t i = 0;
        while (i < n && ++colour[i] == k) {
            colour[i] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return mpz_class(static_cast<unsigned long>(surjections)) / f;
}

// Same count by walking every set partition as a restricted growth string
// (iteratively, with no pruning).
inline mpz_class count_partitions_by_rgs(std::size_t n,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                         std::size_t k) {
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = prefix_max[n - 1] + 1 == k;
        for (const auto& [u, v] : edges) {
            ok = ok && a[u] != a[v];
        }
        count += ok ? 1 : 0;
        // Next string: bump the last position that can grow, reset the rest.
        std::size_t i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return static_cast<unsigned long>(count);
}

inline std::vector<std::pair<std::size_t, std::size_t>> path_edges(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return e;
}

inline std::vector<std::pair<std::size_t, std::size_t>> cycle_edges(std::size_t n) {
    auto e = path_edges(n);
    if (n >= 3) {
        e.emplace_back(n - 1, 0);
    }
    return e;
}

}  // namespace gstir::testing
