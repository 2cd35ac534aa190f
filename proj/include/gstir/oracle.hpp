#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gstir/combinatorics.hpp"

namespace gstir::oracle {

// Largest vertex count the exhaustive enumerators accept (B_13 ~ 2.8e7).
inline constexpr std::size_t kMaxOracleVertices = 13;

/// Simple undirected graph on vertices 0..vertex_count()-1.
class ExplicitGraph {
public:
    explicit ExplicitGraph(std::size_t vertex_count);

    // Throws std::invalid_argument on loops, duplicates or bad endpoints.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    bool adjacent(std::size_t u, std::size_t v) const;
    // Neighbour bitmask; only meaningful for graphs within the oracle guard.
    std::uint32_t neighbours(std::size_t v) const { return adjacency_[v]; }
    std::size_t component_count() const;
    bool is_acyclic() const { return edge_count() + component_count() == vertex_count(); }

private:
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

ExplicitGraph build_path(std::size_t n);
// n >= 3, or n == 2 for a single edge.
ExplicitGraph build_cycle(std::size_t n);
ExplicitGraph build_empty(std::size_t n);
// A star on n-c+1 vertices plus c-1 isolated vertices.
ExplicitGraph build_star_forest(std::size_t n, std::size_t c);
// A forest with c trees of random sizes and random shapes, randomly labelled.
// Deterministic per seed (see Lcg64).
ExplicitGraph build_random_forest(std::size_t n, std::size_t c, std::uint64_t seed);

/**
 * 64-bit linear congruential generator, state' = a * state + c mod 2^64 with
 * a = 6364136223846793005 and c = 1442695040888963407 (Knuth's MMIX
 * constants). Outputs are the high 32 bits of the new state.
 */
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next();
    // Uniform-ish value in [0, bound), bound > 0.
    std::size_t below(std::size_t bound);

private:
    std::uint64_t state_;
};

// counts[k] = number of partitions of V into k non-empty independent sets.
// Throws std::invalid_argument above kMaxOracleVertices.
std::vector<Integer> enumerate_partition_counts(const ExplicitGraph& g);

// Set partitions of an n-set with every block of size >= 2.
Integer singleton_free_count(std::size_t n);

}  // namespace gstir::oracle
