#include "gstir/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gstir::oracle {

ExplicitGraph::ExplicitGraph(std::size_t vertex_count) : adjacency_(vertex_count, 0) {
    if (vertex_count > 32) {
        throw std::invalid_argument("ExplicitGraph: at most 32 vertices supported");
    }
}

void ExplicitGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) {
        throw std::invalid_argument("add_edge: endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("add_edge: loops are not allowed");
    }
    if (adjacent(u, v)) {
        throw std::invalid_argument("add_edge: duplicate edge");
    }
    adjacency_[u] |= std::uint32_t{1} << v;
    adjacency_[v] |= std::uint32_t{1} << u;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool ExplicitGraph::adjacent(std::size_t u, std::size_t v) const {
    return ((adjacency_[u] >> v) & 1U) != 0;
}

std::size_t ExplicitGraph::component_count() const {
    std::vector<std::size_t> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = vertex_count();
    for (const auto& [u, v] : edges_) {
        const std::size_t a = find(u);
        const std::size_t b = find(v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

ExplicitGraph build_path(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("build_path requires n >= 1");
    }
    ExplicitGraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

ExplicitGraph build_cycle(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("build_cycle requires n >= 2");
    }
    ExplicitGraph g = build_path(n);
    if (n >= 3) {
        g.add_edge(n - 1, 0);
    }
    return g;
}

ExplicitGraph build_empty(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("build_empty requires n >= 1");
    }
    return ExplicitGraph(n);
}

ExplicitGraph build_star_forest(std::size_t n, std::size_t c) {
    if (c < 1 || c > n) {
        throw std::invalid_argument("build_star_forest requires 1 <= c <= n");
    }
    ExplicitGraph g(n);
    // Vertex 0 is the centre; 1..n-c are its leaves; the rest are isolated.
    for (std::size_t leaf = 1; leaf <= n - c; ++leaf) {
        g.add_edge(0, leaf);
    }
    return g;
}

std::uint32_t Lcg64::next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
}

std::size_t Lcg64::below(std::size_t bound) { return static_cast<std::size_t>(next()) % bound; }

ExplicitGraph build_random_forest(std::size_t n, std::size_t c, std::uint64_t seed) {
    if (c < 1 || c > n) {
        throw std::invalid_argument("build_random_forest requires 1 <= c <= n");
    }
    Lcg64 rng(seed);

    // Tree sizes: choose c-1 distinct cut points in 1..n-1.
    std::vector<std::size_t> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), std::size_t{1});
    for (std::size_t i = 0; i + 1 < c; ++i) {
        std::swap(cuts[i], cuts[i + rng.below(cuts.size() - i)]);
    }
    cuts.resize(c - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    // Random labelling.
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});
    for (std::size_t i = n; i-- > 1;) {
        std::swap(label[i], label[rng.below(i + 1)]);
    }

    ExplicitGraph g(n);
    std::size_t start = 0;
    for (std::size_t end : cuts) {
        // Random recursive tree: each new vertex hangs off an earlier one.
        for (std::size_t v = start + 1; v < end; ++v) {
            const std::size_t parent = start + rng.below(v - start);
            g.add_edge(label[v], label[parent]);
        }
        start = end;
    }
    return g;
}

namespace {

void check_guard(std::size_t n) {
    if (n > kMaxOracleVertices) {
        throw std::invalid_argument("oracle enumeration is limited to " +
                                    std::to_string(kMaxOracleVertices) + " vertices, got " +
                                    std::to_string(n));
    }
}

// Restricted growth string enumeration: vertex v joins one of the blocks
// opened so far or opens block number `blocks`. Joining is rejected as soon
// as the block already holds a neighbour of v.
struct PartitionWalker {
    const ExplicitGraph& graph;
    std::vector<std::uint32_t> block_members;
    std::vector<std::uint64_t> counts;

    void walk(std::size_t v, std::size_t blocks) {
        if (v == graph.vertex_count()) {
            ++counts[blocks];
            return;
        }
        const std::uint32_t nbrs = graph.neighbours(v);
        const std::uint32_t bit = std::uint32_t{1} << v;
        for (std::size_t b = 0; b < blocks; ++b) {
            if ((block_members[b] & nbrs) != 0) {
                continue;
            }
            block_members[b] |= bit;
            walk(v + 1, blocks);
            block_members[b] &= ~bit;
        }
        block_members[blocks] = bit;
        walk(v + 1, blocks + 1);
        block_members[blocks] = 0;
    }
};

struct SingletonFreeWalker {
    std::size_t n;
    std::vector<std::size_t> sizes;
    std::uint64_t count = 0;

    void walk(std::size_t v, std::size_t blocks) {
        std::size_t singletons = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            singletons += sizes[b] == 1 ? 1 : 0;
        }
        // Each open singleton still needs one of the remaining vertices.
        if (singletons > n - v) {
            return;
        }
        if (v == n) {
            ++count;
            return;
        }
        for (std::size_t b = 0; b < blocks; ++b) {
            ++sizes[b];
            walk(v + 1, blocks);
            --sizes[b];
        }
        sizes[blocks] = 1;
        walk(v + 1, blocks + 1);
        sizes[blocks] = 0;
    }
};

}  // namespace

std::vector<Integer> enumerate_partition_counts(const ExplicitGraph& g) {
    check_guard(g.vertex_count());
    const std::size_t n = g.vertex_count();
    PartitionWalker walker{g, std::vector<std::uint32_t>(n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
    if (n > 0) {
        walker.block_members[0] = 1;
        walker.walk(1, 1);
    } else {
        walker.counts[0] = 1;
    }
    std::vector<Integer> out;
    out.reserve(n + 1);
    for (auto c : walker.counts) {
        out.emplace_back(static_cast<unsigned long>(c));
    }
    return out;
}

Integer singleton_free_count(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("singleton_free_count requires n >= 2");
    }
    check_guard(n);
    SingletonFreeWalker walker{n, std::vector<std::size_t>(n + 1, 0)};
    walker.sizes[0] = 1;
    walker.walk(1, 1);
    return static_cast<unsigned long>(walker.count);
}

}  // namespace gstir::oracle
