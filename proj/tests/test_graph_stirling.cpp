#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "brute_force.hpp"
#include "gstir/combinatorics.hpp"
#include "gstir/graph_stirling.hpp"
#include "gstir/oracle.hpp"

using gstir::GraphFamily;
using gstir::Integer;
using gstir::IntPolynomial;

namespace {

std::vector<Integer> counts(const GraphFamily& g) { return gstir::stirling_vector(g).counts; }

// Edges of a forest with n vertices and c components: a path on n-c+1
// vertices plus isolated vertices.
std::vector<std::pair<std::size_t, std::size_t>> forest_edges(std::size_t n, std::size_t c) {
    return gstir::testing::path_edges(n - c + 1);
}

}  // namespace

TEST_CASE("GraphFamily validation") {
    CHECK_THROWS_AS(GraphFamily::forest(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(GraphFamily::forest(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(GraphFamily::cycle(1), std::invalid_argument);
    CHECK(GraphFamily::empty(4) == GraphFamily::forest(4, 4));
    CHECK(GraphFamily::path(4) == GraphFamily::forest(4, 1));
    CHECK(GraphFamily::cycle(7).str() == "Cycle(7)");
    CHECK(GraphFamily::forest(5, 2).str() == "Forest(5,2)");
}

TEST_CASE("chi") {
    CHECK(gstir::chi(GraphFamily::cycle(5)) == 3);
    CHECK(gstir::chi(GraphFamily::cycle(6)) == 2);
    CHECK(gstir::chi(GraphFamily::forest(4, 4)) == 1);
    CHECK(gstir::chi(GraphFamily::forest(5, 2)) == 2);
    CHECK(gstir::chi(GraphFamily::cycle(2)) == 2);
}

TEST_CASE("chromatic_poly examples and proper-colouring counts") {
    CHECK(gstir::chromatic_poly(GraphFamily::forest(1, 1)) == IntPolynomial::x());
    CHECK(gstir::chromatic_poly(GraphFamily::forest(3, 1)) == IntPolynomial{0, 1, -2, 1});
    CHECK(gstir::chromatic_poly(GraphFamily::cycle(3)) == IntPolynomial{0, 2, -3, 1});
    for (std::size_t n = 3; n <= 7; ++n) {
        for (std::size_t x = 0; x <= 4; ++x) {
            const auto want = gstir::testing::count_proper_colorings(n, gstir::testing::cycle_edges(n), x);
            CHECK(gstir::eval_at_rational(gstir::chromatic_poly(GraphFamily::cycle(static_cast<long>(n))),
                                          static_cast<long>(x)) ==
                  gstir::RationalPoint(static_cast<long>(want)));
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t c = 1; c <= n; ++c) {
            for (std::size_t x = 0; x <= 4; ++x) {
                const auto want = gstir::testing::count_proper_colorings(n, forest_edges(n, c), x);
                const auto poly =
                    gstir::chromatic_poly(GraphFamily::forest(static_cast<long>(n), static_cast<long>(c)));
                CHECK(gstir::eval_at_rational(poly, static_cast<long>(x)) ==
                      gstir::RationalPoint(static_cast<long>(want)));
            }
        }
    }
}

TEST_CASE("stirling_vector examples") {
    CHECK(counts(GraphFamily::cycle(3)) == std::vector<Integer>{0, 0, 0, 1});
    CHECK(counts(GraphFamily::forest(5, 1))[3] == 7);
    CHECK(counts(GraphFamily::cycle(4)) == std::vector<Integer>{0, 0, 1, 2, 1});
    CHECK(counts(GraphFamily::forest(3, 2))[2] == 2);
    CHECK(counts(GraphFamily::cycle(2)) == std::vector<Integer>{0, 0, 1});
}

TEST_CASE("stirling_vector agrees with brute-force surjection counts") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t c = 1; c <= n; ++c) {
            const auto v = counts(GraphFamily::forest(static_cast<long>(n), static_cast<long>(c)));
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(v[k] == gstir::testing::count_partitions_by_surjection(n, forest_edges(n, c), k));
            }
        }
    }
    for (std::size_t n = 3; n <= 7; ++n) {
        const auto v = counts(GraphFamily::cycle(static_cast<long>(n)));
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(v[k] == gstir::testing::count_partitions_by_surjection(n, gstir::testing::cycle_edges(n), k));
        }
    }
}

TEST_CASE("PartitionCountVector invariants") {
    std::vector<GraphFamily> graphs;
    for (long n = 1; n <= 30; ++n) {
        for (long c = 1; c <= n; ++c) {
            graphs.push_back(GraphFamily::forest(n, c));
        }
    }
    for (long n = 2; n <= 40; ++n) {
        graphs.push_back(GraphFamily::cycle(n));
    }
    for (const auto& g : graphs) {
        CAPTURE(g.str());
        const auto v = counts(g);
        const long chi = gstir::chi(g);
        REQUIRE(v.size() == static_cast<std::size_t>(g.vertices() + 1));
        Integer total = 0;
        for (long k = 0; k <= g.vertices(); ++k) {
            CHECK(v[k] >= 0);
            if (k < chi) {
                CHECK(v[k] == 0);
            }
            total += v[k];
        }
        CHECK(v[chi] > 0);
        CHECK(v.back() == 1);
        CHECK(total == gstir::graph_bell(g));
    }
}

TEST_CASE("stirling_poly examples") {
    CHECK(gstir::stirling_poly(GraphFamily::cycle(3)) == IntPolynomial{0, 0, 0, 1});
    CHECK(gstir::stirling_poly(GraphFamily::cycle(2)) == IntPolynomial{0, 0, 1});
    CHECK(gstir::stirling_poly(GraphFamily::forest(3, 3)) == IntPolynomial{0, 1, 3, 1});
    for (long c = 1; c <= 20; ++c) {
        CHECK(gstir::stirling_poly(GraphFamily::forest(c, c)) == IntPolynomial(gstir::stirling_row(c)));
    }
}

TEST_CASE("stirling_poly_via_operator agrees with the closed sums") {
    CHECK(gstir::stirling_poly_via_operator(GraphFamily::cycle(3)) == IntPolynomial{0, 0, 0, 1});
    CHECK(gstir::stirling_poly_via_operator(GraphFamily::cycle(4)) == IntPolynomial{0, 0, 1, 2, 1});
    for (long n = 1; n <= 40; ++n) {
        for (long c = 1; c <= n; ++c) {
            const auto g = GraphFamily::forest(n, c);
            CHECK(gstir::stirling_poly_via_operator(g) == gstir::stirling_poly(g));
            CHECK(gstir::stirling_poly(g).coeffs() == counts(g));
        }
    }
    for (long n = 2; n <= 60; ++n) {
        const auto g = GraphFamily::cycle(n);
        CHECK(gstir::stirling_poly_via_operator(g) == gstir::stirling_poly(g));
        CHECK(gstir::stirling_poly(g).coeffs() == counts(g));
    }
}

TEST_CASE("pascal_identity_check") {
    CHECK(gstir::pascal_identity_check(2, 1));
    CHECK(gstir::pascal_identity_check(5, 3));
    CHECK(gstir::pascal_identity_check(4, 4));
    for (long n = 2; n <= 30; ++n) {
        for (long c = 1; c < n; ++c) {
            CHECK(gstir::pascal_identity_check(n, c));
        }
    }
    CHECK_THROWS_AS(gstir::pascal_identity_check(2, 3), std::invalid_argument);
}

TEST_CASE("stirling_via_chromatic and chromatic_from_sigma") {
    CHECK(gstir::stirling_via_chromatic(GraphFamily::cycle(3), 3) == 1);
    CHECK(gstir::stirling_via_chromatic(GraphFamily::forest(4, 1), 2) == 1);
    CHECK(gstir::stirling_via_chromatic(GraphFamily::forest(5, 2), 0) == 0);
    CHECK(gstir::chromatic_from_sigma(GraphFamily::forest(3, 1)) == IntPolynomial{0, 1, -2, 1});
    const IntPolynomial xm1{-1, 1};
    CHECK(gstir::chromatic_from_sigma(GraphFamily::cycle(4)) == xm1 * xm1 * xm1 * xm1 + xm1);
    CHECK(gstir::chromatic_from_sigma(GraphFamily::forest(1, 1)) == IntPolynomial::x());

    for (long n = 1; n <= 15; ++n) {
        for (long c = 1; c <= n; ++c) {
            const auto g = GraphFamily::forest(n, c);
            const auto v = counts(g);
            for (long k = 0; k <= n; ++k) {
                CHECK(gstir::stirling_via_chromatic(g, k) == v[k]);
            }
            CHECK(gstir::chromatic_from_sigma(g) == gstir::chromatic_poly(g));
        }
    }
    for (long n = 2; n <= 15; ++n) {
        const auto g = GraphFamily::cycle(n);
        const auto v = counts(g);
        for (long k = 0; k <= n; ++k) {
            CHECK(gstir::stirling_via_chromatic(g, k) == v[k]);
        }
        CHECK(gstir::chromatic_from_sigma(g) == gstir::chromatic_poly(g));
    }
}

TEST_CASE("graph_bell") {
    CHECK(gstir::graph_bell(GraphFamily::forest(3, 3)) == 5);
    CHECK(gstir::graph_bell(GraphFamily::cycle(4)) == 4);
    CHECK(gstir::graph_bell(GraphFamily::forest(3, 2)) == 3);
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(gstir::graph_bell(GraphFamily::cycle(static_cast<long>(n))) == gstir::oracle::singleton_free_count(n));
    }
}

TEST_CASE("cycle closed forms") {
    CHECK(gstir::cycle_closed_form_k3(4) == 2);
    CHECK(gstir::cycle_closed_form_k3(3) == 1);
    CHECK(gstir::cycle_closed_form_k4(5) == 5);
    for (long n = 3; n <= 80; ++n) {
        const auto v = counts(GraphFamily::cycle(n));
        CHECK(gstir::cycle_closed_form_k3(n) == v[3]);
        CHECK(gstir::cycle_closed_form_k4(n) == v[4]);
    }
    CHECK_THROWS_AS(gstir::cycle_closed_form_k3(2), std::invalid_argument);
}

TEST_CASE("moments examples") {
    const auto f33 = gstir::moments(GraphFamily::forest(3, 3));
    CHECK(f33.mean_exact == 2);
    CHECK(f33.variance_exact == mpq_class(2, 5));
    const auto c4 = gstir::moments(GraphFamily::cycle(4));
    CHECK(c4.mean_exact == 3);
    CHECK(c4.variance_exact == mpq_class(1, 2));
    const auto p3 = gstir::moments(GraphFamily::path(3));
    const auto oracle = gstir::oracle::enumerate_partition_counts(gstir::oracle::build_path(3));
    CHECK(oracle == std::vector<Integer>{0, 0, 1, 1});
    CHECK(p3.mean_exact == mpq_class(5, 2));
    CHECK(p3.variance_exact == mpq_class(1, 4));
    CHECK(p3.mean_float == doctest::Approx(2.5));
}

TEST_CASE("moment identities hold exactly for n <= 60") {
    for (long n = 1; n <= 60; ++n) {
        for (long c = 1; c <= n; ++c) {
            const auto r = gstir::moments(GraphFamily::forest(n, c));
            REQUIRE(r.mean_exact == r.mean_formula);
            REQUIRE(r.variance_exact == r.variance_formula);
            if (n >= 4) {
                CHECK(r.variance_exact > 0);
            }
        }
    }
    for (long n = 2; n <= 60; ++n) {
        const auto r = gstir::moments(GraphFamily::cycle(n));
        REQUIRE(r.mean_exact == r.mean_formula);
        REQUIRE(r.variance_exact == r.variance_formula);
        if (n >= 4) {
            CHECK(r.variance_exact > 0);
        }
    }
}
