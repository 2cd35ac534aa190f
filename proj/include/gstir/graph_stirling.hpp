#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gstir/combinatorics.hpp"
#include "gstir/polynomial.hpp"

namespace gstir {

/**
 * A graph family member whose graphical Stirling numbers are determined by a
 * couple of integers.
 *
 * A forest's chromatic polynomial depends only on its vertex and component
 * counts, so Forest(n, c) stands for every forest with n vertices and c
 * components. Cycle(2) is a single edge.
 */
class GraphFamily {
public:
    enum class Kind { Forest, Cycle };

    static GraphFamily forest(long n, long c);
    static GraphFamily cycle(long n);
    static GraphFamily empty(long n) { return forest(n, n); }
    static GraphFamily path(long n) { return forest(n, 1); }

    Kind kind() const { return kind_; }
    bool is_forest() const { return kind_ == Kind::Forest; }
    bool is_cycle() const { return kind_ == Kind::Cycle; }
    long vertices() const { return n_; }
    // Component count; 1 for cycles.
    long components() const { return c_; }

    std::string str() const;

    friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

private:
    GraphFamily(Kind kind, long n, long c) : kind_(kind), n_(n), c_(c) {}
    Kind kind_;
    long n_;
    long c_;
};

struct PartitionCountVector {
    GraphFamily graph;
    // counts[k] = S(G,k) for k = 0..n
    std::vector<Integer> counts;
};

struct MomentReport {
    GraphFamily graph;
    mpq_class mean_exact;
    mpq_class variance_exact;
    mpq_class mean_formula;
    mpq_class variance_formula;
    double mean_float = 0.0;
    double variance_float = 0.0;
    double mean_estimate = 0.0;      // n / W(n)
    double variance_estimate = 0.0;  // n / (W(n)(W(n)+1))
};

long chi(const GraphFamily& g);

IntPolynomial chromatic_poly(const GraphFamily& g);

PartitionCountVector stirling_vector(const GraphFamily& g);
IntPolynomial stirling_poly(const GraphFamily& g);

// sigma(G,x) by iterating the x(x+xD)(1/x) recurrences from their initial
// polynomials; independent of stirling_vector.
IntPolynomial stirling_poly_via_operator(const GraphFamily& g);

// sigma(F^{c+1}_{n+1}) == sigma(F^c_{n+1}) + sigma(F^c_n)
bool pascal_identity_check(long n, long c);

// Inclusion-exclusion over the chromatic polynomial. Throws std::logic_error
// if the alternating sum is not divisible by k!.
Integer stirling_via_chromatic(const GraphFamily& g, long k);

IntPolynomial chromatic_from_sigma(const GraphFamily& g);

Integer graph_bell(const GraphFamily& g);

Integer cycle_closed_form_k3(long n);
Integer cycle_closed_form_k4(long n);

MomentReport moments(const GraphFamily& g);

}  // namespace gstir
