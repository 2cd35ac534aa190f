#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gstir/polynomial.hpp"

namespace gstir {

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/**
 * Sturm sequence of the squarefree part of a polynomial, kept in Z[x].
 *
 * Each remainder is a primitive pseudo-remainder with its sign fixed so that
 * p_{i+1} = -(positive rational) * (p_{i-1} mod p_i).
 */
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p);

    const std::vector<IntPolynomial>& polys() const { return polys_; }

    // Sign variations with zeros skipped.
    long variations_at(const RationalPoint& x) const;
    long variations_at_neg_infinity() const;
    long variations_at_pos_infinity() const;

    // Distinct real roots.
    long count_real() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }
    // Distinct roots in the open interval (a, b).
    long count_open(const RationalPoint& a, const RationalPoint& b) const;

private:
    std::vector<IntPolynomial> polys_;
};

SturmChain sturm_chain(const IntPolynomial& p);

// Real roots counted with multiplicity.
long count_real_roots(const IntPolynomial& p);
// Distinct real roots in (a, b); endpoints may themselves be roots.
long count_roots_in(const IntPolynomial& p, const RationalPoint& a, const RationalPoint& b);

struct OpenInterval {
    RationalPoint lo;
    RationalPoint hi;
};

struct RootIsolation {
    long degree = 0;
    long zero_multiplicity = 0;
    // One distinct negative root per interval, closest to zero first.
    std::vector<OpenInterval> intervals;
    long positive_root_count = 0;
    // Whether the nonzero part of the polynomial is squarefree.
    bool nonzero_roots_simple = true;

    // Roots not accounted for by the above; nonzero for complex roots or
    // repeated nonzero roots.
    long unaccounted() const {
        return degree - zero_multiplicity - static_cast<long>(intervals.size()) - positive_root_count;
    }
};

RootIsolation isolate_negative_roots(const IntPolynomial& p);

enum class PrecedesFailure {
    PositiveRoot,
    MultipleNegativeRoot,
    CountMismatch,
    OrderViolation,
    NotRealRooted,
};

std::string_view to_string(PrecedesFailure f);

struct PrecedesVerdict {
    bool holds = false;
    RootIsolation f_roots;
    RootIsolation g_roots;
    std::optional<PrecedesFailure> failure_reason;
};

// Certifies or refutes f < g: both real-rooted with non-positive roots and
// simple negative roots, g having as many or one more negative roots, and
// the negative roots alternating x_1 > y_1 > x_2 > ... (x for g, y for f).
PrecedesVerdict verify_precedes(const IntPolynomial& f, const IntPolynomial& g);

struct InterlacingCheck {
    int relation = 0;  // 1..5
    bool applicable = false;
    PrecedesVerdict verdict;
};

// The five forest interlacing relations for the given (c, n); relations 2 and
// 5 only apply for n >= c + 1.
std::array<InterlacingCheck, 5> verify_interlacing_relations(long c, long n);

struct UlcReport {
    std::size_t sequence_length = 0;
    bool holds = false;
    std::size_t strict_from = 0;
    std::optional<std::size_t> first_violation;
};

// (a_k / C(n,k))^2 >= (a_{k-1} / C(n,k-1)) (a_{k+1} / C(n,k+1)) for
// 1 <= k <= n-1, strict for k >= strict_from; n = counts.size() - 1.
UlcReport ultra_log_concave(std::span<const Integer> counts, std::size_t strict_from);

struct BernoulliDecomposition {
    std::vector<double> lambdas;  // one per root, zeros included; ascending
    long zero_count = 0;
    double reconstruction_error = 0.0;
    // prod over all roots of (lambda_i + x) / (1 + lambda_i), including x for
    // each zero root; coefficient i multiplies x^i.
    std::vector<double> reconstructed;
};

// Factors p(x)/p(1) into Bernoulli generating functions. tolerance bounds
// both the absolute and the relative width of each refined root bracket.
// Throws std::invalid_argument unless p has non-negative coefficients and
// only real roots.
BernoulliDecomposition bernoulli_decomposition(const IntPolynomial& p, double tolerance);

}  // namespace gstir
