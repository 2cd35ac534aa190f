#include "gstir/graph_stirling.hpp"

#include <stdexcept>
#include <utility>

#include "gstir/asymptotics.hpp"

namespace gstir {

GraphFamily GraphFamily::forest(long n, long c) {
    if (c < 1 || c > n) {
        throw std::invalid_argument("Forest(n,c) requires 1 <= c <= n, got n=" + std::to_string(n) +
                                    " c=" + std::to_string(c));
    }
    return {Kind::Forest, n, c};
}

GraphFamily GraphFamily::cycle(long n) {
    if (n < 2) {
        throw std::invalid_argument("Cycle(n) requires n >= 2, got n=" + std::to_string(n));
    }
    return {Kind::Cycle, n, 1};
}

std::string GraphFamily::str() const {
    if (is_cycle()) {
        return "Cycle(" + std::to_string(n_) + ")";
    }
    return "Forest(" + std::to_string(n_) + "," + std::to_string(c_) + ")";
}

long chi(const GraphFamily& g) {
    if (g.is_cycle()) {
        return g.vertices() % 2 == 0 ? 2 : 3;
    }
    if (g.vertices() == 0) {
        return 0;
    }
    return g.vertices() > g.components() ? 2 : 1;
}

namespace {

// (x-1)^m
IntPolynomial x_minus_one_power(long m) {
    std::vector<Integer> c(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i) {
        c[static_cast<std::size_t>(i)] = binomial(m, i);
        if ((m - i) % 2 != 0) {
            c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
        }
    }
    return IntPolynomial(std::move(c));
}

// Weights w_i of the Bell/Stirling sums: counts[k] = sum_i w_i S(n-1-i, k-1).
std::vector<Integer> family_weights(const GraphFamily& g) {
    std::vector<Integer> w;
    if (g.is_forest()) {
        const long c = g.components();
        for (long i = 0; i <= c - 1; ++i) {
            w.push_back(binomial(c - 1, i));
        }
    } else {
        // Stops at S(1,.) / B_1: the finite form of the cycle sum has no
        // S(0,.) term.
        for (long i = 0; i <= g.vertices() - 2; ++i) {
            w.emplace_back(i % 2 == 0 ? 1 : -1);
        }
    }
    return w;
}

// sum_i w_i B_{m-i}
Integer bell_weighted_sum(const std::vector<Integer>& w, const std::vector<Integer>& bells, long m) {
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const long idx = m - static_cast<long>(i);
        if (idx < 0) {
            break;
        }
        s += w[i] * bells[static_cast<std::size_t>(idx)];
    }
    return s;
}

}  // namespace

IntPolynomial chromatic_poly(const GraphFamily& g) {
    const long n = g.vertices();
    if (g.is_forest()) {
        const long c = g.components();
        return IntPolynomial::monomial(1, static_cast<std::size_t>(c)) * x_minus_one_power(n - c);
    }
    IntPolynomial shifted{-1, 1};
    if (n % 2 != 0) {
        shifted = -shifted;
    }
    return x_minus_one_power(n) + shifted;
}

PartitionCountVector stirling_vector(const GraphFamily& g) {
    const long n = g.vertices();
    const auto w = family_weights(g);
    // acc[j] collects sum_i w_i S(n-1-i, j); streamed row by row so no
    // triangle is kept.
    std::vector<Integer> acc(static_cast<std::size_t>(n));
    std::vector<Integer> row{Integer(1)};
    for (long m = 0; m <= n - 1; ++m) {
        if (m > 0) {
            row = next_stirling_row(row);
        }
        const long i = n - 1 - m;
        if (i < static_cast<long>(w.size())) {
            const Integer& wi = w[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < row.size(); ++j) {
                mpz_addmul(acc[j].get_mpz_t(), wi.get_mpz_t(), row[j].get_mpz_t());
            }
        }
    }
    PartitionCountVector v{g, std::vector<Integer>(static_cast<std::size_t>(n) + 1)};
    for (long j = 0; j < n; ++j) {
        v.counts[static_cast<std::size_t>(j) + 1] = std::move(acc[static_cast<std::size_t>(j)]);
    }
    return v;
}

IntPolynomial stirling_poly(const GraphFamily& g) { return IntPolynomial(stirling_vector(g).counts); }

IntPolynomial stirling_poly_via_operator(const GraphFamily& g) {
    const long n = g.vertices();
    const auto step = [](const IntPolynomial& sigma) {
        return IntPolynomial::x() * apply_x_plus_xD(divide_by_x_power(sigma, 1));
    };
    if (g.is_forest()) {
        const long c = g.components();
        // S_c(x) from S_1 = x.
        IntPolynomial sigma = IntPolynomial::x();
        for (long m = 2; m <= c; ++m) {
            sigma = apply_x_plus_xD(sigma);
        }
        for (long m = c; m < n; ++m) {
            sigma = step(sigma);
        }
        return sigma;
    }
    IntPolynomial sigma = IntPolynomial::monomial(1, 2);
    for (long m = 3; m <= n; ++m) {
        sigma = step(sigma) + IntPolynomial::monomial(m % 2 == 0 ? 1 : -1, 2);
    }
    return sigma;
}

bool pascal_identity_check(long n, long c) {
    if (c < 1 || n < c) {
        throw std::invalid_argument("pascal_identity_check requires c >= 1 and n >= c");
    }
    return stirling_poly(GraphFamily::forest(n + 1, c + 1)) ==
           stirling_poly(GraphFamily::forest(n + 1, c)) + stirling_poly(GraphFamily::forest(n, c));
}

Integer stirling_via_chromatic(const GraphFamily& g, long k) {
    if (k < 0 || k > g.vertices()) {
        throw std::invalid_argument("stirling_via_chromatic requires 0 <= k <= n");
    }
    const IntPolynomial chrom = chromatic_poly(g);
    Integer sum = 0;
    for (long i = 0; i <= k; ++i) {
        const Integer value = eval_at_rational(chrom, RationalPoint(k - i)).numerator();
        if (i % 2 == 0) {
            sum += binomial(k, i) * value;
        } else {
            sum -= binomial(k, i) * value;
        }
    }
    const Integer f = factorial(static_cast<unsigned long>(k));
    if (!mpz_divisible_p(sum.get_mpz_t(), f.get_mpz_t())) {
        throw std::logic_error("stirling_via_chromatic: alternating sum not divisible by k! for " +
                               g.str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), f.get_mpz_t());
    return q;
}

IntPolynomial chromatic_from_sigma(const GraphFamily& g) {
    return falling_factorial_combination(stirling_vector(g).counts);
}

Integer graph_bell(const GraphFamily& g) {
    const auto bells = bell_prefix(static_cast<std::size_t>(g.vertices()));
    return bell_weighted_sum(family_weights(g), bells, g.vertices() - 1);
}

Integer cycle_closed_form_k3(long n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_closed_form_k3 requires n >= 3");
    }
    Integer p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    Integer num = p2 - (n % 2 == 0 ? 1 : -1) - 3;
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), 6);
    return q;
}

Integer cycle_closed_form_k4(long n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_closed_form_k4 requires n >= 3");
    }
    Integer p2;
    Integer p3;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(n));
    Integer num = p3 - 4 * p2 + (n % 2 == 0 ? 1 : -1) + 6;
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), 24);
    return q;
}

MomentReport moments(const GraphFamily& g) {
    const auto v = stirling_vector(g);
    Integer s0 = 0;
    Integer s1 = 0;
    Integer s2 = 0;
    for (std::size_t k = 0; k < v.counts.size(); ++k) {
        const unsigned long kk = k;
        s0 += v.counts[k];
        s1 += v.counts[k] * kk;
        s2 += v.counts[k] * (kk * kk);
    }
    if (s0 == 0) {
        throw std::invalid_argument("moments: " + g.str() + " has no partitions");
    }
    MomentReport r{g, {}, {}, {}, {}};
    r.mean_exact = mpq_class(s1, s0);
    r.mean_exact.canonicalize();
    mpq_class second(s2, s0);
    second.canonicalize();
    r.variance_exact = second - r.mean_exact * r.mean_exact;

    const long n = g.vertices();
    const auto bells = bell_prefix(static_cast<std::size_t>(n) + 1);
    const auto w = family_weights(g);
    const Integer denom = bell_weighted_sum(w, bells, n - 1);
    r.mean_formula = mpq_class(bell_weighted_sum(w, bells, n), denom);
    r.mean_formula.canonicalize();
    mpq_class raw_second(bell_weighted_sum(w, bells, n + 1), denom);
    raw_second.canonicalize();
    r.variance_formula = raw_second - r.mean_formula * r.mean_formula - 1;

    r.mean_float = ratio_to_double(r.mean_exact);
    r.variance_float = ratio_to_double(r.variance_exact);
    const double wn = lambert_w(static_cast<double>(n));
    r.mean_estimate = static_cast<double>(n) / wn;
    r.variance_estimate = static_cast<double>(n) / (wn * (wn + 1.0));
    return r;
}

}  // namespace gstir
