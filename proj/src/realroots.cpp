#include "gstir/realroots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gstir/graph_stirling.hpp"

namespace gstir {

namespace {

void require_nonzero(const IntPolynomial& p, const char* what) {
    if (p.is_zero()) {
        throw std::invalid_argument(std::string(what) + ": zero polynomial");
    }
}

IntPolynomial divide_by_positive_content(IntPolynomial p) {
    const Integer g = content(p);
    if (g == 0 || g == 1) {
        return p;
    }
    std::vector<Integer> c = p.coeffs();
    for (auto& v : c) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

// 1 + max |c_i| / |lead|, rounded up to an integer.
Integer cauchy_bound(const IntPolynomial& p) {
    Integer m = 0;
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        m = std::max(m, Integer(abs(p.coeffs()[i])));
    }
    Integer q;
    const Integer lead = abs(p.leading());
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
    return q + 1;
}

// Moves a proposed split point off a root of p, staying inside (lo, hi).
RationalPoint split_point(const IntPolynomial& p, const RationalPoint& lo, const RationalPoint& hi) {
    RationalPoint mid = midpoint(lo, hi);
    RationalPoint step = RationalPoint(mpq_class((hi - lo).value() / 2));
    while (sign_at(p, mid) == 0) {
        step = RationalPoint(mpq_class(step.value() / 2));
        mid = midpoint(lo, hi) + step;
    }
    return mid;
}

// Halves an interval holding exactly one simple root of p whose endpoints are
// not roots.
void refine_once(const IntPolynomial& p, OpenInterval& iv) {
    const RationalPoint mid = midpoint(iv.lo, iv.hi);
    const int sm = sign_at(p, mid);
    if (sm == 0) {
        const RationalPoint quarter(mpq_class((iv.hi.value() - iv.lo.value()) / 4));
        iv = {mid - quarter, mid + quarter};
        return;
    }
    if (sm == sign_at(p, iv.lo)) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

bool overlaps(const OpenInterval& a, const OpenInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

}  // namespace

IntPolynomial squarefree_part(const IntPolynomial& p) {
    require_nonzero(p, "squarefree_part");
    if (p.degree() == 0) {
        return IntPolynomial::constant(1);
    }
    const IntPolynomial g = gcd(p, derivative(p));
    return primitive_part(exact_quotient(primitive_part(p), g));
}

SturmChain::SturmChain(const IntPolynomial& p) {
    require_nonzero(p, "sturm_chain");
    polys_.push_back(squarefree_part(p));
    if (polys_.back().degree() < 1) {
        return;
    }
    polys_.push_back(primitive_part(derivative(polys_.back())));
    while (true) {
        const IntPolynomial& a = polys_[polys_.size() - 2];
        const IntPolynomial& b = polys_.back();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) {
            break;
        }
        // prem = lc(b)^(delta+1) * rem; the Sturm step wants -rem up to a
        // positive factor.
        const long power = a.degree() - b.degree() + 1;
        const bool multiplier_negative = b.leading() < 0 && power % 2 != 0;
        if (!multiplier_negative) {
            r = -r;
        }
        polys_.push_back(divide_by_positive_content(std::move(r)));
    }
}

namespace {

long count_variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++v;
        }
        last = s;
    }
    return v;
}

}  // namespace

long SturmChain::variations_at(const RationalPoint& x) const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (const auto& q : polys_) {
        signs.push_back(sign_at(q, x));
    }
    return count_variations(signs);
}

long SturmChain::variations_at_pos_infinity() const {
    std::vector<int> signs;
    for (const auto& q : polys_) {
        signs.push_back(sgn(q.leading()));
    }
    return count_variations(signs);
}

long SturmChain::variations_at_neg_infinity() const {
    std::vector<int> signs;
    for (const auto& q : polys_) {
        const int s = sgn(q.leading());
        signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return count_variations(signs);
}

long SturmChain::count_open(const RationalPoint& a, const RationalPoint& b) const {
    if (!(a < b)) {
        throw std::invalid_argument("count_open: requires a < b");
    }
    // V(a) with zeros skipped equals V(a+); V(b) likewise equals V(b+), which
    // is one less than V(b-) when b is a root.
    const long endpoint_root = sign_at(polys_.front(), b) == 0 ? 1 : 0;
    return variations_at(a) - variations_at(b) - endpoint_root;
}

SturmChain sturm_chain(const IntPolynomial& p) { return SturmChain(p); }

long count_real_roots(const IntPolynomial& p) {
    require_nonzero(p, "count_real_roots");
    const std::size_t m = p.lowest_degree();
    long total = static_cast<long>(m);
    // A root of multiplicity r is a root of each of the first r members of
    // q, gcd(q, q'), gcd of that with its derivative, ...
    IntPolynomial cur = divide_by_x_power(p, m);
    while (cur.degree() > 0) {
        const SturmChain chain(cur);
        total += chain.count_real();
        if (chain.polys().front().degree() == cur.degree()) {
            break;
        }
        cur = gcd(cur, derivative(cur));
    }
    return total;
}

long count_roots_in(const IntPolynomial& p, const RationalPoint& a, const RationalPoint& b) {
    require_nonzero(p, "count_roots_in");
    return SturmChain(p).count_open(a, b);
}

RootIsolation isolate_negative_roots(const IntPolynomial& p) {
    require_nonzero(p, "isolate_negative_roots");
    RootIsolation iso;
    iso.degree = p.degree();
    const std::size_t m = p.lowest_degree();
    iso.zero_multiplicity = static_cast<long>(m);
    const IntPolynomial q = divide_by_x_power(p, m);
    if (q.degree() == 0) {
        return iso;
    }
    const SturmChain chain(q);
    const IntPolynomial& sqf = chain.polys().front();
    iso.nonzero_roots_simple = sqf.degree() == q.degree();

    const RationalPoint bound(cauchy_bound(sqf));
    const RationalPoint zero(0);
    iso.positive_root_count = chain.count_open(zero, bound);

    // Depth-first, upper half first, so intervals come out in decreasing order.
    struct Pending {
        OpenInterval iv;
        long count;
    };
    std::vector<Pending> stack;
    const long negative = chain.count_open(RationalPoint(0) - bound, zero);
    if (negative > 0) {
        stack.push_back({{RationalPoint(0) - bound, zero}, negative});
    }
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 1) {
            iso.intervals.push_back(std::move(cur.iv));
            continue;
        }
        const RationalPoint mid = split_point(sqf, cur.iv.lo, cur.iv.hi);
        const long lower = chain.count_open(cur.iv.lo, mid);
        const long upper = cur.count - lower;
        if (lower > 0) {
            stack.push_back({{cur.iv.lo, mid}, lower});
        }
        if (upper > 0) {
            stack.push_back({{mid, cur.iv.hi}, upper});
        }
    }
    return iso;
}

std::string_view to_string(PrecedesFailure f) {
    switch (f) {
        case PrecedesFailure::PositiveRoot:
            return "positive_root";
        case PrecedesFailure::MultipleNegativeRoot:
            return "multiple_negative_root";
        case PrecedesFailure::CountMismatch:
            return "count_mismatch";
        case PrecedesFailure::OrderViolation:
            return "order_violation";
        case PrecedesFailure::NotRealRooted:
            return "not_real_rooted";
    }
    return "unknown";
}

PrecedesVerdict verify_precedes(const IntPolynomial& f, const IntPolynomial& g) {
    require_nonzero(f, "verify_precedes");
    require_nonzero(g, "verify_precedes");
    PrecedesVerdict v;
    v.f_roots = isolate_negative_roots(f);
    v.g_roots = isolate_negative_roots(g);
    const auto fail = [&v](PrecedesFailure why) {
        v.holds = false;
        v.failure_reason = why;
        return v;
    };

    if (v.f_roots.positive_root_count > 0 || v.g_roots.positive_root_count > 0) {
        return fail(PrecedesFailure::PositiveRoot);
    }
    if (!v.f_roots.nonzero_roots_simple || !v.g_roots.nonzero_roots_simple) {
        // Repeated roots are real and negative here only if the repeated
        // part has a real root at all.
        const auto repeated_real = [](const IntPolynomial& p) {
            const IntPolynomial q = divide_by_x_power(p, p.lowest_degree());
            const IntPolynomial h = gcd(q, derivative(q));
            return h.degree() > 0 && SturmChain(h).count_real() > 0;
        };
        if (repeated_real(f) || repeated_real(g)) {
            return fail(PrecedesFailure::MultipleNegativeRoot);
        }
        return fail(PrecedesFailure::NotRealRooted);
    }
    if (v.f_roots.unaccounted() != 0 || v.g_roots.unaccounted() != 0) {
        return fail(PrecedesFailure::NotRealRooted);
    }
    const std::size_t nf = v.f_roots.intervals.size();
    const std::size_t ng = v.g_roots.intervals.size();
    if (ng != nf && ng != nf + 1) {
        return fail(PrecedesFailure::CountMismatch);
    }
    if (nf == 0 && ng == 0) {
        v.holds = true;
        return v;
    }

    const IntPolynomial f0 = squarefree_part(divide_by_x_power(f, f.lowest_degree()));
    const IntPolynomial g0 = squarefree_part(divide_by_x_power(g, g.lowest_degree()));
    // A shared root can never be separated; every nonzero root is negative here.
    if (gcd(f0, g0).degree() > 0) {
        return fail(PrecedesFailure::OrderViolation);
    }

    std::vector<OpenInterval> fi = v.f_roots.intervals;
    std::vector<OpenInterval> gi = v.g_roots.intervals;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& a : fi) {
            for (auto& b : gi) {
                if (overlaps(a, b)) {
                    refine_once(f0, a);
                    refine_once(g0, b);
                    changed = true;
                }
            }
        }
    }

    // Tag each interval by owner and walk downwards from zero.
    std::vector<std::pair<RationalPoint, bool>> merged;  // (upper end, is_g)
    for (const auto& a : fi) {
        merged.emplace_back(a.hi, false);
    }
    for (const auto& b : gi) {
        merged.emplace_back(b.hi, true);
    }
    std::sort(merged.begin(), merged.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (std::size_t i = 0; i < merged.size(); ++i) {
        const bool expect_g = i % 2 == 0;
        if (merged[i].second != expect_g) {
            return fail(PrecedesFailure::OrderViolation);
        }
    }
    v.f_roots.intervals = std::move(fi);
    v.g_roots.intervals = std::move(gi);
    v.holds = true;
    return v;
}

std::array<InterlacingCheck, 5> verify_interlacing_relations(long c, long n) {
    if (c < 1 || n < c) {
        throw std::invalid_argument("verify_interlacing_relations requires c >= 1 and n >= c");
    }
    const auto sigma = [](long vertices, long components) {
        return stirling_poly(GraphFamily::forest(vertices, components));
    };
    std::array<InterlacingCheck, 5> out;
    for (int i = 0; i < 5; ++i) {
        out[static_cast<std::size_t>(i)].relation = i + 1;
    }
    out[0].applicable = true;
    out[0].verdict = verify_precedes(sigma(c + 1, c), sigma(c, c));
    if (n >= c + 1) {
        out[1].applicable = true;
        out[1].verdict = verify_precedes(sigma(n, c), sigma(n + 1, c));
    }
    out[2].applicable = true;
    out[2].verdict = verify_precedes(sigma(n, c), sigma(n + 1, c + 1));
    out[3].applicable = true;
    out[3].verdict = verify_precedes(sigma(c + 1, c), sigma(c + 1, c + 1));
    if (n >= c + 1) {
        out[4].applicable = true;
        out[4].verdict = verify_precedes(sigma(n + 1, c + 1), sigma(n + 1, c));
    }
    return out;
}

UlcReport ultra_log_concave(std::span<const Integer> counts, std::size_t strict_from) {
    UlcReport r;
    r.sequence_length = counts.size();
    r.strict_from = strict_from;
    r.holds = true;
    if (counts.size() < 3) {
        return r;
    }
    const std::size_t n = counts.size() - 1;
    std::vector<Integer> binom(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        mpz_bin_uiui(binom[k].get_mpz_t(), n, k);
    }
    Integer lhs;
    Integer rhs;
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        lhs = counts[k] * counts[k];
        lhs *= binom[k - 1];
        lhs *= binom[k + 1];
        rhs = counts[k - 1] * counts[k + 1];
        rhs *= binom[k];
        rhs *= binom[k];
        const bool ok = k >= strict_from ? lhs > rhs : lhs >= rhs;
        if (!ok) {
            r.holds = false;
            r.first_violation = k;
            return r;
        }
    }
    return r;
}

BernoulliDecomposition bernoulli_decomposition(const IntPolynomial& p, double tolerance) {
    require_nonzero(p, "bernoulli_decomposition");
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("bernoulli_decomposition: tolerance must be positive");
    }
    for (const auto& c : p.coeffs()) {
        if (c < 0) {
            throw std::invalid_argument("bernoulli_decomposition: negative coefficient");
        }
    }
    if (count_real_roots(p) != p.degree()) {
        throw std::invalid_argument("bernoulli_decomposition: polynomial is not real-rooted");
    }

    BernoulliDecomposition d;
    const RootIsolation iso = isolate_negative_roots(p);
    d.zero_count = iso.zero_multiplicity;
    d.lambdas.assign(static_cast<std::size_t>(iso.zero_multiplicity), 0.0);

    const IntPolynomial q = divide_by_x_power(p, p.lowest_degree());
    const IntPolynomial sqf = squarefree_part(q);
    // Chain q, gcd(q, q'), ... for root multiplicities.
    std::vector<IntPolynomial> repeated;
    for (IntPolynomial cur = gcd(q, derivative(q)); cur.degree() > 0; cur = gcd(cur, derivative(cur))) {
        repeated.push_back(cur);
    }
    const mpq_class tol(tolerance);
    for (OpenInterval iv : iso.intervals) {
        std::size_t multiplicity = 1;
        for (const auto& h : repeated) {
            if (count_roots_in(h, iv.lo, iv.hi) == 0) {
                break;
            }
            ++multiplicity;
        }
        // Width below tol in absolute terms and relative to the root.
        while (true) {
            const mpq_class width = iv.hi.value() - iv.lo.value();
            const mpq_class scale = std::min(mpq_class(1), mpq_class(abs(iv.hi.value())));
            if (iv.hi.sign() != 0 && width < tol * scale) {
                break;
            }
            refine_once(sqf, iv);
        }
        d.lambdas.insert(d.lambdas.end(), multiplicity, -midpoint(iv.lo, iv.hi).to_double());
    }
    std::sort(d.lambdas.begin(), d.lambdas.end());

    std::vector<double> rec{1.0};
    for (double lambda : d.lambdas) {
        std::vector<double> next(rec.size() + 1, 0.0);
        for (std::size_t i = 0; i < rec.size(); ++i) {
            next[i] += lambda * rec[i];
            next[i + 1] += rec[i];
        }
        for (auto& x : next) {
            x /= 1.0 + lambda;
        }
        rec = std::move(next);
    }

    Integer total = 0;
    for (const auto& c : p.coeffs()) {
        total += c;
    }
    for (std::size_t i = 0; i < rec.size(); ++i) {
        const Integer& a = p.coeff(i);
        double err;
        if (a == 0) {
            err = std::abs(rec[i]);
        } else {
            const double target = ratio_to_double(a, total);
            err = std::abs(rec[i] - target) / target;
        }
        d.reconstruction_error = std::max(d.reconstruction_error, err);
    }
    d.reconstructed = std::move(rec);
    return d;
}

}  // namespace gstir
