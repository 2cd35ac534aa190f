#include "gstir/polynomial.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gstir {

RationalPoint::RationalPoint(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw std::domain_error("RationalPoint: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

RationalPoint::RationalPoint(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

RationalPoint RationalPoint::dyadic(const Integer& numerator, unsigned long exponent) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent);
    return RationalPoint(numerator, den);
}

double RationalPoint::to_double() const { return ratio_to_double(value_); }

RationalPoint midpoint(const RationalPoint& a, const RationalPoint& b) {
    mpq_class m = a.value() + b.value();
    mpq_div_2exp(m.get_mpq_t(), m.get_mpq_t(), 1);
    return RationalPoint(std::move(m));
}

double ratio_to_double(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("ratio_to_double: zero denominator");
    }
    if (num == 0) {
        return 0.0;
    }
    const int sign = sgn(num) * sgn(den);
    Integer a = abs(num);
    Integer b = abs(den);
    constexpr long kBits = 128;
    const long shift = kBits - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                                static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
    if (shift >= 0) {
        mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(shift));
    } else {
        mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    Integer q = a / b;
    // mpz_get_d truncates; add back the truncated tail so the sum rounds.
    const double head = mpz_get_d(q.get_mpz_t());
    Integer tail = q - Integer(head);
    const double value = head + mpz_get_d(tail.get_mpz_t());
    return sign * std::ldexp(value, static_cast<int>(-shift));
}

double ratio_to_double(const mpq_class& q) { return ratio_to_double(q.get_num(), q.get_den()); }

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::size_t IntPolynomial::lowest_degree() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0) {
        ++i;
    }
    return i;
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
        const Integer& c = p.coeffs_[i];
        if (c == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << "x";
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    const auto& big = p.coeffs_.size() >= q.coeffs_.size() ? p.coeffs_ : q.coeffs_;
    const auto& small = p.coeffs_.size() >= q.coeffs_.size() ? q.coeffs_ : p.coeffs_;
    std::vector<Integer> r = big;
    for (std::size_t i = 0; i < small.size(); ++i) {
        r[i] += small[i];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& p) {
    std::vector<Integer> r = p.coeffs_;
    for (auto& c : r) {
        c = -c;
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<Integer> r = p.coeffs_;
    if (r.size() < q.coeffs_.size()) {
        r.resize(q.coeffs_.size());
    }
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) {
        r[i] -= q.coeffs_[i];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    std::vector<Integer> r(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), q.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) { return p - q; }
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial scale(const IntPolynomial& p, const Integer& c) {
    std::vector<Integer> r = p.coeffs();
    for (auto& v : r) {
        v *= c;
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Integer> r(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial apply_x_plus_xD(const IntPolynomial& p) {
    if (p.is_zero()) {
        return {};
    }
    // x p + x p' has coefficient c_{i-1} + i c_i at x^i.
    const auto& c = p.coeffs();
    std::vector<Integer> r(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        r[i + 1] += c[i];
        r[i] += c[i] * static_cast<unsigned long>(i);
    }
    return IntPolynomial(std::move(r));
}

RationalPoint eval_at_rational(const IntPolynomial& p, const RationalPoint& r) {
    mpq_class acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * r.value() + p.coeffs()[i];
    }
    return RationalPoint(std::move(acc));
}

int sign_at(const IntPolynomial& p, const RationalPoint& r) {
    if (p.is_zero()) {
        return 0;
    }
    // d^deg p(u/d) = sum c_i u^i d^(deg-i); same sign since d > 0.
    const Integer u = r.numerator();
    const Integer d = r.denominator();
    const auto& c = p.coeffs();
    Integer acc = c.back();
    if (d == 1) {
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            acc *= u;
            acc += c[i];
        }
        return sgn(acc);
    }
    Integer dpow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dpow *= d;
        acc *= u;
        if (c[i] != 0) {
            mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
        }
    }
    return sgn(acc);
}

double eval_double(const IntPolynomial& p, double x) {
    double acc = 0.0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * x + p.coeffs()[i].get_d();
    }
    return acc;
}

IntPolynomial divide_by_x_power(const IntPolynomial& p, std::size_t m) {
    if (p.is_zero() || m == 0) {
        return p;
    }
    if (p.lowest_degree() < m) {
        throw std::domain_error("divide_by_x_power: polynomial is not divisible by x^" +
                                std::to_string(m));
    }
    const auto& c = p.coeffs();
    return IntPolynomial(std::vector<Integer>(c.begin() + static_cast<long>(m), c.end()));
}

IntPolynomial falling_factorial_combination(std::span<const Integer> weights) {
    IntPolynomial sum;
    IntPolynomial falling = IntPolynomial::constant(1);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (k > 0) {
            falling = falling * IntPolynomial{-static_cast<long>(k - 1), 1};
        }
        if (weights[k] != 0) {
            sum = sum + scale(falling, weights[k]);
        }
    }
    return sum;
}

Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    Integer g = content(p);
    if (p.leading() < 0) {
        g = -g;
    }
    if (g == 1) {
        return p;
    }
    std::vector<Integer> r = p.coeffs();
    for (auto& c : r) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) {
        throw std::domain_error("pseudo_remainder: division by zero polynomial");
    }
    if (p.degree() < q.degree()) {
        return p;
    }
    const long dq = q.degree();
    const Integer& lq = q.leading();
    std::vector<Integer> r = p.coeffs();
    long steps = 0;
    const long delta = p.degree() - dq;
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= dq) {
        const Integer lr = r[static_cast<std::size_t>(dr)];
        const long shift = dr - dq;
        for (long i = 0; i < dr; ++i) {
            r[static_cast<std::size_t>(i)] *= lq;
        }
        for (long j = 0; j < dq; ++j) {
            mpz_submul(r[static_cast<std::size_t>(j + shift)].get_mpz_t(), lr.get_mpz_t(),
                       q.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        }
        r.pop_back();
        ++steps;
        while (!r.empty() && r.back() == 0) {
            r.pop_back();
        }
        dr = static_cast<long>(r.size()) - 1;
    }
    // Steps skipped by early degree drops still owe their factor of lc(q).
    if (steps < delta + 1) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lq.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
        for (auto& c : r) {
            c *= f;
        }
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) {
        throw std::domain_error("exact_quotient: division by zero polynomial");
    }
    if (p.is_zero()) {
        return {};
    }
    if (p.degree() < q.degree()) {
        throw std::domain_error("exact_quotient: divisor has larger degree");
    }
    const long dq = q.degree();
    std::vector<Integer> r = p.coeffs();
    std::vector<Integer> quot(static_cast<std::size_t>(p.degree() - dq + 1));
    for (long dr = p.degree(); dr >= dq; --dr) {
        const Integer& lr = r[static_cast<std::size_t>(dr)];
        if (lr == 0) {
            continue;
        }
        if (!mpz_divisible_p(lr.get_mpz_t(), q.leading().get_mpz_t())) {
            throw std::domain_error("exact_quotient: not divisible over the integers");
        }
        Integer t;
        mpz_divexact(t.get_mpz_t(), lr.get_mpz_t(), q.leading().get_mpz_t());
        const long shift = dr - dq;
        for (long j = 0; j <= dq; ++j) {
            mpz_submul(r[static_cast<std::size_t>(j + shift)].get_mpz_t(), t.get_mpz_t(),
                       q.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        }
        quot[static_cast<std::size_t>(shift)] = std::move(t);
    }
    for (const auto& c : r) {
        if (c != 0) {
            throw std::domain_error("exact_quotient: nonzero remainder");
        }
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial a = primitive_part(p);
    IntPolynomial b = primitive_part(q);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace gstir
