#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gstir/combinatorics.hpp"

namespace gstir {

/// Exact rational number in lowest terms with a positive denominator.
class RationalPoint {
public:
    RationalPoint() = default;
    RationalPoint(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    RationalPoint(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    RationalPoint(const Integer& numerator, const Integer& denominator);
    explicit RationalPoint(mpq_class value);

    // numerator / 2^exponent
    static RationalPoint dyadic(const Integer& numerator, unsigned long exponent);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }
    int sign() const { return sgn(value_); }

    std::string str() const { return value_.get_str(); }
    double to_double() const;

    friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
        return RationalPoint(mpq_class(a.value_ + b.value_));
    }
    friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
        return RationalPoint(mpq_class(a.value_ - b.value_));
    }
    friend RationalPoint operator*(const RationalPoint& a, const RationalPoint& b) {
        return RationalPoint(mpq_class(a.value_ * b.value_));
    }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        return a.value_ < b.value_;
    }
    friend bool operator>(const RationalPoint& a, const RationalPoint& b) { return b < a; }
    friend bool operator<=(const RationalPoint& a, const RationalPoint& b) { return !(b < a); }
    friend bool operator>=(const RationalPoint& a, const RationalPoint& b) { return !(a < b); }

private:
    mpq_class value_;
};

// Midpoint of a and b.
RationalPoint midpoint(const RationalPoint& a, const RationalPoint& b);

// Converts num/den to the nearest double without ever materialising num or
// den as floating point values; keeps well over 30 significant digits until
// the final rounding.
double ratio_to_double(const Integer& num, const Integer& den);
double ratio_to_double(const mpq_class& q);

/**
 * Dense polynomial with exact integer coefficients; coeffs()[i] multiplies x^i.
 *
 * Always canonical: the highest stored coefficient is nonzero, and the zero
 * polynomial has no coefficients at all.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const Integer& c, std::size_t degree);
    static IntPolynomial x() { return monomial(1, 1); }
    static IntPolynomial constant(const Integer& c) { return monomial(c, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    // Coefficient of x^i; zero beyond the degree.
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const { return coeffs_.back(); }
    // Index of the lowest nonzero coefficient (multiplicity of the root at 0).
    std::size_t lowest_degree() const;

    std::string str() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p);
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, const Integer& c);

IntPolynomial derivative(const IntPolynomial& p);

// x p + x p'
IntPolynomial apply_x_plus_xD(const IntPolynomial& p);

RationalPoint eval_at_rational(const IntPolynomial& p, const RationalPoint& r);
// Sign of p(r), computed on the cleared-denominator integer form.
int sign_at(const IntPolynomial& p, const RationalPoint& r);
double eval_double(const IntPolynomial& p, double x);

// p / x^m; throws std::domain_error if any of the m lowest coefficients is nonzero.
IntPolynomial divide_by_x_power(const IntPolynomial& p, std::size_t m);

// sum_k weights[k] * x(x-1)...(x-k+1), expanded in the monomial basis.
IntPolynomial falling_factorial_combination(std::span<const Integer> weights);

// gcd of the coefficients, always non-negative; zero for the zero polynomial.
Integer content(const IntPolynomial& p);
// p divided by its content, normalised to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
// lc(q)^(deg p - deg q + 1) * p mod q.
IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& q);
// p / q when q divides p in Z[x]; throws std::domain_error otherwise.
IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& q);
// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace gstir
