#ifndef RADEX_RATIONAL_HPP
#define RADEX_RATIONAL_HPP

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace radex {

/// Arbitrary-precision rational scalar, the ground-truth number type.
///
/// Thin RAII wrapper over GMP's mpq_t. Values are kept in canonical form at
/// all times: the denominator is positive, gcd(|num|, den) = 1, and zero is
/// 0/1. Equality on canonical forms is therefore a plain limb compare.
///
/// Division by an exact zero throws SingularError naming the site; nothing
/// here ever rounds. Instances are immutable in practice (all operators
/// return fresh values) and safe to hand across threads.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) {  // NOLINT(google-explicit-constructor): numeric literal interop
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, long den);

    Rational(const Rational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }

    Rational(Rational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }

    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }

    Rational& operator=(Rational&& other) noexcept {
        if (this != &other) mpq_swap(q_, other.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    /// Parse a literal: `[-]digits` or `[-]digits/positive-digits`.
    /// Throws ParseError on malformed text, DomainError on a zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p/q" when q != 1, plain "p" otherwise.
    std::string str() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    /// Integer value; requires is_integer() and fit in long.
    long to_long() const;

    double to_double() const { return mpq_get_d(q_); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw SingularError("division by zero (a/b with b = 0)");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }

    Rational& operator+=(const Rational& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rational& operator-=(const Rational& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rational& operator*=(const Rational& b) { mpq_mul(q_, q_, b.q_); return *this; }
    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) throw SingularError("division by zero (a/b with b = 0)");
        mpq_div(q_, q_, b.q_);
        return *this;
    }

    /// Exact reciprocal; throws SingularError on zero.
    Rational inverse() const {
        if (is_zero()) throw SingularError("division by zero (1/x with x = 0)");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    /// Integer power, negative exponents via the reciprocal. pow(0, 0) = 1.
    Rational pow(long exponent) const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_t q_;
};

}  // namespace radex

#endif
