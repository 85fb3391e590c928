#ifndef RADEX_DUAL_HPP
#define RADEX_DUAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace radex {

/// Exact forward-mode dual number: a value plus one exact partial per seeded
/// independent variable. Arithmetic applies the chain rule in Rational
/// arithmetic, so derivatives of rational expressions are exact.
///
/// All duals combined in one expression must carry the same arity; mixing
/// arities is a programming error and throws.
class DualScalar {
public:
    DualScalar(Rational value, std::size_t arity)
        : value_(std::move(value)), partials_(arity, Rational(0)) {}

    /// Seed independent variable `index`: partial `index` is 1, the rest 0.
    static DualScalar variable(Rational value, std::size_t index, std::size_t arity) {
        DualScalar d(std::move(value), arity);
        d.partials_.at(index) = Rational(1);
        return d;
    }

    static DualScalar constant(Rational value, std::size_t arity) {
        return DualScalar(std::move(value), arity);
    }

    const Rational& value() const { return value_; }
    std::size_t arity() const { return partials_.size(); }
    const Rational& partial(std::size_t i) const { return partials_.at(i); }

    DualScalar operator-() const {
        DualScalar r(-value_, arity());
        for (std::size_t i = 0; i < arity(); ++i) r.partials_[i] = -partials_[i];
        return r;
    }

    friend DualScalar operator+(const DualScalar& u, const DualScalar& v) {
        check_arity(u, v);
        DualScalar r(u.value_ + v.value_, u.arity());
        for (std::size_t i = 0; i < u.arity(); ++i)
            r.partials_[i] = u.partials_[i] + v.partials_[i];
        return r;
    }

    friend DualScalar operator-(const DualScalar& u, const DualScalar& v) {
        check_arity(u, v);
        DualScalar r(u.value_ - v.value_, u.arity());
        for (std::size_t i = 0; i < u.arity(); ++i)
            r.partials_[i] = u.partials_[i] - v.partials_[i];
        return r;
    }

    friend DualScalar operator*(const DualScalar& u, const DualScalar& v) {
        check_arity(u, v);
        DualScalar r(u.value_ * v.value_, u.arity());
        for (std::size_t i = 0; i < u.arity(); ++i)
            r.partials_[i] = u.partials_[i] * v.value_ + u.value_ * v.partials_[i];
        return r;
    }

    // d(u/v) = (du*v - u*dv) / v^2
    friend DualScalar operator/(const DualScalar& u, const DualScalar& v) {
        check_arity(u, v);
        if (v.value_.is_zero()) throw SingularError("division by zero (dual u/v with value(v) = 0)");
        DualScalar r(u.value_ / v.value_, u.arity());
        Rational v2 = v.value_ * v.value_;
        for (std::size_t i = 0; i < u.arity(); ++i)
            r.partials_[i] = (u.partials_[i] * v.value_ - u.value_ * v.partials_[i]) / v2;
        return r;
    }

    friend DualScalar operator+(const Rational& k, const DualScalar& v) {
        return DualScalar::constant(k, v.arity()) + v;
    }
    friend DualScalar operator+(const DualScalar& u, const Rational& k) {
        return u + DualScalar::constant(k, u.arity());
    }
    friend DualScalar operator-(const Rational& k, const DualScalar& v) {
        return DualScalar::constant(k, v.arity()) - v;
    }
    friend DualScalar operator-(const DualScalar& u, const Rational& k) {
        return u - DualScalar::constant(k, u.arity());
    }
    friend DualScalar operator*(const Rational& k, const DualScalar& v) {
        DualScalar r(k * v.value_, v.arity());
        for (std::size_t i = 0; i < v.arity(); ++i) r.partials_[i] = k * v.partials_[i];
        return r;
    }
    friend DualScalar operator*(const DualScalar& u, const Rational& k) { return k * u; }
    friend DualScalar operator/(const DualScalar& u, const Rational& k) {
        return u / DualScalar::constant(k, u.arity());
    }
    friend DualScalar operator/(const Rational& k, const DualScalar& v) {
        return DualScalar::constant(k, v.arity()) / v;
    }

    /// Integer power by repeated squaring; negative exponents via reciprocal.
    DualScalar pow(long exponent) const {
        if (exponent < 0)
            return DualScalar::constant(Rational(1), arity()) / pow(-exponent);
        DualScalar acc = DualScalar::constant(Rational(1), arity());
        DualScalar base = *this;
        long e = exponent;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return acc;
    }

private:
    static void check_arity(const DualScalar& u, const DualScalar& v) {
        if (u.arity() != v.arity())
            throw DomainError("dual scalars with mismatched partials arity");
    }

    Rational value_;
    std::vector<Rational> partials_;
};

}  // namespace radex

#endif
