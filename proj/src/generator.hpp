#ifndef RADEX_GENERATOR_HPP
#define RADEX_GENERATOR_HPP

#include <functional>
#include <string>
#include <utility>

#include "rational.hpp"

namespace radex {

inline long parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

/// A symmetry-candidate vector field X = alpha_n x d/dx + lambda_n y d/dy,
/// i.e. characteristics Q1(n, x) = alpha_n * x and Q2(n, y) = lambda_n * y.
///
/// Two modes:
///  - from_constants(c0, c1): lambda_n = c0 + (-1)^n c1 and
///    alpha_n = -lambda_{n-1}, so the determining relations
///    lambda_n + alpha_{n+1} = 0 and alpha_n + lambda_{n+1} = 0 hold by
///    construction.
///  - explicit sequences: arbitrary alpha/lambda, for probing candidates
///    that need not be symmetries at all.
class GeneratorSpec {
public:
    using SeqFn = std::function<Rational(long)>;

    static GeneratorSpec from_constants(Rational c0, Rational c1) {
        GeneratorSpec g;
        g.alpha_ = [c0, c1](long n) { return -c0 + Rational(parity_sign(n)) * c1; };
        g.lambda_ = [c0, c1](long n) { return c0 + Rational(parity_sign(n)) * c1; };
        g.from_constants_ = true;
        return g;
    }

    static GeneratorSpec explicit_sequences(SeqFn alpha, SeqFn lambda) {
        GeneratorSpec g;
        g.alpha_ = std::move(alpha);
        g.lambda_ = std::move(lambda);
        g.from_constants_ = false;
        return g;
    }

    /// (-1)^n x d/dx + (-1)^n y d/dy; satisfies the determining relations.
    static GeneratorSpec alternating() { return from_constants(Rational(0), Rational(1)); }

    /// -x d/dx + y d/dy; satisfies the determining relations.
    static GeneratorSpec signed_scaling() { return from_constants(Rational(1), Rational(0)); }

    /// x d/dx + y d/dy. Uniform scaling is NOT a symmetry of this system:
    /// it fails both determining relations with residual 2.
    static GeneratorSpec uniform_scaling() {
        return explicit_sequences([](long) { return Rational(1); },
                                  [](long) { return Rational(1); });
    }

    Rational alpha(long n) const { return alpha_(n); }
    Rational lambda(long n) const { return lambda_(n); }
    bool from_constants_mode() const { return from_constants_; }

    /// (Q1, Q2) = (alpha_n * x, lambda_n * y).
    std::pair<Rational, Rational> characteristic(long n, const Rational& x,
                                                 const Rational& y) const {
        return {alpha_(n) * x, lambda_(n) * y};
    }

private:
    GeneratorSpec() = default;

    SeqFn alpha_;
    SeqFn lambda_;
    bool from_constants_ = false;
};

}  // namespace radex

#endif
