#ifndef RADEX_ENGINE_HPP
#define RADEX_ENGINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "generator.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace radex {

enum class Equation { First, Second };

std::string to_string(Equation eq);

// Denominator factors of the two update rules, in the order they are tested.
enum class SingularFactor {
    FirstDivisor,        // y_n
    FirstCoefficient,    // a_n + b_n * x_n * y_{n-1}
    SecondDivisor,       // x_n
    SecondCoefficient,   // c_n + d_n * x_{n-1} * y_n
};

Equation equation_of(SingularFactor factor);
std::string to_string(SingularFactor factor);

struct Singularity {
    long step;
    SingularFactor factor;

    Equation equation() const { return equation_of(factor); }
};

/// Initial data (x_{-1}, x_0, y_{-1}, y_0); all four values must be nonzero.
/// A zero value would force a zero divisor one step later, so it is rejected
/// up front.
struct InitialState {
    Rational x_prev, x0, y_prev, y0;

    InitialState(Rational x_prev_, Rational x0_, Rational y_prev_, Rational y0_);
};

/// Exact orbit indexed from n = -1. If the run hit a vanishing denominator,
/// entries stop at the singular step and `singular` names it.
class Trajectory {
public:
    Trajectory(std::vector<Rational> xs, std::vector<Rational> ys,
               std::optional<Singularity> singular);

    /// Largest index n with a recorded entry (>= 0; index -1 always exists).
    long last_index() const { return static_cast<long>(xs_.size()) - 2; }

    const Rational& x(long n) const { return xs_.at(static_cast<std::size_t>(n + 1)); }
    const Rational& y(long n) const { return ys_.at(static_cast<std::size_t>(n + 1)); }

    const std::optional<Singularity>& singular() const { return singular_; }
    bool completed() const { return !singular_.has_value(); }

private:
    std::vector<Rational> xs_, ys_;  // slot i holds index n = i - 1
    std::optional<Singularity> singular_;
};

/// One application of the coupled update at a single step. Throws
/// SingularError when a denominator factor vanishes; the message names it.
std::pair<Rational, Rational> step(const Rational& x_prev, const Rational& x_cur,
                                   const Rational& y_prev, const Rational& y_cur,
                                   const CoefficientQuad::Values& coeffs);

/// Iterate the system exactly: entries for n = -1 .. steps, or truncated
/// with singular status at the first failing step. Pure in all arguments.
Trajectory simulate(const CoefficientQuad& quad, const InitialState& init, long steps);

/// Finite group action on initial data: x_n -> r^{alpha_n} x_n,
/// y_n -> r^{lambda_n} y_n at n = -1, 0. Requires r != 0 and integer
/// exponents (all built-in generators qualify).
InitialState scale_action(const InitialState& init, const Rational& r, const GeneratorSpec& gen);

}  // namespace radex

#endif
