#include "engine.hpp"

#include <utility>
#include <variant>

#include "errors.hpp"

namespace radex {

std::string to_string(Equation eq) { return eq == Equation::First ? "first" : "second"; }

Equation equation_of(SingularFactor factor) {
    switch (factor) {
        case SingularFactor::FirstDivisor:
        case SingularFactor::FirstCoefficient:
            return Equation::First;
        case SingularFactor::SecondDivisor:
        case SingularFactor::SecondCoefficient:
            return Equation::Second;
    }
    return Equation::First;
}

std::string to_string(SingularFactor factor) {
    switch (factor) {
        case SingularFactor::FirstDivisor: return "y_n";
        case SingularFactor::FirstCoefficient: return "a_n + b_n*x_n*y_{n-1}";
        case SingularFactor::SecondDivisor: return "x_n";
        case SingularFactor::SecondCoefficient: return "c_n + d_n*x_{n-1}*y_n";
    }
    return "?";
}

InitialState::InitialState(Rational x_prev_, Rational x0_, Rational y_prev_, Rational y0_)
    : x_prev(std::move(x_prev_)), x0(std::move(x0_)), y_prev(std::move(y_prev_)),
      y0(std::move(y0_)) {
    const char* names[] = {"x_prev", "x0", "y_prev", "y0"};
    const Rational* vals[] = {&x_prev, &x0, &y_prev, &y0};
    for (int i = 0; i < 4; ++i)
        if (vals[i]->is_zero())
            throw ConfigError(std::string("initial value ") + names[i] +
                              " must be nonzero (a zero forces a zero divisor one step later)");
}

Trajectory::Trajectory(std::vector<Rational> xs, std::vector<Rational> ys,
                       std::optional<Singularity> singular)
    : xs_(std::move(xs)), ys_(std::move(ys)), singular_(singular) {}

namespace {

// One update of the coupled system. The state products are shared between
// the vanishing-factor tests and the new values, so each factor is computed
// once; the tests run in the documented order before any division.
std::variant<std::pair<Rational, Rational>, SingularFactor> checked_step(
    const Rational& x_prev, const Rational& x_cur, const Rational& y_prev,
    const Rational& y_cur, const CoefficientQuad::Values& k) {
    if (y_cur.is_zero()) return SingularFactor::FirstDivisor;
    const Rational w = x_cur * y_prev;
    const Rational f1 = k.a + k.b * w;
    if (f1.is_zero()) return SingularFactor::FirstCoefficient;
    if (x_cur.is_zero()) return SingularFactor::SecondDivisor;
    const Rational v = x_prev * y_cur;
    const Rational f2 = k.c + k.d * v;
    if (f2.is_zero()) return SingularFactor::SecondCoefficient;
    return std::pair<Rational, Rational>{w / (y_cur * f1), v / (x_cur * f2)};
}

}  // namespace

std::pair<Rational, Rational> step(const Rational& x_prev, const Rational& x_cur,
                                   const Rational& y_prev, const Rational& y_cur,
                                   const CoefficientQuad::Values& coeffs) {
    auto outcome = checked_step(x_prev, x_cur, y_prev, y_cur, coeffs);
    if (auto* factor = std::get_if<SingularFactor>(&outcome))
        throw SingularError("vanishing denominator factor " + to_string(*factor) + " (" +
                            to_string(equation_of(*factor)) + " equation)");
    return std::get<std::pair<Rational, Rational>>(std::move(outcome));
}

Trajectory simulate(const CoefficientQuad& quad, const InitialState& init, long steps) {
    if (steps < 0) throw DomainError("simulate needs steps >= 0");
    std::vector<Rational> xs{init.x_prev, init.x0};
    std::vector<Rational> ys{init.y_prev, init.y0};
    xs.reserve(static_cast<std::size_t>(steps) + 2);
    ys.reserve(static_cast<std::size_t>(steps) + 2);
    std::optional<Singularity> singular;
    for (long n = 0; n < steps; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        auto outcome = checked_step(xs[i], xs[i + 1], ys[i], ys[i + 1], quad.at(n));
        if (auto* factor = std::get_if<SingularFactor>(&outcome)) {
            singular = Singularity{n, *factor};
            break;
        }
        auto& [x_next, y_next] = std::get<std::pair<Rational, Rational>>(outcome);
        xs.push_back(std::move(x_next));
        ys.push_back(std::move(y_next));
    }
    return Trajectory(std::move(xs), std::move(ys), singular);
}

namespace {

long integer_exponent(const Rational& value, const char* which) {
    if (!value.is_integer())
        throw DomainError(std::string("scale action needs integer exponents; ") + which + " = " +
                          value.str());
    return value.to_long();
}

}  // namespace

InitialState scale_action(const InitialState& init, const Rational& r, const GeneratorSpec& gen) {
    if (r.is_zero()) throw DomainError("scale factor must be nonzero");
    long a_prev = integer_exponent(gen.alpha(-1), "alpha_{-1}");
    long a_0 = integer_exponent(gen.alpha(0), "alpha_0");
    long l_prev = integer_exponent(gen.lambda(-1), "lambda_{-1}");
    long l_0 = integer_exponent(gen.lambda(0), "lambda_0");
    return InitialState(r.pow(a_prev) * init.x_prev, r.pow(a_0) * init.x0,
                        r.pow(l_prev) * init.y_prev, r.pow(l_0) * init.y0);
}

}  // namespace radex
