#include "symmetry.hpp"

#include <cmath>
#include <cstdlib>

#include "dual.hpp"
#include "errors.hpp"

namespace radex {

std::vector<std::pair<long, ResidualPair>> determining_check(const GeneratorSpec& gen, long n_from,
                                                             long n_to) {
    std::vector<std::pair<long, ResidualPair>> out;
    for (long n = n_from; n <= n_to; ++n)
        out.emplace_back(n, ResidualPair{gen.lambda(n) + gen.alpha(n + 1),
                                         gen.alpha(n) + gen.lambda(n + 1)});
    return out;
}

ResidualPair lsc_residual(const GeneratorSpec& gen, const CoefficientQuad& quad, long n,
                          const StatePoint& p) {
    const CoefficientQuad::Values k = quad.at(n);
    if (p.x_n.is_zero() || p.x_n1.is_zero() || p.y_n.is_zero() || p.y_n1.is_zero())
        throw DomainError("state point coordinates must be nonzero");
    if ((k.a + k.b * p.x_n1 * p.y_n).is_zero() || (k.c + k.d * p.x_n * p.y_n1).is_zero())
        throw DomainError("singular state point: a vanishing denominator factor");

    // Seeds: slot 0 = x_n, 1 = x_{n+1}, 2 = y_n, 3 = y_{n+1}.
    const DualScalar xn = DualScalar::variable(p.x_n, 0, 4);
    const DualScalar xn1 = DualScalar::variable(p.x_n1, 1, 4);
    const DualScalar yn = DualScalar::variable(p.y_n, 2, 4);
    const DualScalar yn1 = DualScalar::variable(p.y_n1, 3, 4);

    const DualScalar omega1 = (xn1 * yn) / (yn1 * (k.a + k.b * xn1 * yn));
    const DualScalar omega2 = (xn * yn1) / (xn1 * (k.c + k.d * xn * yn1));

    const Rational q1_n = gen.alpha(n) * p.x_n;
    const Rational q1_n1 = gen.alpha(n + 1) * p.x_n1;
    const Rational q2_n = gen.lambda(n) * p.y_n;
    const Rational q2_n1 = gen.lambda(n + 1) * p.y_n1;

    auto prolonged = [&](const DualScalar& omega) {
        return q1_n * omega.partial(0) + q1_n1 * omega.partial(1) + q2_n * omega.partial(2) +
               q2_n1 * omega.partial(3);
    };

    Rational r1 = gen.alpha(n + 2) * omega1.value() - prolonged(omega1);
    Rational r2 = gen.lambda(n + 2) * omega2.value() - prolonged(omega2);
    return ResidualPair{std::move(r1), std::move(r2)};
}

ResidualPair invariant_annihilation(const GeneratorSpec& gen, long n) {
    // X[ln|y_n x_{n+1}|] = Q2(n,y)/y + Q1(n+1,x)/x = lambda_n + alpha_{n+1};
    // X[ln|x_n y_{n+1}|] = alpha_n + lambda_{n+1}.
    return ResidualPair{gen.lambda(n) + gen.alpha(n + 1), gen.alpha(n) + gen.lambda(n + 1)};
}

std::vector<CanonicalCoord> canonical_coords(const Trajectory& traj) {
    std::vector<CanonicalCoord> out;
    for (long n = -1; n <= traj.last_index(); ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        out.push_back({n, sign * std::log(std::fabs(traj.x(n).to_double())),
                       sign * std::log(std::fabs(traj.y(n).to_double()))});
    }
    return out;
}

}  // namespace radex
