#ifndef RADEX_SYMMETRY_HPP
#define RADEX_SYMMETRY_HPP

#include <utility>
#include <vector>

#include "engine.hpp"
#include "generator.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace radex {

struct ResidualPair {
    Rational first, second;

    bool zero() const { return first.is_zero() && second.is_zero(); }
};

/// Exact residuals of the determining relations at each n in [n_from, n_to]:
/// (lambda_n + alpha_{n+1}, alpha_n + lambda_{n+1}). All zero iff the
/// candidate satisfies the determining system.
std::vector<std::pair<long, ResidualPair>> determining_check(const GeneratorSpec& gen, long n_from,
                                                             long n_to);

/// A point (x_n, x_{n+1}, y_n, y_{n+1}) at which the linearized symmetry
/// condition is evaluated; all four coordinates nonzero.
struct StatePoint {
    Rational x_n, x_n1, y_n, y_n1;
};

/// Exact residual of the linearized symmetry condition at one point:
///   r_i = Q_i(n+2, Omega_i) - X^[1] Omega_i,
/// where Omega_1, Omega_2 are the two-step update maps of the system with
/// coefficients read at index n, and X^[1] applies the characteristics at
/// (n, .) and (n+1, .) through exact dual-number partial derivatives.
/// (0, 0) at every regular point iff the candidate is a symmetry.
ResidualPair lsc_residual(const GeneratorSpec& gen, const CoefficientQuad& quad, long n,
                          const StatePoint& point);

/// Directional-derivative coefficients of the log-invariants
/// ln|y_n x_{n+1}| and ln|x_n y_{n+1}| under the candidate field:
/// exactly (lambda_n + alpha_{n+1}, alpha_n + lambda_{n+1}).
ResidualPair invariant_annihilation(const GeneratorSpec& gen, long n);

/// Canonical coordinates s_n = (-1)^n ln|x_n|, t_n = (-1)^n ln|y_n| for each
/// trajectory entry. Diagnostic only: this is the artifact's single
/// floating-point surface (logs are irrational).
struct CanonicalCoord {
    long n;
    double s, t;
};

std::vector<CanonicalCoord> canonical_coords(const Trajectory& traj);

}  // namespace radex

#endif
