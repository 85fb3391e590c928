#ifndef RADEX_REDUCTION_HPP
#define RADEX_REDUCTION_HPP

#include <utility>
#include <vector>

#include "engine.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace radex {

/// The reduced variables U_n = 1/(x_n y_{n-1}) and V_n = 1/(x_{n-1} y_n),
/// indexed from n = 0. Along an orbit they obey the first-order linear
/// recurrences U_{n+1} = a_n U_n + b_n and V_{n+1} = c_n V_n + d_n.
class InvariantSeq {
public:
    InvariantSeq(std::vector<Rational> u, std::vector<Rational> v);

    long last_index() const { return static_cast<long>(u_.size()) - 1; }
    const Rational& u(long n) const { return u_.at(static_cast<std::size_t>(n)); }
    const Rational& v(long n) const { return v_.at(static_cast<std::size_t>(n)); }

private:
    std::vector<Rational> u_, v_;
};

/// Seed values read off the initial data: U_0 = 1/(x_0 y_{-1}),
/// V_0 = 1/(x_{-1} y_0).
Rational initial_u0(const InitialState& init);
Rational initial_v0(const InitialState& init);

/// Reduced variables read directly off trajectory entries, n = 0 .. last.
InvariantSeq invariants_from_trajectory(const Trajectory& traj);

/// Iterate U_{n+1} = a_n U_n + b_n, V_{n+1} = c_n V_n + d_n for n = 0 .. n_max.
/// The sequence-level overload tolerates zero entries, so the linear
/// recurrence can be exercised in isolation.
InvariantSeq invariants_by_recurrence(const SequenceSpec& a, const SequenceSpec& b,
                                      const SequenceSpec& c, const SequenceSpec& d,
                                      const Rational& u0, const Rational& v0, long n_max);
InvariantSeq invariants_by_recurrence(const CoefficientQuad& quad, const Rational& u0,
                                      const Rational& v0, long n_max);

/// Product-sum solution of the linear recurrences, evaluated literally:
///   U_n = U_0 prod_{k=0}^{n-1} a_k + sum_{l=0}^{n-1} b_l prod_{k=l+1}^{n-1} a_k
/// and the (c, d) analogue for V_n.
std::pair<Rational, Rational> invariants_closed_form(const SequenceSpec& a, const SequenceSpec& b,
                                                     const SequenceSpec& c, const SequenceSpec& d,
                                                     const Rational& u0, const Rational& v0,
                                                     long n);
std::pair<Rational, Rational> invariants_closed_form(const CoefficientQuad& quad,
                                                     const Rational& u0, const Rational& v0,
                                                     long n);

/// Rebuild the orbit from the reduced variables:
///   x_{n+1} = x_{n-1} V_n / U_{n+1},  y_{n+1} = y_{n-1} U_n / V_{n+1}.
/// A zero U_{n+1} or V_{n+1} mirrors the direct iteration's forbidden set and
/// is reported as singular status at the same step. `inv` must cover
/// indices 0 .. steps.
Trajectory reconstruct(const InitialState& init, const InvariantSeq& inv, long steps);

}  // namespace radex

#endif
