#include "reduction.hpp"

#include <utility>

#include "errors.hpp"

namespace radex {

InvariantSeq::InvariantSeq(std::vector<Rational> u, std::vector<Rational> v)
    : u_(std::move(u)), v_(std::move(v)) {
    if (u_.size() != v_.size() || u_.empty())
        throw DomainError("invariant sequence needs matching nonempty U and V");
}

Rational initial_u0(const InitialState& init) { return (init.x0 * init.y_prev).inverse(); }

Rational initial_v0(const InitialState& init) { return (init.x_prev * init.y0).inverse(); }

InvariantSeq invariants_from_trajectory(const Trajectory& traj) {
    std::vector<Rational> u, v;
    const long last = traj.last_index();
    u.reserve(static_cast<std::size_t>(last) + 1);
    v.reserve(static_cast<std::size_t>(last) + 1);
    for (long n = 0; n <= last; ++n) {
        u.push_back((traj.x(n) * traj.y(n - 1)).inverse());
        v.push_back((traj.x(n - 1) * traj.y(n)).inverse());
    }
    return InvariantSeq(std::move(u), std::move(v));
}

InvariantSeq invariants_by_recurrence(const SequenceSpec& a, const SequenceSpec& b,
                                      const SequenceSpec& c, const SequenceSpec& d,
                                      const Rational& u0, const Rational& v0, long n_max) {
    if (n_max < 0) throw DomainError("invariant recurrence needs n_max >= 0");
    std::vector<Rational> u{u0}, v{v0};
    u.reserve(static_cast<std::size_t>(n_max) + 1);
    v.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n < n_max; ++n) {
        u.push_back(a.at(n) * u.back() + b.at(n));
        v.push_back(c.at(n) * v.back() + d.at(n));
    }
    return InvariantSeq(std::move(u), std::move(v));
}

InvariantSeq invariants_by_recurrence(const CoefficientQuad& quad, const Rational& u0,
                                      const Rational& v0, long n_max) {
    return invariants_by_recurrence(quad.a(), quad.b(), quad.c(), quad.d(), u0, v0, n_max);
}

namespace {

// The product-sum formula, spelled out with explicit ranges on purpose: this
// is the route checked against the recurrence iteration, so it must not be
// rewritten into one.
Rational closed_form_one(const SequenceSpec& main, const SequenceSpec& sum, const Rational& w0,
                         long n) {
    Rational value = w0 * product_range(main, 0, n - 1);
    for (long l = 0; l < n; ++l) value += sum.at(l) * product_range(main, l + 1, n - 1);
    return value;
}

}  // namespace

std::pair<Rational, Rational> invariants_closed_form(const SequenceSpec& a, const SequenceSpec& b,
                                                     const SequenceSpec& c, const SequenceSpec& d,
                                                     const Rational& u0, const Rational& v0,
                                                     long n) {
    if (n < 0) throw DomainError("invariant closed form needs n >= 0");
    return {closed_form_one(a, b, u0, n), closed_form_one(c, d, v0, n)};
}

std::pair<Rational, Rational> invariants_closed_form(const CoefficientQuad& quad,
                                                     const Rational& u0, const Rational& v0,
                                                     long n) {
    return invariants_closed_form(quad.a(), quad.b(), quad.c(), quad.d(), u0, v0, n);
}

Trajectory reconstruct(const InitialState& init, const InvariantSeq& inv, long steps) {
    if (steps < 0) throw DomainError("reconstruct needs steps >= 0");
    if (inv.last_index() < steps)
        throw DomainError("invariant sequence covers indices through " +
                          std::to_string(inv.last_index()) + ", need " + std::to_string(steps));
    std::vector<Rational> xs{init.x_prev, init.x0};
    std::vector<Rational> ys{init.y_prev, init.y0};
    std::optional<Singularity> singular;
    for (long n = 0; n < steps; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        if (inv.u(n + 1).is_zero()) {
            singular = Singularity{n, SingularFactor::FirstCoefficient};
            break;
        }
        if (inv.v(n + 1).is_zero()) {
            singular = Singularity{n, SingularFactor::SecondCoefficient};
            break;
        }
        xs.push_back(xs[i] * inv.v(n) / inv.u(n + 1));
        ys.push_back(ys[i] * inv.u(n) / inv.v(n + 1));
    }
    return Trajectory(std::move(xs), std::move(ys), singular);
}

}  // namespace radex
