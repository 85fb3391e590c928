#include "closed_form.hpp"

#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace radex {

Rational general_bracket(const SequenceSpec& main, const SequenceSpec& sum, const Rational& w,
                         long m) {
    Rational value = product_range(main, 0, m);
    for (long l = 0; l <= m; ++l) value += w * sum.at(l) * product_range(main, l + 1, m);
    return value;
}

Rational constant_bracket(const Rational& main, const Rational& sum, const Rational& w, long m) {
    Rational geometric(0);
    for (long l = 0; l <= m; ++l) geometric += main.pow(l);
    return main.pow(m + 1) + w * sum * geometric;
}

Rational unit_bracket(const Rational& sum, const Rational& w, long m) {
    return Rational(1) + Rational(m + 1) * sum * w;
}

Rational nonunit_bracket(const Rational& main, const Rational& sum, const Rational& w, long m) {
    if (main == Rational(1)) throw DomainError("nonunit bracket needs main != 1");
    Rational power = main.pow(m + 1);
    return power + w * sum * (Rational(1) - power) / (Rational(1) - main);
}

namespace {

struct BracketFns {
    std::function<Rational(long)> a_bracket;  // index m >= 0
    std::function<Rational(long)> c_bracket;
    std::function<std::string(Equation, long)> condition;  // k = 1-based failing index
};

std::string generic_condition(Equation eq, long k) {
    const char* name = (eq == Equation::First) ? "a" : "c";
    return std::string(name) + "-bracket(" + std::to_string(k - 1) + ") = 0";
}

std::string unit_condition(Equation eq, long k) {
    std::string j = std::to_string(k);
    return (eq == Equation::First) ? "j=" + j + " (j*b*x0*y_prev = -1)"
                                   : "j=" + j + " (j*d*x_prev*y0 = -1)";
}

// Shared parity assembly. Brackets are evaluated in ascending index order
// across both sides first, so the earliest vanishing one is reported, with
// the first equation winning ties exactly as the direct iteration does.
ValuePair solve_impl(const BracketFns& fns, const InitialState& init, long m) {
    if (m < -1) throw DomainError("solution index must be >= -1");
    if (m == -1) return {init.x_prev, init.y_prev};
    if (m == 0) return {init.x0, init.y0};

    std::vector<Rational> abr, cbr;  // slot j holds bracket index j
    abr.reserve(static_cast<std::size_t>(m));
    cbr.reserve(static_cast<std::size_t>(m));
    for (long k = 1; k <= m; ++k) {
        abr.push_back(fns.a_bracket(k - 1));
        if (abr.back().is_zero())
            throw ForbiddenError(k - 1, Equation::First, fns.condition(Equation::First, k));
        cbr.push_back(fns.c_bracket(k - 1));
        if (cbr.back().is_zero())
            throw ForbiddenError(k - 1, Equation::Second, fns.condition(Equation::Second, k));
    }
    auto a_at = [&](long j) { return j < 0 ? Rational(1) : abr[static_cast<std::size_t>(j)]; };
    auto c_at = [&](long j) { return j < 0 ? Rational(1) : cbr[static_cast<std::size_t>(j)]; };

    if (m % 2 != 0) {
        const long n = (m + 1) / 2;
        Rational x = init.x_prev.pow(1 - n) * (init.x0 * init.y_prev / init.y0).pow(n);
        Rational y = init.y_prev.pow(1 - n) * (init.x_prev * init.y0 / init.x0).pow(n);
        for (long s = 0; s < n; ++s) {
            x *= c_at(2 * s - 1) / a_at(2 * s);
            y *= a_at(2 * s - 1) / c_at(2 * s);
        }
        return {std::move(x), std::move(y)};
    }
    const long n = m / 2;
    Rational x = init.x0.pow(n + 1) * (init.y_prev / (init.x_prev * init.y0)).pow(n);
    Rational y = init.y0.pow(n + 1) * (init.x_prev / (init.x0 * init.y_prev)).pow(n);
    for (long s = 0; s < n; ++s) {
        x *= c_at(2 * s) / a_at(2 * s + 1);
        y *= a_at(2 * s) / c_at(2 * s + 1);
    }
    return {std::move(x), std::move(y)};
}

}  // namespace

ValuePair solve_general(const CoefficientQuad& quad, const InitialState& init, long m) {
    const Rational wa = init.x0 * init.y_prev;
    const Rational wc = init.x_prev * init.y0;
    BracketFns fns{
        [&](long j) { return general_bracket(quad.a(), quad.b(), wa, j); },
        [&](long j) { return general_bracket(quad.c(), quad.d(), wc, j); },
        generic_condition,
    };
    return solve_impl(fns, init, m);
}

ValuePair solve_constant(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const InitialState& init, long m) {
    const Rational wa = init.x0 * init.y_prev;
    const Rational wc = init.x_prev * init.y0;
    BracketFns fns{
        [&](long j) { return constant_bracket(a, b, wa, j); },
        [&](long j) { return constant_bracket(c, d, wc, j); },
        generic_condition,
    };
    return solve_impl(fns, init, m);
}

ValuePair solve_unit(const Rational& b, const Rational& d, const InitialState& init, long m) {
    const Rational wa = init.x0 * init.y_prev;
    const Rational wc = init.x_prev * init.y0;
    BracketFns fns{
        [&](long j) { return unit_bracket(b, wa, j); },
        [&](long j) { return unit_bracket(d, wc, j); },
        unit_condition,
    };
    return solve_impl(fns, init, m);
}

ValuePair solve_nonunit(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const InitialState& init, long m) {
    if (a == Rational(1) || c == Rational(1))
        throw DomainError("nonunit family needs a != 1 and c != 1");
    const Rational wa = init.x0 * init.y_prev;
    const Rational wc = init.x_prev * init.y0;
    BracketFns fns{
        [&](long j) { return nonunit_bracket(a, b, wa, j); },
        [&](long j) { return nonunit_bracket(c, d, wc, j); },
        generic_condition,
    };
    return solve_impl(fns, init, m);
}

ValuePair solve_neg_unit(const Rational& b, const Rational& d, const InitialState& init, long m) {
    if (m < -1) throw DomainError("solution index must be >= -1");
    if (m == -1) return {init.x_prev, init.y_prev};
    if (m == 0) return {init.x0, init.y0};

    const Rational pb = Rational(-1) + b * init.x0 * init.y_prev;
    const Rational pd = Rational(-1) + d * init.x_prev * init.y0;
    if (pb.is_zero()) throw ForbiddenError(0, Equation::First, "b*x0*y_prev = 1");
    if (pd.is_zero()) throw ForbiddenError(0, Equation::Second, "d*x_prev*y0 = 1");

    if (m % 2 != 0) {
        const long n = (m + 1) / 2;
        Rational x = init.x_prev.pow(1 - n) * (init.x0 * init.y_prev / init.y0).pow(n) * pb.pow(-n);
        Rational y = init.y_prev.pow(1 - n) * (init.x_prev * init.y0 / init.x0).pow(n) * pd.pow(-n);
        return {std::move(x), std::move(y)};
    }
    const long n = m / 2;
    Rational x = init.x0.pow(n + 1) * (init.y_prev / (init.x_prev * init.y0)).pow(n) * pd.pow(n);
    Rational y = init.y0.pow(n + 1) * (init.x_prev / (init.x0 * init.y_prev)).pow(n) * pb.pow(n);
    return {std::move(x), std::move(y)};
}

namespace {

bool is_constant_value(const CoefficientQuad& quad, const SequenceSpec& seq, const Rational& v) {
    return quad.is_constant() && seq.values()[0] == v;
}

std::string scan_condition(const CoefficientQuad& quad, Equation eq, long k) {
    const Rational one(1), neg_one(-1);
    if (is_constant_value(quad, quad.a(), one) && is_constant_value(quad, quad.c(), one))
        return unit_condition(eq, k);
    if (is_constant_value(quad, quad.a(), neg_one) && is_constant_value(quad, quad.c(), neg_one))
        return (eq == Equation::First) ? "b*x0*y_prev = 1" : "d*x_prev*y0 = 1";
    return (eq == Equation::First) ? "U_" + std::to_string(k) + " = 0"
                                   : "V_" + std::to_string(k) + " = 0";
}

}  // namespace

std::optional<ScanHit> forbidden_scan(const CoefficientQuad& quad, const InitialState& init,
                                      long horizon) {
    if (horizon < 0) throw DomainError("forbidden scan needs horizon >= 0");
    Rational u = (init.x0 * init.y_prev).inverse();
    Rational v = (init.x_prev * init.y0).inverse();
    for (long k = 1; k <= horizon; ++k) {
        const CoefficientQuad::Values kv = quad.at(k - 1);
        u = kv.a * u + kv.b;
        v = kv.c * v + kv.d;
        if (u.is_zero())
            return ScanHit{k - 1, Equation::First, scan_condition(quad, Equation::First, k)};
        if (v.is_zero())
            return ScanHit{k - 1, Equation::Second, scan_condition(quad, Equation::Second, k)};
    }
    return std::nullopt;
}

ClosedFormEvaluator::ClosedFormEvaluator(const CoefficientQuad& quad, const InitialState& init)
    : quad_(quad), init_(init), weight_a_(init.x0 * init.y_prev),
      weight_c_(init.x_prev * init.y0), prefix_a_{Rational(1)}, tail_a_{Rational(0)},
      prefix_c_{Rational(1)}, tail_c_{Rational(0)} {}

void ClosedFormEvaluator::grow(long m) {
    // bracket(j) = prefix[j+1] * (1 + w * tail[j+1]); quad entries are
    // nonzero, so dividing by prefixes is safe.
    while (static_cast<long>(abr_.size()) <= m) {
        const long j = static_cast<long>(abr_.size());
        const CoefficientQuad::Values kv = quad_.at(j);
        prefix_a_.push_back(prefix_a_.back() * kv.a);
        tail_a_.push_back(tail_a_.back() + kv.b / prefix_a_.back());
        abr_.push_back(prefix_a_.back() * (Rational(1) + weight_a_ * tail_a_.back()));
        prefix_c_.push_back(prefix_c_.back() * kv.c);
        tail_c_.push_back(tail_c_.back() + kv.d / prefix_c_.back());
        cbr_.push_back(prefix_c_.back() * (Rational(1) + weight_c_ * tail_c_.back()));
    }
}

const Rational& ClosedFormEvaluator::a_bracket(long m) {
    grow(m);
    return abr_[static_cast<std::size_t>(m)];
}

const Rational& ClosedFormEvaluator::c_bracket(long m) {
    grow(m);
    return cbr_[static_cast<std::size_t>(m)];
}

ValuePair ClosedFormEvaluator::at(long m) {
    BracketFns fns{
        [&](long j) { return a_bracket(j); },
        [&](long j) { return c_bracket(j); },
        generic_condition,
    };
    return solve_impl(fns, init_, m);
}

}  // namespace radex
