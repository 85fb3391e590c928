#ifndef RADEX_CLOSED_FORM_HPP
#define RADEX_CLOSED_FORM_HPP

#include <optional>
#include <string>
#include <utility>

#include "engine.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace radex {

/// A validity condition failed while evaluating a solution family: the
/// instance hits the forbidden set. Carries the singular step and equation
/// in the same frame the direct iteration reports, so attributions can be
/// compared exactly, plus the algebraic condition that fired.
class ForbiddenError : public Error {
public:
    ForbiddenError(long step, Equation equation, std::string condition)
        : Error("forbidden instance at step " + std::to_string(step) + " (" +
                to_string(equation) + " equation): " + condition),
          step_(step), equation_(equation), condition_(std::move(condition)) {}

    long step() const { return step_; }
    Equation equation() const { return equation_; }
    const std::string& condition() const { return condition_; }

private:
    long step_;
    Equation equation_;
    std::string condition_;
};

struct ValuePair {
    Rational x, y;
};

// Bracket terms shared by the solution families, for m >= -1 (m = -1 is the
// empty product/sum and equals 1). The "A" side pairs the (a, b) data with
// weight x_0*y_{-1}; the "C" side pairs (c, d) with weight x_{-1}*y_0.
//
//   general:  prod_{k=0}^{m} main_k + w * sum_{l=0}^{m} sum_l prod_{k=l+1}^{m} main_k
//   constant: main^{m+1} + w * sum * (1 + main + ... + main^m)   (explicit sum)
//   unit:     1 + (m+1) * sum * w                                (main = 1)
//   nonunit:  main^{m+1} + w * sum * (1 - main^{m+1})/(1 - main) (main != 1)
Rational general_bracket(const SequenceSpec& main, const SequenceSpec& sum, const Rational& w,
                         long m);
Rational constant_bracket(const Rational& main, const Rational& sum, const Rational& w, long m);
Rational unit_bracket(const Rational& sum, const Rational& w, long m);
Rational nonunit_bracket(const Rational& main, const Rational& sum, const Rational& w, long m);

/// (x_m, y_m) for m >= -1 from the variable-coefficient solution formulas.
/// Equals the direct iteration wherever that exists; a vanishing bracket
/// throws ForbiddenError with oracle-matching attribution.
ValuePair solve_general(const CoefficientQuad& quad, const InitialState& init, long m);

/// Constant-coefficient family; inner geometric sums evaluated term by term.
ValuePair solve_constant(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const InitialState& init, long m);

/// a = c = 1: brackets collapse to 1 + j*b*x_0*y_{-1} and 1 + j*d*x_{-1}*y_0.
/// Valid while neither equals zero for j = 1 .. m.
ValuePair solve_unit(const Rational& b, const Rational& d, const InitialState& init, long m);

/// a != 1 and c != 1: geometric sums in closed form.
ValuePair solve_nonunit(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const InitialState& init, long m);

/// a = c = -1: pure integer-power form, valid while b*x_0*y_{-1} != 1 and
/// d*x_{-1}*y_0 != 1.
ValuePair solve_neg_unit(const Rational& b, const Rational& d, const InitialState& init, long m);

struct ScanHit {
    long step;
    Equation equation;
    std::string condition;
};

/// First singular step within steps 0 .. horizon-1, or nullopt. Matches the
/// singularity report of simulate(quad, init, horizon) exactly, including
/// the tie-break when both equations fail at once. For constant unit and
/// neg-unit coefficients the condition names the analytic trigger.
std::optional<ScanHit> forbidden_scan(const CoefficientQuad& quad, const InitialState& init,
                                      long horizon);

/// Incremental evaluator for index sweeps: prefix products and partial sums
/// are cached so a whole 0..N sweep costs O(N) brackets instead of
/// recomputing each from scratch. Values are identical to solve_general.
class ClosedFormEvaluator {
public:
    ClosedFormEvaluator(const CoefficientQuad& quad, const InitialState& init);

    /// (x_m, y_m); throws ForbiddenError exactly as solve_general does.
    ValuePair at(long m);

private:
    const Rational& a_bracket(long m);
    const Rational& c_bracket(long m);
    void grow(long m);

    const CoefficientQuad& quad_;
    InitialState init_;
    Rational weight_a_, weight_c_;
    // prefix[i] = prod_{k=0}^{i-1}, tail[i] = sum_{l=0}^{i-1} sum_l / prefix[l+1]
    std::vector<Rational> prefix_a_, tail_a_, prefix_c_, tail_c_;
    std::vector<Rational> abr_, cbr_;  // brackets at m = 0 .. size-1
};

}  // namespace radex

#endif
