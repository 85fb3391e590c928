#ifndef RADEX_TESTS_SUPPORT_HPP
#define RADEX_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "sequences.hpp"

namespace radex::testing {

inline Rational rat(const std::string& text) { return Rational::parse(text); }

inline InitialState unit_initials() {
    return InitialState(Rational(1), Rational(1), Rational(1), Rational(1));
}

inline CoefficientQuad unit_quad() {
    return CoefficientQuad::constants(Rational(1), Rational(1), Rational(1), Rational(1));
}

inline InitialState sample_initials(SplitMix64& rng) {
    return InitialState(rng.rational(), rng.rational(), rng.rational(), rng.rational());
}

struct Instance {
    CoefficientQuad quad;
    InitialState init;
};

inline Instance sample_instance(SplitMix64& rng, long max_period = 4) {
    CoefficientQuad quad = sample_quad(rng, max_period);
    InitialState init = sample_initials(rng);
    return {std::move(quad), std::move(init)};
}

inline Instance sample_constant_instance(SplitMix64& rng) {
    CoefficientQuad quad = CoefficientQuad::constants(rng.rational(), rng.rational(),
                                                      rng.rational(), rng.rational());
    InitialState init = sample_initials(rng);
    return {std::move(quad), std::move(init)};
}

}  // namespace radex::testing

#endif
