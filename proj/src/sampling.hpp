#ifndef RADEX_SAMPLING_HPP
#define RADEX_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "rational.hpp"
#include "sequences.hpp"

namespace radex {

/// SplitMix64: tiny, deterministic across platforms, good enough for drawing
/// test points. Reports generated from the same seed must be byte-identical,
/// so no std:: distribution machinery is used anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; determinism matters here, bias does not.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Nonzero digit in [-9, 9] \ {0}.
    long nonzero_digit() {
        const long v = range(0, 17);
        return v < 9 ? v - 9 : v - 8;
    }

    /// num/den with both drawn from [-9, 9] \ {0}.
    Rational rational() { return Rational(nonzero_digit(), nonzero_digit()); }

private:
    std::uint64_t state_;
};

inline SequenceSpec sample_periodic(SplitMix64& rng, long max_period) {
    std::vector<Rational> entries;
    const long period = rng.range(1, max_period);
    entries.reserve(static_cast<std::size_t>(period));
    for (long i = 0; i < period; ++i) entries.push_back(rng.rational());
    return SequenceSpec::periodic(std::move(entries));
}

inline CoefficientQuad sample_quad(SplitMix64& rng, long max_period) {
    return CoefficientQuad(SeqKind::Periodic, sample_periodic(rng, max_period),
                           sample_periodic(rng, max_period), sample_periodic(rng, max_period),
                           sample_periodic(rng, max_period));
}

}  // namespace radex

#endif
