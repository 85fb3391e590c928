#include "sequences.hpp"

#include <utility>

#include "errors.hpp"

namespace radex {

std::string to_string(SeqKind kind) {
    switch (kind) {
        case SeqKind::Constant: return "constant";
        case SeqKind::Periodic: return "periodic";
        case SeqKind::Table: return "table";
    }
    return "?";
}

SequenceSpec::SequenceSpec(SeqKind kind, std::vector<Rational> values)
    : kind_(kind), values_(std::move(values)) {
    if (values_.empty()) throw ConfigError("sequence needs at least one entry");
    if (kind_ == SeqKind::Constant && values_.size() != 1)
        throw ConfigError("constant sequence must hold exactly one entry");
}

SequenceSpec SequenceSpec::constant(Rational value) {
    return SequenceSpec(SeqKind::Constant, {std::move(value)});
}

SequenceSpec SequenceSpec::periodic(std::vector<Rational> values) {
    return SequenceSpec(SeqKind::Periodic, std::move(values));
}

SequenceSpec SequenceSpec::table(std::vector<Rational> values) {
    return SequenceSpec(SeqKind::Table, std::move(values));
}

const Rational& SequenceSpec::at(long n) const {
    if (n < 0) throw DomainError("sequence index must be nonnegative");
    switch (kind_) {
        case SeqKind::Constant:
            return values_[0];
        case SeqKind::Periodic:
            return values_[static_cast<std::size_t>(n % horizon())];
        case SeqKind::Table:
            if (n >= horizon())
                throw HorizonError("table sequence of length " + std::to_string(values_.size()) +
                                   " accessed at index " + std::to_string(n));
            return values_[static_cast<std::size_t>(n)];
    }
    throw DomainError("unreachable sequence kind");
}

bool SequenceSpec::has_zero_entry() const {
    for (const Rational& v : values_)
        if (v.is_zero()) return true;
    return false;
}

Rational product_range(const SequenceSpec& seq, long from, long to) {
    Rational prod(1);
    if (to < from) return prod;
    if (from < 0) throw DomainError("nonempty product range must start at index >= 0");
    for (long k = from; k <= to; ++k) prod *= seq.at(k);
    return prod;
}

CoefficientQuad::CoefficientQuad(SeqKind kind, SequenceSpec a, SequenceSpec b, SequenceSpec c,
                                 SequenceSpec d)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const char* names[] = {"a", "b", "c", "d"};
    const SequenceSpec* seqs[] = {&a_, &b_, &c_, &d_};
    for (int i = 0; i < 4; ++i) {
        if (seqs[i]->kind() != kind_)
            throw ConfigError(std::string("coefficient component ") + names[i] +
                              " does not match quad kind " + to_string(kind_));
        if (seqs[i]->has_zero_entry())
            throw ConfigError(std::string("coefficient component ") + names[i] +
                              " has a zero entry; all coefficients must be nonzero");
    }
}

CoefficientQuad CoefficientQuad::constants(Rational a, Rational b, Rational c, Rational d) {
    return CoefficientQuad(SeqKind::Constant, SequenceSpec::constant(std::move(a)),
                           SequenceSpec::constant(std::move(b)),
                           SequenceSpec::constant(std::move(c)),
                           SequenceSpec::constant(std::move(d)));
}

CoefficientQuad::Values CoefficientQuad::at(long n) const {
    return Values{a_.at(n), b_.at(n), c_.at(n), d_.at(n)};
}

}  // namespace radex
