#ifndef RADEX_SEQUENCES_HPP
#define RADEX_SEQUENCES_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace radex {

enum class SeqKind { Constant, Periodic, Table };

std::string to_string(SeqKind kind);

/// One coefficient sequence. Constant holds a single value, periodic cycles
/// a nonempty list by n mod period, table is a finite list with a hard
/// horizon. Entries may be zero here; nonzeroness is a CoefficientQuad
/// invariant, enforced where the four sequences are assembled into one.
class SequenceSpec {
public:
    SequenceSpec(SeqKind kind, std::vector<Rational> values);

    static SequenceSpec constant(Rational value);
    static SequenceSpec periodic(std::vector<Rational> values);
    static SequenceSpec table(std::vector<Rational> values);

    SeqKind kind() const { return kind_; }
    const std::vector<Rational>& values() const { return values_; }

    /// Entry at index n >= 0. Table access past the horizon throws HorizonError.
    const Rational& at(long n) const;

    /// Largest valid index + 1 for table kind; unbounded otherwise.
    bool bounded() const { return kind_ == SeqKind::Table; }
    long horizon() const { return static_cast<long>(values_.size()); }

    bool has_zero_entry() const;

private:
    SeqKind kind_;
    std::vector<Rational> values_;
};

/// prod_{k=from}^{to} seq_k, exactly; the empty range (to < from) is 1.
Rational product_range(const SequenceSpec& seq, long from, long to);

/// The four coefficient sequences a_n, b_n, c_n, d_n, one kind for all four.
/// Every stored entry is nonzero; periodic components may have different
/// periods, table components may have different horizons.
class CoefficientQuad {
public:
    CoefficientQuad(SeqKind kind, SequenceSpec a, SequenceSpec b, SequenceSpec c, SequenceSpec d);

    static CoefficientQuad constants(Rational a, Rational b, Rational c, Rational d);

    SeqKind kind() const { return kind_; }
    const SequenceSpec& a() const { return a_; }
    const SequenceSpec& b() const { return b_; }
    const SequenceSpec& c() const { return c_; }
    const SequenceSpec& d() const { return d_; }

    struct Values {
        Rational a, b, c, d;
    };

    /// The quadruple (a_n, b_n, c_n, d_n).
    Values at(long n) const;

    bool is_constant() const { return kind_ == SeqKind::Constant; }

private:
    SeqKind kind_;
    SequenceSpec a_, b_, c_, d_;
};

}  // namespace radex

#endif
