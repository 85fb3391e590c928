#include "rational.hpp"

#include <cctype>
#include <ostream>

namespace radex {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

bool all_zero_digits(std::string_view s) {
    for (char ch : s) {
        if (ch != '0') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    std::string_view num = rest;
    std::string_view den;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
        if (!all_digits(den))
            throw ParseError("malformed rational literal \"" + std::string(text) +
                             "\" (denominator must be unsigned digits)");
        if (all_zero_digits(den))
            throw DomainError("rational literal \"" + std::string(text) + "\" has zero denominator");
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
    if (!all_digits(mag))
        throw ParseError("malformed rational literal \"" + std::string(text) + "\"");

    Rational r;
    std::string buf(num);
    if (!den.empty()) {
        buf += '/';
        buf += den;
    }
    if (mpq_set_str(r.q_, buf.c_str(), 10) != 0)
        throw ParseError("malformed rational literal \"" + std::string(text) + "\"");
    mpq_canonicalize(r.q_);
    return r;
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string out(raw);
    void (*freefunc)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, out.size() + 1);
    return out;
}

long Rational::to_long() const {
    if (!is_integer()) throw DomainError("to_long on non-integer rational " + str());
    if (!mpz_fits_slong_p(mpq_numref(q_)))
        throw DomainError("integer rational " + str() + " does not fit in long");
    return mpz_get_si(mpq_numref(q_));
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) return inverse().pow(-exponent);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(exponent));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(exponent));
    // num/den coprime implies num^k/den^k coprime; no canonicalize needed.
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace radex
