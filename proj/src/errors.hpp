#ifndef RADEX_ERRORS_HPP
#define RADEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace radex {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (rational literals, index specs, JSON syntax).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally valid input that violates a contract (unknown config keys,
// zero initial values, invalid family/generator selection).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Value outside an operation's domain (zero denominator literal, zero
// scale factor, non-integer exponent where an integer is required).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Access past the end of a table-kind sequence.
class HorizonError : public Error {
public:
    explicit HorizonError(const std::string& what) : Error(what) {}
};

// Exact division by zero; the message names the operation site.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& what) : Error(what) {}
};

}  // namespace radex

#endif
