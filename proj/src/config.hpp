#ifndef RADEX_CONFIG_HPP
#define RADEX_CONFIG_HPP

#include <optional>
#include <string>

#include "engine.hpp"
#include "sequences.hpp"

namespace radex {

/// A run configuration: the coefficient quad, the initial data, and optional
/// defaults. Parsed from a single JSON document in strict mode — unknown
/// keys anywhere are rejected. Rational values are strings in the literal
/// grammar, never JSON numbers, so no binary floating point can leak in.
struct RunConfig {
    CoefficientQuad coefficients;
    InitialState initial;
    std::optional<std::string> default_format;
    std::optional<long> default_horizon;
};

/// Parse a config document. Throws ParseError (with line/column context) on
/// malformed JSON and ConfigError (with the offending key path) on schema
/// violations.
RunConfig parse_config(const std::string& json_text);

/// Read and parse a config file.
RunConfig load_config(const std::string& path);

}  // namespace radex

#endif
