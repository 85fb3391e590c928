#ifndef RADEX_COMMANDS_HPP
#define RADEX_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"

namespace radex {

enum class Format { Csv, Json };

/// "csv" or "json"; anything else throws ConfigError.
Format parse_format(const std::string& text);

/// Exit-code contract shared by every command:
///   0 success, 1 usage/config error, 2 forbidden instance,
///   3 verification mismatch.
/// Usage errors surface as exceptions instead of a CommandResult; 2 and 3
/// come back as results with the document still rendered.
struct CommandResult {
    int exit_code;
    std::string document;
};

/// Index spec grammar: "A..B" (inclusive), a single integer, or a
/// comma-separated list. Values may be negative (m = -1 is the first index).
std::vector<long> parse_indices(const std::string& spec);

/// Steps/horizon fallback: an explicit CLI value wins, then the config's
/// defaults.horizon, then 10.
long effective_steps(const RunConfig& config, long cli_steps);
constexpr long kStepsFromConfig = -1;

CommandResult cmd_simulate(const RunConfig& config, long steps, Format format);

/// family: auto | general | constant | unit | nonunit | neg-unit. auto picks
/// the most specialized family the config is valid for.
CommandResult cmd_closed_form(const RunConfig& config, const std::string& family,
                              const std::vector<long>& indices, Format format);

/// Entrywise exact comparison of the direct iteration against every
/// applicable solution family, the invariant routes, the rebuilt orbit, and
/// the singularity attributions. inject_mismatch corrupts one compared value
/// on purpose so the mismatch path itself is testable.
CommandResult cmd_compare(const RunConfig& config, long steps, bool inject_mismatch);

/// generators: comma list of x2 | x1-signed | x1, or "all", or a single
/// "custom:c0=<rational>,c1=<rational>".
CommandResult cmd_verify_symmetry(const RunConfig& config, const std::string& generators,
                                  long samples, std::uint64_t seed);

CommandResult cmd_forbidden(const RunConfig& config, long horizon);

CommandResult cmd_reduce(const RunConfig& config, long steps, Format format);

}  // namespace radex

#endif
