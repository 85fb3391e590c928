#include "radex/radex.h"

#include <cstring>
#include <new>
#include <string>

#include "closed_form.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "engine.hpp"
#include "errors.hpp"

using namespace radex;

struct radex_config {
    RunConfig config;
};

struct radex_trajectory {
    Trajectory traj;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_message(char** slot, const std::string& text) {
    if (slot != nullptr) *slot = dup_string(text);
}

radex_status status_of_exception(const std::exception& e, char** err_msg) {
    set_message(err_msg, e.what());
    if (dynamic_cast<const ForbiddenError*>(&e) != nullptr) return RADEX_ERR_FORBIDDEN;
    if (dynamic_cast<const SingularError*>(&e) != nullptr) return RADEX_ERR_FORBIDDEN;
    if (dynamic_cast<const Error*>(&e) != nullptr) return RADEX_ERR_USAGE;
    return RADEX_ERR_INTERNAL;
}

// Run a command body, route the document and exit status across the C
// boundary, and keep exceptions on this side of it.
template <typename Fn>
radex_status run_command(Fn&& fn, char** out_doc, char** err_msg) {
    if (out_doc == nullptr) {
        set_message(err_msg, "out_doc must not be NULL");
        return RADEX_ERR_USAGE;
    }
    *out_doc = nullptr;
    try {
        const CommandResult result = fn();
        *out_doc = dup_string(result.document);
        return static_cast<radex_status>(result.exit_code);
    } catch (const std::exception& e) {
        return status_of_exception(e, err_msg);
    } catch (...) {
        set_message(err_msg, "unknown error");
        return RADEX_ERR_INTERNAL;
    }
}

radex_status require_config(const radex_config* config, char** err_msg) {
    if (config == nullptr) {
        set_message(err_msg, "config handle must not be NULL");
        return RADEX_ERR_USAGE;
    }
    return RADEX_OK;
}

// NULL or "" means: use the config's defaults.format, else csv.
Format resolve_format(const radex_config* config, const char* format) {
    if (format != nullptr && *format != '\0') return parse_format(format);
    return parse_format(config->config.default_format.value_or("csv"));
}

}  // namespace

extern "C" {

const char* radex_version(void) { return "1.0.0"; }

void radex_string_free(char* s) { delete[] s; }

radex_status radex_rational_normalize(const char* text, char** out_canonical, char** err_msg) {
    if (text == nullptr || out_canonical == nullptr) {
        set_message(err_msg, "text and out_canonical must not be NULL");
        return RADEX_ERR_USAGE;
    }
    *out_canonical = nullptr;
    try {
        *out_canonical = dup_string(Rational::parse(text).str());
        return RADEX_OK;
    } catch (const std::exception& e) {
        return status_of_exception(e, err_msg);
    }
}

radex_status radex_config_parse(const char* json_text, radex_config** out_config, char** err_msg) {
    if (json_text == nullptr || out_config == nullptr) {
        set_message(err_msg, "json_text and out_config must not be NULL");
        return RADEX_ERR_USAGE;
    }
    *out_config = nullptr;
    try {
        *out_config = new radex_config{parse_config(json_text)};
        return RADEX_OK;
    } catch (const std::exception& e) {
        return status_of_exception(e, err_msg);
    }
}

radex_status radex_config_load(const char* path, radex_config** out_config, char** err_msg) {
    if (path == nullptr || out_config == nullptr) {
        set_message(err_msg, "path and out_config must not be NULL");
        return RADEX_ERR_USAGE;
    }
    *out_config = nullptr;
    try {
        *out_config = new radex_config{load_config(path)};
        return RADEX_OK;
    } catch (const std::exception& e) {
        return status_of_exception(e, err_msg);
    }
}

void radex_config_free(radex_config* config) { delete config; }

radex_status radex_simulate(const radex_config* config, long steps, radex_trajectory** out_traj,
                            char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    if (out_traj == nullptr) {
        set_message(err_msg, "out_traj must not be NULL");
        return RADEX_ERR_USAGE;
    }
    *out_traj = nullptr;
    try {
        const long effective = steps < 0 ? effective_steps(config->config, kStepsFromConfig)
                                         : steps;
        *out_traj = new radex_trajectory{
            simulate(config->config.coefficients, config->config.initial, effective)};
        return (*out_traj)->traj.completed() ? RADEX_OK : RADEX_ERR_FORBIDDEN;
    } catch (const std::exception& e) {
        return status_of_exception(e, err_msg);
    }
}

void radex_trajectory_free(radex_trajectory* traj) { delete traj; }

size_t radex_trajectory_size(const radex_trajectory* traj) {
    if (traj == nullptr) return 0;
    return static_cast<size_t>(traj->traj.last_index() + 2);
}

radex_status radex_trajectory_row(const radex_trajectory* traj, size_t i, long* out_n,
                                  char** out_x, char** out_y) {
    if (traj == nullptr || i >= radex_trajectory_size(traj)) return RADEX_ERR_USAGE;
    const long n = static_cast<long>(i) - 1;
    if (out_n != nullptr) *out_n = n;
    if (out_x != nullptr) *out_x = dup_string(traj->traj.x(n).str());
    if (out_y != nullptr) *out_y = dup_string(traj->traj.y(n).str());
    return RADEX_OK;
}

int radex_trajectory_is_singular(const radex_trajectory* traj) {
    return (traj != nullptr && traj->traj.singular()) ? 1 : 0;
}

radex_status radex_trajectory_singularity(const radex_trajectory* traj, long* out_step,
                                          char** out_factor) {
    if (traj == nullptr || !traj->traj.singular()) return RADEX_ERR_USAGE;
    if (out_step != nullptr) *out_step = traj->traj.singular()->step;
    if (out_factor != nullptr) *out_factor = dup_string(to_string(traj->traj.singular()->factor));
    return RADEX_OK;
}

radex_status radex_cmd_simulate(const radex_config* config, long steps, const char* format,
                                char** out_doc, char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    return run_command(
        [&] {
            return cmd_simulate(config->config, steps < 0 ? kStepsFromConfig : steps,
                                resolve_format(config, format));
        },
        out_doc, err_msg);
}

radex_status radex_cmd_closed_form(const radex_config* config, const char* family,
                                   const char* indices, const char* format, char** out_doc,
                                   char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    return run_command(
        [&] {
            return cmd_closed_form(config->config, family != nullptr ? family : "auto",
                                   parse_indices(indices != nullptr ? indices : "0..10"),
                                   resolve_format(config, format));
        },
        out_doc, err_msg);
}

radex_status radex_cmd_compare(const radex_config* config, long steps, int inject_mismatch,
                               char** out_doc, char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    return run_command(
        [&] {
            return cmd_compare(config->config, steps < 0 ? kStepsFromConfig : steps,
                               inject_mismatch != 0);
        },
        out_doc, err_msg);
}

radex_status radex_cmd_verify_symmetry(const radex_config* config, const char* generators,
                                       long samples, unsigned long long seed, char** out_doc,
                                       char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    return run_command(
        [&] {
            return cmd_verify_symmetry(config->config, generators != nullptr ? generators : "",
                                       samples, seed);
        },
        out_doc, err_msg);
}

radex_status radex_cmd_forbidden(const radex_config* config, long horizon, char** out_doc,
                                 char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    return run_command(
        [&] {
            return cmd_forbidden(config->config, horizon < 0 ? kStepsFromConfig : horizon);
        },
        out_doc, err_msg);
}

radex_status radex_cmd_reduce(const radex_config* config, long steps, const char* format,
                              char** out_doc, char** err_msg) {
    if (radex_status s = require_config(config, err_msg); s != RADEX_OK) return s;
    return run_command(
        [&] {
            return cmd_reduce(config->config, steps < 0 ? kStepsFromConfig : steps,
                              resolve_format(config, format));
        },
        out_doc, err_msg);
}

}  // extern "C"
