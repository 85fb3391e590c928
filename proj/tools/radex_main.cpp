// radex CLI: thin adapter from argv to the shared-library C API. All
// simulation, evaluation and report logic lives behind radex/radex.h; this
// file only parses options, resolves the output format, and forwards the
// library's status code as the process exit code.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "radex/radex.h"

namespace {

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { radex_string_free(value); }
};

struct ConfigGuard {
    radex_config* value = nullptr;
    ~ConfigGuard() { radex_config_free(value); }
};

// --format wins, then RADEX_FORMAT, then the config's defaults (empty string
// tells the library to fall back).
std::string resolved_format(const std::string& format_flag) {
    if (!format_flag.empty()) return format_flag;
    const char* env = std::getenv("RADEX_FORMAT");
    return env != nullptr ? env : "";
}

int emit(radex_status status, const StringGuard& doc, const StringGuard& err) {
    if (doc.value != nullptr) std::fputs(doc.value, stdout);
    if (err.value != nullptr) std::fprintf(stderr, "radex: %s\n", err.value);
    return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for a coupled second-order rational difference system"};
    app.require_subcommand(1);

    std::string config_path;
    std::string family = "auto";
    std::string indices = "0..10";
    std::string generator;
    std::string format_flag;
    long steps = -1;
    long samples = 100;
    unsigned long long seed = 1;
    bool inject_mismatch = false;

    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--config", config_path, "configuration file (JSON)")->required();
        if (with_format)
            sub->add_option("--format", format_flag, "output format: csv or json")
                ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* sim = app.add_subcommand("simulate", "iterate the system exactly");
    add_common(sim, true);
    sim->add_option("--steps", steps, "final index n (default: config horizon, else 10)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* cf = app.add_subcommand("closed-form", "evaluate a solution family");
    add_common(cf, true);
    cf->add_option("--family", family, "auto|general|constant|unit|nonunit|neg-unit");
    cf->add_option("--indices", indices, "indices to evaluate, e.g. 0..6 or -1,2,5");

    CLI::App* cmp = app.add_subcommand("compare",
                                       "check every applicable route against the iteration");
    add_common(cmp, false);
    cmp->add_option("--steps", steps, "horizon for the comparison")
        ->check(CLI::NonNegativeNumber);
    cmp->add_flag("--inject-mismatch", inject_mismatch,
                  "corrupt one compared value (tests the mismatch path)");

    CLI::App* verify = app.add_subcommand("verify-symmetry", "residual checks for generators");
    add_common(verify, false);
    verify->add_option("--generator", generator,
                       "x2|x1-signed|x1|all|custom:c0=<rat>,c1=<rat> or a comma list "
                       "(default: x2,x1-signed)");
    verify->add_option("--samples", samples, "number of sample points for the residual check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "64-bit seed for reproducible sampling");

    CLI::App* forb = app.add_subcommand("forbidden", "scan for the first singular step");
    add_common(forb, false);
    forb->add_option("--horizon,--steps", steps, "scan horizon")->check(CLI::NonNegativeNumber);

    CLI::App* red = app.add_subcommand("reduce", "invariant sequences by all three routes");
    add_common(red, true);
    red->add_option("--steps", steps, "final index n")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    ConfigGuard config;
    {
        StringGuard err;
        const radex_status status = radex_config_load(config_path.c_str(), &config.value,
                                                      &err.value);
        if (status != RADEX_OK) return emit(status, StringGuard{}, err);
    }

    const std::string format = resolved_format(format_flag);
    const char* format_arg = format.empty() ? nullptr : format.c_str();

    StringGuard doc, err;
    radex_status status = RADEX_ERR_INTERNAL;
    if (sim->parsed()) {
        status = radex_cmd_simulate(config.value, steps, format_arg, &doc.value, &err.value);
    } else if (cf->parsed()) {
        status = radex_cmd_closed_form(config.value, family.c_str(), indices.c_str(), format_arg,
                                       &doc.value, &err.value);
    } else if (cmp->parsed()) {
        status = radex_cmd_compare(config.value, steps, inject_mismatch ? 1 : 0, &doc.value,
                                   &err.value);
    } else if (verify->parsed()) {
        status = radex_cmd_verify_symmetry(config.value, generator.c_str(), samples, seed,
                                           &doc.value, &err.value);
    } else if (forb->parsed()) {
        status = radex_cmd_forbidden(config.value, steps, &doc.value, &err.value);
    } else if (red->parsed()) {
        status = radex_cmd_reduce(config.value, steps, format_arg, &doc.value, &err.value);
    }
    return emit(status, doc, err);
}
