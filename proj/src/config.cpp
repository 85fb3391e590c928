#include "config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace radex {

namespace {

using nlohmann::json;

// nlohmann reports byte offsets; turn one into line/column for the message.
std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

void require_keys(const json& obj, const std::string& path,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
    if (!obj.is_object()) throw ConfigError(path + " must be a JSON object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const auto& k : required) known = known || k == key;
        for (const auto& k : optional) known = known || k == key;
        if (!known) throw ConfigError("unknown key \"" + key + "\" in " + path);
    }
    for (const auto& k : required)
        if (!obj.contains(k)) throw ConfigError(path + " is missing required key \"" + k + "\"");
}

Rational rational_field(const json& value, const std::string& path) {
    if (!value.is_string())
        throw ConfigError(path + " must be a rational string like \"3\" or \"-3/4\"");
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

SequenceSpec sequence_field(const json& value, SeqKind kind, const std::string& path) {
    if (kind == SeqKind::Constant) return SequenceSpec::constant(rational_field(value, path));
    if (!value.is_array() || value.empty())
        throw ConfigError(path + " must be a nonempty array of rational strings for kind " +
                          to_string(kind));
    std::vector<Rational> entries;
    entries.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        entries.push_back(rational_field(value[i], path + "[" + std::to_string(i) + "]"));
    return SequenceSpec(kind, std::move(entries));
}

CoefficientQuad coefficients_field(const json& obj) {
    require_keys(obj, "coefficients", {"kind", "a", "b", "c", "d"});
    if (!obj["kind"].is_string())
        throw ConfigError("coefficients.kind must be \"constant\", \"periodic\" or \"table\"");
    const std::string kind_text = obj["kind"].get<std::string>();
    SeqKind kind;
    if (kind_text == "constant") kind = SeqKind::Constant;
    else if (kind_text == "periodic") kind = SeqKind::Periodic;
    else if (kind_text == "table") kind = SeqKind::Table;
    else throw ConfigError("coefficients.kind \"" + kind_text + "\" is not a sequence kind");
    return CoefficientQuad(kind, sequence_field(obj["a"], kind, "coefficients.a"),
                           sequence_field(obj["b"], kind, "coefficients.b"),
                           sequence_field(obj["c"], kind, "coefficients.c"),
                           sequence_field(obj["d"], kind, "coefficients.d"));
}

InitialState initial_field(const json& obj) {
    require_keys(obj, "initial", {"x_prev", "x0", "y_prev", "y0"});
    return InitialState(rational_field(obj["x_prev"], "initial.x_prev"),
                        rational_field(obj["x0"], "initial.x0"),
                        rational_field(obj["y_prev"], "initial.y_prev"),
                        rational_field(obj["y0"], "initial.y0"));
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_and_column(json_text, e.byte);
        throw ParseError("config is not valid JSON (line " + std::to_string(line) + ", column " +
                         std::to_string(col) + "): " + e.what());
    }
    require_keys(doc, "config", {"coefficients", "initial"}, {"defaults"});

    std::optional<std::string> format;
    std::optional<long> horizon;
    if (doc.contains("defaults")) {
        const json& defaults = doc["defaults"];
        require_keys(defaults, "defaults", {}, {"format", "horizon"});
        if (defaults.contains("format")) {
            if (!defaults["format"].is_string())
                throw ConfigError("defaults.format must be \"csv\" or \"json\"");
            format = defaults["format"].get<std::string>();
            if (*format != "csv" && *format != "json")
                throw ConfigError("defaults.format \"" + *format + "\" is not csv or json");
        }
        if (defaults.contains("horizon")) {
            if (!defaults["horizon"].is_number_integer() || defaults["horizon"].get<long>() < 0)
                throw ConfigError("defaults.horizon must be a nonnegative integer");
            horizon = defaults["horizon"].get<long>();
        }
    }
    return RunConfig{coefficients_field(doc["coefficients"]), initial_field(doc["initial"]),
                     std::move(format), horizon};
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace radex
