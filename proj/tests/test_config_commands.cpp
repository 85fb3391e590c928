#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "commands.hpp"
#include "config.hpp"
#include "support.hpp"

using namespace radex;

namespace {

const char* kUnitConfig = R"({
  "coefficients": {"kind": "constant", "a": "1", "b": "1", "c": "1", "d": "1"},
  "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"}
})";

const char* kForbiddenConfig = R"({
  "coefficients": {"kind": "constant", "a": "1", "b": "1", "c": "1", "d": "1"},
  "initial": {"x_prev": "1", "x0": "1", "y_prev": "-1", "y0": "1"}
})";

}  // namespace

TEST_CASE("config parsing accepts the three kinds") {
    const RunConfig unit = parse_config(kUnitConfig);
    CHECK(unit.coefficients.is_constant());
    CHECK(unit.initial.x0 == Rational(1));

    const RunConfig periodic = parse_config(R"({
      "coefficients": {"kind": "periodic", "a": ["2", "3"], "b": ["1"], "c": ["1"], "d": ["1"]},
      "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"},
      "defaults": {"format": "json", "horizon": 6}
    })");
    CHECK(periodic.coefficients.a().at(3) == Rational(3));
    CHECK(periodic.default_format == "json");
    CHECK(periodic.default_horizon == 6);

    const RunConfig table = parse_config(R"({
      "coefficients": {"kind": "table", "a": ["2", "3"], "b": ["1", "1"], "c": ["1", "1"], "d": ["1", "1"]},
      "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"}
    })");
    CHECK(table.coefficients.a().horizon() == 2);
}

TEST_CASE("strict mode rejects unknown keys at every level") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": "1",
        "b": "1", "c": "1", "d": "1"}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1",
        "y0": "1"}, "extra": 1})"),
                         doctest::Contains("unknown key \"extra\""), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": "1",
        "b": "1", "c": "1", "d": "1", "e": "1"}, "initial": {"x_prev": "1", "x0": "1",
        "y_prev": "1", "y0": "1"}})"),
                         doctest::Contains("unknown key \"e\""), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": "1",
        "b": "1", "c": "1", "d": "1"}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1",
        "y0": "1", "z0": "1"}})"),
                         doctest::Contains("unknown key \"z0\""), ConfigError);
}

TEST_CASE("rationals must be strings, never JSON numbers") {
    CHECK_THROWS_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": 1, "b": "1",
        "c": "1", "d": "1"}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": "1", "b": "1",
        "c": "1", "d": "1"}, "initial": {"x_prev": 0.5, "x0": "1", "y_prev": "1", "y0": "1"}})"),
                    ConfigError);
}

TEST_CASE("schema violations carry the key path") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"coefficients": {"kind": "ramp", "a": "1", "b": "1",
        "c": "1", "d": "1"}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"}})"),
                         doctest::Contains("ramp"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": "0",
        "b": "1", "c": "1", "d": "1"}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1",
        "y0": "1"}})"),
                         doctest::Contains("zero"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"coefficients": {"kind": "periodic", "a": [], "b": ["1"],
        "c": ["1"], "d": ["1"]}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1",
        "y0": "1"}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"coefficients": {"kind": "constant", "a": "1", "b": "1",
        "c": "1", "d": "1"}, "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"},
        "defaults": {"horizon": -3}})"),
                    ConfigError);
}

TEST_CASE("JSON syntax errors report the line") {
    try {
        parse_config("{\n  \"coefficients\": [broken\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("index specs") {
    CHECK(parse_indices("0..6") == std::vector<long>{0, 1, 2, 3, 4, 5, 6});
    CHECK(parse_indices("4") == std::vector<long>{4});
    CHECK(parse_indices("-1..2") == std::vector<long>{-1, 0, 1, 2});
    CHECK(parse_indices("1,3,5") == std::vector<long>{1, 3, 5});
    CHECK_THROWS_AS(parse_indices("a..b"), ConfigError);
    CHECK_THROWS_AS(parse_indices("5..1"), ConfigError);
    CHECK_THROWS_AS(parse_indices(""), ConfigError);
    CHECK_THROWS_AS(parse_indices("1,,2"), ConfigError);
}

TEST_CASE("simulate command document and exit codes") {
    const RunConfig config = parse_config(kUnitConfig);
    const CommandResult csv = cmd_simulate(config, 3, Format::Csv);
    CHECK(csv.exit_code == 0);
    CHECK(csv.document == "n,x,y\n-1,1,1\n0,1,1\n1,1/2,1/2\n2,2/3,2/3\n3,3/8,3/8\n");

    const CommandResult none = cmd_simulate(config, 0, Format::Csv);
    CHECK(none.document == "n,x,y\n-1,1,1\n0,1,1\n");

    const RunConfig forbidden = parse_config(kForbiddenConfig);
    const CommandResult sing = cmd_simulate(forbidden, 3, Format::Csv);
    CHECK(sing.exit_code == 2);
    CHECK(sing.document.find("# status: singular step=0 equation=first") != std::string::npos);

    const CommandResult json_doc = cmd_simulate(config, 1, Format::Json);
    CHECK(json_doc.exit_code == 0);
    CHECK(json_doc.document.find("\"command\": \"simulate\"") != std::string::npos);
    CHECK(json_doc.document.find("\"state\": \"completed\"") != std::string::npos);
}

TEST_CASE("emitted rationals round-trip through the literal grammar") {
    SplitMix64 rng(91);
    const auto inst = radex::testing::sample_instance(rng);
    std::ostringstream config_json;
    config_json << R"({"coefficients": {"kind": "periodic", "a": [)";
    // serialize the sampled quad back into a config document
    auto emit_list = [](const SequenceSpec& s) {
        std::string out;
        for (std::size_t i = 0; i < s.values().size(); ++i) {
            if (i > 0) out += ", ";
            out += "\"" + s.values()[i].str() + "\"";
        }
        return out;
    };
    config_json << emit_list(inst.quad.a()) << "], \"b\": [" << emit_list(inst.quad.b())
                << "], \"c\": [" << emit_list(inst.quad.c()) << "], \"d\": ["
                << emit_list(inst.quad.d()) << "]}, \"initial\": {\"x_prev\": \""
                << inst.init.x_prev.str() << "\", \"x0\": \"" << inst.init.x0.str()
                << "\", \"y_prev\": \"" << inst.init.y_prev.str() << "\", \"y0\": \""
                << inst.init.y0.str() << "\"}}";
    const RunConfig config = parse_config(config_json.str());
    const CommandResult csv = cmd_simulate(config, 8, Format::Csv);
    std::istringstream lines(csv.document);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto c1 = line.find(','), c2 = line.rfind(',');
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 != c1);
        const Rational x = Rational::parse(line.substr(c1 + 1, c2 - c1 - 1));
        const Rational y = Rational::parse(line.substr(c2 + 1));
        CHECK(Rational::parse(x.str()) == x);
        CHECK(Rational::parse(y.str()) == y);
    }
}

TEST_CASE("closed-form command picks and validates families") {
    const RunConfig unit = parse_config(kUnitConfig);
    const CommandResult auto_pick = cmd_closed_form(unit, "auto", parse_indices("0..6"),
                                                    Format::Csv);
    CHECK(auto_pick.exit_code == 0);
    CHECK(auto_pick.document.find("# family: unit") != std::string::npos);
    CHECK(auto_pick.document.find("3,3/8,3/8") != std::string::npos);

    const RunConfig a2 = parse_config(R"({
      "coefficients": {"kind": "constant", "a": "2", "b": "1", "c": "3", "d": "1"},
      "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"}
    })");
    CHECK_THROWS_AS(cmd_closed_form(a2, "neg-unit", parse_indices("0..3"), Format::Csv),
                    ConfigError);
    const CommandResult nonunit = cmd_closed_form(a2, "auto", parse_indices("0..3"), Format::Csv);
    CHECK(nonunit.document.find("# family: nonunit") != std::string::npos);

    const RunConfig mixed = parse_config(R"({
      "coefficients": {"kind": "constant", "a": "1", "b": "1", "c": "3", "d": "1"},
      "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"}
    })");
    const CommandResult constant = cmd_closed_form(mixed, "auto", parse_indices("0..3"),
                                                   Format::Csv);
    CHECK(constant.document.find("# family: constant") != std::string::npos);

    CHECK_THROWS_AS(cmd_closed_form(unit, "quartic", parse_indices("0..3"), Format::Csv),
                    ConfigError);

    const RunConfig forbidden = parse_config(kForbiddenConfig);
    const CommandResult hit = cmd_closed_form(forbidden, "auto", parse_indices("0..5"),
                                              Format::Csv);
    CHECK(hit.exit_code == 2);
    CHECK(hit.document.find("# status: forbidden step=0 equation=first") != std::string::npos);
    CHECK(hit.document.find("j=1") != std::string::npos);
}

TEST_CASE("compare command passes clean and flags injected corruption") {
    const RunConfig config = parse_config(kUnitConfig);
    const CommandResult clean = cmd_compare(config, 12, false);
    CHECK(clean.exit_code == 0);
    CHECK(clean.document.find("total mismatches: 0") != std::string::npos);
    CHECK(clean.document.find("result: PASS") != std::string::npos);

    const CommandResult corrupted = cmd_compare(config, 12, true);
    CHECK(corrupted.exit_code == 3);
    CHECK(corrupted.document.find("result: FAIL") != std::string::npos);
    CHECK(corrupted.document.find("first mismatch") != std::string::npos);

    const RunConfig forbidden = parse_config(kForbiddenConfig);
    const CommandResult truncated = cmd_compare(forbidden, 12, false);
    CHECK(truncated.exit_code == 0);
    CHECK(truncated.document.find("status: singular step=0") != std::string::npos);
    CHECK(truncated.document.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify-symmetry command verdicts and reproducibility") {
    const RunConfig config = parse_config(kUnitConfig);
    const CommandResult x2 = cmd_verify_symmetry(config, "x2", 40, 9);
    CHECK(x2.exit_code == 0);
    CHECK(x2.document.find("verdict: PASS") != std::string::npos);

    const CommandResult x1 = cmd_verify_symmetry(config, "x1", 40, 9);
    CHECK(x1.exit_code == 3);
    CHECK(x1.document.find("verdict: FAIL") != std::string::npos);
    CHECK(x1.document.find("(2, 2)") != std::string::npos);

    const CommandResult custom = cmd_verify_symmetry(config, "custom:c0=1,c1=1", 40, 9);
    CHECK(custom.exit_code == 0);
    CHECK(custom.document.find("verdict: PASS") != std::string::npos);

    const CommandResult again = cmd_verify_symmetry(config, "x2", 40, 9);
    CHECK(again.document == x2.document);

    CHECK_THROWS_AS(cmd_verify_symmetry(config, "warp", 10, 1), ConfigError);
    CHECK_THROWS_AS(cmd_verify_symmetry(config, "custom:c0=1", 10, 1), ConfigError);
}

TEST_CASE("forbidden command reports the analytic condition") {
    const RunConfig forbidden = parse_config(kForbiddenConfig);
    const CommandResult hit = cmd_forbidden(forbidden, 10);
    CHECK(hit.exit_code == 2);
    CHECK(hit.document.find("result: singular step=0 equation=first") != std::string::npos);
    CHECK(hit.document.find("condition: j=1") != std::string::npos);

    const RunConfig safe = parse_config(kUnitConfig);
    const CommandResult none = cmd_forbidden(safe, 50);
    CHECK(none.exit_code == 0);
    CHECK(none.document.find("result: none") != std::string::npos);

    const RunConfig neg = parse_config(R"({
      "coefficients": {"kind": "constant", "a": "-1", "b": "2", "c": "-1", "d": "3"},
      "initial": {"x_prev": "1/3", "x0": "1", "y_prev": "1", "y0": "1"}
    })");
    const CommandResult neg_hit = cmd_forbidden(neg, 10);
    CHECK(neg_hit.exit_code == 2);
    CHECK(neg_hit.document.find("condition: d*x_prev*y0 = 1") != std::string::npos);
}

TEST_CASE("reduce command emits all three routes") {
    const RunConfig config = parse_config(kUnitConfig);
    const CommandResult csv = cmd_reduce(config, 4, Format::Csv);
    CHECK(csv.exit_code == 0);
    CHECK(csv.document.find("n,U_traj,U_rec,U_cf,V_traj,V_rec,V_cf") == 0);
    CHECK(csv.document.find("4,5,5,5,5,5,5") != std::string::npos);

    const RunConfig forbidden = parse_config(kForbiddenConfig);
    const CommandResult sing = cmd_reduce(forbidden, 6, Format::Csv);
    CHECK(sing.exit_code == 2);
    CHECK(sing.document.find("# status: singular step=0") != std::string::npos);
}

TEST_CASE("defaults flow into steps resolution") {
    const RunConfig with_horizon = parse_config(R"({
      "coefficients": {"kind": "constant", "a": "1", "b": "1", "c": "1", "d": "1"},
      "initial": {"x_prev": "1", "x0": "1", "y_prev": "1", "y0": "1"},
      "defaults": {"horizon": 4}
    })");
    CHECK(effective_steps(with_horizon, kStepsFromConfig) == 4);
    CHECK(effective_steps(with_horizon, 7) == 7);
    const RunConfig plain = parse_config(kUnitConfig);
    CHECK(effective_steps(plain, kStepsFromConfig) == 10);
    CHECK_THROWS_AS(effective_steps(plain, -5), ConfigError);
}
