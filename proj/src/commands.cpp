#include "commands.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "closed_form.hpp"
#include "errors.hpp"
#include "reduction.hpp"
#include "sampling.hpp"
#include "symmetry.hpp"

namespace radex {

using nlohmann::json;

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw ConfigError("format \"" + text + "\" is not csv or json");
}

std::vector<long> parse_indices(const std::string& spec) {
    auto parse_int = [&](const std::string& tok) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("index spec \"" + spec + "\": \"" + tok + "\" is not an integer");
        }
    };
    if (spec.empty()) throw ConfigError("empty index spec");
    if (auto dots = spec.find(".."); dots != std::string::npos) {
        const long from = parse_int(spec.substr(0, dots));
        const long to = parse_int(spec.substr(dots + 2));
        if (to < from) throw ConfigError("index spec \"" + spec + "\" is an empty range");
        std::vector<long> out;
        out.reserve(static_cast<std::size_t>(to - from) + 1);
        for (long m = from; m <= to; ++m) out.push_back(m);
        return out;
    }
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string tok =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_int(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

long effective_steps(const RunConfig& config, long cli_steps) {
    if (cli_steps != kStepsFromConfig) {
        if (cli_steps < 0) throw ConfigError("steps must be >= 0");
        return cli_steps;
    }
    return config.default_horizon.value_or(10);
}

namespace {

std::string singular_status_line(const Singularity& s) {
    return "# status: singular step=" + std::to_string(s.step) + " equation=" +
           to_string(s.equation()) + " factor=" + to_string(s.factor);
}

json singular_status_json(const Singularity& s) {
    return json{{"state", "singular"},
                {"step", s.step},
                {"equation", to_string(s.equation())},
                {"factor", to_string(s.factor)}};
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

CommandResult cmd_simulate(const RunConfig& config, long steps, Format format) {
    steps = effective_steps(config, steps);
    const Trajectory traj = simulate(config.coefficients, config.initial, steps);
    const int exit_code = traj.completed() ? 0 : 2;

    if (format == Format::Csv) {
        std::ostringstream out;
        out << "n,x,y\n";
        for (long n = -1; n <= traj.last_index(); ++n)
            out << n << ',' << traj.x(n).str() << ',' << traj.y(n).str() << '\n';
        if (traj.singular()) out << singular_status_line(*traj.singular()) << '\n';
        return {exit_code, out.str()};
    }
    json rows = json::array();
    for (long n = -1; n <= traj.last_index(); ++n)
        rows.push_back({{"n", n}, {"x", traj.x(n).str()}, {"y", traj.y(n).str()}});
    json status = traj.singular() ? singular_status_json(*traj.singular())
                                  : json{{"state", "completed"}};
    return {exit_code, dump_json({{"command", "simulate"}, {"rows", rows}, {"status", status}})};
}

namespace {

// The concrete family a config is evaluated with; validates explicit picks.
std::string resolve_family(const RunConfig& config, const std::string& family) {
    const CoefficientQuad& quad = config.coefficients;
    const bool constant = quad.is_constant();
    const Rational one(1), neg_one(-1);
    auto cval = [&](const SequenceSpec& s) { return s.values()[0]; };

    if (family == "auto") {
        if (!constant) return "general";
        const Rational a = cval(quad.a()), c = cval(quad.c());
        if (a == one && c == one) return "unit";
        if (a == neg_one && c == neg_one) return "neg-unit";
        if (a != one && c != one) return "nonunit";
        return "constant";
    }
    if (family == "general") return family;
    if (family == "constant" || family == "unit" || family == "nonunit" || family == "neg-unit") {
        if (!constant)
            throw ConfigError("family " + family + " needs constant coefficients, config has " +
                              to_string(quad.kind()) + " kind");
        const Rational a = cval(quad.a()), c = cval(quad.c());
        if (family == "unit" && !(a == one && c == one))
            throw ConfigError("family unit needs a = c = 1, config has a=" + a.str() +
                              " c=" + c.str());
        if (family == "neg-unit" && !(a == neg_one && c == neg_one))
            throw ConfigError("family neg-unit needs a = c = -1, config has a=" + a.str() +
                              " c=" + c.str());
        if (family == "nonunit" && (a == one || c == one))
            throw ConfigError("family nonunit needs a != 1 and c != 1, config has a=" + a.str() +
                              " c=" + c.str());
        return family;
    }
    throw ConfigError("unknown family \"" + family +
                      "\" (expected auto, general, constant, unit, nonunit or neg-unit)");
}

}  // namespace

CommandResult cmd_closed_form(const RunConfig& config, const std::string& family,
                              const std::vector<long>& indices, Format format) {
    const std::string chosen = resolve_family(config, family);
    const CoefficientQuad& quad = config.coefficients;
    const InitialState& init = config.initial;
    auto cval = [&](const SequenceSpec& s) { return s.values()[0]; };

    ClosedFormEvaluator evaluator(quad, init);
    auto solve_at = [&](long m) -> ValuePair {
        if (chosen == "general") return evaluator.at(m);
        if (chosen == "constant")
            return solve_constant(cval(quad.a()), cval(quad.b()), cval(quad.c()), cval(quad.d()),
                                  init, m);
        if (chosen == "unit") return solve_unit(cval(quad.b()), cval(quad.d()), init, m);
        if (chosen == "nonunit")
            return solve_nonunit(cval(quad.a()), cval(quad.b()), cval(quad.c()), cval(quad.d()),
                                 init, m);
        return solve_neg_unit(cval(quad.b()), cval(quad.d()), init, m);
    };

    struct Row {
        long m;
        ValuePair value;
    };
    std::vector<Row> rows;
    std::optional<ForbiddenError> forbidden;
    for (long m : indices) {
        try {
            rows.push_back({m, solve_at(m)});
        } catch (const ForbiddenError& e) {
            forbidden = e;
            break;
        }
    }
    const int exit_code = forbidden ? 2 : 0;

    if (format == Format::Csv) {
        std::ostringstream out;
        out << "# family: " << chosen << '\n' << "n,x,y\n";
        for (const Row& row : rows)
            out << row.m << ',' << row.value.x.str() << ',' << row.value.y.str() << '\n';
        if (forbidden)
            out << "# status: forbidden step=" << forbidden->step()
                << " equation=" << to_string(forbidden->equation())
                << " condition=" << forbidden->condition() << '\n';
        return {exit_code, out.str()};
    }
    json jrows = json::array();
    for (const Row& row : rows)
        jrows.push_back({{"n", row.m}, {"x", row.value.x.str()}, {"y", row.value.y.str()}});
    json status = forbidden ? json{{"state", "forbidden"},
                                   {"step", forbidden->step()},
                                   {"equation", to_string(forbidden->equation())},
                                   {"condition", forbidden->condition()}}
                            : json{{"state", "completed"}};
    return {exit_code, dump_json({{"command", "closed-form"},
                                  {"family", chosen},
                                  {"rows", jrows},
                                  {"status", status}})};
}

namespace {

struct Check {
    std::string name;
    long compared = 0;
    long mismatches = 0;
    std::string first_detail;

    void miss(const std::string& detail) {
        if (mismatches == 0) first_detail = detail;
        ++mismatches;
    }
};

}  // namespace

CommandResult cmd_compare(const RunConfig& config, long steps, bool inject_mismatch) {
    steps = effective_steps(config, steps);
    const CoefficientQuad& quad = config.coefficients;
    const InitialState& init = config.initial;
    const Trajectory traj = simulate(quad, init, steps);
    const long last = traj.last_index();
    const auto& singular = traj.singular();

    std::vector<Check> checks;

    auto run_family = [&](const std::string& name, const std::function<ValuePair(long)>& solver,
                          bool corrupt) {
        Check check;
        check.name = "oracle-vs-" + name;
        for (long m = -1; m <= steps; ++m) {
            ++check.compared;
            if (m <= last) {
                try {
                    ValuePair vp = solver(m);
                    if (corrupt && m == last) vp.x += Rational(1);
                    if (vp.x != traj.x(m) || vp.y != traj.y(m))
                        check.miss("n=" + std::to_string(m) + " oracle (" + traj.x(m).str() +
                                   ", " + traj.y(m).str() + ") vs " + name + " (" + vp.x.str() +
                                   ", " + vp.y.str() + ")");
                } catch (const ForbiddenError& e) {
                    check.miss("n=" + std::to_string(m) + " unexpected forbidden: " + e.what());
                }
            } else {
                try {
                    solver(m);
                    check.miss("n=" + std::to_string(m) +
                               " expected a forbidden report, got a value");
                } catch (const ForbiddenError& e) {
                    if (e.step() != singular->step || e.equation() != singular->equation())
                        check.miss("n=" + std::to_string(m) + " attribution differs: oracle step " +
                                   std::to_string(singular->step) + " " +
                                   to_string(singular->equation()) + ", family step " +
                                   std::to_string(e.step()) + " " + to_string(e.equation()));
                }
            }
        }
        checks.push_back(std::move(check));
    };

    ClosedFormEvaluator evaluator(quad, init);
    run_family("general", [&](long m) { return evaluator.at(m); }, inject_mismatch);
    if (quad.is_constant()) {
        const Rational a = quad.a().values()[0], b = quad.b().values()[0];
        const Rational c = quad.c().values()[0], d = quad.d().values()[0];
        const Rational one(1), neg_one(-1);
        run_family("constant", [&](long m) { return solve_constant(a, b, c, d, init, m); }, false);
        if (a == one && c == one)
            run_family("unit", [&](long m) { return solve_unit(b, d, init, m); }, false);
        if (a != one && c != one)
            run_family("nonunit", [&](long m) { return solve_nonunit(a, b, c, d, init, m); },
                       false);
        if (a == neg_one && c == neg_one)
            run_family("neg-unit", [&](long m) { return solve_neg_unit(b, d, init, m); }, false);
    }

    {
        Check check;
        check.name = "invariants-three-routes";
        const Rational u0 = initial_u0(init), v0 = initial_v0(init);
        const InvariantSeq from_traj = invariants_from_trajectory(traj);
        const InvariantSeq from_rec = invariants_by_recurrence(quad, u0, v0, last);
        for (long n = 0; n <= last; ++n) {
            ++check.compared;
            const auto [u_cf, v_cf] = invariants_closed_form(quad, u0, v0, n);
            if (from_traj.u(n) != from_rec.u(n) || from_rec.u(n) != u_cf ||
                from_traj.v(n) != from_rec.v(n) || from_rec.v(n) != v_cf)
                check.miss("n=" + std::to_string(n) + " U (" + from_traj.u(n).str() + ", " +
                           from_rec.u(n).str() + ", " + u_cf.str() + ") V (" +
                           from_traj.v(n).str() + ", " + from_rec.v(n).str() + ", " + v_cf.str() +
                           ")");
        }
        checks.push_back(std::move(check));
    }

    {
        Check check;
        check.name = "reconstruct-vs-simulate";
        const InvariantSeq inv =
            invariants_by_recurrence(quad, initial_u0(init), initial_v0(init), steps);
        const Trajectory rebuilt = reconstruct(init, inv, steps);
        const bool status_match =
            (rebuilt.singular().has_value() == singular.has_value()) &&
            (!singular || (rebuilt.singular()->step == singular->step &&
                           rebuilt.singular()->equation() == singular->equation()));
        ++check.compared;
        if (!status_match) check.miss("singular status differs");
        const long shared = std::min(last, rebuilt.last_index());
        for (long n = -1; n <= shared; ++n) {
            ++check.compared;
            if (rebuilt.x(n) != traj.x(n) || rebuilt.y(n) != traj.y(n))
                check.miss("n=" + std::to_string(n) + " rebuilt (" + rebuilt.x(n).str() + ", " +
                           rebuilt.y(n).str() + ") vs direct (" + traj.x(n).str() + ", " +
                           traj.y(n).str() + ")");
        }
        checks.push_back(std::move(check));
    }

    {
        Check check;
        check.name = "singularity-attribution";
        ++check.compared;
        const auto hit = forbidden_scan(quad, init, steps);
        const bool agree =
            (hit.has_value() == singular.has_value()) &&
            (!hit || (hit->step == singular->step && hit->equation == singular->equation()));
        if (!agree) check.miss("scan and direct iteration disagree");
        checks.push_back(std::move(check));
    }

    long total = 0;
    for (const Check& check : checks) total += check.mismatches;

    std::ostringstream out;
    out << "compare report\n";
    out << "steps: " << steps << '\n';
    if (singular)
        out << "status: singular step=" << singular->step
            << " equation=" << to_string(singular->equation()) << '\n';
    else
        out << "status: completed\n";
    for (const Check& check : checks) {
        out << "check " << check.name << ": " << check.compared << " compared, "
            << check.mismatches << " mismatches\n";
        if (check.mismatches > 0) out << "  first mismatch: " << check.first_detail << '\n';
    }
    out << "total mismatches: " << total << '\n';
    out << "result: " << (total == 0 ? "PASS" : "FAIL") << '\n';
    return {total == 0 ? 0 : 3, out.str()};
}

namespace {

struct NamedGenerator {
    std::string name;
    GeneratorSpec gen;
};

NamedGenerator make_custom(const std::string& payload) {
    std::optional<Rational> c0, c1;
    std::size_t pos = 0;
    while (pos <= payload.size()) {
        const std::size_t comma = payload.find(',', pos);
        const std::string item =
            payload.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("custom generator item \"" + item + "\" is not key=value");
        const std::string key = item.substr(0, eq);
        const Rational value = Rational::parse(item.substr(eq + 1));
        if (key == "c0") c0 = value;
        else if (key == "c1") c1 = value;
        else throw ConfigError("custom generator key \"" + key + "\" (expected c0 or c1)");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!c0 || !c1) throw ConfigError("custom generator needs both c0 and c1");
    return {"custom(c0=" + c0->str() + ",c1=" + c1->str() + ")",
            GeneratorSpec::from_constants(*c0, *c1)};
}

std::vector<NamedGenerator> parse_generators(const std::string& text) {
    const std::string spec = text.empty() ? "x2,x1-signed" : text;
    if (spec.rfind("custom:", 0) == 0) return {make_custom(spec.substr(7))};
    if (spec == "all")
        return {{"x2", GeneratorSpec::alternating()},
                {"x1-signed", GeneratorSpec::signed_scaling()},
                {"x1", GeneratorSpec::uniform_scaling()}};
    std::vector<NamedGenerator> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string name =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (name == "x2") out.push_back({"x2", GeneratorSpec::alternating()});
        else if (name == "x1-signed") out.push_back({"x1-signed", GeneratorSpec::signed_scaling()});
        else if (name == "x1") out.push_back({"x1", GeneratorSpec::uniform_scaling()});
        else
            throw ConfigError("unknown generator \"" + name +
                              "\" (expected x2, x1-signed, x1, all, or custom:c0=..,c1=..)");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

StatePoint sample_regular_point(SplitMix64& rng, const CoefficientQuad& quad, long n) {
    const CoefficientQuad::Values k = quad.at(n);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        StatePoint p{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        if ((k.a + k.b * p.x_n1 * p.y_n).is_zero()) continue;
        if ((k.c + k.d * p.x_n * p.y_n1).is_zero()) continue;
        return p;
    }
    throw DomainError("could not sample a regular state point");
}

// Exponent-wise comparison of a scaled orbit against the expected
// r^{alpha_n} x_n, r^{lambda_n} y_n. Returns "exact", "mismatch" or
// "skipped" (non-integer exponents).
std::string invariance_outcome(const CoefficientQuad& quad, const InitialState& init,
                               const GeneratorSpec& gen, const Rational& r, long steps) {
    InitialState scaled_init = init;
    try {
        scaled_init = scale_action(init, r, gen);
    } catch (const DomainError&) {
        return "skipped";
    }
    const Trajectory base = simulate(quad, init, steps);
    const Trajectory scaled = simulate(quad, scaled_init, steps);
    const bool status_match =
        (base.singular().has_value() == scaled.singular().has_value()) &&
        (!base.singular() || (base.singular()->step == scaled.singular()->step &&
                              base.singular()->factor == scaled.singular()->factor));
    if (!status_match) return "mismatch";
    for (long n = -1; n <= std::min(base.last_index(), scaled.last_index()); ++n) {
        const Rational alpha = gen.alpha(n), lambda = gen.lambda(n);
        if (!alpha.is_integer() || !lambda.is_integer()) return "skipped";
        if (scaled.x(n) != r.pow(alpha.to_long()) * base.x(n)) return "mismatch";
        if (scaled.y(n) != r.pow(lambda.to_long()) * base.y(n)) return "mismatch";
    }
    return "exact";
}

std::string invariant_seq_outcome(const CoefficientQuad& quad, const InitialState& init,
                                  const GeneratorSpec& gen, const Rational& r, long steps) {
    InitialState scaled_init = init;
    try {
        scaled_init = scale_action(init, r, gen);
    } catch (const DomainError&) {
        return "skipped";
    }
    const InvariantSeq base = invariants_from_trajectory(simulate(quad, init, steps));
    const InvariantSeq scaled = invariants_from_trajectory(simulate(quad, scaled_init, steps));
    const long shared = std::min(base.last_index(), scaled.last_index());
    for (long n = 0; n <= shared; ++n)
        if (base.u(n) != scaled.u(n) || base.v(n) != scaled.v(n)) return "mismatch";
    if (base.last_index() != scaled.last_index()) return "mismatch";
    return "exact";
}

bool canonical_cross_check(const Trajectory& traj, double tol) {
    if (traj.last_index() < 0) return true;
    const auto coords = canonical_coords(traj);
    const InvariantSeq inv = invariants_from_trajectory(traj);
    auto sign = [](long n) { return (n % 2 == 0) ? 1.0 : -1.0; };
    auto s_at = [&](long n) { return coords[static_cast<std::size_t>(n + 1)].s; };
    auto t_at = [&](long n) { return coords[static_cast<std::size_t>(n + 1)].t; };
    for (long n = 0; n <= traj.last_index(); ++n) {
        const double u_pred = std::exp(-(sign(n) * s_at(n) + sign(n - 1) * t_at(n - 1)));
        const double v_pred = std::exp(-(sign(n - 1) * s_at(n - 1) + sign(n) * t_at(n)));
        const double u_act = std::fabs(inv.u(n).to_double());
        const double v_act = std::fabs(inv.v(n).to_double());
        if (std::fabs(u_pred - u_act) > tol * u_act) return false;
        if (std::fabs(v_pred - v_act) > tol * v_act) return false;
    }
    return true;
}

}  // namespace

CommandResult cmd_verify_symmetry(const RunConfig& config, const std::string& generators,
                                  long samples, std::uint64_t seed) {
    if (samples < 1) throw ConfigError("samples must be >= 1");
    const CoefficientQuad& quad = config.coefficients;
    const InitialState& init = config.initial;
    const std::vector<NamedGenerator> gens = parse_generators(generators);
    const std::vector<Rational> scale_factors{Rational(2), Rational(3, 2), Rational(-5, 7)};
    const long invariance_steps = 8;

    std::ostringstream out;
    out << "verify-symmetry report\n";
    out << "seed: " << seed << '\n';
    out << "samples: " << samples << '\n';
    out << "canonical-coordinate cross-check (tol 1e-9): "
        << (canonical_cross_check(simulate(quad, init, invariance_steps), 1e-9) ? "ok"
                                                                                : "mismatch")
        << '\n';

    bool overall_pass = true;
    for (const NamedGenerator& named : gens) {
        const GeneratorSpec& gen = named.gen;
        bool pass = true;

        long det_nonzero = 0;
        ResidualPair det_first{Rational(0), Rational(0)};
        for (const auto& [n, res] : determining_check(gen, 0, 10)) {
            if (!res.zero()) {
                if (det_nonzero == 0) det_first = res;
                ++det_nonzero;
            }
        }
        long ann_nonzero = 0;
        for (long n = 0; n <= 10; ++n)
            if (!invariant_annihilation(gen, n).zero()) ++ann_nonzero;

        SplitMix64 rng(seed);
        long lsc_zero = 0, lsc_nonzero = 0;
        std::string lsc_first;
        for (long i = 0; i < samples; ++i) {
            const long n = i % 11;
            const StatePoint point = sample_regular_point(rng, quad, n);
            const ResidualPair res = lsc_residual(gen, quad, n, point);
            if (res.zero()) {
                ++lsc_zero;
            } else {
                if (lsc_nonzero == 0)
                    lsc_first = "first at sample " + std::to_string(i) + " n=" +
                                std::to_string(n) + ": (" + res.first.str() + ", " +
                                res.second.str() + ")";
                ++lsc_nonzero;
            }
        }

        std::vector<std::string> inv_outcomes, seq_outcomes;
        for (const Rational& r : scale_factors) {
            inv_outcomes.push_back(invariance_outcome(quad, init, gen, r, invariance_steps));
            seq_outcomes.push_back(invariant_seq_outcome(quad, init, gen, r, invariance_steps));
        }

        pass = det_nonzero == 0 && ann_nonzero == 0 && lsc_nonzero == 0;
        for (const auto& o : inv_outcomes) pass = pass && o != "mismatch";
        for (const auto& o : seq_outcomes) pass = pass && o != "mismatch";
        overall_pass = overall_pass && pass;

        out << "generator " << named.name << '\n';
        if (det_nonzero == 0) {
            out << "  determining residuals n=0..10: all zero\n";
        } else {
            out << "  determining residuals n=0..10: nonzero at " << det_nonzero
                << " of 11; at n=0: (" << det_first.first.str() << ", " << det_first.second.str()
                << ")\n";
        }
        out << "  invariant annihilation n=0..10: "
            << (ann_nonzero == 0 ? "all zero"
                                 : "nonzero at " + std::to_string(ann_nonzero) + " of 11")
            << '\n';
        out << "  lsc residuals: " << lsc_zero << " zero, " << lsc_nonzero << " nonzero";
        if (lsc_nonzero > 0) out << "; " << lsc_first;
        out << '\n';
        out << "  finite invariance (" << invariance_steps << " steps):";
        for (std::size_t i = 0; i < scale_factors.size(); ++i)
            out << (i == 0 ? " " : ", ") << "r=" << scale_factors[i].str() << ' '
                << inv_outcomes[i];
        out << '\n';
        out << "  invariant-sequence invariance:";
        for (std::size_t i = 0; i < scale_factors.size(); ++i)
            out << (i == 0 ? " " : ", ") << "r=" << scale_factors[i].str() << ' '
                << seq_outcomes[i];
        out << '\n';
        if (named.name == "x1" && !pass)
            out << "  note: uniform scaling x*d/dx + y*d/dy fails the determining relations "
                   "lambda_n + alpha_{n+1} = 0 and alpha_n + lambda_{n+1} = 0 with residual "
                   "pair (2, 2); the sign-corrected generator x1-signed (-x*d/dx + y*d/dy) "
                   "satisfies them\n";
        out << "  verdict: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    out << "overall: " << (overall_pass ? "PASS" : "FAIL") << '\n';
    return {overall_pass ? 0 : 3, out.str()};
}

CommandResult cmd_forbidden(const RunConfig& config, long horizon) {
    horizon = effective_steps(config, horizon);
    const auto hit = forbidden_scan(config.coefficients, config.initial, horizon);
    std::ostringstream out;
    out << "forbidden report\n";
    out << "horizon: " << horizon << '\n';
    if (!hit) {
        out << "result: none\n";
        return {0, out.str()};
    }
    out << "result: singular step=" << hit->step << " equation=" << to_string(hit->equation)
        << '\n';
    out << "condition: " << hit->condition << '\n';
    return {2, out.str()};
}

CommandResult cmd_reduce(const RunConfig& config, long steps, Format format) {
    steps = effective_steps(config, steps);
    const CoefficientQuad& quad = config.coefficients;
    const InitialState& init = config.initial;
    const Trajectory traj = simulate(quad, init, steps);
    const long last = traj.last_index();
    const Rational u0 = initial_u0(init), v0 = initial_v0(init);
    const InvariantSeq from_traj = invariants_from_trajectory(traj);
    const InvariantSeq from_rec = invariants_by_recurrence(quad, u0, v0, last);

    long route_mismatches = 0;
    struct Row {
        long n;
        Rational u_traj, u_rec, u_cf, v_traj, v_rec, v_cf;
    };
    std::vector<Row> rows;
    for (long n = 0; n <= last; ++n) {
        auto [u_cf, v_cf] = invariants_closed_form(quad, u0, v0, n);
        Row row{n,          from_traj.u(n), from_rec.u(n), std::move(u_cf),
                from_traj.v(n), from_rec.v(n), std::move(v_cf)};
        if (row.u_traj != row.u_rec || row.u_rec != row.u_cf || row.v_traj != row.v_rec ||
            row.v_rec != row.v_cf)
            ++route_mismatches;
        rows.push_back(std::move(row));
    }
    const int exit_code = route_mismatches > 0 ? 3 : (traj.singular() ? 2 : 0);

    if (format == Format::Csv) {
        std::ostringstream out;
        out << "n,U_traj,U_rec,U_cf,V_traj,V_rec,V_cf\n";
        for (const Row& row : rows)
            out << row.n << ',' << row.u_traj.str() << ',' << row.u_rec.str() << ','
                << row.u_cf.str() << ',' << row.v_traj.str() << ',' << row.v_rec.str() << ','
                << row.v_cf.str() << '\n';
        if (traj.singular()) out << singular_status_line(*traj.singular()) << '\n';
        if (route_mismatches > 0)
            out << "# status: route mismatch count=" << route_mismatches << '\n';
        return {exit_code, out.str()};
    }
    json jrows = json::array();
    for (const Row& row : rows)
        jrows.push_back({{"n", row.n},
                         {"U_traj", row.u_traj.str()},
                         {"U_rec", row.u_rec.str()},
                         {"U_cf", row.u_cf.str()},
                         {"V_traj", row.v_traj.str()},
                         {"V_rec", row.v_rec.str()},
                         {"V_cf", row.v_cf.str()}});
    json status = traj.singular() ? singular_status_json(*traj.singular())
                                  : json{{"state", "completed"}};
    status["route_mismatches"] = route_mismatches;
    return {exit_code, dump_json({{"command", "reduce"}, {"rows", jrows}, {"status", status}})};
}

}  // namespace radex
