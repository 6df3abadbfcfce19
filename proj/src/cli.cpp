// SPDX-License-Identifier: Apache-2.0
#include "cnt/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>

#include <nlohmann/json.hpp>

#include "cnt/counter_rng.hpp"
#include "cnt/distribution.hpp"
#include "cnt/errors.hpp"
#include "cnt/instances.hpp"
#include "cnt/kernel.hpp"
#include "cnt/lattice.hpp"
#include "cnt/lattice_function.hpp"
#include "cnt/transform.hpp"
#include "cnt/verify.hpp"

namespace cnt {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailedChecks = 1;
constexpr int kExitBadInput = 2;

/// Renders rationals either exactly or as decimals, per --float.
struct ValueRenderer {
    bool as_float = false;
    int digits = 15;

    std::string operator()(const Rational& q) const {
        return as_float ? to_decimal(q, digits) : to_string(q);
    }
};

Site site_from_config(const std::vector<int>& coords, int dimension, const char* name) {
    if (static_cast<int>(coords.size()) != dimension) {
        throw DimensionMismatch(std::string(name) + " has " +
                                std::to_string(coords.size()) +
                                " coordinates, kernel dimension is " +
                                std::to_string(dimension));
    }
    return Site(coords);
}

int require_int(const std::optional<int>& value, const char* name) {
    if (!value) throw ParseError(std::string("missing required option --") + name);
    return *value;
}

const std::vector<int>& require_coords(const std::optional<std::vector<int>>& value,
                                       const char* name) {
    if (!value) throw ParseError(std::string("missing required option --") + name);
    return *value;
}

// --- output helpers -------------------------------------------------------

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

void print_validation(std::ostream& out, const ValidationReport& report,
                      const std::string& format) {
    if (format == "tsv") {
        if (report.ok()) {
            out << "ok\n";
            return;
        }
        for (const auto& v : report.violations) {
            const char* kind = v.kind == ViolationKind::MassViolation ? "mass"
                               : v.kind == ViolationKind::NondegeneracyViolation
                                   ? "nondegeneracy"
                                   : "dimension";
            out << kind << "\t" << (v.site ? to_string(*v.site) : "-") << "\t"
                << (v.direction ? to_string(*v.direction) : "-") << "\t" << v.detail
                << "\n";
        }
        return;
    }
    emit_json(out, validation_report_to_json(report));
}

void print_support(std::ostream& out, const SupportSet& set, const std::string& format) {
    if (format == "tsv") {
        for (const auto& p : set.points) out << p.s << "\t" << to_string(p.y) << "\n";
        return;
    }
    emit_json(out, support_set_to_json(set));
}

json measure_json(const Measure& m, const ValueRenderer& render) {
    json arr = json::array();
    for (const auto& [site, mass] : m.masses) {
        arr.push_back({{"site", site.coords}, {"mass", render(mass)}});
    }
    return arr;
}

void print_measure(std::ostream& out, const Measure& m, const std::string& format,
                   const ValueRenderer& render) {
    if (format == "tsv") {
        for (const auto& [site, mass] : m.masses) {
            out << to_string(site) << "\t" << render(mass) << "\n";
        }
        return;
    }
    emit_json(out, measure_json(m, render));
}

void print_killed(std::ostream& out, const KilledEvolution& ke, const std::string& format,
                  const ValueRenderer& render) {
    if (format == "tsv") {
        for (const auto& [site, mass] : ke.surviving.masses) {
            out << "surviving\t" << to_string(site) << "\t" << render(mass) << "\n";
        }
        for (const auto& a : ke.absorbed) {
            out << "absorbed\t" << a.time << "\t" << to_string(a.site) << "\t"
                << render(a.mass) << "\n";
        }
        return;
    }
    json absorbed = json::array();
    for (const auto& a : ke.absorbed) {
        absorbed.push_back(
            {{"time", a.time}, {"site", a.site.coords}, {"mass", render(a.mass)}});
    }
    emit_json(out, {{"surviving", measure_json(ke.surviving, render)},
                    {"absorbed", absorbed}});
}

void print_coefficients(std::ostream& out, const CoefficientTable& table,
                        const std::string& format, const ValueRenderer& render) {
    if (format == "tsv") {
        for (int i = 0; i < table.index.size(); ++i) {
            const auto& p = table.index.points[static_cast<std::size_t>(i)];
            out << p.s << "\t" << to_string(p.y) << "\t"
                << render(table.coeffs[static_cast<std::size_t>(i)]) << "\n";
        }
        return;
    }
    json coeffs = json::array();
    for (int i = 0; i < table.index.size(); ++i) {
        const auto& p = table.index.points[static_cast<std::size_t>(i)];
        coeffs.push_back({{"s", p.s},
                          {"y", p.y.coords},
                          {"c", render(table.coeffs[static_cast<std::size_t>(i)])}});
    }
    emit_json(out, {{"t", table.index.t}, {"x", table.index.x.coords}, {"coeffs", coeffs}});
}

/// Reports stream as JSON lines (or TSV rows).
void print_report(std::ostream& out, const VerificationReport& r, const std::string& format,
                  const ValueRenderer& render) {
    if (format == "tsv") {
        out << r.name << "\t" << r.instance << "\t" << render(r.lhs) << "\t"
            << render(r.rhs) << "\t" << (r.pass ? "pass" : "FAIL") << "\n";
        return;
    }
    json doc = {{"name", r.name},
                {"instance", r.instance},
                {"lhs", render(r.lhs)},
                {"rhs", render(r.rhs)},
                {"pass", r.pass}};
    out << doc.dump() << "\n";
}

std::string decimal15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void print_mc(std::ostream& out, const McHedgeResult& result, const std::string& format,
              const ValueRenderer& render) {
    if (format == "tsv") {
        const auto row = [&](const char* label, const McEstimate& e) {
            out << label << "\t" << decimal15(e.value) << "\t" << decimal15(e.std_error)
                << "\t" << e.n_paths << "\t" << e.seed << "\n";
        };
        row("lhs", result.lhs);
        row("rhs", result.rhs);
        out << "exact_lhs\t" << render(result.exact_lhs) << "\n";
        out << "exact_rhs\t" << render(result.exact_rhs) << "\n";
        return;
    }
    json doc = mc_to_json(result);
    if (render.as_float) {
        doc["exact_lhs"] = render(result.exact_lhs);
        doc["exact_rhs"] = render(result.exact_rhs);
    }
    emit_json(out, doc);
}

// --- randomized verification suites ---------------------------------------

int time_cap(int dimension) {
    if (dimension <= 2) return 6;
    if (dimension == 3) return 4;
    return 3;
}

enum SuiteId : std::uint64_t {
    kTheorem = 1,
    kConsistency = 2,
    kUniqueness = 3,
    kParity = 4,
    kReflection = 5,
};

CounterRng suite_rng(std::uint64_t seed, SuiteId suite, long instance) {
    return CounterRng(seed, (static_cast<std::uint64_t>(suite) << 32) |
                                static_cast<std::uint64_t>(instance));
}

/// Runs one suite, streaming reports; returns the number of failures.
long run_suite(const StepKernel& kernel, SuiteId suite, std::uint64_t seed, long instances,
               int horizon, const std::function<void(const VerificationReport&)>& sink) {
    const int d = kernel.dimension;
    long failures = 0;
    const auto consume = [&](const VerificationReport& r) {
        if (!r.pass) ++failures;
        sink(r);
    };
    for (long i = 0; i < instances; ++i) {
        CounterRng rng = suite_rng(seed, suite, i);
        switch (suite) {
            case kTheorem: {
                const int t = rng.range(1, time_cap(d));
                const Site x = random_boundary_site(rng, d);
                const LatticeFunction f = random_upper_payoff(rng, support_set(t, x));
                consume(check_theorem(kernel, t, x, f));
                break;
            }
            case kConsistency: {
                const int t = rng.range(1, std::min(4, time_cap(d)));
                const Site x = random_boundary_site(rng, d);
                for (const auto& r : check_consistency(kernel, t, x)) consume(r);
                break;
            }
            case kUniqueness: {
                const int t = rng.range(1, time_cap(d));
                const Site x = random_boundary_site(rng, d);
                const SupportSet set = support_set(t, x);
                const auto& p =
                    set.points[static_cast<std::size_t>(rng.below(
                        static_cast<std::uint64_t>(set.size())))];
                const Site perturb = shifted(p.y, d, -p.s);
                const LatticeFunction f = random_upper_payoff(rng, set);
                consume(check_uniqueness(kernel, t, x, f, perturb,
                                         random_nonzero_rational(rng)));
                break;
            }
            case kParity: {
                const int T = rng.range(1, time_cap(d));
                const Site x0 = random_upper_site(rng, d, 2, 3);
                const LatticeFunction f = random_upper_payoff_near(rng, x0, T);
                consume(barrier_parity(kernel, x0, T, f));
                break;
            }
            case kReflection: {
                const Site x = random_boundary_site(rng, d, 1);
                for (const auto& r : check_reflection(kernel, horizon, x)) consume(r);
                break;
            }
        }
    }
    return failures;
}

int run_verify(const StepKernel& kernel, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
    const ValueRenderer render{config.as_float, config.digits};
    const auto sink = [&](const VerificationReport& r) {
        print_report(out, r, config.format, render);
    };
    const int horizon = config.horizon.value_or(3);
    long failures = 0;

    const bool all = config.suite == "all";
    const auto want = [&](const char* name) { return all || config.suite == name; };
    if (!all && config.suite != "theorem" && config.suite != "consistency" &&
        config.suite != "uniqueness" && config.suite != "parity" &&
        config.suite != "reflection") {
        throw ParseError("unknown suite \"" + config.suite + "\"");
    }

    if (want("theorem")) {
        failures += run_suite(kernel, kTheorem, config.seed, config.instances, horizon, sink);
    }
    if (want("consistency")) {
        failures +=
            run_suite(kernel, kConsistency, config.seed, config.instances, horizon, sink);
    }
    if (want("uniqueness")) {
        failures +=
            run_suite(kernel, kUniqueness, config.seed, config.instances, horizon, sink);
    }
    if (want("parity")) {
        failures += run_suite(kernel, kParity, config.seed, config.instances, horizon, sink);
    }
    if (want("reflection")) {
        const Site origin(std::vector<int>(static_cast<std::size_t>(kernel.dimension), 0));
        const bool symmetric = is_reflection_symmetric(kernel, horizon + 1, origin);
        if (!symmetric && all) {
            err << "note: kernel is not reflection symmetric; skipping reflection suite\n";
        } else if (!symmetric) {
            throw NotSymmetric("kernel is not reflection symmetric within horizon " +
                               std::to_string(horizon + 1));
        } else {
            failures +=
                run_suite(kernel, kReflection, config.seed, config.instances, horizon, sink);
        }
    }
    return failures == 0 ? kExitOk : kExitFailedChecks;
}

}  // namespace

std::vector<int> parse_site_arg(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception&) {
        throw ParseError("bad site argument \"" + text + "\"");
    }
    std::vector<int> coords;
    if (parsed.is_number_integer()) {
        coords.push_back(parsed.get<int>());
    } else if (parsed.is_array()) {
        for (const auto& c : parsed) {
            if (!c.is_number_integer()) {
                throw ParseError("bad site argument \"" + text + "\"");
            }
            coords.push_back(c.get<int>());
        }
    } else {
        throw ParseError("bad site argument \"" + text + "\"");
    }
    if (coords.empty()) throw ParseError("site argument \"" + text + "\" is empty");
    return coords;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const StepKernel kernel = load_kernel_file(config.kernel_path);
        const ValidationReport validation = validate_kernel(kernel);
        const ValueRenderer render{config.as_float, config.digits};

        if (config.command == "validate") {
            print_validation(out, validation, config.format);
            return validation.ok() ? kExitOk : kExitFailedChecks;
        }
        if (!validation.ok()) {
            err << "error: kernel fails validation (run the validate command for details)\n";
            return kExitBadInput;
        }
        const int d = kernel.dimension;

        if (config.command == "support") {
            const Site x = site_from_config(require_coords(config.x, "x"), d, "--x");
            print_support(out, support_set(require_int(config.t, "t"), x), config.format);
            return kExitOk;
        }
        if (config.command == "evolve") {
            const Site x0 = site_from_config(require_coords(config.x0, "x0"), d, "--x0");
            const int t = require_int(config.t, "t");
            if (config.killed) {
                print_killed(out, evolve_killed(kernel, x0, t), config.format, render);
            } else {
                print_measure(out, evolve(kernel, x0, t), config.format, render);
            }
            return kExitOk;
        }
        if (config.command == "transform") {
            const Site target =
                site_from_config(require_coords(config.target, "target"), d, "--target");
            if (config.payoff_path.empty()) throw ParseError("missing --payoff");
            const LatticeFunction f = load_payoff_file(config.payoff_path, d);
            out << render(transform_at(kernel, target, f)) << "\n";
            return kExitOk;
        }
        if (config.command == "coeffs") {
            const Site x = site_from_config(require_coords(config.x, "x"), d, "--x");
            const int t = require_int(config.t, "t");
            CoefficientTable table;
            if (config.method == "solve") {
                table = coefficients_via_solve(kernel, t, x);
            } else if (config.method == "cramer") {
                table = cramer_coefficients(kernel, t, x);
            } else {
                throw ParseError("unknown method \"" + config.method + "\"");
            }
            print_coefficients(out, table, config.format, render);
            return kExitOk;
        }
        if (config.command == "verify") {
            return run_verify(kernel, config, out, err);
        }
        if (config.command == "mc") {
            const Site x0 = site_from_config(require_coords(config.x0, "x0"), d, "--x0");
            const int T = require_int(config.t, "T");
            if (config.payoff_path.empty()) throw ParseError("missing --payoff");
            if (config.paths < 1) throw ParseError("--paths must be >= 1");
            const LatticeFunction f = load_payoff_file(config.payoff_path, d);
            print_mc(out, mc_hedge(kernel, x0, T, f, config.paths, config.seed),
                     config.format, render);
            return kExitOk;
        }
        throw ParseError("unknown command \"" + config.command + "\"");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

}  // namespace cnt
