// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cnt/cli.hpp"
#include "cnt/errors.hpp"

namespace {

/// Binds a site-valued option as a raw string; parsed after CLI11 runs.
struct SiteArg {
    std::string text;
    bool present() const { return !text.empty(); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Carr-Nadtochiy transforms for nearest-neighbor lattice walks"};
    app.require_subcommand(1);

    cnt::RunConfig config;
    SiteArg x_arg, x0_arg, target_arg;
    int t = 0, T = 0, horizon = 0;

    app.add_option("-k,--kernel", config.kernel_path, "Kernel JSON file")->required();
    app.add_option("--format", config.format, "Output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    app.add_flag("--float", config.as_float, "Render rationals as decimals");
    app.add_option("--digits", config.digits, "Significant digits for --float")
        ->capture_default_str();

    app.add_subcommand("validate", "Check kernel positivity and unit mass");

    auto* support = app.add_subcommand("support", "Enumerate the support set S(t, x)");
    support->add_option("--t", t, "Anchor time")->required();
    support->add_option("--x", x_arg.text, "Boundary anchor site, e.g. [0] or [1,0]")
        ->required();

    auto* evolve = app.add_subcommand("evolve", "Exact law of the chain at time t");
    evolve->add_option("--x0", x0_arg.text, "Start site")->required();
    evolve->add_option("--t", t, "Number of steps")->required();
    evolve->add_flag("--killed", config.killed, "Kill the chain at the boundary");

    auto* transform = app.add_subcommand("transform", "Evaluate Nf at a lower site");
    transform->add_option("--target", target_arg.text, "Lower site, e.g. [-1]")->required();
    transform->add_option("--payoff", config.payoff_path, "Payoff JSON file")->required();

    auto* coeffs = app.add_subcommand("coeffs", "Coefficient table c_{t,x}(s, y)");
    coeffs->add_option("--t", t, "Anchor time")->required();
    coeffs->add_option("--x", x_arg.text, "Boundary anchor site")->required();
    coeffs->add_option("--method", config.method, "solve or cramer")
        ->check(CLI::IsMember({"solve", "cramer"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run randomized exact verification suites");
    verify
        ->add_option("--suite", config.suite,
                     "theorem|consistency|uniqueness|parity|reflection|all")
        ->capture_default_str();
    verify->add_option("--seed", config.seed, "Instance seed")->capture_default_str();
    verify->add_option("--instances", config.instances, "Instances per suite")
        ->capture_default_str();
    verify->add_option("--horizon", horizon, "Reflection horizon (default 3)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo static-hedge simulation");
    mc->add_option("--x0", x0_arg.text, "Start site strictly above the boundary")->required();
    mc->add_option("--T", T, "Maturity")->required();
    mc->add_option("--payoff", config.payoff_path, "Payoff JSON file")->required();
    mc->add_option("--paths", config.paths, "Number of simulated paths")->required();
    mc->add_option("--seed", config.seed, "Simulation seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    try {
        if (x_arg.present()) config.x = cnt::parse_site_arg(x_arg.text);
        if (x0_arg.present()) config.x0 = cnt::parse_site_arg(x0_arg.text);
        if (target_arg.present()) config.target = cnt::parse_site_arg(target_arg.text);
    } catch (const cnt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (support->parsed() || coeffs->parsed() || evolve->parsed()) config.t = t;
    if (mc->parsed()) config.t = T;
    if (verify->parsed() && verify->count("--horizon") > 0) config.horizon = horizon;

    return cnt::run(config, std::cout, std::cerr);
}
