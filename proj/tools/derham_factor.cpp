#include <iostream>

#include <CLI11.hpp>

#include "derham/commands.hpp"

int main(int argc, char** argv) {
    derham::CommandOptions opts;
    CLI::App app{"Absolute factorization of reduced polynomials over Q"};
    app.add_option("command", opts.op, "count | factor | generic | section")
        ->required()
        ->check(CLI::IsMember({"count", "factor", "generic", "section"}));
    app.add_option("expr", opts.expr, "polynomial expression")->required();
    app.add_option("--vars", opts.vars, "comma-separated variable order, e.g. x,y,z");
    app.add_option("--var", opts.var, "variable for the generic command");
    app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
    app.add_option("--retries", opts.retries, "retries for the generic vector")->capture_default_str();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--plane", opts.plane, "section plane \"p;u;w\"");
    app.add_option("--random-planes", opts.random_planes, "number of random section planes");
    app.add_flag("--timing", opts.timing, "report wall time in ms (breaks byte-determinism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const derham::RunReport report = derham::run_command(opts);
    std::cout << derham::render(report, opts.format);
    if (!report.diagnostic.empty()) std::cerr << report.diagnostic << '\n';
    return static_cast<int>(report.exit_code);
}
