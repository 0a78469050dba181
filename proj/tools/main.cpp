#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pcp/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for polynomial complementarity problems"};
    pcp::RunOptions opt;

    app.add_option("--task", opt.task,
                   "solve | least-norm | sparse | check-d0 | copositive | bench")
        ->required()
        ->check(CLI::IsMember({"solve", "least-norm", "sparse", "check-d0", "copositive",
                               "bench"}));
    app.add_option("--input", opt.input_path, "Problem description (JSON)");
    app.add_option("--output", opt.output_path,
                   "Result document path (default: stdout; bench: omitted)");
    app.add_option("--gamma1", opt.gamma1, "Root isolation scale (default 1e-10)");
    app.add_option("--gamma2", opt.gamma2,
                   "Certification tolerance (default 1e-6; bench 1e-4)");
    app.add_option("--strategy", opt.strategy,
                   "Coordinate-change choice: deterministic | random | explicit")
        ->check(CLI::IsMember({"deterministic", "random", "explicit"}));
    app.add_option("--seed", opt.seed, "RNG seed (required for random strategy and copositive)");
    app.add_option("--h-matrix", opt.h_matrix_path,
                   "JSON matrix for the explicit strategy");
    app.add_flag("--invert-h,!--no-invert-h", opt.invert_h,
                 "Interpret the explicit matrix through its inverse (default on)");
    app.add_option("--eps", opt.eps, "Perturbation budget for copositive (default 1e-6)");
    app.add_option("--family", opt.family, "Benchmark family: p | q");
    app.add_option("--n", opt.n, "Benchmark dimension");
    app.add_option("--d", opt.d, "Benchmark degree (family p; default 2)");
    app.add_flag("--force", opt.force, "Run benchmarks beyond the size ceiling");
    app.add_flag("--verbose", opt.verbose, "Progress diagnostics on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }
    return pcp::run_cli(opt, std::cout, std::cerr);
}
