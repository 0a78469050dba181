#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pcp/enumerate.hpp"
#include "pcp/pipeline.hpp"
#include "pcp/problem_io.hpp"

namespace pcp {

// Parsed command line, ready to execute. Unset precision fields take the
// task-dependent defaults inside run_cli.
struct RunOptions {
    std::string task; // solve | least-norm | sparse | check-d0 | copositive | bench
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    std::optional<std::string> gamma1;
    std::optional<std::string> gamma2;
    std::string strategy = "deterministic"; // deterministic | random | explicit
    std::optional<std::uint64_t> seed;
    std::optional<std::string> h_matrix_path;
    bool invert_h = true;
    std::string eps = "1e-6";
    std::optional<std::string> family;
    int n = 0;
    int d = 2;
    bool force = false;
    bool verbose = false;
};

// Fully resolved request for one operation on one problem.
struct TaskSpec {
    std::string task;
    PrecisionPair prec;
    HStrategy strategy;                // unused by check-d0
    Rational eps;                      // copositive budget
    std::optional<std::uint64_t> seed; // copositive draw seed
};

// Runs the task and assembles the result document; throws on failure
// (NotFiniteError, CertificationError, DomainError, ParseError).
OutputDoc run_task(const PCPProblem& problem, const TaskSpec& spec);

// Executes one task end to end, writing the result document to the output
// path (or out when none is set) and diagnostics to err.
// Exit codes: 0 solved or infeasible, 1 internal failure, 2 problem not in
// the finite class, 3 input or configuration error, 4 certification failure.
int run_cli(const RunOptions& opt, std::ostream& out, std::ostream& err);

// Strategy from parts; matrix_json is the explicit matrix as JSON text.
HStrategy make_strategy(const std::string& name, std::optional<std::uint64_t> seed,
                        const std::optional<std::string>& matrix_json, bool invert);

// Accepts integers, fractions (3/4), decimals (0.25), and scientific
// notation (1e-6, 2.5E3). Throws ParseError.
Rational parse_rational_arg(const std::string& text);

} // namespace pcp
