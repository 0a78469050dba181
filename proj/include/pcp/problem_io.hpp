#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcp/enumerate.hpp"
#include "pcp/pipeline.hpp"

namespace pcp {

// Parsed arithmetic expression. Numbers are rational literals; pow stores
// its exponent in value; offset points into the source for diagnostics.
struct ExprAST {
    enum class Kind { number, variable, add, sub, mul, neg, pow };
    Kind kind = Kind::number;
    Rational value;
    std::string var;
    std::vector<ExprAST> children;
    std::size_t offset = 0;
};

// Grammar: sums of products of signed atoms; atoms are rational literals
// (12, 3/4), variables, parenthesized expressions; '^' takes a nonnegative
// integer exponent. Multiplication is always explicit. Throws ParseError.
ExprAST parse_expression(const std::string& source);

// Expression to polynomial over the ring; unknown variables fault with the
// offending offset.
MPoly lower_to_poly(const ExprAST& ast, const RingPtr& ring);

// On-disk problem description.
struct ProblemFile {
    std::optional<std::string> name;
    std::vector<std::string> variables;
    std::vector<std::string> f_sources;
    std::optional<std::vector<std::vector<Rational>>> expected_solutions;
    std::optional<int> expected_deg_w;
};

ProblemFile parse_problem_file(const std::string& json_text);
PCPProblem to_problem(const ProblemFile& file);

// One solution as reported: decimal coordinates, exact enclosure bounds,
// certificate residual.
struct SolutionRecord {
    std::vector<std::string> decimal;
    std::vector<std::pair<Rational, Rational>> bounds;
    Rational residual;
};

// Result document for every task. Optionals absent from the JSON when unset.
struct OutputDoc {
    std::string status; // solved | infeasible | error
    std::string task;
    std::optional<std::string> problem_name;
    int n = 0;
    std::optional<std::string> error;
    std::optional<std::string> witness; // non-finite variable, check task

    std::optional<long> deg_w;
    std::optional<std::vector<Rational>> w; // ascending coefficients
    std::optional<std::vector<std::vector<Rational>>> v;
    std::optional<std::vector<Rational>> phi;
    std::optional<std::vector<std::vector<Rational>>> h; // rows of x = H y
    std::optional<long> s;
    std::optional<std::uint64_t> seed;
    std::optional<bool> is_d0;

    std::optional<int> k;
    std::optional<std::vector<std::vector<int>>> omega; // 1-based variable ids
    std::optional<std::vector<Rational>> a;
    // Bench-only companion counts to the solve enumeration in solutions.
    std::optional<int> sol_ln;
    std::optional<int> sol_sp;

    std::optional<std::vector<SolutionRecord>> solutions;
    std::optional<StageTimings> timings;
    std::optional<double> total_seconds;
};

// Canonical JSON with alphabetically ordered keys; rationals as exact
// strings, timings as seconds with millisecond resolution.
std::string serialize_output(const OutputDoc& doc);
OutputDoc read_output_document(const std::string& json_text);

// JSON array of rows of integers or rational strings.
RationalMatrix parse_matrix_file(const std::string& json_text);

// Solutions to records: decimals carry 10 + deg w significant digits.
std::vector<SolutionRecord> to_records(const std::vector<Solution>& sols, int deg_w);

} // namespace pcp
