#include "pcp/cli.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double>(d).count();
}

std::vector<std::vector<Rational>> matrix_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

void fill_representation(OutputDoc& doc, const UnivarRep& rep) {
    doc.deg_w = rep.w.degree();
    doc.w = rep.w.coeffs();
    std::vector<std::vector<Rational>> v;
    v.reserve(rep.v.size());
    for (const auto& vi : rep.v) v.push_back(vi.coeffs());
    doc.v = std::move(v);
    if (rep.phi) doc.phi = rep.phi->coeffs();
    doc.h = matrix_rows(rep.h);
    doc.s = rep.s;
    doc.seed = rep.seed;
}

std::vector<std::vector<int>> one_based(const std::vector<std::vector<int>>& omega) {
    std::vector<std::vector<int>> out = omega;
    for (auto& pattern : out)
        for (auto& i : pattern) ++i;
    return out;
}

// Solution-count ceiling (2(d+1))^n used to refuse oversized benchmarks.
long bezout_ceiling(int n, int d, long cap) {
    long b = 1;
    for (int i = 0; i < n; ++i) {
        b *= 2L * (d + 1);
        if (b > cap) return cap + 1;
    }
    return b;
}

std::optional<std::string> witness_name(const PCPProblem& problem, std::optional<int> idx) {
    if (!idx) return std::nullopt;
    if (*idx < problem.n()) return problem.ring->vars[*idx];
    return "variable " + std::to_string(*idx + 1);
}

} // namespace

Rational parse_rational_arg(const std::string& text) {
    if (text.find('/') != std::string::npos) return Rational::from_string(text);

    std::size_t i = 0;
    const std::size_t len = text.size();
    bool negative = false;
    if (i < len && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

    std::string digits;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    long frac_len = 0;
    if (i < len && text[i] == '.') {
        ++i;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
            ++frac_len;
        }
    }
    if (digits.empty()) throw ParseError("expected a number: " + text, i);

    long exp10 = 0;
    if (i < len && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < len && (text[i] == '+' || text[i] == '-')) exp_neg = text[i++] == '-';
        if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected exponent digits: " + text, i);
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exp10 = exp10 * 10 + (text[i++] - '0');
            if (exp10 > 9999) throw ParseError("exponent out of range: " + text, i);
        }
        if (exp_neg) exp10 = -exp10;
    }
    if (i != len) throw ParseError("trailing characters in number: " + text, i);

    Rational mantissa = Rational::from_string(digits);
    if (negative) mantissa = -mantissa;
    return mantissa * Rational::power_of_ten(static_cast<int>(exp10 - frac_len));
}

HStrategy make_strategy(const std::string& name, std::optional<std::uint64_t> seed,
                        const std::optional<std::string>& matrix_json, bool invert) {
    HStrategy s;
    if (name == "deterministic") {
        s.mode = HMode::deterministic;
    } else if (name == "random") {
        if (!seed) throw ParseError("random strategy requires a seed", 0);
        s.mode = HMode::random;
        s.seed = seed;
    } else if (name == "explicit") {
        if (!matrix_json) throw ParseError("explicit strategy requires a matrix", 0);
        s.mode = HMode::explicit_matrix;
        s.matrix = parse_matrix_file(*matrix_json);
        s.invert_convention = invert;
    } else {
        throw ParseError("unknown strategy: " + name, 0);
    }
    return s;
}

OutputDoc run_task(const PCPProblem& problem, const TaskSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool bench = spec.task == "bench";
    if (spec.task != "solve" && spec.task != "least-norm" && spec.task != "sparse" &&
        spec.task != "check-d0" && spec.task != "copositive" && !bench)
        throw ParseError("unknown task: " + spec.task, 0);

    OutputDoc doc;
    doc.task = spec.task;
    doc.problem_name = problem.name;
    doc.n = problem.n();

    if (spec.task == "check-d0") {
        const D0Result r = classify_d0(problem);
        doc.is_d0 = r.is_d0;
        doc.witness = witness_name(problem, r.witness);
        doc.status = "solved";
        doc.total_seconds = seconds_since(t0);
        return doc;
    }

    StageTimings timings;
    UnivarRep rep;
    PCPProblem prob = problem;
    if (spec.task == "copositive") {
        if (!spec.seed) throw ParseError("task copositive requires a seed", 0);
        CopositiveResult res =
            copositive_solve(problem, spec.eps, *spec.seed, spec.strategy, &timings);
        doc.a = res.a;
        prob = std::move(res.perturbed);
        doc.problem_name = prob.name;
        rep = std::move(res.rep);
    } else {
        rep = univariate_representation(prob, spec.strategy, &timings);
    }

    if (spec.task == "least-norm" || bench) rep = least_norm_representation(std::move(rep));
    std::optional<SparseRep> srep;
    if (spec.task == "sparse" || bench) srep = sparse_representation(rep);

    std::vector<Solution> sols;
    const auto te = std::chrono::steady_clock::now();
    if (spec.task == "solve" || spec.task == "copositive") {
        sols = enumerate_solutions(rep, prob, spec.prec);
    } else if (spec.task == "least-norm") {
        sols = enumerate_least_norm(rep, prob, spec.prec);
    } else if (spec.task == "sparse") {
        auto [k, ss] = enumerate_sparse(*srep, prob, spec.prec);
        doc.k = k;
        sols = std::move(ss);
    } else if (bench) {
        sols = enumerate_solutions(rep, prob, spec.prec);
        doc.sol_ln = static_cast<int>(enumerate_least_norm(rep, prob, spec.prec).size());
        doc.sol_sp = static_cast<int>(enumerate_sparse(*srep, prob, spec.prec).second.size());
        doc.k = srep->k;
    }
    timings.enumeration = seconds_since(te);

    fill_representation(doc, rep);
    if (srep) {
        doc.omega = one_based(srep->omega);
        if (!doc.k) doc.k = srep->k;
    }
    doc.solutions = to_records(sols, rep.w.degree());
    doc.timings = timings;
    doc.status = sols.empty() ? "infeasible" : "solved";
    doc.total_seconds = seconds_since(t0);
    return doc;
}

int run_cli(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool bench = opt.task == "bench";
    OutputDoc doc;
    doc.task = opt.task;
    doc.status = "error";

    auto emit = [&](int code) {
        if (!doc.total_seconds) doc.total_seconds = seconds_since(t0);
        if (bench && !opt.output_path) return code;
        const std::string text = serialize_output(doc);
        if (opt.output_path) {
            std::ofstream f(*opt.output_path, std::ios::binary);
            if (!f) {
                err << "cannot write " << *opt.output_path << "\n";
                return 3;
            }
            f << text;
        } else {
            out << text;
        }
        return code;
    };

    std::optional<PCPProblem> problem;
    try {
        TaskSpec spec;
        spec.task = opt.task;
        const Rational g1 =
            opt.gamma1 ? parse_rational_arg(*opt.gamma1) : Rational::power_of_ten(-10);
        const Rational g2 =
            opt.gamma2 ? parse_rational_arg(*opt.gamma2) : Rational::power_of_ten(bench ? -4 : -6);
        if (g1.sign() <= 0 || !(g1 < g2))
            throw ParseError("precision must satisfy 0 < gamma1 < gamma2", 0);
        spec.prec = make_precision(g1, g2);
        spec.eps = parse_rational_arg(opt.eps);
        if (spec.eps.sign() <= 0) throw ParseError("--eps must be positive", 0);
        spec.seed = opt.seed;
        if (opt.task != "check-d0") {
            std::optional<std::string> matrix_json;
            if (opt.h_matrix_path) matrix_json = read_file(*opt.h_matrix_path);
            spec.strategy = make_strategy(opt.strategy, opt.seed, matrix_json, opt.invert_h);
        }

        if (bench) {
            if (!opt.family || (*opt.family != "p" && *opt.family != "q"))
                throw ParseError("--family must be p or q", 0);
            if (opt.n < 1) throw ParseError("--n must be at least 1", 0);
            if (bezout_ceiling(opt.n, opt.d, 1024) > 1024 && !opt.force)
                throw ParseError("solution-count ceiling exceeds 1024; pass --force to run", 0);
            problem = generate_benchmark(
                *opt.family == "p" ? BenchmarkFamily::p : BenchmarkFamily::q, opt.n, opt.d);
        } else {
            if (!opt.input_path)
                throw ParseError("--input is required for task " + opt.task, 0);
            problem = to_problem(parse_problem_file(read_file(*opt.input_path)));
        }
        if (opt.verbose)
            err << "problem " << problem->name.value_or("<unnamed>") << ", n = " << problem->n()
                << "\n";

        doc = run_task(*problem, spec);

        if (opt.verbose && doc.deg_w) err << "deg w = " << *doc.deg_w << "\n";
        if (opt.verbose && doc.solutions) err << "solutions: " << doc.solutions->size() << "\n";
        if (bench) {
            const StageTimings t = doc.timings.value_or(StageTimings{});
            out << "family=" << *opt.family << " n=" << opt.n << " d=" << opt.d
                << " deg_w=" << doc.deg_w.value_or(-1)
                << " sol=" << (doc.solutions ? doc.solutions->size() : 0)
                << " sol_ln=" << doc.sol_ln.value_or(0) << " sol_sp=" << doc.sol_sp.value_or(0)
                << " groebner=" << t.groebner << "s radical=" << t.radical << "s shape="
                << t.shape << "s enumeration=" << t.enumeration << "s total="
                << seconds_since(t0) << "s\n";
        }
        return emit(0);
    } catch (const NotFiniteError& e) {
        doc.error = e.what();
        if (problem) doc.witness = witness_name(*problem, e.witness());
        err << "not in the finite class: " << e.what() << "\n";
        return emit(2);
    } catch (const CertificationError& e) {
        doc.error = e.what();
        err << "certification failure: " << e.what() << "\n";
        return emit(4);
    } catch (const ParseError& e) {
        doc.error = e.what();
        err << "input error: " << e.what() << "\n";
        return emit(3);
    } catch (const DomainError& e) {
        doc.error = e.what();
        err << "error: " << e.what() << "\n";
        return emit(3);
    } catch (const std::exception& e) {
        doc.error = e.what();
        err << "internal error: " << e.what() << "\n";
        return emit(1);
    }
}

} // namespace pcp
