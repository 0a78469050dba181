#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcp/cli.hpp"
#include "pcp/errors.hpp"

namespace py = pybind11;

namespace {

pcp::TaskSpec make_spec(const std::string& task, const std::string& gamma1,
                        const std::string& gamma2, const std::string& strategy,
                        std::optional<std::uint64_t> seed,
                        const std::optional<std::string>& h_matrix, bool invert_h,
                        const std::string& eps) {
    pcp::TaskSpec spec;
    spec.task = task;
    spec.prec = pcp::make_precision(pcp::parse_rational_arg(gamma1),
                                    pcp::parse_rational_arg(gamma2));
    spec.eps = pcp::parse_rational_arg(eps);
    spec.seed = seed;
    if (task != "check-d0") spec.strategy = pcp::make_strategy(strategy, seed, h_matrix, invert_h);
    return spec;
}

std::string run_on_text(const std::string& problem_json, const pcp::TaskSpec& spec) {
    const pcp::PCPProblem problem =
        pcp::to_problem(pcp::parse_problem_file(problem_json));
    return pcp::serialize_output(pcp::run_task(problem, spec));
}

} // namespace

PYBIND11_MODULE(pcpsolve, m) {
    m.doc() = "Exact solver for polynomial complementarity problems";

    py::register_exception<pcp::NotFiniteError>(m, "NotFiniteError", PyExc_ValueError);
    py::register_exception<pcp::CertificationError>(m, "CertificationError",
                                                    PyExc_RuntimeError);
    py::register_exception<pcp::ParseError>(m, "InputError", PyExc_ValueError);

    m.def(
        "check_d0",
        [](const std::string& problem_json) {
            return run_on_text(problem_json,
                               make_spec("check-d0", "1e-10", "1e-6", "deterministic",
                                         std::nullopt, std::nullopt, true, "1e-6"));
        },
        py::arg("problem_json"),
        "Finite-solution-class test; returns the result document as JSON text.");

    const auto def_solver = [&m](const char* name, const char* task, const char* doc) {
        m.def(
            name,
            [task](const std::string& problem_json, const std::string& strategy,
                   std::optional<std::uint64_t> seed, const std::optional<std::string>& h_matrix,
                   bool invert_h, const std::string& gamma1, const std::string& gamma2) {
                return run_on_text(problem_json,
                                   make_spec(task, gamma1, gamma2, strategy, seed, h_matrix,
                                             invert_h, "1e-6"));
            },
            py::arg("problem_json"), py::arg("strategy") = "deterministic",
            py::arg("seed") = std::nullopt, py::arg("h_matrix") = std::nullopt,
            py::arg("invert_h") = true, py::arg("gamma1") = "1e-10",
            py::arg("gamma2") = "1e-6", doc);
    };
    def_solver("solve", "solve",
               "Univariate representation plus certified solution enumeration.");
    def_solver("least_norm", "least-norm",
               "Solutions of minimal Euclidean norm with the norm polynomial.");
    def_solver("sparse", "sparse",
               "Solutions with the maximal number of zero coordinates.");

    m.def(
        "copositive",
        [](const std::string& problem_json, std::uint64_t seed, const std::string& eps,
           const std::string& strategy, const std::string& gamma1, const std::string& gamma2) {
            return run_on_text(problem_json, make_spec("copositive", gamma1, gamma2, strategy,
                                                       seed, std::nullopt, true, eps));
        },
        py::arg("problem_json"), py::arg("seed"), py::arg("eps") = "1e-6",
        py::arg("strategy") = "deterministic", py::arg("gamma1") = "1e-10",
        py::arg("gamma2") = "1e-6",
        "Approximate solve through a small positive perturbation drawn from seed.");

    m.def(
        "bench",
        [](const std::string& family, int n, int d, const std::string& strategy,
           std::optional<std::uint64_t> seed, const std::string& gamma1,
           const std::string& gamma2) {
            if (family != "p" && family != "q")
                throw pcp::ParseError("family must be p or q", 0);
            const pcp::PCPProblem problem = pcp::generate_benchmark(
                family == "p" ? pcp::BenchmarkFamily::p : pcp::BenchmarkFamily::q, n, d);
            return pcp::serialize_output(pcp::run_task(
                problem,
                make_spec("bench", gamma1, gamma2, strategy, seed, std::nullopt, true, "1e-6")));
        },
        py::arg("family"), py::arg("n"), py::arg("d") = 2,
        py::arg("strategy") = "deterministic", py::arg("seed") = std::nullopt,
        py::arg("gamma1") = "1e-10", py::arg("gamma2") = "1e-4",
        "Generated-family run reporting all representation and solution counts.");
}
