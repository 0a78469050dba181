#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcp/matrix.hpp"
#include "pcp/mpoly.hpp"
#include "pcp/upoly.hpp"

namespace pcp {

// Complementarity problem data: find x >= 0 with f(x) >= 0 and <x, f(x)> = 0,
// where f maps R^n to R^n polynomially.
struct PCPProblem {
    RingPtr ring; // the n solution variables
    std::vector<MPoly> f;
    std::optional<std::string> name;

    int n() const { return ring->nvars(); }
    int max_degree() const;
};

PCPProblem make_problem(RingPtr ring, std::vector<MPoly> f,
                        std::optional<std::string> name = std::nullopt);

// Choice of the coordinate change x = H y that makes the first new
// coordinate separate the solution variety's points.
enum class HMode { deterministic, random, explicit_matrix };

struct HStrategy {
    HMode mode = HMode::deterministic;
    // Required for random mode.
    std::optional<std::uint64_t> seed;
    // Required for explicit mode.
    std::optional<RationalMatrix> matrix;
    // When true, an explicit matrix M is interpreted through its inverse,
    // H = M^-1, matching the deterministic construction; when false M is H
    // itself.
    bool invert_convention = true;
};

// Parameterization of the lifted solution variety by a single parameter t:
// its points are (t, u(t)) in changed coordinates for roots t of w, and the
// solution coordinates are x_i = v_i(t).
struct UnivarRep {
    UPoly w;
    std::vector<UPoly> v; // one per solution variable, deg < deg w
    // Squared solution norm as a polynomial in t; set by the least-norm step.
    std::optional<UPoly> phi;
    RationalMatrix h;         // x = h * y
    RationalMatrix h_inverse; // y = h_inverse * x
    std::optional<long> s;    // deterministic family parameter actually used
    std::optional<std::uint64_t> seed;
    int candidates_tried = 1;

    int deg_w() const { return w.degree(); }
};

// Zero-coordinate patterns of the sparsest solutions: every solution whose
// zero set is a member of omega has exactly k zero coordinates, and no
// solution has more. k = -1 with empty omega means there are no solutions.
struct SparseRep {
    UnivarRep base;
    int k = -1;
    std::vector<std::vector<int>> omega; // ascending 0-based index lists
};

// Wall-clock seconds per stage, filled by the operations that run the stage.
struct StageTimings {
    double groebner = 0;
    double radical = 0;
    double shape = 0;
    double enumeration = 0;
};

// Generators x_i * f_i of the complementarity ideal over the solution ring.
std::vector<MPoly> build_ideal_f(const PCPProblem& p);

// The lifted ideal over variables (x_1..x_n, z_1..z_2n): complementarity
// products plus the sign-encoding relations z_i^2 - x_i and z_{n+i}^2 - f_i.
std::vector<MPoly> build_ideal_fz(const PCPProblem& p);
RingPtr slack_ring(const PCPProblem& p);

struct D0Result {
    bool is_d0 = false;
    // Variable index witnessing failure, when not finite.
    std::optional<int> witness;
};
// Whether the complementarity ideal has finitely many complex solutions.
D0Result classify_d0(const PCPProblem& p);

// Raised when a solve-type operation meets a problem outside that class.
class NotFiniteError : public DomainError {
public:
    NotFiniteError(const std::string& what, std::optional<int> witness)
        : DomainError(what), witness_(witness) {}
    std::optional<int> witness() const { return witness_; }

private:
    std::optional<int> witness_;
};

// Full pipeline for a finite problem: lifted ideal, multiplicity-free basis,
// then a separating coordinate change from the strategy. Throws
// NotFiniteError outside the finite class and DomainError when the strategy
// yields no separating form (possible only for an explicit matrix).
UnivarRep univariate_representation(const PCPProblem& p, const HStrategy& strategy,
                                    StageTimings* timings = nullptr);

// Adds phi = sum_i v_i^2 mod w.
UnivarRep least_norm_representation(UnivarRep rep);

// Locates the maximal zero-coordinate count k and all patterns realizing it,
// by gcd root counting through descending pattern sizes.
SparseRep sparse_representation(const UnivarRep& rep);

struct CopositiveResult {
    std::vector<Rational> a; // the perturbation actually used
    PCPProblem perturbed;
    UnivarRep rep;
    int draws = 1;
};
// Solves f + a for a small random positive perturbation a with |a|_1 < eps,
// retrying the draw until the perturbed problem is finite.
CopositiveResult copositive_solve(const PCPProblem& p, const Rational& eps,
                                  std::uint64_t seed, const HStrategy& strategy,
                                  StageTimings* timings = nullptr);

enum class BenchmarkFamily { p, q };

// Benchmark generators: family p has f_i = prod_j (j - x_i) for j = 1..d,
// family q has f_i = x_i^2 - 3 x_i + 1 (d fixed at 2).
PCPProblem generate_benchmark(BenchmarkFamily family, int n, int d);

} // namespace pcp
