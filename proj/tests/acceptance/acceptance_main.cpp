// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status equal to
// the number of failures. --stretch adds the large benchmark rows that are
// excluded from the default run.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcp/enumerate.hpp"
#include "pcp/groebner.hpp"
#include "pcp/pipeline.hpp"
#include "pcp/rng.hpp"
#include "pcp/roots.hpp"
#include "pcp/zero_dim.hpp"

using namespace pcp;

namespace {

int g_failures = 0;
long g_certified_solutions = 0;
long g_certificate_failures = 0;

struct InstanceRecord {
    std::string label;
    int n = 0;
    int d = 0;
    int deg_w = 0;
    int real_roots = 0;
    int n_sols = 0;
    bool product_family = false;
};
std::vector<InstanceRecord> g_instances;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

Rational tol(int digits) { return Rational::power_of_ten(-digits); }

PrecisionPair precision(int gamma2_digits) {
    return make_precision(Rational::power_of_ten(-10), tol(gamma2_digits));
}

// Independent re-check of every reported enclosure certificate; tallied for
// the certification criterion.
void verify_certificates(const std::vector<Solution>& sols, const PCPProblem& p,
                         const Rational& gamma2) {
    for (const auto& s : sols) {
        bool ok = static_cast<int>(s.x.size()) == p.n();
        for (int i = 0; ok && i < p.n(); ++i) {
            const Interval& xi = s.x[static_cast<std::size_t>(i)];
            Interval fi = p.f[static_cast<std::size_t>(i)].eval_interval(s.x);
            Interval product = xi * fi;
            if (!product.contains_zero()) ok = false;
            if (product.magnitude() > s.residual_bound) ok = false;
            if (xi.lo < -gamma2 || fi.lo < -gamma2) ok = false;
        }
        ++g_certified_solutions;
        if (!ok) {
            ++g_certificate_failures;
            throw std::runtime_error("solution fails its certificate re-check");
        }
    }
}

void record_instance(const std::string& label, const PCPProblem& p, const UnivarRep& rep,
                     int n_sols, bool product_family) {
    g_instances.push_back({label, p.n(), p.max_degree(), rep.w.degree(),
                           count_real_roots(rep.w), n_sols, product_family});
}

template <typename Body>
void criterion(const std::string& name, std::optional<double> budget_seconds, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    std::string reason;
    bool ok = true;
    try {
        body(detail);
    } catch (const CertificationError& e) {
        ++g_certificate_failures;
        ok = false;
        reason = std::string("certification: ") + e.what();
    } catch (const std::exception& e) {
        ok = false;
        reason = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_seconds && secs >= *budget_seconds) {
        ok = false;
        std::ostringstream r;
        r << "took " << secs << " s, budget " << *budget_seconds << " s";
        reason = r.str();
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) line << ": " << detail;
    if (!ok) line << " -- " << reason;
    line << " (" << std::fixed << std::setprecision(1) << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

// Solve + all three enumerations the way the bench task does, with the bench
// default gamma2 = 1e-4.
struct TableRow {
    int deg_w = 0;
    int sols = 0;
    int sols_ln = 0;
    int sols_sp = 0;
};

TableRow table_row(const PCPProblem& p, const std::string& label, bool product_family) {
    PrecisionPair prec = precision(4);
    UnivarRep rep = least_norm_representation(univariate_representation(p, HStrategy{}));
    auto sols = enumerate_solutions(rep, p, prec);
    verify_certificates(sols, p, prec.gamma2);
    auto ln = enumerate_least_norm(rep, p, prec);
    verify_certificates(ln, p, prec.gamma2);
    SparseRep sp = sparse_representation(rep);
    auto [k, ssols] = enumerate_sparse(sp, p, prec);
    verify_certificates(ssols, p, prec.gamma2);
    record_instance(label, p, rep, static_cast<int>(sols.size()), product_family);
    return {rep.deg_w(), static_cast<int>(sols.size()), static_cast<int>(ln.size()),
            static_cast<int>(ssols.size())};
}

MPoly upoly_to_mpoly(const UPoly& p, const RingPtr& ring) {
    MPoly out = MPoly::zero(ring);
    MPoly x = MPoly::variable(ring, 0);
    MPoly power = MPoly::constant(ring, Rational(1));
    for (int i = 0; i <= p.degree(); ++i) {
        out += p.coeff(i) * power;
        power = power * x;
    }
    return out;
}

// Sign-definite refinement: shrink a root bracket until it excludes zero or
// pins the root exactly.
IsolatedRoot settle_sign(const UPoly& sf, IsolatedRoot r) {
    while (!r.is_exact() && r.lo.sign() < 0 && r.hi.sign() > 0)
        r = refine_root(sf, r, r.width() / Rational(4));
    return r;
}

MPoly s_poly(const MPoly& f, const MPoly& g) {
    const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    const MPoly a = f.mul_term(monomial_div(l, f.leading_monomial()),
                               f.leading_coeff().inv());
    const MPoly b = g.mul_term(monomial_div(l, g.leading_monomial()),
                               g.leading_coeff().inv());
    return a - b;
}

MPoly rand_poly(DeterministicRng& rng, const RingPtr& ring, int max_deg, int max_terms,
                long span) {
    std::vector<MPoly::Term> terms;
    const int nt = static_cast<int>(rng.uniform(1, max_terms));
    for (int i = 0; i < nt; ++i) {
        Monomial m(static_cast<std::size_t>(ring->nvars()), 0);
        int budget = max_deg;
        for (auto& e : m) {
            e = static_cast<std::uint32_t>(rng.uniform(0, budget));
            budget -= static_cast<int>(e);
        }
        terms.push_back({std::move(m), Rational(rng.uniform(0, 2 * span)) - Rational(span)});
    }
    return MPoly::from_terms(ring, std::move(terms));
}

// Random generator vanishing at the origin, so drawn ideals stay proper and
// their bases keep several generators.
MPoly rand_origin_poly(DeterministicRng& rng, const RingPtr& ring, int max_deg,
                       int max_terms, long span) {
    MPoly p = rand_poly(rng, ring, max_deg, max_terms, span);
    return p - MPoly::constant(ring, p.constant_coeff());
}

UPoly rand_upoly(DeterministicRng& rng, int max_deg, long span) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(rng.uniform(0, max_deg));
    for (int i = 0; i <= deg; ++i) c.emplace_back(rng.uniform(-span, span));
    return UPoly(std::move(c));
}

long power_bound(int n, int d) {
    long b = 1;
    for (int i = 0; i < n; ++i) b *= 2L * (d + 1);
    return b;
}

// ---------------------------------------------------------------------------

void worked_example(std::string& detail) {
    RingPtr r = make_ring({"x1", "x2"}, OrderKind::grevlex);
    MPoly one = MPoly::constant(r, Rational(1));
    PCPProblem p = make_problem(
        r, {MPoly::variable(r, 1) - one, MPoly::variable(r, 0) - one}, "swapped_linear");

    RationalMatrix h = RationalMatrix::identity(6);
    for (int j = 0; j < 6; ++j) h.at(0, j) = Rational(j + 1);
    HStrategy strat{HMode::explicit_matrix, std::nullopt, h, false};

    UnivarRep rep = univariate_representation(p, strat);
    const UPoly expected_w{Rational(0),     Rational(-11616), Rational(-5324),
                           Rational(-11228), Rational(-5247),  Rational(392),
                           Rational(78),     Rational(4),      Rational(1)};
    require(rep.w == expected_w, "w does not match the expected coefficients");
    require(count_real_roots(rep.w) == 4, "expected exactly 4 real roots of w");
    for (long root : {-8L, -2L, 0L, 6L}) {
        require(rep.w.evaluate(Rational(root)) == Rational(0),
                "expected root " + std::to_string(root) + " of w");
        require(rep.v[0].evaluate(Rational(root)) == Rational(1),
                "v1 must be 1 at every real root");
    }
    require(rep.v.size() == 2 && rep.v[1] == rep.v[0], "v2 must equal v1");

    PrecisionPair prec = precision(6);
    auto sols = enumerate_solutions(rep, p, prec);
    verify_certificates(sols, p, prec.gamma2);
    require(sols.size() == 1, "expected the single solution (1,1)");
    for (const Rational& c : sols[0].midpoint())
        require((c - Rational(1)).abs() < tol(6), "solution must be (1,1) within 1e-6");
    record_instance("swapped_linear", p, rep, 1, false);
    detail = "deg_w=8 real_roots=4 v2=v1 sol=(1,1)";
}

void product_family_row(std::string& detail) {
    TableRow row = table_row(generate_benchmark(BenchmarkFamily::p, 2, 2), "p_n2_d2", true);
    std::ostringstream d;
    d << "deg_w=" << row.deg_w << " sol=" << row.sols << " sol_ln=" << row.sols_ln
      << " sol_sp=" << row.sols_sp;
    detail = d.str();
    require(row.deg_w == 36, "expected deg w = 36");
    require(row.sols == 9, "expected 9 solutions");
    require(row.sols_ln == 1, "expected 1 least-norm solution");
    require(row.sols_sp == 1, "expected 1 sparse solution");
}

void product_family_stretch(std::string& detail) {
    TableRow row = table_row(generate_benchmark(BenchmarkFamily::p, 2, 4), "p_n2_d4", true);
    std::ostringstream d;
    d << "deg_w=" << row.deg_w << " sol=" << row.sols << " sol_ln=" << row.sols_ln
      << " sol_sp=" << row.sols_sp;
    detail = d.str();
    require(row.deg_w == 100, "expected deg w = 100");
    require(row.sols == 25, "expected 25 solutions");
    require(row.sols_ln == 1, "expected 1 least-norm solution");
    require(row.sols_sp == 1, "expected 1 sparse solution");
}

void quadratic_family_rows(std::string& detail) {
    TableRow r1 = table_row(generate_benchmark(BenchmarkFamily::q, 1, 2), "q_n1", false);
    TableRow r2 = table_row(generate_benchmark(BenchmarkFamily::q, 2, 2), "q_n2", false);
    std::ostringstream d;
    d << "n=1: deg_w=" << r1.deg_w << " sol=" << r1.sols << "; n=2: deg_w=" << r2.deg_w
      << " sol=" << r2.sols;
    detail = d.str();
    require(r1.deg_w == 6 && r1.sols == 3, "expected (6, 3) at n = 1");
    require(r2.deg_w == 36 && r2.sols == 9, "expected (36, 9) at n = 2");
    require(r1.sols_ln == 1 && r1.sols_sp == 1, "expected ln = sp = 1 at n = 1");
    require(r2.sols_ln == 1 && r2.sols_sp == 1, "expected ln = sp = 1 at n = 2");
}

void quadratic_family_stretch(std::string& detail) {
    // Largest row: representation plus plain enumeration only; the sparse
    // and least-norm scans are out of budget at this size.
    PCPProblem p = generate_benchmark(BenchmarkFamily::q, 3, 2);
    PrecisionPair prec = precision(4);
    UnivarRep rep = univariate_representation(p, HStrategy{});
    auto sols = enumerate_solutions(rep, p, prec);
    verify_certificates(sols, p, prec.gamma2);
    record_instance("q_n3", p, rep, static_cast<int>(sols.size()), false);
    std::ostringstream d;
    d << "deg_w=" << rep.deg_w() << " sol=" << sols.size();
    detail = d.str();
    require(rep.deg_w() == 216, "expected deg w = 216");
    require(sols.size() == 27, "expected 27 solutions");
}

void perturbed_circle(std::string& detail) {
    RingPtr r = make_ring({"x1", "x2"}, OrderKind::grevlex);
    MPoly x1 = MPoly::variable(r, 0);
    MPoly x2 = MPoly::variable(r, 1);
    MPoly base = x1 * x1 + x2 * x2 - MPoly::constant(r, Rational(1));
    PCPProblem p = make_problem(r,
                                {base + MPoly::constant(r, Rational(1, 1000000)),
                                 base + MPoly::constant(r, Rational(1, 100000))},
                                "circle_perturbed");
    require(classify_d0(p).is_d0, "perturbed problem must be finite");

    PrecisionPair prec = precision(6);
    UnivarRep rep = univariate_representation(p, HStrategy{});
    auto sols = enumerate_solutions(rep, p, prec);
    verify_certificates(sols, p, prec.gamma2);
    require(sols.size() == 1, "expected exactly one solution");
    auto mid = sols[0].midpoint();
    Rational d1 = mid[0] - Rational(1);
    Rational d2 = mid[1];
    require(d1 * d1 + d2 * d2 < tol(3) * tol(3), "solution must lie within 1e-3 of (1,0)");
    record_instance("circle_perturbed", p, rep, 1, false);
    std::ostringstream d;
    d << "deg_w=" << rep.deg_w() << " sol~(" << mid[0].decimal(8) << ", 0) within 1e-3 of (1,0)";
    detail = d.str();
}

void univariate_oracle(std::string& detail) {
    DeterministicRng rng(2026);
    PrecisionPair prec = precision(6);
    const Rational close = tol(6);
    int solved = 0;
    int attempts = 0;

    while (solved < 50) {
        require(++attempts <= 500, "too many rejected draws");
        std::vector<Rational> coeffs;
        for (int i = 0; i < 4; ++i) coeffs.emplace_back(rng.uniform(-5, 5));
        UPoly f(std::move(coeffs));
        if (f.is_zero()) continue;

        RingPtr ring = make_ring({"x"}, OrderKind::grevlex);
        PCPProblem p = make_problem(ring, {upoly_to_mpoly(f, ring)});
        if (!classify_d0(p).is_d0) continue;

        // Oracle solution set: 0 when f(0) >= 0, plus the positive real
        // roots of f (where f vanishes, so feasibility is automatic).
        std::vector<Rational> expected;
        if (f.evaluate(Rational(0)).sign() >= 0) expected.push_back(Rational(0));
        if (f.degree() >= 1) {
            UPoly sf = squarefree_part(f);
            for (auto& root : isolate_real_roots(f, tol(12))) {
                IsolatedRoot settled = settle_sign(sf, root);
                if (settled.lo.sign() > 0) expected.push_back(settled.midpoint());
            }
        }
        std::sort(expected.begin(), expected.end());

        UnivarRep rep =
            least_norm_representation(univariate_representation(p, HStrategy{}));
        auto sols = enumerate_solutions(rep, p, prec);
        verify_certificates(sols, p, prec.gamma2);
        require(sols.size() == expected.size(), "solution count disagrees with oracle");
        for (std::size_t i = 0; i < sols.size(); ++i)
            require((sols[i].midpoint()[0] - expected[i]).abs() < close,
                    "solution value disagrees with oracle");

        auto ln = enumerate_least_norm(rep, p, prec);
        verify_certificates(ln, p, prec.gamma2);
        if (expected.empty()) {
            require(ln.empty(), "least-norm nonempty on infeasible problem");
        } else {
            require(ln.size() == 1, "expected a unique least-norm solution");
            require((ln[0].midpoint()[0] - expected.front()).abs() < close,
                    "least-norm value disagrees with oracle");
        }

        SparseRep sp = sparse_representation(rep);
        auto [k, ssols] = enumerate_sparse(sp, p, prec);
        verify_certificates(ssols, p, prec.gamma2);
        const bool zero_sol = !expected.empty() && expected.front().is_zero();
        if (expected.empty()) {
            require(k == -1 && ssols.empty(), "sparse output nonempty on infeasible problem");
        } else if (zero_sol) {
            require(k == 1, "expected sparsity level 1 when 0 solves");
            require(ssols.size() == 1 && ssols[0].x[0].lo.is_zero() &&
                        ssols[0].x[0].hi.is_zero(),
                    "sparse solution must pin the origin exactly");
        } else {
            require(k == 0, "expected sparsity level 0 without a zero solution");
            require(ssols.size() == expected.size(),
                    "sparse set must be the whole solution set at level 0");
        }

        record_instance("rand_univar", p, rep, static_cast<int>(sols.size()), false);
        ++solved;
    }
    std::ostringstream d;
    d << solved << " problems, " << attempts << " draws";
    detail = d.str();
}

void degree_and_count_bounds(std::string& detail) {
    require(g_instances.size() >= 50, "bound suite needs the solved instances");
    for (const auto& inst : g_instances) {
        const long cap = power_bound(inst.n, inst.d);
        require(inst.deg_w <= cap,
                inst.label + ": deg w exceeds 2^n (d+1)^n = " + std::to_string(cap));
        require(inst.real_roots <= (1L << inst.n) * inst.n_sols,
                inst.label + ": more real roots than 2^n times the solution count");
        if (inst.product_family) {
            long expected = 1;
            for (int i = 0; i < inst.n; ++i) expected *= inst.d + 1;
            require(inst.n_sols == expected,
                    inst.label + ": product family must have (d+1)^n solutions");
        }
    }
    std::ostringstream d;
    d << g_instances.size() << " instances checked";
    detail = d.str();
}

void algebra_properties(std::string& detail) {
    const int cases = 200;

    // Every produced basis satisfies the S-polynomial criterion.
    {
        DeterministicRng rng(11);
        RingPtr r = make_ring({"x", "y"}, OrderKind::grevlex);
        long pairs = 0;
        for (int it = 0; it < cases; ++it) {
            std::vector<MPoly> gens;
            const int ng = static_cast<int>(rng.uniform(2, 4));
            for (int i = 0; i < ng; ++i) gens.push_back(rand_origin_poly(rng, r, 3, 4, 3));
            GroebnerBasis g = buchberger(gens);
            for (std::size_t i = 0; i < g.generators.size(); ++i)
                for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
                    ++pairs;
                    require(normal_form(s_poly(g.generators[i], g.generators[j]),
                                        g.generators)
                                .is_zero(),
                            "S-polynomial does not reduce to zero");
                }
        }
        require(pairs >= 200, "too few generator pairs exercised");
    }

    // The reduced basis is independent of generator order.
    {
        DeterministicRng rng(12);
        RingPtr r = make_ring({"x", "y"}, OrderKind::grevlex);
        for (int it = 0; it < cases; ++it) {
            std::vector<MPoly> gens;
            const int ng = static_cast<int>(rng.uniform(2, 4));
            for (int i = 0; i < ng; ++i) gens.push_back(rand_origin_poly(rng, r, 2, 3, 3));
            GroebnerBasis a = buchberger(gens);
            for (std::size_t i = gens.size(); i > 1; --i)
                std::swap(gens[i - 1],
                          gens[static_cast<std::size_t>(rng.uniform(0, long(i) - 1))]);
            GroebnerBasis b = buchberger(gens);
            require(a.generators.size() == b.generators.size(),
                    "shuffled generators changed the basis size");
            for (std::size_t i = 0; i < a.generators.size(); ++i)
                require(a.generators[i] == b.generators[i],
                        "shuffled generators changed the reduced basis");
        }
    }

    // Stripping multiplicities is idempotent.
    {
        DeterministicRng rng(13);
        RingPtr r = make_ring({"x", "y"}, OrderKind::grevlex);
        for (int it = 0; it < cases; ++it) {
            std::vector<MPoly> gens;
            for (int v = 0; v < 2; ++v) {
                MPoly g = MPoly::constant(r, Rational(1));
                const int roots = static_cast<int>(rng.uniform(1, 2));
                for (int k = 0; k < roots; ++k) {
                    MPoly lin = MPoly::variable(r, v) -
                                MPoly::constant(r, Rational(rng.uniform(-2, 2)));
                    const int mult = static_cast<int>(rng.uniform(1, 3));
                    for (int m = 0; m < mult; ++m) g = g * lin;
                }
                gens.push_back(std::move(g));
            }
            GroebnerBasis once = radical(buchberger(gens));
            GroebnerBasis twice = radical(once);
            require(once.generators.size() == twice.generators.size(),
                    "radical changed on the second pass");
            for (std::size_t i = 0; i < once.generators.size(); ++i)
                require(once.generators[i] == twice.generators[i],
                        "radical is not idempotent");
        }
    }

    // Squarefree parts and gcds.
    {
        DeterministicRng rng(14);
        for (int it = 0; it < cases; ++it) {
            UPoly a = rand_upoly(rng, 4, 4);
            UPoly b = rand_upoly(rng, 4, 4);
            if (a.is_zero() || b.is_zero()) {
                a += UPoly{Rational(1), Rational(1)};
                b += UPoly{Rational(2), Rational(1)};
            }
            UPoly c = rand_upoly(rng, 3, 3);
            if (c.is_zero()) c = UPoly{Rational(1), Rational(2)};
            UPoly g = ugcd(a, b);
            require(udivrem(a, g).second.is_zero(), "gcd does not divide a");
            require(udivrem(b, g).second.is_zero(), "gcd does not divide b");
            require(ugcd(a * c, b * c) == (ugcd(a, b) * c).monic(),
                    "gcd does not respect a common factor");
            UPoly sf = squarefree_part(a * a * b);
            UPoly expected = squarefree_part(squarefree_part(a) * squarefree_part(b) * g);
            require(sf == expected, "squarefree part of a^2 b mismatch");
            require(squarefree_part(sf) == sf, "squarefree part is not idempotent");
        }
    }

    // Root counts add over adjacent half-open intervals. Integer coefficients
    // put every real root inside (-12, 12] by the Cauchy bound, so the outer
    // count also matches the global one.
    {
        DeterministicRng rng(15);
        long roots_seen = 0;
        for (int it = 0; it < cases; ++it) {
            UPoly p = rand_upoly(rng, 6, 5);
            if (p.is_zero()) p = UPoly{Rational(0), Rational(1)};
            const Rational lo(rng.uniform(-12, -1));
            const Rational hi(rng.uniform(1, 12));
            const Rational mid(rng.uniform(-1, 1));
            require(sturm_count(p, lo, hi) ==
                        sturm_count(p, lo, mid) + sturm_count(p, mid, hi),
                    "root count is not additive");
            require(sturm_count(p, Rational(-13), Rational(13)) == count_real_roots(p),
                    "bounded count misses a root inside the Cauchy bound");
            roots_seen += count_real_roots(p);
        }
        require(roots_seen >= 100, "too few real roots exercised");
    }

    // Parameterized systems survive the trip through generators and back.
    {
        DeterministicRng rng(16);
        for (int it = 0; it < cases; ++it) {
            const int extra = static_cast<int>(rng.uniform(1, 2));
            std::vector<std::string> names{"t"};
            for (int v = 0; v < extra; ++v) names.push_back(std::string(1, char('a' + v)));
            RingPtr ring = make_ring(names, OrderKind::lex);

            ShapeBasis s;
            const int deg = static_cast<int>(rng.uniform(2, 4));
            std::vector<Rational> wc;
            for (int i = 0; i < deg; ++i) wc.emplace_back(rng.uniform(-4, 4));
            wc.emplace_back(1);
            s.w = UPoly(std::move(wc));
            for (int v = 0; v < extra; ++v) s.u.push_back(rand_upoly(rng, deg - 1, 4));

            GroebnerBasis g = buchberger(shape_to_generators(s, ring));
            auto back = try_shape_position(g);
            require(back.has_value(), "generated shape system lost its form");
            require(back->w == s.w, "shape round-trip changed w");
            require(back->u.size() == s.u.size(), "shape round-trip changed arity");
            for (std::size_t i = 0; i < s.u.size(); ++i)
                require(back->u[i] == s.u[i], "shape round-trip changed a coordinate");
        }
    }

    std::ostringstream d;
    d << "6 suites x " << cases << " cases";
    detail = d.str();
}

void certification(std::string& detail) {
    std::ostringstream d;
    d << g_certified_solutions << " solutions certified, " << g_certificate_failures
      << " failures";
    detail = d.str();
    require(g_certified_solutions > 0, "no solutions were certified");
    require(g_certificate_failures == 0, "certificate failures occurred");
}

} // namespace

int main(int argc, char** argv) {
    bool stretch = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;

    criterion("worked-example", 10.0, worked_example);
    criterion("product-family-table", 300.0, product_family_row);
    if (stretch) criterion("product-family-stretch", 3600.0, product_family_stretch);
    criterion("quadratic-family-table", 300.0, quadratic_family_rows);
    if (stretch) criterion("quadratic-family-stretch", 7200.0, quadratic_family_stretch);
    criterion("perturbed-circle", 60.0, perturbed_circle);
    criterion("univariate-oracle", std::nullopt, univariate_oracle);
    criterion("degree-and-count-bounds", std::nullopt, degree_and_count_bounds);
    criterion("algebra-properties", std::nullopt, algebra_properties);
    criterion("certification", std::nullopt, certification);

    if (g_failures != 0) std::cout << g_failures << " criteria failed" << std::endl;
    return g_failures;
}
