#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pcp/enumerate.hpp"
#include "pcp/pipeline.hpp"
#include "pcp/upoly.hpp"

using namespace pcp;

namespace {

PrecisionPair default_precision() {
    return make_precision(Rational::power_of_ten(-10), Rational::power_of_ten(-6));
}

Rational coordinate_target(const UnivarRep& rep, int n, const PrecisionPair& prec) {
    Rational by_sep = prec.gamma2 / Rational(4L * n);
    Rational by_digits = Rational::power_of_ten(-(10 + std::max(rep.w.degree(), 0)));
    return min(by_sep, by_digits);
}

// Enclosure widths at target, products straddling zero within the reported
// residual, output sorted by midpoint.
void check_well_formed(const std::vector<Solution>& sols, const UnivarRep& rep,
                       const PCPProblem& p, const PrecisionPair& prec) {
    Rational target = coordinate_target(rep, p.n(), prec);
    for (const auto& s : sols) {
        REQUIRE(static_cast<int>(s.x.size()) == p.n());
        CHECK(s.residual_bound.sign() >= 0);
        for (int i = 0; i < p.n(); ++i) {
            const Interval& xi = s.x[static_cast<std::size_t>(i)];
            CHECK(xi.width() <= target);
            Interval fi = p.f[static_cast<std::size_t>(i)].eval_interval(s.x);
            Interval product = xi * fi;
            CHECK(product.contains_zero());
            CHECK(product.magnitude() <= s.residual_bound);
            CHECK(xi.lo >= -prec.gamma2);
            CHECK(fi.lo >= -prec.gamma2);
        }
    }
    for (std::size_t i = 1; i < sols.size(); ++i)
        CHECK(sols[i - 1].midpoint()[0] <= sols[i].midpoint()[0]);
}

} // namespace

TEST_CASE("precision pair validation") {
    CHECK_THROWS_AS(make_precision(Rational(0), Rational(1)), StructuralError);
    CHECK_THROWS_AS(make_precision(Rational(1), Rational(1)), StructuralError);
    CHECK_THROWS_AS(make_precision(Rational(1, 2), Rational(1, 4)), StructuralError);
    CHECK_THROWS_AS(make_precision(Rational(-1), Rational(1)), StructuralError);
    PrecisionPair ok = make_precision(Rational(1, 4), Rational(1, 2));
    CHECK(ok.gamma1 == Rational(1, 4));
}

TEST_CASE("quadratic family solutions against the algebraic roots") {
    PCPProblem p = generate_benchmark(BenchmarkFamily::q, 1, 2);
    PrecisionPair prec = default_precision();
    UnivarRep rep = univariate_representation(p, HStrategy{});
    auto sols = enumerate_solutions(rep, p, prec);

    // x f = x (x^2 - 3x + 1): solutions 0 and (3 +- sqrt 5)/2.
    REQUIRE(sols.size() == 3);
    check_well_formed(sols, rep, p, prec);

    CHECK(sols[0].x[0].contains(Rational(0)));
    for (int i = 1; i < 3; ++i) {
        const Interval& xi = sols[static_cast<std::size_t>(i)].x[0];
        Rational glo = Rational(1) - Rational(3) * xi.lo + xi.lo * xi.lo;
        Rational ghi = Rational(1) - Rational(3) * xi.hi + xi.hi * xi.hi;
        CHECK((glo * ghi).sign() <= 0);
    }
    CHECK((sols[1].midpoint()[0] - Rational(38196601125L, 100000000000L)).abs() <
          Rational::power_of_ten(-9));
    CHECK(sols[1].midpoint()[0] > Rational(38, 100));
    CHECK(sols[1].midpoint()[0] < Rational(39, 100));
    CHECK(sols[2].midpoint()[0] > Rational(261, 100));
    CHECK(sols[2].midpoint()[0] < Rational(262, 100));
}

TEST_CASE("lifted multiplicity merges to one solution") {
    // f = (x2 - 1, x1 - 1): the complementarity variety is {(0,0), (1,1)},
    // each lifting to four slack points. Over the infeasible origin the signs
    // force z complex, so only the four points over (1,1) are real and they
    // all map back to the same coordinates.
    RingPtr r = make_ring({"x1", "x2"}, OrderKind::grevlex);
    MPoly x1 = MPoly::variable(r, 0);
    MPoly x2 = MPoly::variable(r, 1);
    MPoly one = MPoly::constant(r, Rational(1));
    PCPProblem p = make_problem(r, {x2 - one, x1 - one});

    PrecisionPair prec = default_precision();
    UnivarRep rep = univariate_representation(p, HStrategy{});
    CHECK(rep.deg_w() == 8);

    auto sols = enumerate_solutions(rep, p, prec);
    REQUIRE(sols.size() == 1);
    check_well_formed(sols, rep, p, prec);
    for (const Rational& c : sols[0].midpoint())
        CHECK((c - Rational(1)).abs() < Rational::power_of_ten(-6));
}

TEST_CASE("least-norm selection") {
    PrecisionPair prec = default_precision();
    {
        PCPProblem p = generate_benchmark(BenchmarkFamily::q, 1, 2);
        UnivarRep rep = least_norm_representation(univariate_representation(p, HStrategy{}));
        auto sols = enumerate_least_norm(rep, p, prec);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].x[0].contains(Rational(0)));
        CHECK(sols[0].midpoint()[0].abs() < Rational::power_of_ten(-6));
        check_well_formed(sols, rep, p, prec);
    }
    {
        // Without the origin the minimum moves to (3 - sqrt 5)/2.
        RingPtr r = make_ring({"x"}, OrderKind::grevlex);
        MPoly x = MPoly::variable(r, 0);
        MPoly f = Rational(-1) * (x * x - Rational(3) * x + MPoly::constant(r, Rational(1)));
        PCPProblem p = make_problem(r, {f});
        UnivarRep rep = least_norm_representation(univariate_representation(p, HStrategy{}));
        auto sols = enumerate_least_norm(rep, p, prec);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].midpoint()[0] > Rational(38, 100));
        CHECK(sols[0].midpoint()[0] < Rational(39, 100));
    }
    {
        PCPProblem p = generate_benchmark(BenchmarkFamily::q, 1, 2);
        UnivarRep rep = univariate_representation(p, HStrategy{});
        CHECK_THROWS_AS(enumerate_least_norm(rep, p, prec), StructuralError);
    }
}

TEST_CASE("sparse enumeration pins zeros exactly") {
    PCPProblem p = generate_benchmark(BenchmarkFamily::q, 1, 2);
    PrecisionPair prec = default_precision();
    SparseRep sp = sparse_representation(univariate_representation(p, HStrategy{}));
    REQUIRE(sp.k == 1);

    auto [k, sols] = enumerate_sparse(sp, p, prec);
    CHECK(k == 1);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].x[0].lo == Rational(0));
    CHECK(sols[0].x[0].hi == Rational(0));
    check_well_formed(sols, sp.base, p, prec);
}

TEST_CASE("infeasible problem yields no solutions") {
    // f = -1: the only complementarity point x = 0 violates f >= 0, so the
    // lifted variety has no real points at all.
    RingPtr r = make_ring({"x"}, OrderKind::grevlex);
    PCPProblem p = make_problem(r, {MPoly::constant(r, Rational(-1))});
    PrecisionPair prec = default_precision();

    UnivarRep rep = univariate_representation(p, HStrategy{});
    CHECK(rep.deg_w() >= 1);
    CHECK(enumerate_solutions(rep, p, prec).empty());
    CHECK(enumerate_least_norm(least_norm_representation(rep), p, prec).empty());

    SparseRep sp = sparse_representation(rep);
    CHECK(sp.k == -1);
    CHECK(sp.omega.empty());
    auto [k, sols] = enumerate_sparse(sp, p, prec);
    CHECK(k == -1);
    CHECK(sols.empty());
}

TEST_CASE("degenerate and mismatched representations") {
    RingPtr r = make_ring({"x"}, OrderKind::grevlex);
    PCPProblem p = make_problem(r, {MPoly::constant(r, Rational(1))});
    PrecisionPair prec = default_precision();

    UnivarRep unit;
    unit.w = UPoly{Rational(1)};
    unit.v.push_back(UPoly{});
    CHECK(enumerate_solutions(unit, p, prec).empty());

    PCPProblem two = generate_benchmark(BenchmarkFamily::q, 2, 2);
    UnivarRep rep = univariate_representation(p, HStrategy{});
    CHECK_THROWS_AS(enumerate_solutions(rep, two, prec), StructuralError);
}
