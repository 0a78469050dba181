#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pcp/errors.hpp"
#include "pcp/rng.hpp"
#include "pcp/roots.hpp"

using namespace pcp;

namespace {

Rational rand_rational(DeterministicRng& rng, long span) {
    const long num = static_cast<long>(rng.uniform(0, 2 * span)) - span;
    const long den = static_cast<long>(rng.uniform(1, 4));
    return Rational(num, den);
}

// Product of (t - r) over the given roots, times an optional irreducible
// factor; the root multiset is the ground truth for isolation tests.
UPoly from_roots(const std::vector<Rational>& roots) {
    UPoly p(Rational(1));
    for (const Rational& r : roots) p = p * UPoly{-r, Rational(1)};
    return p;
}

UPoly rand_poly(DeterministicRng& rng, int max_deg, long span) {
    const int deg = static_cast<int>(rng.uniform(1, max_deg));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_rational(rng, span));
    UPoly p(std::move(c));
    return p.is_zero() ? UPoly::variable() : p;
}

} // namespace

TEST_CASE("root counting on constructed root sets") {
    const UPoly t = UPoly::variable();
    CHECK(count_real_roots(from_roots({Rational(1), Rational(2), Rational(3)})) == 3);
    CHECK(count_real_roots(UPoly{Rational(1), Rational(0), Rational(1)}) == 0); // t^2+1
    CHECK(count_real_roots(t) == 1);
    CHECK(count_real_roots(UPoly(Rational(5))) == 0);
    // multiple roots are counted once
    const UPoly sq = from_roots({Rational(2), Rational(2), Rational(-1)});
    CHECK(count_real_roots(sq) == 2);
    // mixed real and complex: (t^2+1)(t-1)
    CHECK(count_real_roots(UPoly{Rational(1), Rational(0), Rational(1)} *
                           from_roots({Rational(1)})) == 1);
}

TEST_CASE("half-open interval counting") {
    const UPoly p = from_roots({Rational(-1), Rational(0), Rational(2)});
    CHECK(sturm_count(p, Rational(-2), Rational(3)) == 3);
    // half-open (lo, hi]: root at lo excluded, root at hi included
    CHECK(sturm_count(p, Rational(0), Rational(3)) == 1);
    CHECK(sturm_count(p, Rational(-2), Rational(0)) == 2);
    CHECK(sturm_count(p, Rational(-1), Rational(0)) == 1);
    CHECK(sturm_count(p, Rational(1), Rational(3, 2)) == 0);
}

TEST_CASE("sturm count additivity") {
    DeterministicRng rng(21);
    for (int i = 0; i < 200; ++i) {
        const UPoly p = rand_poly(rng, 6, 8);
        Rational a = rand_rational(rng, 12), b = rand_rational(rng, 12),
                 c = rand_rational(rng, 12);
        if (b < a) std::swap(a, b);
        if (c < b) std::swap(b, c);
        if (c < a) std::swap(a, c);
        if (b < a) std::swap(a, b);
        CHECK(sturm_count(p, a, c) == sturm_count(p, a, b) + sturm_count(p, b, c));
    }
}

TEST_CASE("isolation recovers constructed roots") {
    DeterministicRng rng(22);
    const Rational prec(1, 1024);
    for (int i = 0; i < 200; ++i) {
        // distinct rational roots, possibly duplicated in the factor list
        std::set<Rational> root_set;
        const int k = static_cast<int>(rng.uniform(1, 5));
        for (int j = 0; j < k; ++j) root_set.insert(rand_rational(rng, 10));
        std::vector<Rational> roots(root_set.begin(), root_set.end());
        std::vector<Rational> factors = roots;
        if (rng.uniform(0, 1) == 1) factors.push_back(roots[0]); // a double root
        const UPoly p = from_roots(factors);

        const auto iso = isolate_real_roots(p, prec);
        REQUIRE(iso.size() == roots.size());
        for (std::size_t j = 0; j < roots.size(); ++j) {
            CHECK(iso[j].lo <= roots[j]);
            CHECK(roots[j] <= iso[j].hi);
            CHECK(iso[j].width() <= prec);
            if (j + 1 < iso.size()) CHECK(iso[j].hi < iso[j + 1].lo);
        }
    }
}

TEST_CASE("isolation agrees with counting on arbitrary polynomials") {
    DeterministicRng rng(23);
    const Rational prec(1, 4096);
    for (int i = 0; i < 200; ++i) {
        const UPoly p = rand_poly(rng, 7, 9);
        if (p.is_constant()) continue;
        const auto iso = isolate_real_roots(p, prec);
        CHECK(static_cast<int>(iso.size()) == count_real_roots(p));
        for (const auto& r : iso) {
            if (r.is_exact()) {
                CHECK(p.evaluate(r.lo).is_zero());
            } else {
                // sign change across the bracket for the squarefree part
                const UPoly sf = squarefree_part(p);
                CHECK(sf.evaluate(r.lo).sign() * sf.evaluate(r.hi).sign() < 0);
            }
        }
    }
}

TEST_CASE("dyadic roots come back exact") {
    const UPoly p = from_roots({Rational(0), Rational(1), Rational(-3, 2)});
    const auto iso = isolate_real_roots(p, Rational(1, 1 << 20));
    REQUIRE(iso.size() == 3);
    for (const auto& r : iso) CHECK(r.is_exact());
    CHECK(iso[0].lo == Rational(-3, 2));
    CHECK(iso[1].lo == Rational(0));
    CHECK(iso[2].lo == Rational(1));
}

TEST_CASE("refinement narrows brackets around irrational roots") {
    // t^2 - 2: sqrt(2) = 1.41421356...
    const UPoly p{Rational(-2), Rational(0), Rational(1)};
    auto iso = isolate_real_roots(p, Rational(1, 2));
    REQUIRE(iso.size() == 2);
    IsolatedRoot r = refine_root(p, iso[1], Rational(1, 1 << 30));
    CHECK(r.width() <= Rational(1, 1 << 30));
    CHECK(r.lo * r.lo <= Rational(2));
    CHECK(r.hi * r.hi >= Rational(2));
    // already-exact roots pass through
    const IsolatedRoot exact{Rational(5), Rational(5)};
    CHECK(refine_root(from_roots({Rational(5)}), exact, Rational(1, 100)).is_exact());
}

TEST_CASE("interval evaluation encloses true values") {
    DeterministicRng rng(24);
    for (int i = 0; i < 200; ++i) {
        const UPoly p = rand_poly(rng, 6, 8);
        Rational a = rand_rational(rng, 6), b = rand_rational(rng, 6);
        if (b < a) std::swap(a, b);
        const Interval x(a, b);
        const Interval y = eval_interval(p, x);
        for (const Rational& s : {a, (a + b) / Rational(2), b})
            CHECK(y.contains(p.evaluate(s)));
    }
}

TEST_CASE("isolation rejects the zero polynomial") {
    CHECK_THROWS_AS(isolate_real_roots(UPoly(), Rational(1, 2)), DomainError);
    CHECK(isolate_real_roots(UPoly(Rational(3)), Rational(1, 2)).empty());
}

TEST_CASE("large coefficient spreads still isolate") {
    // roots at 0 and 10^9, plus +/- 10^-9 scale root via scaled factor
    const Rational big = Rational::power_of_ten(9);
    const Rational small = Rational::power_of_ten(-9);
    const UPoly p = from_roots({Rational(0), big, small});
    const auto iso = isolate_real_roots(p, small * small);
    REQUIRE(iso.size() == 3);
    CHECK(iso[0].lo == Rational(0));
    CHECK(iso[1].lo <= small);
    CHECK(small <= iso[1].hi);
    CHECK(iso[2].lo <= big);
    CHECK(big <= iso[2].hi);
}

// Degree 64 is where isolation leaves the chain for variation bisection;
// the constructed root list is the ground truth on the far side.
TEST_CASE("variation isolation recovers constructed roots at large degree") {
    std::vector<Rational> roots;
    for (long k = 1; k <= 36; ++k) roots.push_back(Rational(2 * k - 37, 16));
    for (long k = 1; k <= 30; ++k) roots.push_back(Rational(2 * k - 31, 3));
    const UPoly p = from_roots(roots);
    REQUIRE(p.degree() == 66);
    std::sort(roots.begin(), roots.end());

    const Rational prec(1, 1 << 16);
    const auto iso = isolate_real_roots(p, prec);
    REQUIRE(iso.size() == roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
        CHECK(iso[j].lo <= roots[j]);
        CHECK(roots[j] <= iso[j].hi);
        if (!iso[j].is_exact()) CHECK(iso[j].width() <= prec);
        // sixteenths and integers sit on the dyadic probe grid, thirds never do
        if (roots[j].den() == 16 || roots[j].den() == 1) {
            CHECK(iso[j].is_exact());
            CHECK(iso[j].lo == roots[j]);
        }
        if (j + 1 < iso.size()) CHECK(iso[j].hi <= iso[j + 1].lo);
    }
    CHECK(count_real_roots(p) == static_cast<int>(roots.size()));
}

TEST_CASE("variation isolation agrees with chain counting") {
    // complex pairs, a repeated factor, a tight dyadic cluster, a far root
    const UPoly t = UPoly::variable();
    UPoly unit = UPoly{Rational(1), Rational(0), Rational(1)};
    UPoly p(Rational(1));
    for (int i = 0; i < 30; ++i) p = p * unit;
    std::vector<Rational> reals;
    for (long k = 5; k <= 10; ++k) reals.push_back(Rational(1) + Rational(1, 1L << k));
    reals.push_back(Rational(-5));
    for (const auto& r : reals) p = p * UPoly{-r, Rational(1)};
    p = p * UPoly{-reals[0], Rational(1)}; // double root
    REQUIRE(p.degree() >= 64);

    const auto iso = isolate_real_roots(p, Rational(1, 1024));
    const Rational b = root_bound_pow2(p);
    CHECK(static_cast<int>(iso.size()) == sturm_count(p, -b, b));
    REQUIRE(iso.size() == reals.size());
    std::sort(reals.begin(), reals.end());
    for (std::size_t j = 0; j < reals.size(); ++j) {
        CHECK(iso[j].lo <= reals[j]);
        CHECK(reals[j] <= iso[j].hi);
    }
}
