#pragma once

#include <vector>

#include "pcp/interval.hpp"
#include "pcp/upoly.hpp"

namespace pcp {

// Bracket around exactly one real root. A point bracket (lo == hi) pins the
// root exactly; otherwise the isolated polynomial changes sign across [lo, hi]
// and has no other root there.
struct IsolatedRoot {
    Rational lo;
    Rational hi;

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    Interval as_interval() const { return Interval(lo, hi); }
};

// Number of distinct real roots of p in the half-open interval (lo, hi].
int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi);

// Number of distinct real roots of p on the whole line.
int count_real_roots(const UPoly& p);

// Disjoint isolating intervals for all distinct real roots of p, in ascending
// order, each of width <= precision. Roots hit exactly by a dyadic probe come
// back as point brackets. Throws DomainError on the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const UPoly& p, const Rational& precision);

// Shrink a bracket for a root of the squarefree polynomial sf to the given
// width, by interval Newton steps with bisection as fallback. Point brackets
// pass through unchanged; a probe hitting the root exactly collapses the
// bracket to a point.
IsolatedRoot refine_root(const UPoly& sf, IsolatedRoot r, const Rational& width);

// Power of two >= every root magnitude of p.
Rational root_bound_pow2(const UPoly& p);

// Range enclosure of p over x by Horner evaluation in interval arithmetic.
Interval eval_interval(const UPoly& p, const Interval& x);

} // namespace pcp
