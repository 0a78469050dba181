#pragma once

#include <utility>
#include <vector>

#include "pcp/interval.hpp"
#include "pcp/pipeline.hpp"

namespace pcp {

// Root isolation width gamma1 and solution separation gamma2,
// 0 < gamma1 < gamma2. Distinct solutions closer than gamma2 are merged, so
// gamma2 must stay below the true minimal separation for exact counts.
struct PrecisionPair {
    Rational gamma1;
    Rational gamma2;
};

PrecisionPair make_precision(Rational gamma1, Rational gamma2);

// One certified solution: exact interval enclosures per coordinate, plus the
// certificate residual (an upper bound on |x_i f_i| over the enclosure).
struct Solution {
    std::vector<Interval> x;
    Rational residual_bound;

    std::vector<Rational> midpoint() const;
};

// All solutions: real roots of w mapped through v, refined until every
// coordinate enclosure is narrower than both gamma2/(4n) and
// 10^-(10 + deg w), certified, then merged at distance gamma2.
std::vector<Solution> enumerate_solutions(const UnivarRep& rep, const PCPProblem& p,
                                          const PrecisionPair& prec);

// Solutions of minimal Euclidean norm, selected by comparing enclosures of
// phi = |x|^2 across roots; requires a representation carrying phi.
std::vector<Solution> enumerate_least_norm(const UnivarRep& rep, const PCPProblem& p,
                                           const PrecisionPair& prec);

// Solutions realizing the maximal zero-coordinate count: for each pattern in
// omega the roots of gcd(w, v_i : i in pattern) with those coordinates
// pinned to exact zero. Returns the count k alongside.
std::pair<int, std::vector<Solution>> enumerate_sparse(const SparseRep& rep,
                                                       const PCPProblem& p,
                                                       const PrecisionPair& prec);

} // namespace pcp
