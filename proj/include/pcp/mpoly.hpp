#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcp/interval.hpp"
#include "pcp/matrix.hpp"
#include "pcp/rational.hpp"
#include "pcp/ring.hpp"

namespace pcp {

// Sparse multivariate polynomial over the rationals. Terms are kept sorted
// descending in the ring's monomial order with nonzero coefficients, so the
// leading term is terms().front().
class MPoly {
public:
    struct Term {
        Monomial m;
        Rational c;
        bool operator==(const Term&) const = default;
    };

    explicit MPoly(RingPtr ring);

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
    static MPoly constant(RingPtr ring, const Rational& c);
    static MPoly variable(RingPtr ring, int index);
    // Accepts unsorted terms with duplicates; normalizes.
    static MPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().m; }
    const Rational& leading_coeff() const { return leading_term().c; }

    // Max total degree over terms; -1 for the zero polynomial.
    int degree() const;
    // Max exponent of one variable; 0 when absent, -1 for zero polynomial.
    int degree_in(int var) const;

    bool is_constant() const;
    // The constant coefficient (zero if absent).
    Rational constant_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rational& s, const MPoly& p);
    MPoly mul_term(const Monomial& m, const Rational& c) const;
    MPoly pow(unsigned long e) const;

    MPoly monic() const;
    // Integer coefficients, content 1, positive leading coefficient.
    MPoly primitive() const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Rational evaluate(std::span<const Rational> point) const;
    Interval eval_interval(std::span<const Interval> box) const;

    // Same variable count, possibly different order; re-sorts terms.
    MPoly with_ring(RingPtr ring) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize();
};

// p with variable i replaced by sum_j a[i][j] * variable j. The matrix is
// square with side = number of ring variables.
MPoly substitute_linear(const MPoly& p, const RationalMatrix& a);

void require_same_ring(const MPoly& a, const MPoly& b);

} // namespace pcp
