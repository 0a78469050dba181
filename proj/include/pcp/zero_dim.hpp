#pragma once

#include <optional>
#include <vector>

#include "pcp/groebner.hpp"
#include "pcp/matrix.hpp"
#include "pcp/upoly.hpp"

namespace pcp {

// Finite-dimensional quotient algebra of a zero-dimensional Groebner basis,
// with coordinates in the standard monomial basis and cached per-variable
// multiplication matrices.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(GroebnerBasis g);

    const GroebnerBasis& basis() const { return g_; }
    const std::vector<Monomial>& monomials() const { return mons_; }
    long dim() const { return static_cast<long>(mons_.size()); }

    MPoly reduce(const MPoly& p) const;
    std::vector<Rational> coords(const MPoly& p) const;

    // Matrix of multiplication by a variable in the standard basis.
    const RationalMatrix& multiplication_matrix(int var) const;

    // Matrix of multiplication by sum_v form[v] * variable v.
    RationalMatrix linear_form_matrix(const std::vector<Rational>& form) const;

private:
    GroebnerBasis g_;
    std::vector<Monomial> mons_;
    mutable std::vector<std::optional<RationalMatrix>> mulmat_;
};

// Monic generator of the annihilator of an element in the quotient: the
// lowest-degree monic p with p(element) = 0 mod the ideal.
UPoly minimal_polynomial(const QuotientAlgebra& qa, const MPoly& element);
UPoly minimal_polynomial(const GroebnerBasis& g, int var);

// Same ideal with all multiplicities stripped: adjoins the squarefree part
// of each variable's minimal polynomial and recomputes the basis. Requires a
// zero-dimensional input.
GroebnerBasis radical(const GroebnerBasis& g);

// Parameterization of a zero-dimensional ideal by its smallest variable:
// generators [w(t), var_j - u[j-1](t)], with t standing for variable 0 and
// deg u[j-1] < deg w.
struct ShapeBasis {
    UPoly w;
    std::vector<UPoly> u;

    int nvars() const { return static_cast<int>(u.size()) + 1; }
};

// Reads the parameterization off a reduced lex basis when it has exactly
// that syntactic form; nullopt otherwise.
std::optional<ShapeBasis> try_shape_position(const GroebnerBasis& lex_basis);

// Parameterization of the ideal rewritten in coordinates y = C * vars,
// computed inside the quotient without a lex basis: w is the minimal
// polynomial of the first row's linear form; the other rows are expressed as
// polynomials in it by linear solves. Succeeds iff deg w equals the quotient
// dimension, which makes [w, y_j - u_j] the reduced lex basis of the
// rewritten ideal.
std::optional<ShapeBasis> shape_via_quotient(const QuotientAlgebra& qa,
                                             const RationalMatrix& c);

// Shape generators as polynomials over a lex ring with matching arity.
std::vector<MPoly> shape_to_generators(const ShapeBasis& s, const RingPtr& ring);

} // namespace pcp
