#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pcp/mpoly.hpp"

namespace pcp {

// Reduced Groebner basis: monic generators, every tail irreducible against
// the rest, sorted ascending by leading monomial. Unique for a given ideal
// and order, so equality of ideals is equality of bases.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<MPoly> generators;
    bool zero_ideal = false;
    bool zero_dimensional = false;
    // Standard monomial count; present iff zero_dimensional.
    std::optional<long> quotient_dimension;

    bool is_unit() const {
        return generators.size() == 1 && generators[0].is_constant() &&
               !generators[0].is_zero();
    }
};

// Remainder of p under full division by gens, taken in list order. For a
// Groebner basis this is the canonical normal form: zero iff p lies in the
// ideal, and constant on residue classes.
MPoly normal_form(const MPoly& p, std::span<const MPoly> gens);

// Division with quotient tracking: p = sum_i cofactors[i] * gens[i] + remainder.
struct DivisionResult {
    MPoly remainder;
    std::vector<MPoly> cofactors;
};
DivisionResult divide_with_cofactors(const MPoly& p, std::span<const MPoly> gens);

// Buchberger's algorithm with the lcm-elimination pair update and normal
// selection. The order is the one carried by the generators' ring; the
// overload re-sorts generators into the requested order first.
GroebnerBasis buchberger(std::span<const MPoly> gens);
GroebnerBasis buchberger(std::span<const MPoly> gens, OrderKind order);

struct ZeroDimResult {
    bool zero_dimensional = false;
    // A variable with no pure-power leading monomial, when not zero-dimensional.
    std::optional<int> missing_variable;
};
// Finiteness of the solution set, read off the leading monomials: every
// variable must appear as a pure power among them.
ZeroDimResult is_zero_dimensional(const GroebnerBasis& g);

// Monomials outside the leading-term ideal, ascending in the ring order.
// These span the quotient algebra. Throws DomainError when infinite.
std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& g);

} // namespace pcp
