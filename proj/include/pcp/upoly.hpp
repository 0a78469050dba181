#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcp/rational.hpp"

namespace pcp {

// Univariate polynomial over the rationals, dense coefficients in ascending
// degree order. Invariant: the highest stored coefficient is nonzero; the
// zero polynomial stores nothing and has degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Rational& constant);
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<Rational> coeffs);

    static UPoly variable();
    static UPoly monomial(int degree, const Rational& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& t) const;

    UPoly derivative() const;
    UPoly monic() const;
    // Integer-coefficient scalar multiple with content 1 and positive leading
    // coefficient; zero maps to zero.
    UPoly primitive() const;
    UPoly pow(unsigned long e) const;
    UPoly shift_degree(int k) const; // multiply by t^k

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& s, const UPoly& p);

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws DomainError on b = 0.
std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b);

// Monic gcd of a list; gcd of the empty list or of all-zero lists is zero.
UPoly ugcd(std::span<const UPoly> ps);
UPoly ugcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p'), monic. Vanishes exactly at the roots of p, each simple.
UPoly squarefree_part(const UPoly& p);

} // namespace pcp
