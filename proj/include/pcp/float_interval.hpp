#pragma once

#include <vector>

#include "pcp/interval.hpp"
#include "pcp/upoly.hpp"

namespace pcp {

// Binary floating-point bound m * 2^e with exact integer mantissa.
struct BigFloat {
    mpz_class m;
    long e = 0;
};

// Closed interval with BigFloat endpoints, outward-rounded to a fixed
// mantissa precision. Lower endpoints round toward -inf and upper endpoints
// toward +inf, so every operation keeps the true result enclosed and chains
// of operations only ever widen. Operand sizes stay near the precision
// instead of growing with the computation, which is the point: exact
// rational interval arithmetic on deep refinements grows without bound.
class FloatInterval {
public:
    FloatInterval() = default;

    static FloatInterval from_rational(const Rational& x, long prec);
    static FloatInterval from_interval(const Interval& x, long prec);

    long prec() const { return prec_; }
    bool contains_zero() const;
    // +1 / -1 when the interval is sign-definite, 0 when it straddles.
    int definite_sign() const;

    Rational lo() const;
    Rational hi() const;
    Interval to_interval() const { return Interval(lo(), hi()); }
    Rational width() const;

    FloatInterval operator-() const;
    friend FloatInterval operator+(const FloatInterval& a, const FloatInterval& b);
    friend FloatInterval operator-(const FloatInterval& a, const FloatInterval& b);
    friend FloatInterval operator*(const FloatInterval& a, const FloatInterval& b);
    // Requires a sign-definite divisor.
    friend FloatInterval operator/(const FloatInterval& a, const FloatInterval& b);

private:
    BigFloat lo_{};
    BigFloat hi_{};
    long prec_ = 64;
};

// Coefficient enclosures of a polynomial at one precision, for repeated
// interval evaluation with bounded operand sizes.
class BallPoly {
public:
    BallPoly() = default;
    BallPoly(const UPoly& p, long prec);

    long prec() const { return prec_; }
    FloatInterval eval(const FloatInterval& t) const;

private:
    std::vector<FloatInterval> c_;
    long prec_ = 64;
};

// Mantissa bits keeping the rounding contribution of a Horner evaluation of
// p over arguments within [-bound, bound] below margin.
long horner_precision(const UPoly& p, const Rational& bound, const Rational& margin);

} // namespace pcp
