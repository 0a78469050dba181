#pragma once

#include <string>

#include "pcp/rational.hpp"

namespace pcp {

// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    explicit Interval(const Rational& point) : lo(point), hi(point) {}
    Interval(Rational l, Rational h);

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    // max |x| over the interval
    Rational magnitude() const { return max(lo.abs(), hi.abs()); }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);
// Tight power: even exponents of a straddling interval start at zero.
Interval interval_pow(const Interval& a, unsigned long e);

} // namespace pcp
