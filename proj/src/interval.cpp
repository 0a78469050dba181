#include "pcp/interval.hpp"

#include "pcp/errors.hpp"

namespace pcp {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw StructuralError("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = min(min(p1, p2), min(p3, p4));
    Rational hi = max(max(p1, p2), max(p3, p4));
    return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Rational& s, const Interval& a) {
    if (s.sign() >= 0) return Interval(s * a.lo, s * a.hi);
    return Interval(s * a.hi, s * a.lo);
}

Interval interval_pow(const Interval& a, unsigned long e) {
    if (e == 0) return Interval(Rational(1));
    if (e == 1) return a;
    Rational plo = a.lo.pow(e), phi = a.hi.pow(e);
    if (e % 2 == 1) return Interval(std::move(plo), std::move(phi));
    if (a.contains_zero()) return Interval(Rational(0), max(plo, phi));
    return Interval(min(plo, phi), max(plo, phi));
}

} // namespace pcp
