#include "pcp/float_interval.hpp"

#include <algorithm>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

long bit_length(const mpz_class& x) {
    if (x == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

// Directed rounding to prec mantissa bits. fdiv floors toward -inf and cdiv
// ceils toward +inf for any mantissa sign, which is exactly the outward pair.
void round_bf(BigFloat& x, long prec, bool up) {
    long nb = bit_length(x.m);
    if (nb <= prec) return;
    long s = nb - prec;
    if (up) {
        mpz_cdiv_q_2exp(x.m.get_mpz_t(), x.m.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    } else {
        mpz_fdiv_q_2exp(x.m.get_mpz_t(), x.m.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    }
    x.e += s;
}

// Exact sum; operands are aligned to the smaller exponent.
BigFloat bf_add(const BigFloat& a, const BigFloat& b) {
    if (a.m == 0) return b;
    if (b.m == 0) return a;
    BigFloat r;
    r.e = std::min(a.e, b.e);
    mpz_class am = a.m;
    mpz_class bm = b.m;
    if (a.e > r.e) mpz_mul_2exp(am.get_mpz_t(), am.get_mpz_t(), static_cast<mp_bitcnt_t>(a.e - r.e));
    if (b.e > r.e) mpz_mul_2exp(bm.get_mpz_t(), bm.get_mpz_t(), static_cast<mp_bitcnt_t>(b.e - r.e));
    r.m = am + bm;
    return r;
}

BigFloat bf_mul(const BigFloat& a, const BigFloat& b) {
    return BigFloat{a.m * b.m, a.e + b.e};
}

int bf_cmp(const BigFloat& a, const BigFloat& b) {
    int sa = sgn(a.m);
    int sb = sgn(b.m);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    BigFloat d = bf_add(a, BigFloat{-b.m, b.e});
    return sgn(d.m);
}

// Nearest representable bound of num/den with about prec significant bits,
// floored or ceiled as directed.
BigFloat rational_to_bf(const Rational& x, long prec, bool up) {
    const mpz_class& num = x.num();
    const mpz_class& den = x.den();
    if (num == 0) return BigFloat{};
    long k = prec + bit_length(den) - bit_length(num);
    mpz_class n = num;
    mpz_class d = den;
    if (k >= 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    BigFloat r;
    if (up) {
        mpz_cdiv_q(r.m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    } else {
        mpz_fdiv_q(r.m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    }
    r.e = -k;
    round_bf(r, prec, up);
    return r;
}

Rational bf_to_rational(const BigFloat& x) {
    if (x.m == 0) return Rational();
    mpz_class one = 1;
    if (x.e >= 0) {
        mpz_class m = x.m;
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(x.e));
        return Rational(m);
    }
    mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(-x.e));
    return Rational(x.m) / Rational(one);
}

// Directed quotient x / y to about prec bits; y must be nonzero.
BigFloat bf_div(const BigFloat& x, const BigFloat& y, long prec, bool up) {
    if (x.m == 0) return BigFloat{};
    long k = prec + bit_length(y.m) - bit_length(x.m);
    if (k < 0) k = 0;
    mpz_class n = x.m;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    BigFloat r;
    if (up) {
        mpz_cdiv_q(r.m.get_mpz_t(), n.get_mpz_t(), y.m.get_mpz_t());
    } else {
        mpz_fdiv_q(r.m.get_mpz_t(), n.get_mpz_t(), y.m.get_mpz_t());
    }
    r.e = x.e - y.e - k;
    round_bf(r, prec, up);
    return r;
}

// Magnitude of a rational in bits, rounded up and clamped to >= 0.
long magnitude_bits(const Rational& x) {
    if (x.is_zero()) return 0;
    long b = bit_length(x.num()) - bit_length(x.den()) + 1;
    return b > 0 ? b : 0;
}

} // namespace

FloatInterval FloatInterval::from_rational(const Rational& x, long prec) {
    FloatInterval r;
    r.prec_ = prec;
    r.lo_ = rational_to_bf(x, prec, false);
    r.hi_ = rational_to_bf(x, prec, true);
    return r;
}

FloatInterval FloatInterval::from_interval(const Interval& x, long prec) {
    FloatInterval r;
    r.prec_ = prec;
    r.lo_ = rational_to_bf(x.lo, prec, false);
    r.hi_ = rational_to_bf(x.hi, prec, true);
    return r;
}

bool FloatInterval::contains_zero() const {
    return sgn(lo_.m) <= 0 && sgn(hi_.m) >= 0;
}

int FloatInterval::definite_sign() const {
    if (sgn(lo_.m) > 0) return 1;
    if (sgn(hi_.m) < 0) return -1;
    return 0;
}

Rational FloatInterval::lo() const { return bf_to_rational(lo_); }

Rational FloatInterval::hi() const { return bf_to_rational(hi_); }

Rational FloatInterval::width() const { return hi() - lo(); }

FloatInterval FloatInterval::operator-() const {
    FloatInterval r;
    r.prec_ = prec_;
    r.lo_ = BigFloat{-hi_.m, hi_.e};
    r.hi_ = BigFloat{-lo_.m, lo_.e};
    return r;
}

FloatInterval operator+(const FloatInterval& a, const FloatInterval& b) {
    FloatInterval r;
    r.prec_ = std::max(a.prec_, b.prec_);
    r.lo_ = bf_add(a.lo_, b.lo_);
    round_bf(r.lo_, r.prec_, false);
    r.hi_ = bf_add(a.hi_, b.hi_);
    round_bf(r.hi_, r.prec_, true);
    return r;
}

FloatInterval operator-(const FloatInterval& a, const FloatInterval& b) {
    return a + (-b);
}

FloatInterval operator*(const FloatInterval& a, const FloatInterval& b) {
    FloatInterval r;
    r.prec_ = std::max(a.prec_, b.prec_);
    BigFloat p[4] = {bf_mul(a.lo_, b.lo_), bf_mul(a.lo_, b.hi_),
                     bf_mul(a.hi_, b.lo_), bf_mul(a.hi_, b.hi_)};
    int lo = 0;
    int hi = 0;
    for (int i = 1; i < 4; ++i) {
        if (bf_cmp(p[i], p[lo]) < 0) lo = i;
        if (bf_cmp(p[i], p[hi]) > 0) hi = i;
    }
    r.lo_ = p[lo];
    round_bf(r.lo_, r.prec_, false);
    r.hi_ = p[hi];
    round_bf(r.hi_, r.prec_, true);
    return r;
}

FloatInterval operator/(const FloatInterval& a, const FloatInterval& b) {
    if (b.definite_sign() == 0) {
        throw StructuralError("interval division by a divisor enclosing zero");
    }
    FloatInterval r;
    r.prec_ = std::max(a.prec_, b.prec_);
    const BigFloat* ae[2] = {&a.lo_, &a.hi_};
    const BigFloat* be[2] = {&b.lo_, &b.hi_};
    bool first = true;
    for (const BigFloat* x : ae) {
        for (const BigFloat* y : be) {
            BigFloat qlo = bf_div(*x, *y, r.prec_, false);
            BigFloat qhi = bf_div(*x, *y, r.prec_, true);
            if (first || bf_cmp(qlo, r.lo_) < 0) r.lo_ = qlo;
            if (first || bf_cmp(qhi, r.hi_) > 0) r.hi_ = qhi;
            first = false;
        }
    }
    return r;
}

BallPoly::BallPoly(const UPoly& p, long prec) : prec_(prec) {
    c_.reserve(p.coeffs().size());
    for (const Rational& a : p.coeffs()) {
        c_.push_back(FloatInterval::from_rational(a, prec));
    }
}

FloatInterval BallPoly::eval(const FloatInterval& t) const {
    if (c_.empty()) return FloatInterval::from_rational(Rational(), prec_);
    FloatInterval acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        acc = acc * t + c_[k];
    }
    return acc;
}

long horner_precision(const UPoly& p, const Rational& bound, const Rational& margin) {
    long deg = p.degree() > 0 ? p.degree() : 0;
    long coeff = 0;
    for (const Rational& a : p.coeffs()) {
        coeff = std::max(coeff, magnitude_bits(a));
    }
    long arg = magnitude_bits(bound);
    // Bits of the guard band: margin < 1 in every use, but clamp anyway.
    long guard = bit_length(margin.den()) - bit_length(margin.num()) + 1;
    if (guard < 0) guard = 0;
    // Horner accumulates deg+1 terms of magnitude <= maxcoeff * bound^deg;
    // each of the ~2*deg rounded operations contributes one ulp at that scale.
    return coeff + deg * arg + guard + bit_length(mpz_class(2 * deg + 2)) + 32;
}

} // namespace pcp
