#include "pcp/rational.hpp"

#include <cctype>
#include <ostream>

namespace pcp {

Rational::Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r);
}

Rational Rational::from_string(std::string_view s) {
    std::size_t i = 0;
    auto digits_run = [&](std::size_t start) {
        std::size_t j = start;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t num_end = digits_run(i);
    if (num_end == i) throw ParseError("expected digits in rational literal", i);
    std::size_t den_begin = num_end;
    if (num_end < s.size()) {
        if (s[num_end] != '/') throw ParseError("unexpected character in rational literal", num_end);
        den_begin = num_end + 1;
        std::size_t den_end = digits_run(den_begin);
        if (den_end == den_begin) throw ParseError("expected digits after '/'", den_begin);
        if (den_end != s.size()) throw ParseError("unexpected character in rational literal", den_end);
    }
    // Base fixed at 10: the default constructor auto-detects and would read
    // a leading zero as octal.
    mpz_class num(std::string(s.substr(i, num_end - i)), 10);
    if (!s.empty() && s[0] == '-') num = -num;
    mpz_class den(1);
    if (den_begin != num_end) den = mpz_class(std::string(s.substr(den_begin)), 10);
    if (den == 0) throw ParseError("zero denominator in rational literal", den_begin);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::power_of_ten(int k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    mpq_class q = k < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
    if (significant_digits < 1) throw StructuralError("significant_digits must be >= 1");
    if (is_zero()) return "0";

    mpz_class n = ::abs(num());
    const mpz_class& d = den();

    // e with 10^e <= |x| < 10^(e+1), starting from a digit-count estimate.
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    auto pow10 = [](unsigned long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
        return p;
    };
    auto cmp_with_pow10 = [&](long k) {
        // sign of |x| - 10^k
        if (k >= 0) return cmp(n, d * pow10(static_cast<unsigned long>(k)));
        return cmp(n * pow10(static_cast<unsigned long>(-k)), d);
    };
    while (cmp_with_pow10(e) < 0) --e;
    while (cmp_with_pow10(e + 1) >= 0) ++e;

    // Round |x| * 10^(K-1-e) half away from zero.
    long shift = significant_digits - 1 - e;
    mpz_class scaled_num = n, scaled_den = d;
    if (shift >= 0) scaled_num *= pow10(static_cast<unsigned long>(shift));
    else scaled_den *= pow10(static_cast<unsigned long>(-shift));
    mpz_class digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (digits == pow10(static_cast<unsigned long>(significant_digits))) {
        digits = pow10(static_cast<unsigned long>(significant_digits - 1));
        ++e;
    }

    std::string ds = digits.get_str();
    std::string out = sign() < 0 ? "-" : "";
    if (e >= significant_digits - 1) {
        out += ds;
        out.append(static_cast<std::size_t>(e - (significant_digits - 1)), '0');
    } else if (e >= 0) {
        out += ds.substr(0, static_cast<std::size_t>(e + 1));
        out += ".";
        out += ds.substr(static_cast<std::size_t>(e + 1));
    } else {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += ds;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace pcp
