#include "pcp/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "modarith.hpp"
#include "pcp/errors.hpp"

namespace pcp {

namespace {

// Coefficients scaled by the common denominator, numerators only.
std::vector<mpz_class> clear_denominators(const UPoly& p, mpz_class& den) {
    den = 1;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    }
    std::vector<mpz_class> z(static_cast<std::size_t>(p.degree()) + 1);
    mpz_class f;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        z[static_cast<std::size_t>(k)] = c.num() * f;
    }
    return z;
}

} // namespace

UPoly::UPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UPoly UPoly::variable() { return UPoly({Rational(0), Rational(1)}); }

UPoly UPoly::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw StructuralError("negative degree");
    if (coeff.is_zero()) return UPoly();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UPoly::coeff(int k) const {
    static const Rational zero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& UPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inv() * *this;
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = g;
    }
    Rational scale(mpq_class(den_lcm, num_gcd));
    if (leading().sign() < 0) scale = -scale;
    return scale * *this;
}

UPoly UPoly::pow(unsigned long e) const {
    UPoly r(Rational(1));
    UPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

UPoly UPoly::shift_degree(int k) const {
    if (k < 0) throw StructuralError("negative degree shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> c(c_.size() + static_cast<std::size_t>(k));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    // Clearing denominators up front turns the convolution into integer
    // work: one canonicalization per output coefficient instead of one per
    // product term.
    mpz_class da, db;
    std::vector<mpz_class> za = clear_denominators(a, da);
    std::vector<mpz_class> zb = clear_denominators(b, db);
    std::vector<mpz_class> cz(za.size() + zb.size() - 1);
    for (std::size_t i = 0; i < za.size(); ++i) {
        if (za[i] == 0) continue;
        for (std::size_t j = 0; j < zb.size(); ++j) {
            if (zb[j] == 0) continue;
            mpz_addmul(cz[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
        }
    }
    mpz_class d = da * db;
    std::vector<Rational> c(cz.size());
    for (std::size_t k = 0; k < cz.size(); ++k)
        if (cz[k] != 0) c[k] = Rational(mpq_class(cz[k], d));
    return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& p) {
    if (s.is_zero()) return UPoly();
    UPoly r = p;
    for (auto& c : r.c_) c = s * c;
    return r;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool show_coeff = (k == 0) || a != Rational(1);
        if (show_coeff) os << a.str();
        if (k > 0) {
            if (show_coeff) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    UPoly r = a;
    if (a.degree() < b.degree()) return {UPoly(), r};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    Rational lb_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational c = r.leading() * lb_inv;
        q[static_cast<std::size_t>(k)] = c;
        r -= c * b.shift_degree(k);
    }
    return {UPoly(std::move(q)), r};
}

namespace {

// Primitive integer image of a nonzero rational polynomial: denominators
// cleared, content stripped, leading coefficient positive.
std::vector<mpz_class> primitive_z(const UPoly& p) {
    mpz_class den;
    std::vector<mpz_class> z = clear_denominators(p, den);
    mpz_class content;
    for (const auto& zi : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zi.get_mpz_t());
    if (content > 1)
        for (auto& zi : z)
            if (zi != 0) mpz_divexact(zi.get_mpz_t(), zi.get_mpz_t(), content.get_mpz_t());
    if (sgn(z.back()) < 0)
        for (auto& zi : z) zi = -zi;
    return z;
}

// Dense image over Z/p; empty vector is the zero polynomial.
std::vector<u64> reduce_mod(const std::vector<mpz_class>& z, u64 p) {
    std::vector<u64> out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = mod_of(z[k], p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// In-place remainder of x modulo nonzero y over Z/p.
void wrem(std::vector<u64>& x, const std::vector<u64>& y, u64 p) {
    u64 li = invmod(y.back(), p);
    while (x.size() >= y.size()) {
        u64 c = mulmod(x.back(), li, p);
        std::size_t off = x.size() - y.size();
        if (c != 0)
            for (std::size_t j = 0; j + 1 < y.size(); ++j)
                x[off + j] = submod(x[off + j], mulmod(c, y[j], p), p);
        x.pop_back();
        while (!x.empty() && x.back() == 0) x.pop_back();
    }
}

// Quotient of x by y over Z/p; false when a remainder is left.
bool wdiv(std::vector<u64> x, const std::vector<u64>& y, u64 p, std::vector<u64>& q) {
    if (x.size() < y.size()) {
        q.clear();
        return x.empty();
    }
    q.assign(x.size() - y.size() + 1, 0);
    u64 li = invmod(y.back(), p);
    while (x.size() >= y.size()) {
        u64 c = mulmod(x.back(), li, p);
        std::size_t off = x.size() - y.size();
        q[off] = c;
        if (c != 0)
            for (std::size_t j = 0; j + 1 < y.size(); ++j)
                x[off + j] = submod(x[off + j], mulmod(c, y[j], p), p);
        x.pop_back();
        while (!x.empty() && x.back() == 0) x.pop_back();
    }
    return x.empty();
}

// Monic gcd over Z/p.
std::vector<u64> wgcd(std::vector<u64> x, std::vector<u64> y, u64 p) {
    while (!y.empty()) {
        wrem(x, y, p);
        std::swap(x, y);
    }
    if (!x.empty() && x.back() != 1) {
        u64 li = invmod(x.back(), p);
        for (auto& c : x) c = mulmod(c, li, p);
    }
    return x;
}

// Symmetric-range CRT accumulator for polynomial images of a fixed degree.
struct CrtPoly {
    std::vector<mpz_class> c;
    mpz_class modulus;

    void reset(const std::vector<u64>& img, u64 p) {
        modulus = p;
        mpz_class half = modulus / 2;
        c.assign(img.size(), mpz_class());
        for (std::size_t k = 0; k < img.size(); ++k) {
            c[k] = img[k];
            if (c[k] > half) c[k] -= modulus;
        }
    }

    void absorb(const std::vector<u64>& img, u64 p) {
        u64 minv = invmod(mod_of(modulus, p), p);
        mpz_class next = modulus * p;
        mpz_class half = next / 2;
        for (std::size_t k = 0; k < c.size(); ++k) {
            u64 v = k < img.size() ? img[k] : 0;
            u64 delta = mulmod(submod(v, mod_of(c[k], p), p), minv, p);
            mpz_addmul_ui(c[k].get_mpz_t(), modulus.get_mpz_t(), delta);
            if (c[k] > half) c[k] -= next;
        }
        modulus = next;
    }
};

std::size_t max_bits(const std::vector<mpz_class>& z) {
    std::size_t m = 1;
    for (const auto& zi : z) m = std::max(m, bit_size(zi));
    return m;
}

// Exact divisibility of a by g over Z: the cofactor is recovered from
// word-prime images past its coefficient bound, then one integer product
// settles the claim.
bool divides_exactly(const std::vector<mpz_class>& g, const std::vector<mpz_class>& a) {
    if (a.size() < g.size()) return false;
    const std::size_t qbound = (a.size() - g.size()) + max_bits(a) + 34;
    PrimeStream primes;
    CrtPoly q;
    bool have = false;
    int used = 0;
    const int cap = static_cast<int>(qbound / 60) + 48;
    while (used < cap) {
        u64 p = primes.next();
        if (mod_of(g.back(), p) == 0 || mod_of(a.back(), p) == 0) continue;
        ++used;
        std::vector<u64> qp;
        if (!wdiv(reduce_mod(a, p), reduce_mod(g, p), p, qp)) return false;
        if (!have) {
            q.reset(qp, p);
            have = true;
        } else {
            q.absorb(qp, p);
        }
        if (bit_size(q.modulus) > qbound) break;
    }
    if (!have || bit_size(q.modulus) <= qbound) return false;
    std::vector<mpz_class> prod(a.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        for (std::size_t j = 0; j < q.c.size(); ++j) {
            if (q.c[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), g[i].get_mpz_t(), q.c[j].get_mpz_t());
        }
    }
    for (std::size_t k = 0; k < a.size(); ++k)
        if (prod[k] != a[k]) return false;
    return true;
}

// gcd of primitive integer polynomials from word-prime images.  Images
// carrying the leading-coefficient gcd agree across primes once their
// degree matches the true gcd; a modulus past the divisor coefficient
// bound pins the integer coefficients down, and two exact products prove
// the candidate divides both inputs.  Any failure reports false and the
// caller falls back to the rational remainder chain, so prime luck never
// affects correctness, only speed.
bool modular_gcd(const std::vector<mpz_class>& az, const std::vector<mpz_class>& bz,
                 std::vector<mpz_class>& gz) {
    const std::size_t mindeg = std::min(az.size(), bz.size()) - 1;
    mpz_class glc;
    mpz_gcd(glc.get_mpz_t(), az.back().get_mpz_t(), bz.back().get_mpz_t());
    const std::size_t gbound =
        bit_size(glc) + mindeg + std::min(max_bits(az), max_bits(bz)) + 34;
    PrimeStream primes;
    CrtPoly g;
    int dstar = -1;
    int used = 0;
    const int cap = static_cast<int>(gbound / 60) + 48;
    while (used < cap) {
        u64 p = primes.next();
        if (mod_of(az.back(), p) == 0 || mod_of(bz.back(), p) == 0) continue;
        ++used;
        std::vector<u64> gp = wgcd(reduce_mod(az, p), reduce_mod(bz, p), p);
        if (gp.size() == 1) {
            // Coprime mod one good prime is coprime over the rationals.
            gz.assign(1, mpz_class(1));
            return true;
        }
        const int d = static_cast<int>(gp.size()) - 1;
        if (dstar >= 0 && d > dstar) continue;
        u64 s = mod_of(glc, p);
        for (auto& cc : gp) cc = mulmod(cc, s, p);
        if (dstar < 0 || d < dstar) {
            dstar = d;
            g.reset(gp, p);
        } else {
            g.absorb(gp, p);
        }
        if (bit_size(g.modulus) > gbound) {
            mpz_class content;
            for (const auto& cc : g.c)
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cc.get_mpz_t());
            if (content == 0) return false;
            gz = g.c;
            if (content > 1)
                for (auto& cc : gz)
                    if (cc != 0) mpz_divexact(cc.get_mpz_t(), cc.get_mpz_t(), content.get_mpz_t());
            if (sgn(gz.back()) < 0)
                for (auto& cc : gz) cc = -cc;
            return divides_exactly(gz, az) && divides_exactly(gz, bz);
        }
    }
    return false;
}

UPoly euclid_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = udivrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
        // Keep coefficient growth in check along the remainder chain.
        y = y.primitive();
    }
    return x.monic();
}

} // namespace

UPoly ugcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return UPoly(Rational(1));
    if (a.degree() + b.degree() >= 32) {
        std::vector<mpz_class> gz;
        if (modular_gcd(primitive_z(a), primitive_z(b), gz)) {
            std::vector<Rational> c(gz.size());
            for (std::size_t k = 0; k < gz.size(); ++k)
                if (gz[k] != 0) c[k] = Rational(mpq_class(gz[k], gz.back()));
            return UPoly(std::move(c));
        }
    }
    return euclid_gcd(a, b);
}

UPoly ugcd(std::span<const UPoly> ps) {
    UPoly g;
    for (const auto& p : ps) g = ugcd(g, p);
    return g;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UPoly(Rational(1));
    UPoly g = ugcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return udivrem(p, g).first.monic();
}

} // namespace pcp
