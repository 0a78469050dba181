#include "pcp/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pcp {

MPoly::MPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw StructuralError("polynomial without a ring");
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
    MPoly p(std::move(ring));
    if (!c.is_zero())
        p.terms_.push_back({Monomial(static_cast<std::size_t>(p.ring_->nvars()), 0), c});
    return p;
}

MPoly MPoly::variable(RingPtr ring, int index) {
    MPoly p(std::move(ring));
    if (index < 0 || index >= p.ring_->nvars())
        throw StructuralError("variable index out of range");
    Monomial m(static_cast<std::size_t>(p.ring_->nvars()), 0);
    m[static_cast<std::size_t>(index)] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    MPoly p(std::move(ring));
    for (const auto& t : terms)
        if (t.m.size() != static_cast<std::size_t>(p.ring_->nvars()))
            throw StructuralError("term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MPoly::normalize() {
    const MonomialOrder& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
        else out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

const MPoly::Term& MPoly::leading_term() const {
    if (is_zero()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(total_degree(t.m)));
    return d;
}

int MPoly::degree_in(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw StructuralError("variable index out of range");
    if (is_zero()) return -1;
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m[static_cast<std::size_t>(var)]);
    return static_cast<int>(d);
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].m) == 0);
}

Rational MPoly::constant_coeff() const {
    if (!terms_.empty() && total_degree(terms_.back().m) == 0) return terms_.back().c;
    return Rational(0);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

// Merge of descending-sorted term lists; scale applies to b.
std::vector<MPoly::Term> merge_terms(const MonomialOrder& ord,
                                     const std::vector<MPoly::Term>& a,
                                     const std::vector<MPoly::Term>& b,
                                     const Rational& b_scale) {
    std::vector<MPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int cmp = ord.compare(a[i].m, b[j].m);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({b[j].m, b_scale * b[j].c});
            ++j;
        } else {
            Rational c = a[i].c + b_scale * b[j].c;
            if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].m, b_scale * b[j].c});
    return out;
}

} // namespace

void require_same_ring(const MPoly& a, const MPoly& b) {
    if (a.ring() != b.ring() && !same_ring(*a.ring(), *b.ring()))
        throw StructuralError("mixed-ring polynomial operation");
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_ring(*this, o);
    terms_ = merge_terms(ring_->order, terms_, o.terms_, Rational(1));
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_ring(*this, o);
    terms_ = merge_terms(ring_->order, terms_, o.terms_, Rational(-1));
    return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r += b;
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r -= b;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    require_same_ring(a, b);
    MPoly r(a.ring_);
    std::vector<MPoly::Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            acc.push_back({monomial_mul(ta.m, tb.m), ta.c * tb.c});
    r.terms_ = std::move(acc);
    r.normalize();
    return r;
}

MPoly operator*(const Rational& s, const MPoly& p) {
    if (s.is_zero()) return MPoly(p.ring_);
    MPoly r = p;
    for (auto& t : r.terms_) t.c = s * t.c;
    return r;
}

MPoly MPoly::mul_term(const Monomial& m, const Rational& c) const {
    if (m.size() != static_cast<std::size_t>(ring_->nvars()))
        throw StructuralError("term arity mismatch");
    if (c.is_zero()) return MPoly(ring_);
    MPoly r(ring_);
    r.terms_.reserve(terms_.size());
    // Multiplying every term by one monomial preserves the sort order.
    for (const auto& t : terms_) r.terms_.push_back({monomial_mul(t.m, m), c * t.c});
    return r;
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly r = constant(ring_, Rational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return leading_coeff().inv() * *this;
}

MPoly MPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& t : terms_) {
        mpz_class l, g;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.c.den().get_mpz_t());
        den_lcm = l;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.c.num().get_mpz_t());
        num_gcd = g;
    }
    Rational scale{mpq_class(den_lcm, num_gcd)};
    if (leading_coeff().sign() < 0) scale = -scale;
    return scale * *this;
}

bool MPoly::operator==(const MPoly& o) const {
    require_same_ring(*this, o);
    return terms_ == o.terms_;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != static_cast<std::size_t>(ring_->nvars()))
        throw StructuralError("evaluation point arity mismatch");
    // Power cache per variable up to its max exponent.
    std::vector<std::vector<Rational>> powers(point.size());
    for (std::size_t v = 0; v < point.size(); ++v) {
        std::uint32_t maxe = 0;
        for (const auto& t : terms_) maxe = std::max(maxe, t.m[v]);
        auto& pv = powers[v];
        pv.resize(maxe + 1);
        pv[0] = Rational(1);
        for (std::uint32_t e = 1; e <= maxe; ++e) pv[e] = pv[e - 1] * point[v];
    }
    Rational acc;
    for (const auto& t : terms_) {
        Rational term = t.c;
        for (std::size_t v = 0; v < point.size(); ++v)
            if (t.m[v] > 0) term *= powers[v][t.m[v]];
        acc += term;
    }
    return acc;
}

Interval MPoly::eval_interval(std::span<const Interval> box) const {
    if (box.size() != static_cast<std::size_t>(ring_->nvars()))
        throw StructuralError("evaluation box arity mismatch");
    Interval acc(Rational(0));
    for (const auto& t : terms_) {
        Interval term(t.c);
        for (std::size_t v = 0; v < box.size(); ++v)
            if (t.m[v] > 0) term = term * interval_pow(box[v], t.m[v]);
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::with_ring(RingPtr ring) const {
    if (!ring) throw StructuralError("polynomial without a ring");
    if (ring->nvars() != ring_->nvars())
        throw StructuralError("ring change must keep the variable count");
    MPoly r(std::move(ring));
    r.terms_ = terms_;
    r.normalize();
    return r;
}

MPoly substitute_linear(const MPoly& p, const RationalMatrix& a) {
    const RingPtr& ring = p.ring();
    int n = ring->nvars();
    if (a.rows() != n || a.cols() != n)
        throw StructuralError("substitution matrix must be square over the ring variables");

    // Linear form for each variable; powers cached lazily.
    std::vector<MPoly> forms;
    forms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        MPoly li(ring);
        std::vector<MPoly::Term> terms;
        for (int j = 0; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            Monomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(j)] = 1;
            terms.push_back({std::move(m), a.at(i, j)});
        }
        forms.push_back(MPoly::from_terms(ring, std::move(terms)));
    }
    std::vector<std::vector<MPoly>> powers(static_cast<std::size_t>(n));
    auto form_pow = [&](int v, std::uint32_t e) -> const MPoly& {
        auto& pv = powers[static_cast<std::size_t>(v)];
        if (pv.empty()) pv.push_back(MPoly::constant(ring, Rational(1)));
        while (pv.size() <= e) pv.push_back(pv.back() * forms[static_cast<std::size_t>(v)]);
        return pv[e];
    };

    MPoly out(ring);
    for (const auto& t : p.terms()) {
        MPoly term = MPoly::constant(ring, t.c);
        for (int v = 0; v < n; ++v) {
            std::uint32_t e = t.m[static_cast<std::size_t>(v)];
            if (e > 0) term = term * form_pow(v, e);
        }
        out += term;
    }
    return out;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational a = t.c.abs();
        if (first) {
            if (t.c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (t.c.sign() < 0 ? " - " : " + ");
        }
        bool constant_term = total_degree(t.m) == 0;
        bool show_coeff = constant_term || a != Rational(1);
        if (show_coeff) os << a.str();
        bool printed_var = false;
        for (std::size_t v = 0; v < t.m.size(); ++v) {
            if (t.m[v] == 0) continue;
            if (show_coeff || printed_var) os << "*";
            os << ring_->vars[v];
            if (t.m[v] > 1) os << "^" << t.m[v];
            printed_var = true;
        }
    }
    return os.str();
}

} // namespace pcp
