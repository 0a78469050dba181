#include "pcp/ring.hpp"

#include <algorithm>

namespace pcp {

bool monomial_divides(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomial size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomial size mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomial size mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw DomainError("monomial division not exact");
        r[i] = a[i] - b[i];
    }
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomial size mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

MonomialOrder MonomialOrder::lex(int nvars) {
    MonomialOrder o;
    o.kind = OrderKind::lex;
    o.precedence.resize(static_cast<std::size_t>(nvars));
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
    MonomialOrder o = lex(nvars);
    o.kind = OrderKind::grevlex;
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size() || a.size() != precedence.size())
        throw StructuralError("monomial size mismatch in order comparison");
    if (kind == OrderKind::lex) {
        for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
            std::uint32_t ea = a[static_cast<std::size_t>(*it)];
            std::uint32_t eb = b[static_cast<std::size_t>(*it)];
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    // Equal degree: the smaller exponent on the least significant differing
    // variable wins.
    for (int idx : precedence) {
        std::uint32_t ea = a[static_cast<std::size_t>(idx)];
        std::uint32_t eb = b[static_cast<std::size_t>(idx)];
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

RingPtr make_ring(std::vector<std::string> vars, OrderKind kind) {
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->order = kind == OrderKind::lex ? MonomialOrder::lex(r->nvars())
                                      : MonomialOrder::grevlex(r->nvars());
    return r;
}

RingPtr with_order(const RingPtr& ring, OrderKind kind) {
    if (ring->order.kind == kind) return ring;
    return make_ring(ring->vars, kind);
}

bool same_ring(const Ring& a, const Ring& b) {
    return a.vars == b.vars && a.order == b.order;
}

} // namespace pcp
