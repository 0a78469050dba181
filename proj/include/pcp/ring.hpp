#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pcp/errors.hpp"

namespace pcp {

// Exponent vector; entry i is the power of variable i.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool monomial_divides(const Monomial& a, const Monomial& b); // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, grevlex };

// Monomial order with a variable precedence. precedence lists variable
// indices from least to greatest significance; the default is ascending
// by index, i.e. the first variable is the smallest.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<int> precedence;

    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);

    // <0, 0, >0 as a is smaller, equal, greater than b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder&) const = default;
};

// Shared variable context for multivariate polynomials.
struct Ring {
    std::vector<std::string> vars;
    MonomialOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, OrderKind kind);
RingPtr with_order(const RingPtr& ring, OrderKind kind);

// Structurally equal: same variables and same order.
bool same_ring(const Ring& a, const Ring& b);

} // namespace pcp
