#include "pcp/groebner.hpp"

#include <algorithm>
#include <list>
#include <utility>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

const MPoly* find_reducer(const Monomial& m, std::span<const MPoly> gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (monomial_divides(g.leading_monomial(), m)) return &g;
    }
    return nullptr;
}

MPoly spoly(const MPoly& f, const MPoly& g) {
    const Monomial lcm = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    MPoly a = f.mul_term(monomial_div(lcm, f.leading_monomial()), f.leading_coeff().inv());
    MPoly b = g.mul_term(monomial_div(lcm, g.leading_monomial()), g.leading_coeff().inv());
    return a - b;
}

struct Pair {
    std::size_t i, j; // i < j, indices into the working basis
    Monomial lcm;
    std::uint32_t lcm_degree;
};

// Normal selection: smallest lcm degree, then smallest lcm in the ring
// order, then lowest indices.
bool pair_before(const MonomialOrder& ord, const Pair& a, const Pair& b) {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    int cmp = ord.compare(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

// Pair-set update for a new basis element: among new pairs, drop those whose
// lcm is a proper multiple of another new pair's lcm, collapse equal lcms
// (an equal-lcm group containing a coprime pair disappears entirely), and
// prune old pairs whose lcm factors through the new leading monomial.
void update_pairs(std::vector<Pair>& pairs, const std::vector<MPoly>& basis,
                  std::size_t t) {
    const Monomial& lt = basis[t].leading_monomial();

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
        Monomial l = monomial_lcm(basis[i].leading_monomial(), lt);
        std::uint32_t d = total_degree(l);
        fresh.push_back({i, t, std::move(l), d});
    }

    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || drop[b]) continue;
            if (fresh[b].lcm != fresh[a].lcm &&
                monomial_divides(fresh[b].lcm, fresh[a].lcm)) {
                drop[a] = true;
                break;
            }
        }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        bool group_coprime =
            coprime(basis[fresh[a].i].leading_monomial(), lt);
        for (std::size_t b = 0; b < fresh.size(); ++b) {
            if (drop[b] || a == b || fresh[b].lcm != fresh[a].lcm) continue;
            if (coprime(basis[fresh[b].i].leading_monomial(), lt)) group_coprime = true;
            if (b > a) drop[b] = true;
        }
        if (group_coprime) drop[a] = true;
    }

    std::erase_if(pairs, [&](const Pair& p) {
        if (!monomial_divides(lt, p.lcm)) return false;
        Monomial li = monomial_lcm(basis[p.i].leading_monomial(), lt);
        Monomial lj = monomial_lcm(basis[p.j].leading_monomial(), lt);
        return li != p.lcm && lj != p.lcm;
    });

    for (std::size_t a = 0; a < fresh.size(); ++a)
        if (!drop[a]) pairs.push_back(std::move(fresh[a]));
}

std::vector<MPoly> reduce_basis(std::vector<MPoly> basis, const MonomialOrder& ord) {
    // Minimal: drop generators whose leading monomial is a multiple of
    // another's. Ascending scan suffices since divisors sort first.
    std::sort(basis.begin(), basis.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<MPoly> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (monomial_divides(kept.leading_monomial(), g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // Tail-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MPoly r = normal_form(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    for (auto& g : minimal) g = g.monic();
    std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return minimal;
}

} // namespace

MPoly normal_form(const MPoly& p, std::span<const MPoly> gens) {
    MPoly work = p;
    std::vector<MPoly::Term> out;
    while (!work.is_zero()) {
        const auto& lt = work.leading_term();
        if (const MPoly* g = find_reducer(lt.m, gens)) {
            work -= g->mul_term(monomial_div(lt.m, g->leading_monomial()),
                                lt.c / g->leading_coeff());
        } else {
            out.push_back(lt);
            work -= MPoly::from_terms(work.ring(), {lt});
        }
    }
    return MPoly::from_terms(p.ring(), std::move(out));
}

DivisionResult divide_with_cofactors(const MPoly& p, std::span<const MPoly> gens) {
    MPoly work = p;
    std::vector<MPoly::Term> out;
    std::vector<MPoly> cof(gens.size(), MPoly::zero(p.ring()));
    while (!work.is_zero()) {
        const auto& lt = work.leading_term();
        bool reduced = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const MPoly& g = gens[k];
            if (g.is_zero() || !monomial_divides(g.leading_monomial(), lt.m)) continue;
            Monomial shift = monomial_div(lt.m, g.leading_monomial());
            Rational scale = lt.c / g.leading_coeff();
            work -= g.mul_term(shift, scale);
            cof[k] += MPoly::from_terms(p.ring(), {{std::move(shift), std::move(scale)}});
            reduced = true;
            break;
        }
        if (!reduced) {
            out.push_back(lt);
            work -= MPoly::from_terms(work.ring(), {lt});
        }
    }
    return {MPoly::from_terms(p.ring(), std::move(out)), std::move(cof)};
}

GroebnerBasis buchberger(std::span<const MPoly> gens) {
    if (gens.empty()) throw StructuralError("buchberger needs at least one generator");
    RingPtr ring = gens[0].ring();
    for (const auto& g : gens) require_same_ring(gens[0], g);

    GroebnerBasis result;
    result.ring = ring;

    std::vector<MPoly> basis;
    std::vector<Pair> pairs;
    auto admit = [&](MPoly h) {
        basis.push_back(h.primitive());
        update_pairs(pairs, basis, basis.size() - 1);
    };
    for (const auto& g : gens)
        if (!g.is_zero()) admit(g);

    if (basis.empty()) {
        result.zero_ideal = true;
        return result;
    }

    const MonomialOrder& ord = ring->order;
    while (!pairs.empty()) {
        auto best = std::min_element(
            pairs.begin(), pairs.end(),
            [&](const Pair& a, const Pair& b) { return pair_before(ord, a, b); });
        Pair p = std::move(*best);
        pairs.erase(best);
        MPoly h = normal_form(spoly(basis[p.i], basis[p.j]), basis);
        if (!h.is_zero()) admit(std::move(h));
    }

    result.generators = reduce_basis(std::move(basis), ord);
    ZeroDimResult zd = is_zero_dimensional(result);
    result.zero_dimensional = zd.zero_dimensional;
    if (zd.zero_dimensional)
        result.quotient_dimension =
            static_cast<long>(quotient_monomial_basis(result).size());
    return result;
}

GroebnerBasis buchberger(std::span<const MPoly> gens, OrderKind order) {
    if (gens.empty()) throw StructuralError("buchberger needs at least one generator");
    RingPtr target = with_order(gens[0].ring(), order);
    std::vector<MPoly> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) moved.push_back(g.with_ring(target));
    return buchberger(moved);
}

ZeroDimResult is_zero_dimensional(const GroebnerBasis& g) {
    if (g.zero_ideal) {
        // Every point is a solution; any variable witnesses the failure.
        return {false, g.ring->nvars() > 0 ? std::optional<int>(0) : std::nullopt};
    }
    int n = g.ring->nvars();
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& gen : g.generators) {
            const Monomial& lm = gen.leading_monomial();
            bool pure = true;
            for (int u = 0; u < n; ++u)
                if (u != v && lm[static_cast<std::size_t>(u)] > 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return {false, v};
    }
    return {true, std::nullopt};
}

std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& g) {
    ZeroDimResult zd = is_zero_dimensional(g);
    if (!zd.zero_dimensional)
        throw DomainError("quotient basis requested for a non-finite solution set");
    int n = g.ring->nvars();
    // Box bound: the minimal pure power of each variable.
    std::vector<std::uint32_t> cap(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::uint32_t best = 0;
        bool have = false;
        for (const auto& gen : g.generators) {
            const Monomial& lm = gen.leading_monomial();
            bool pure = true;
            for (int u = 0; u < n; ++u)
                if (u != v && lm[static_cast<std::size_t>(u)] > 0) {
                    pure = false;
                    break;
                }
            if (!pure) continue;
            std::uint32_t e = lm[static_cast<std::size_t>(v)];
            if (!have || e < best) {
                best = e;
                have = true;
            }
        }
        cap[static_cast<std::size_t>(v)] = best;
    }

    std::vector<Monomial> out;
    Monomial m(static_cast<std::size_t>(n), 0);
    while (true) {
        bool standard = true;
        for (const auto& gen : g.generators)
            if (monomial_divides(gen.leading_monomial(), m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);
        // Odometer over the box [0, cap).
        int v = 0;
        while (v < n) {
            std::size_t vi = static_cast<std::size_t>(v);
            if (cap[vi] > 0 && m[vi] + 1 < cap[vi]) {
                ++m[vi];
                break;
            }
            m[vi] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return g.ring->order.compare(a, b) < 0;
    });
    return out;
}

} // namespace pcp
