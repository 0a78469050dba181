#include "pcp/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "pcp/float_interval.hpp"
#include "pcp/roots.hpp"

namespace pcp {

PrecisionPair make_precision(Rational gamma1, Rational gamma2) {
    if (gamma1.sign() <= 0 || gamma2.sign() <= 0 || !(gamma1 < gamma2))
        throw StructuralError("precision pair needs 0 < gamma1 < gamma2");
    return {std::move(gamma1), std::move(gamma2)};
}

std::vector<Rational> Solution::midpoint() const {
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& xi : x) out.push_back(xi.midpoint());
    return out;
}

namespace {

struct Candidate {
    IsolatedRoot root;
    std::vector<Interval> box;
    Interval phi{Rational(0)};
};

// Coefficient enclosures of every tracked polynomial at one shared
// precision, built once per enumeration pass. The parameterizing
// polynomials carry coefficients of thousands of bits, so evaluating them
// in exact rational arithmetic at every refinement step dominates the whole
// pipeline; fixed-precision outward enclosures keep each evaluation cheap
// while the exact certificate downstream still guards the result.
struct BallCtx {
    long prec = 0;
    std::vector<BallPoly> v;
    BallPoly phi;
    const UnivarRep* rep;
    const UPoly* phi_p;

    BallCtx(const UnivarRep& r, const UPoly* ph, const Rational& coord_target,
            const Rational& phi_target)
        : rep(&r), phi_p(ph) {
        // Rounding noise must sit well below the widths the loop must reach;
        // every evaluated root lies within the root bound of w.
        Rational bound = root_bound_pow2(r.w);
        Rational margin = coord_target / Rational(16);
        for (const auto& vi : r.v) prec = std::max(prec, horner_precision(vi, bound, margin));
        if (ph) {
            Rational pm = min(margin, phi_target / Rational(16));
            prec = std::max(prec, horner_precision(*ph, bound, pm));
        }
        rebuild();
    }

    void rebuild() {
        v.clear();
        v.reserve(rep->v.size());
        for (const auto& vi : rep->v) v.emplace_back(vi, prec);
        if (phi_p) phi = BallPoly(*phi_p, prec);
    }

    void escalate() {
        prec *= 2;
        rebuild();
    }
};

// Enclosures of the parameterized coordinates at one root, refined until
// every tracked width drops below its target. zero_mask pins coordinates
// whose parameterizing polynomial vanishes on this root's factor. Enclosure
// widths scale linearly with the bracket width, so each round jumps most of
// the remaining distance instead of halving; stagnation despite a narrower
// bracket means the rounding floor, cured by escalating the precision.
Candidate refine_candidate(const UPoly& sf, IsolatedRoot root, const UnivarRep& rep,
                           const std::vector<bool>& zero_mask,
                           const Rational& coord_target, const UPoly* phi,
                           const Rational& phi_target, BallCtx& ctx) {
    Candidate c;
    c.root = std::move(root);
    Rational prev_worst(-1);
    for (int iter = 0;; ++iter) {
        if (iter > 256) throw StructuralError("coordinate enclosure refinement stalled");
        if (c.root.is_exact()) {
            const Rational& t = c.root.lo;
            for (std::size_t i = 0; i < rep.v.size(); ++i) {
                if (!zero_mask.empty() && zero_mask[i]) c.box.emplace_back(Rational(0));
                else c.box.emplace_back(rep.v[i].evaluate(t));
            }
            if (phi) c.phi = Interval(phi->evaluate(t));
            return c;
        }
        c.box.clear();
        FloatInterval at = FloatInterval::from_interval(c.root.as_interval(), ctx.prec);
        Rational worst(0);
        for (std::size_t i = 0; i < rep.v.size(); ++i) {
            if (!zero_mask.empty() && zero_mask[i]) {
                c.box.emplace_back(Rational(0));
                continue;
            }
            Interval xi = ctx.v[i].eval(at).to_interval();
            worst = max(worst, xi.width());
            c.box.push_back(std::move(xi));
        }
        Rational shrink(1);
        if (worst > coord_target) shrink = coord_target / worst;
        if (phi) {
            c.phi = ctx.phi.eval(at).to_interval();
            if (c.phi.width() > phi_target) {
                shrink = min(shrink, phi_target / c.phi.width());
                worst = max(worst, c.phi.width());
            }
        }
        if (shrink == Rational(1)) return c;
        if (prev_worst.sign() > 0 && worst * Rational(2) > prev_worst) {
            ctx.escalate();
            prev_worst = Rational(-1);
            continue;
        }
        prev_worst = worst;
        Rational next = min(c.root.width() * shrink / Rational(4),
                            c.root.width() / Rational(2));
        c.root = refine_root(sf, c.root, next);
    }
}

// Certificate: complementarity products must straddle zero and the
// nonnegativity margins must stay above -gamma2. With correct enclosures the
// first holds by construction; a violation means a broken invariant.
Rational certify(const Candidate& c, const PCPProblem& p, const Rational& gamma2) {
    Rational residual(0);
    Rational margin = -gamma2;
    for (int i = 0; i < p.n(); ++i) {
        const Interval& xi = c.box[static_cast<std::size_t>(i)];
        Interval fi = p.f[static_cast<std::size_t>(i)].eval_interval(c.box);
        Interval product = xi * fi;
        if (!product.contains_zero())
            throw CertificationError("complementarity residual excludes zero");
        if (xi.lo < margin)
            throw CertificationError("negative coordinate beyond tolerance");
        if (fi.lo < margin)
            throw CertificationError("negative map value beyond tolerance");
        residual = max(residual, product.magnitude());
    }
    return residual;
}

Rational coordinate_target(const UnivarRep& rep, const PCPProblem& p,
                           const PrecisionPair& prec) {
    Rational by_sep = prec.gamma2 / Rational(4L * p.n());
    Rational by_digits = Rational::power_of_ten(-(10 + std::max(rep.w.degree(), 0)));
    return min(by_sep, by_digits);
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Merge candidates within gamma2 of each other (Euclidean distance of
// midpoints); each group keeps its smallest-residual member, ties resolved
// toward the lexicographically smallest midpoint.
std::vector<Solution> dedup(std::vector<Solution> all, const Rational& gamma2) {
    std::size_t n = all.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<std::vector<Rational>> mids;
    mids.reserve(n);
    for (const auto& s : all) mids.push_back(s.midpoint());
    Rational limit = gamma2 * gamma2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational d2(0);
            for (std::size_t k = 0; k < mids[i].size(); ++k) {
                Rational diff = mids[i][k] - mids[j][k];
                d2 += diff * diff;
            }
            if (d2 < limit) parent[find(i)] = find(j);
        }
    std::vector<Solution> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        std::size_t best = i;
        for (std::size_t j = 0; j < n; ++j) {
            if (find(j) != i || j == best) continue;
            bool better = all[j].residual_bound < all[best].residual_bound ||
                          (all[j].residual_bound == all[best].residual_bound &&
                           lex_less(mids[j], mids[best]));
            if (better) best = j;
        }
        out.push_back(all[best]);
    }
    std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
        return lex_less(a.midpoint(), b.midpoint());
    });
    return out;
}

std::vector<Solution> candidates_to_solutions(const std::vector<Candidate>& cands,
                                              const PCPProblem& p,
                                              const PrecisionPair& prec) {
    std::vector<Solution> out;
    out.reserve(cands.size());
    for (const auto& c : cands) {
        Solution s;
        s.x = c.box;
        s.residual_bound = certify(c, p, prec.gamma2);
        out.push_back(std::move(s));
    }
    return dedup(std::move(out), prec.gamma2);
}

void validate(const UnivarRep& rep, const PCPProblem& p) {
    if (static_cast<int>(rep.v.size()) != p.n())
        throw StructuralError("representation arity does not match the problem");
}

} // namespace

std::vector<Solution> enumerate_solutions(const UnivarRep& rep, const PCPProblem& p,
                                          const PrecisionPair& prec) {
    validate(rep, p);
    if (rep.w.degree() < 1) return {};
    Rational target = coordinate_target(rep, p, prec);
    UPoly sf = squarefree_part(rep.w);
    BallCtx ctx(rep, nullptr, target, Rational(1));
    std::vector<Candidate> cands;
    for (auto& root : isolate_real_roots(rep.w, prec.gamma1))
        cands.push_back(refine_candidate(sf, std::move(root), rep, {}, target, nullptr,
                                         Rational(1), ctx));
    return candidates_to_solutions(cands, p, prec);
}

std::vector<Solution> enumerate_least_norm(const UnivarRep& rep, const PCPProblem& p,
                                           const PrecisionPair& prec) {
    validate(rep, p);
    if (!rep.phi) throw StructuralError("least-norm enumeration needs phi");
    if (rep.w.degree() < 1) return {};
    Rational target = coordinate_target(rep, p, prec);
    Rational phi_target = prec.gamma2 * prec.gamma2 / Rational(4);
    UPoly sf = squarefree_part(rep.w);
    BallCtx ctx(rep, &*rep.phi, target, phi_target);
    std::vector<Candidate> cands;
    for (auto& root : isolate_real_roots(rep.w, prec.gamma1))
        cands.push_back(refine_candidate(sf, std::move(root), rep, {}, target,
                                         &*rep.phi, phi_target, ctx));
    if (cands.empty()) return {};

    // Keep the roots whose squared norm cannot exceed the smallest upper
    // bound; values closer than the enclosure widths survive together.
    Rational cutoff = cands[0].phi.hi;
    for (const auto& c : cands) cutoff = min(cutoff, c.phi.hi);
    std::vector<Candidate> kept;
    for (auto& c : cands)
        if (c.phi.lo <= cutoff) kept.push_back(std::move(c));
    return candidates_to_solutions(kept, p, prec);
}

std::pair<int, std::vector<Solution>> enumerate_sparse(const SparseRep& rep,
                                                       const PCPProblem& p,
                                                       const PrecisionPair& prec) {
    validate(rep.base, p);
    if (rep.k < 0) return {rep.k, {}};
    Rational target = coordinate_target(rep.base, p, prec);
    BallCtx ctx(rep.base, nullptr, target, Rational(1));
    std::vector<Candidate> cands;
    for (const auto& pattern : rep.omega) {
        std::vector<UPoly> gs;
        gs.push_back(rep.base.w);
        std::vector<bool> mask(rep.base.v.size(), false);
        for (int i : pattern) {
            gs.push_back(rep.base.v[static_cast<std::size_t>(i)]);
            mask[static_cast<std::size_t>(i)] = true;
        }
        UPoly wl = ugcd(gs);
        if (wl.degree() < 1) continue;
        UPoly sf = squarefree_part(wl);
        for (auto& root : isolate_real_roots(wl, prec.gamma1))
            cands.push_back(refine_candidate(sf, std::move(root), rep.base, mask, target,
                                             nullptr, Rational(1), ctx));
    }
    return {rep.k, candidates_to_solutions(cands, p, prec)};
}

} // namespace pcp
