#include "pcp/roots.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pcp/errors.hpp"
#include "pcp/float_interval.hpp"

namespace pcp {

namespace {

// Positive-constant multiple with integer coefficients of content 1.
// Unlike UPoly::primitive this never flips the sign, which Sturm chains need.
UPoly positive_primitive(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly q = p.primitive();
    if (q.leading().sign() != p.leading().sign()) return -q;
    return q;
}

// Canonical Sturm chain of a squarefree polynomial.
std::vector<UPoly> sturm_chain(const UPoly& sf) {
    std::vector<UPoly> chain;
    chain.push_back(positive_primitive(sf));
    UPoly d = sf.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(positive_primitive(d));
    while (true) {
        const UPoly& a = chain[chain.size() - 2];
        const UPoly& b = chain.back();
        UPoly r = udivrem(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

// Sign variations of the chain at t, zeros skipped. With this convention
// variations(a) - variations(b) counts roots in (a, b].
int variations(const std::vector<UPoly>& chain, const Rational& t) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.evaluate(t).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Sign decisions at rational points through coefficient enclosures at
// rising precision, with exact evaluation as last resort once the enclosure
// cost would pass the exact one. Expects integer coefficients so the exact
// cutoff can come from the integrality bound |p(a/b)| >= 1 / b^deg.
class SignLadder {
public:
    SignLadder(const UPoly& p, long base_prec) : p_(p), base_(base_prec) {
        for (const auto& c : p_.coeffs()) {
            if (c.is_zero()) continue;
            bits_ = std::max(bits_, static_cast<long>(mpz_sizeinbase(c.num().get_mpz_t(), 2)));
        }
    }

    int at(const Rational& t) {
        if (t.is_zero()) return p_.coeff(0).sign();
        long deg = p_.degree();
        long scale = static_cast<long>(mpz_sizeinbase(t.den().get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(t.num().get_mpz_t(), 2));
        long exact_bits = bits_ + deg * scale + 64;
        for (long p = base_; p < exact_bits; p *= 4) {
            auto it = rungs_.try_emplace(p, p_, p).first;
            int s = it->second.eval(FloatInterval::from_rational(t, p)).definite_sign();
            if (s != 0) return s;
        }
        return p_.evaluate(t).sign();
    }

private:
    const UPoly& p_;
    long base_;
    long bits_ = 0;
    std::map<long, BallPoly> rungs_;
};

// Coarsest dyadic rational in [a, b], found by binary search on the level:
// the integer multiples of 2^-j hitting [a, b] are monotone in j. In a
// bracket tight around a dyadic root this is the root itself.
Rational coarsest_dyadic(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 && b.sign() >= 0) return Rational(0);
    mpz_class k;
    auto level_hit = [&](long j) {
        mpz_class lo_k, hi_k, t = a.num();
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(j));
        mpz_cdiv_q(lo_k.get_mpz_t(), t.get_mpz_t(), a.den().get_mpz_t());
        t = b.num();
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(j));
        mpz_fdiv_q(hi_k.get_mpz_t(), t.get_mpz_t(), b.den().get_mpz_t());
        if (lo_k > hi_k) return false;
        k = a.sign() > 0 ? lo_k : hi_k;
        return true;
    };
    if (level_hit(0)) return Rational(k);
    long miss = 0, hit = 1;
    while (!level_hit(hit)) {
        miss = hit;
        hit *= 2; // passes once 2^j covers 1 / (b - a)
    }
    while (hit - miss > 1) {
        long mid = miss + (hit - miss) / 2;
        if (level_hit(mid)) hit = mid;
        else miss = mid;
    }
    level_hit(hit);
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(hit));
    return Rational(mpq_class(k, den));
}

// Past this degree the chain's coefficient growth swamps everything and
// variation bisection takes over.
constexpr int kVariationDegree = 64;

int sign_variations(const std::vector<mpz_class>& c) {
    int v = 0, prev = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// In-place Taylor shift c(x) <- c(x+1), Pascal style.
void shift_by_one(std::vector<mpz_class>& c) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
}

// Descartes bound for the open unit interval: sign variations of
// (x+1)^deg r(1/(x+1)). Zero means no root, one means exactly one.
int unit_interval_variations(std::vector<mpz_class> r) {
    std::reverse(r.begin(), r.end());
    shift_by_one(r);
    return sign_variations(r);
}

// The subdivision transforms only ever inject powers of two; stripping them
// keeps node coefficients near the input size.
void strip_two_content(std::vector<mpz_class>& c) {
    mp_bitcnt_t tz = 0;
    bool first = true;
    for (const auto& x : c) {
        if (x == 0) continue;
        mp_bitcnt_t t = mpz_scan1(x.get_mpz_t(), 0);
        tz = first ? t : std::min(tz, t);
        first = false;
        if (tz == 0) return;
    }
    if (first) return;
    for (auto& x : c)
        if (x != 0) mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), tz);
}

// Root isolation without a Sturm chain, for degrees where the chain's
// intermediate swell dominates: bisection of (0, 1) driven by the Descartes
// bound on exactly transformed integer coefficients. Interval arithmetic is
// useless here (coefficients of well-spread root sets dwarf the values over
// the hull, so enclosures never tighten), while the per-node Taylor shifts
// keep the sign count conditioned to the node. A grid root is recorded by
// the one node holding it as a left endpoint (vanishing constant term) and
// stripped unrecorded where it appears as a right endpoint, so every
// emitted unit-variation node holds one interior root of its own
// endpoint-free polynomial, which is what gets refined. sf must be
// squarefree; brackets come back ascending with width <= precision unless
// count_only skips the refinement.
std::vector<IsolatedRoot> isolate_by_variation(const UPoly& sf, const Rational& precision,
                                               bool count_only = false) {
    UPoly sfi = positive_primitive(sf);
    std::vector<IsolatedRoot> out;
    if (sfi.coeff(0).is_zero()) {
        out.push_back({Rational(0), Rational(0)});
        std::vector<Rational> c(sfi.coeffs().begin() + 1, sfi.coeffs().end());
        sfi = UPoly(std::move(c));
    }
    // Doubling keeps every root strictly inside (-b, b); a root exactly at
    // the bound would sit on a right edge no node owns.
    const Rational b = root_bound_pow2(sfi) * Rational(2);
    const long e = static_cast<long>(mpz_sizeinbase(b.num().get_mpz_t(), 2)) - 1;
    const int n = sfi.degree();
    std::vector<mpz_class> base(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        base[static_cast<std::size_t>(i)] = sfi.coeff(i).num();
        mpz_mul_2exp(base[static_cast<std::size_t>(i)].get_mpz_t(),
                     base[static_cast<std::size_t>(i)].get_mpz_t(),
                     static_cast<mp_bitcnt_t>(e * i));
    }
    struct Node {
        std::vector<mpz_class> r;
        mpz_class c;
        long k;
    };
    long budget = 0;
    for (int side : {1, -1}) {
        // Map x in (0,1) through t = side * b * (c + x) / 2^k.
        auto endpoint = [&](const mpz_class& c, long k, int off) {
            mpz_class den = 1;
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
            return Rational(mpq_class(c + off, den)) * b * Rational(side);
        };
        std::vector<Node> stack;
        {
            Node top{base, mpz_class(0), 0};
            if (side < 0)
                for (int i = 1; i <= n; i += 2) top.r[static_cast<std::size_t>(i)] *= -1;
            stack.push_back(std::move(top));
        }
        while (!stack.empty()) {
            if (++budget > 200000) throw StructuralError("variation isolation stalled");
            Node nd = std::move(stack.back());
            stack.pop_back();
            strip_two_content(nd.r);
            if (!nd.r.empty() && nd.r.front() == 0) {
                out.push_back({endpoint(nd.c, nd.k, 0), endpoint(nd.c, nd.k, 0)});
                nd.r.erase(nd.r.begin());
            }
            if (nd.r.size() <= 1) continue;
            {
                mpz_class s1 = 0;
                for (const auto& x : nd.r) s1 += x;
                if (s1 == 0) {
                    // Right-endpoint root: divide out (x - 1), record nothing.
                    // Descending accumulation leaves the quotient in r[1..n].
                    for (std::size_t i = nd.r.size() - 1; i > 0; --i) nd.r[i - 1] += nd.r[i];
                    nd.r.erase(nd.r.begin());
                    if (nd.r.size() <= 1) continue;
                }
            }
            const int v = unit_interval_variations(nd.r);
            if (v == 0) continue;
            if (v == 1) {
                Rational xlo(0), xhi(1);
                if (!count_only) {
                    std::vector<Rational> rc(nd.r.size());
                    for (std::size_t i = 0; i < nd.r.size(); ++i) rc[i] = Rational(nd.r[i]);
                    mpz_class den = 1;
                    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                                 static_cast<mp_bitcnt_t>(nd.k));
                    const Rational scale = b / Rational(den);
                    IsolatedRoot xr = refine_root(UPoly(std::move(rc)),
                                                  {std::move(xlo), std::move(xhi)},
                                                  precision / scale);
                    xlo = xr.lo;
                    xhi = xr.hi;
                }
                Rational lo = endpoint(nd.c, nd.k, 0) * (Rational(1) - xlo) +
                              endpoint(nd.c, nd.k, 1) * xlo;
                Rational hi = endpoint(nd.c, nd.k, 0) * (Rational(1) - xhi) +
                              endpoint(nd.c, nd.k, 1) * xhi;
                if (hi < lo) std::swap(lo, hi);
                out.push_back({std::move(lo), std::move(hi)});
                continue;
            }
            const std::size_t m = nd.r.size();
            Node left{nd.r, nd.c * 2, nd.k + 1};
            for (std::size_t i = 0; i + 1 < m; ++i)
                mpz_mul_2exp(left.r[i].get_mpz_t(), left.r[i].get_mpz_t(),
                             static_cast<mp_bitcnt_t>(m - 1 - i));
            Node right{left.r, nd.c * 2 + 1, nd.k + 1};
            shift_by_one(right.r);
            stack.push_back(std::move(right));
            stack.push_back(std::move(left));
        }
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
        return x.midpoint() < y.midpoint();
    });
    return out;
}

} // namespace

// Power of two >= every root magnitude, via the Fujiwara bound
// 2 * max_k (|c_{n-k}| / |c_n|)^(1/k).
Rational root_bound_pow2(const UPoly& p) {
    int n = p.degree();
    // Clear denominators first so the bound works with integers.
    UPoly q = p.primitive();
    Rational best(1);
    for (int k = 1; k <= n; ++k) {
        const Rational& c = q.coeff(n - k);
        if (c.is_zero()) continue;
        mpz_class ratio_ceil =
            (::abs(c.num()) + ::abs(q.leading().num()) - 1) / ::abs(q.leading().num());
        mpz_class root;
        mpz_root(root.get_mpz_t(), ratio_ceil.get_mpz_t(), static_cast<unsigned long>(k));
        Rational cand(mpz_class(root + 1));
        if (best < cand) best = cand;
    }
    Rational bound = Rational(2) * best;
    Rational b2(1);
    while (b2 < bound) b2 *= Rational(2);
    return b2;
}

namespace {

struct Segment {
    Rational lo, hi;
    int vlo, vhi; // chain variations at the endpoints
};

} // namespace

int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw DomainError("root count of zero polynomial");
    if (hi < lo) throw StructuralError("sturm_count with hi < lo");
    if (p.degree() == 0 || lo == hi) return 0;
    auto chain = sturm_chain(squarefree_part(p));
    return variations(chain, lo) - variations(chain, hi);
}

int count_real_roots(const UPoly& p) {
    if (p.is_zero()) throw DomainError("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    UPoly sf = squarefree_part(p);
    if (sf.degree() >= kVariationDegree)
        return static_cast<int>(isolate_by_variation(sf, Rational(1), true).size());
    Rational b = root_bound_pow2(p);
    return sturm_count(p, -b, b);
}

IsolatedRoot refine_root(const UPoly& sf, IsolatedRoot r, const Rational& width) {
    if (r.is_exact() || !(r.width() > width)) return r;
    // Scale-free form: sf and its derivative enter only through their ratio,
    // so the integer primitive works throughout and keeps SignLadder exact
    // cutoffs valid.
    UPoly sfi = positive_primitive(sf);
    UPoly dfi = sfi.derivative();
    Rational mag = max(r.lo.abs(), r.hi.abs());
    if (mag < Rational(1)) mag = Rational(1);
    // Sized for the end game: evaluation noise at the target width must stay
    // below |sf(m)|, with slack for small derivative magnitudes.
    long prec = horner_precision(sfi, mag, width) + 96;
    BallPoly fb(sfi, prec);
    BallPoly db(dfi, prec);
    SignLadder signs(sfi, prec);
    int slo = 0;
    int guard = 0;
    while (r.width() > width) {
        if (++guard > 4096) throw StructuralError("root bracket refinement stalled");
        // Interval Newton: every root in the bracket lies in
        // m - sf(m) / sf'([lo, hi]); keep the step only when it halves.
        FloatInterval dI = db.eval(FloatInterval::from_interval(r.as_interval(), prec));
        if (dI.definite_sign() != 0) {
            Rational m = r.midpoint();
            FloatInterval fm = fb.eval(FloatInterval::from_rational(m, prec));
            FloatInterval q = fm / dI;
            Rational nlo = max(m - q.hi(), r.lo);
            Rational nhi = min(m - q.lo(), r.hi);
            if (!(nhi < nlo) && (nhi - nlo) * Rational(2) <= r.width()) {
                r.lo = std::move(nlo);
                r.hi = std::move(nhi);
                slo = 0;
                // Newton windows are never exactly on a rational root the
                // way aligned bisection probes are; probing the coarsest
                // dyadic in the bracket restores exact collapsing.
                if (!r.is_exact()) {
                    Rational d = coarsest_dyadic(r.lo, r.hi);
                    if (signs.at(d) == 0) return IsolatedRoot{d, d};
                }
                continue;
            }
        }
        // Bisection fallback on ladder signs.
        if (slo == 0) {
            slo = signs.at(r.lo);
            if (slo == 0) return IsolatedRoot{r.lo, r.lo};
        }
        Rational m = r.midpoint();
        int sm = signs.at(m);
        if (sm == 0) return IsolatedRoot{m, m};
        if (sm == slo) r.lo = std::move(m);
        else r.hi = std::move(m);
    }
    return r;
}

std::vector<IsolatedRoot> isolate_real_roots(const UPoly& p, const Rational& precision) {
    if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
    if (precision.sign() <= 0) throw StructuralError("precision must be positive");
    if (p.degree() == 0) return {};

    UPoly sf = squarefree_part(p);
    if (sf.degree() >= kVariationDegree) return isolate_by_variation(sf, precision);

    std::vector<IsolatedRoot> exact_roots;

    // Bisect with Sturm counts over (lo, hi]. A probe landing exactly on a
    // root records it and deflates, restarting on the quotient so every
    // remaining count stays valid.
    std::vector<IsolatedRoot> brackets;
    bool restart = true;
    while (restart) {
        restart = false;
        brackets.clear();
        if (sf.degree() == 0) break;
        Rational b = root_bound_pow2(sf);
        auto chain = sturm_chain(sf);
        std::vector<Segment> stack;
        {
            int vlo = variations(chain, -b), vhi = variations(chain, b);
            if (vlo - vhi > 0) stack.push_back({-b, b, vlo, vhi});
        }
        while (!stack.empty()) {
            Segment seg = stack.back();
            stack.pop_back();
            int k = seg.vlo - seg.vhi;
            if (k == 0) continue;
            if (k == 1) {
                // Single root: drop the chain and bisect on sign changes.
                brackets.push_back(refine_root(sf, {seg.lo, seg.hi}, precision));
                continue;
            }
            Rational m = (seg.lo + seg.hi) / Rational(2);
            if (sf.evaluate(m).is_zero()) {
                exact_roots.push_back({m, m});
                sf = udivrem(sf, UPoly({-m, Rational(1)})).first;
                restart = true;
                break;
            }
            int vm = variations(chain, m);
            stack.push_back({m, seg.hi, vm, seg.vhi});
            stack.push_back({seg.lo, m, seg.vlo, vm});
        }
    }

    // Push recorded exact roots out of any bracket that happens to cover
    // them, so the result is pairwise disjoint.
    for (auto& br : brackets) {
        bool overlapped = true;
        while (overlapped && !br.is_exact()) {
            overlapped = false;
            for (const auto& ex : exact_roots) {
                if (br.lo <= ex.lo && ex.lo <= br.hi) {
                    br = refine_root(sf, br, br.width() / Rational(2));
                    overlapped = true;
                    break;
                }
            }
        }
    }

    std::vector<IsolatedRoot> out = std::move(brackets);
    out.insert(out.end(), exact_roots.begin(), exact_roots.end());
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) {
                  return a.midpoint() < b.midpoint();
              });
    return out;
}

Interval eval_interval(const UPoly& p, const Interval& x) {
    Interval acc(Rational(0));
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * x + Interval(p.coeff(k));
    return acc;
}

} // namespace pcp
