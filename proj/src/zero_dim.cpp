#include "pcp/zero_dim.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

MPoly upoly_as_mpoly(const UPoly& p, const RingPtr& ring, int var) {
    std::vector<MPoly::Term> terms;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k).is_zero()) continue;
        Monomial m(static_cast<std::size_t>(ring->nvars()), 0);
        m[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(k);
        terms.push_back({std::move(m), p.coeff(k)});
    }
    return MPoly::from_terms(ring, std::move(terms));
}

std::optional<UPoly> mpoly_as_upoly(const MPoly& p, int var) {
    std::vector<Rational> coeffs;
    for (const auto& t : p.terms()) {
        for (std::size_t v = 0; v < t.m.size(); ++v)
            if (v != static_cast<std::size_t>(var) && t.m[v] > 0) return std::nullopt;
        std::size_t e = t.m[static_cast<std::size_t>(var)];
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] = t.c;
    }
    return UPoly(std::move(coeffs));
}

// Powers of an element as coordinate vectors, stopping at the first linear
// dependency; returns its monic combination. powers_out, when given, gets
// the independent power vectors in order.
UPoly minpoly_from_powers(
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& advance,
    std::vector<Rational> v0, long dim,
    std::vector<std::vector<Rational>>* powers_out) {
    struct Row {
        std::vector<Rational> r;
        std::vector<Rational> combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Rational> v = std::move(v0);
    for (long k = 0;; ++k) {
        std::vector<Rational> vr = v;
        std::vector<Rational> cr(static_cast<std::size_t>(k) + 1);
        cr.back() = Rational(1);
        for (const auto& row : rows) {
            const Rational& f = vr[row.pivot];
            if (f.is_zero()) continue;
            Rational factor = f; // row.r[pivot] == 1
            for (std::size_t i = 0; i < vr.size(); ++i) vr[i] -= factor * row.r[i];
            for (std::size_t i = 0; i < row.combo.size(); ++i)
                cr[i] -= factor * row.combo[i];
        }
        std::size_t pivot = vr.size();
        for (std::size_t i = 0; i < vr.size(); ++i)
            if (!vr[i].is_zero()) { pivot = i; break; }
        if (pivot == vr.size()) return UPoly(std::move(cr));
        if (k > dim) throw DomainError("no linear dependency within the dimension bound");
        Rational inv = vr[pivot].inv();
        for (auto& x : vr) x *= inv;
        for (auto& x : cr) x *= inv;
        rows.push_back({std::move(vr), std::move(cr), pivot});
        if (powers_out) powers_out->push_back(v);
        v = advance(v);
    }
}

std::vector<Rational> matrix_apply(const RationalMatrix& m, const std::vector<Rational>& v) {
    return m.apply(v);
}

// Power sequence of a multiplication matrix kept in integers: column k times
// scale[k] gives the coordinates of the k-th power. One denominator clearing
// up front and a content division per step keep the entries near the size of
// the reduced coordinates without any per-operation gcd.
struct ScaledPowers {
    std::vector<std::vector<mpz_class>> cols;
    std::vector<Rational> scale;
};

ScaledPowers krylov_columns(const RationalMatrix& mul, long d) {
    const int n = static_cast<int>(d);
    const std::size_t nn = static_cast<std::size_t>(n);
    mpz_class lam(1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            mpz_lcm(lam.get_mpz_t(), lam.get_mpz_t(), mul.at(r, c).den().get_mpz_t());
    std::vector<mpz_class> mz(nn * nn);
    mpz_class f;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Rational& x = mul.at(r, c);
            mpz_divexact(f.get_mpz_t(), lam.get_mpz_t(), x.den().get_mpz_t());
            mz[static_cast<std::size_t>(r) * nn + c] = x.num() * f;
        }
    const Rational lam_inv = Rational(lam).inv();

    ScaledPowers out;
    out.cols.reserve(nn + 1);
    out.scale.reserve(nn + 1);
    std::vector<mpz_class> first(nn);
    first[0] = 1;
    out.cols.push_back(std::move(first));
    out.scale.push_back(Rational(1));
    mpz_class g;
    for (long k = 1; k <= d; ++k) {
        const std::vector<mpz_class>& cur = out.cols.back();
        std::vector<mpz_class> nxt(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            const mpz_class* row = &mz[i * nn];
            mpz_class& acc = nxt[i];
            for (std::size_t l = 0; l < nn; ++l) {
                if (sgn(row[l]) == 0 || sgn(cur[l]) == 0) continue;
                mpz_addmul(acc.get_mpz_t(), row[l].get_mpz_t(), cur[l].get_mpz_t());
            }
        }
        g = 0;
        for (std::size_t i = 0; i < nn && g != 1; ++i)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nxt[i].get_mpz_t());
        if (sgn(g) == 0) g = 1;
        if (g != 1)
            for (std::size_t i = 0; i < nn; ++i)
                mpz_divexact(nxt[i].get_mpz_t(), nxt[i].get_mpz_t(), g.get_mpz_t());
        out.scale.push_back(out.scale.back() * Rational(g) * lam_inv);
        out.cols.push_back(std::move(nxt));
    }
    return out;
}

// Shape recovery without the incremental dependency scan: the first d power
// columns form the solve matrix, with the d-th power and the transformed
// coordinates as right-hand sides. A singular solve is exactly a dependent
// power sequence, i.e. a form that fails to separate.
std::optional<ShapeBasis> shape_lifted(const QuotientAlgebra& qa, const RationalMatrix& c,
                                       int m, long d) {
    const int n = static_cast<int>(d);
    ScaledPowers pw = krylov_columns(qa.linear_form_matrix(c.row(0)), d);

    RationalMatrix a(n, n);
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row)
            a.at(row, col) = Rational(pw.cols[static_cast<std::size_t>(col)]
                                             [static_cast<std::size_t>(row)]);
    RationalMatrix rhs(n, m);
    for (int row = 0; row < n; ++row)
        rhs.at(row, 0) = Rational(pw.cols[static_cast<std::size_t>(n)]
                                         [static_cast<std::size_t>(row)]);
    for (int j = 1; j < m; ++j) {
        for (int v = 0; v < m; ++v) {
            const Rational& cv = c.at(j, v);
            if (cv.is_zero()) continue;
            auto xv = qa.coords(MPoly::variable(qa.basis().ring, v));
            for (int i = 0; i < n; ++i)
                rhs.at(i, j) += cv * xv[static_cast<std::size_t>(i)];
        }
    }
    RationalMatrix z;
    try {
        z = solve_square(std::move(a), std::move(rhs));
    } catch (const DomainError&) {
        return std::nullopt;
    }

    ShapeBasis s;
    std::vector<Rational> wc(static_cast<std::size_t>(n) + 1);
    wc[static_cast<std::size_t>(n)] = Rational(1);
    for (int i = 0; i < n; ++i)
        wc[static_cast<std::size_t>(i)] =
            -(z.at(i, 0) * pw.scale[static_cast<std::size_t>(n)] /
              pw.scale[static_cast<std::size_t>(i)]);
    s.w = UPoly(std::move(wc));
    for (int j = 1; j < m; ++j) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            coeffs[static_cast<std::size_t>(i)] =
                z.at(i, j) / pw.scale[static_cast<std::size_t>(i)];
        s.u.push_back(UPoly(std::move(coeffs)));
    }
    return s;
}

} // namespace

QuotientAlgebra::QuotientAlgebra(GroebnerBasis g) : g_(std::move(g)) {
    if (!g_.zero_dimensional)
        throw DomainError("quotient algebra needs a finite solution set");
    mons_ = quotient_monomial_basis(g_);
    mulmat_.resize(static_cast<std::size_t>(g_.ring->nvars()));
}

MPoly QuotientAlgebra::reduce(const MPoly& p) const {
    return normal_form(p, g_.generators);
}

std::vector<Rational> QuotientAlgebra::coords(const MPoly& p) const {
    MPoly r = reduce(p);
    std::vector<Rational> out(mons_.size());
    const MonomialOrder& ord = g_.ring->order;
    for (const auto& t : r.terms()) {
        auto it = std::lower_bound(
            mons_.begin(), mons_.end(), t.m,
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
        if (it == mons_.end() || *it != t.m)
            throw StructuralError("normal form left the standard monomial span");
        out[static_cast<std::size_t>(it - mons_.begin())] = t.c;
    }
    return out;
}

const RationalMatrix& QuotientAlgebra::multiplication_matrix(int var) const {
    if (var < 0 || var >= g_.ring->nvars())
        throw StructuralError("variable index out of range");
    auto& slot = mulmat_[static_cast<std::size_t>(var)];
    if (!slot) {
        long d = dim();
        RationalMatrix m(static_cast<int>(d), static_cast<int>(d));
        for (long col = 0; col < d; ++col) {
            Monomial shifted = mons_[static_cast<std::size_t>(col)];
            ++shifted[static_cast<std::size_t>(var)];
            auto c = coords(MPoly::from_terms(g_.ring, {{std::move(shifted), Rational(1)}}));
            for (long row = 0; row < d; ++row)
                m.at(static_cast<int>(row), static_cast<int>(col)) =
                    c[static_cast<std::size_t>(row)];
        }
        slot = std::move(m);
    }
    return *slot;
}

RationalMatrix QuotientAlgebra::linear_form_matrix(const std::vector<Rational>& form) const {
    if (static_cast<int>(form.size()) != g_.ring->nvars())
        throw StructuralError("linear form arity mismatch");
    int d = static_cast<int>(dim());
    RationalMatrix m(d, d);
    for (std::size_t v = 0; v < form.size(); ++v) {
        if (form[v].is_zero()) continue;
        const RationalMatrix& mv = multiplication_matrix(static_cast<int>(v));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const Rational& x = mv.at(r, c);
                if (!x.is_zero()) m.at(r, c) += form[v] * x;
            }
    }
    return m;
}

UPoly minimal_polynomial(const QuotientAlgebra& qa, const MPoly& element) {
    require_same_ring(MPoly::zero(qa.basis().ring), element);
    if (qa.dim() == 0) return UPoly(Rational(1));

    std::vector<Rational> one(static_cast<std::size_t>(qa.dim()));
    one[0] = Rational(1); // the constant monomial sorts first

    if (element.degree() <= 1) {
        std::vector<Rational> form(static_cast<std::size_t>(qa.basis().ring->nvars()));
        Rational constant;
        for (const auto& t : element.terms()) {
            if (total_degree(t.m) == 0) {
                constant = t.c;
                continue;
            }
            for (std::size_t v = 0; v < t.m.size(); ++v)
                if (t.m[v] == 1) form[v] = t.c;
        }
        RationalMatrix m = qa.linear_form_matrix(form);
        if (!constant.is_zero())
            for (int i = 0; i < m.rows(); ++i) m.at(i, i) += constant;
        return minpoly_from_powers(
            [&](const std::vector<Rational>& v) { return matrix_apply(m, v); },
            std::move(one), qa.dim(), nullptr);
    }
    MPoly cur = qa.reduce(MPoly::constant(qa.basis().ring, Rational(1)));
    return minpoly_from_powers(
        [&](const std::vector<Rational>&) {
            cur = qa.reduce(cur * element);
            return qa.coords(cur);
        },
        std::move(one), qa.dim(), nullptr);
}

UPoly minimal_polynomial(const GroebnerBasis& g, int var) {
    QuotientAlgebra qa(g);
    return minimal_polynomial(qa, MPoly::variable(g.ring, var));
}

GroebnerBasis radical(const GroebnerBasis& g) {
    if (!g.zero_dimensional)
        throw DomainError("radical computation needs a finite solution set");
    if (g.is_unit() || g.quotient_dimension == 0) return g;
    QuotientAlgebra qa(g);
    std::vector<MPoly> extra;
    for (int v = 0; v < g.ring->nvars(); ++v) {
        UPoly m = minimal_polynomial(qa, MPoly::variable(g.ring, v));
        UPoly s = squarefree_part(m);
        if (s != m) extra.push_back(upoly_as_mpoly(s, g.ring, v));
    }
    if (extra.empty()) return g;
    std::vector<MPoly> gens = g.generators;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return buchberger(gens);
}

std::optional<ShapeBasis> try_shape_position(const GroebnerBasis& lex_basis) {
    if (lex_basis.ring->order.kind != OrderKind::lex)
        throw StructuralError("shape detection needs a lex basis");
    int m = lex_basis.ring->nvars();
    if (lex_basis.zero_ideal ||
        static_cast<int>(lex_basis.generators.size()) != m)
        return std::nullopt;

    auto w = mpoly_as_upoly(lex_basis.generators[0], 0);
    if (!w || w->degree() < 1) return std::nullopt;

    ShapeBasis s;
    s.w = std::move(*w);
    for (int j = 1; j < m; ++j) {
        const MPoly& gj = lex_basis.generators[static_cast<std::size_t>(j)];
        Monomial expect(static_cast<std::size_t>(m), 0);
        expect[static_cast<std::size_t>(j)] = 1;
        if (gj.is_zero() || gj.leading_monomial() != expect) return std::nullopt;
        MPoly tail = gj - MPoly::from_terms(lex_basis.ring, {{expect, Rational(1)}});
        auto uj = mpoly_as_upoly(-tail, 0);
        if (!uj || uj->degree() >= s.w.degree()) return std::nullopt;
        s.u.push_back(std::move(*uj));
    }
    return s;
}

std::optional<ShapeBasis> shape_via_quotient(const QuotientAlgebra& qa,
                                             const RationalMatrix& c) {
    int m = qa.basis().ring->nvars();
    if (c.rows() != m || c.cols() != m)
        throw StructuralError("coordinate change must be square over the ring variables");
    long d = qa.dim();
    if (d == 0) {
        ShapeBasis s;
        s.w = UPoly(Rational(1));
        s.u.assign(static_cast<std::size_t>(m - 1), UPoly());
        return s;
    }

    // Past small dimensions the integer-scaled powers and the lifted solve
    // win; below, the dependency short-circuit of the incremental scan does.
    if (d >= 32) return shape_lifted(qa, c, m, d);

    RationalMatrix mul = qa.linear_form_matrix(c.row(0));
    std::vector<Rational> one(static_cast<std::size_t>(d));
    one[0] = Rational(1);
    std::vector<std::vector<Rational>> powers;
    UPoly w = minpoly_from_powers(
        [&](const std::vector<Rational>& v) { return matrix_apply(mul, v); },
        std::move(one), d, &powers);
    if (w.degree() != static_cast<int>(d)) return std::nullopt;

    // Express every other coordinate in powers of the first.
    RationalMatrix p(static_cast<int>(d), static_cast<int>(d));
    for (long col = 0; col < d; ++col)
        for (long row = 0; row < d; ++row)
            p.at(static_cast<int>(row), static_cast<int>(col)) =
                powers[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];

    RationalMatrix rhs(static_cast<int>(d), m - 1);
    for (int j = 1; j < m; ++j) {
        std::vector<Rational> yj(static_cast<std::size_t>(d));
        for (int v = 0; v < m; ++v) {
            const Rational& cv = c.at(j, v);
            if (cv.is_zero()) continue;
            auto xv = qa.coords(MPoly::variable(qa.basis().ring, v));
            for (long i = 0; i < d; ++i)
                yj[static_cast<std::size_t>(i)] += cv * xv[static_cast<std::size_t>(i)];
        }
        for (long i = 0; i < d; ++i)
            rhs.at(static_cast<int>(i), j - 1) = yj[static_cast<std::size_t>(i)];
    }
    RationalMatrix sol = solve_square(std::move(p), std::move(rhs));

    ShapeBasis s;
    s.w = std::move(w);
    for (int j = 1; j < m; ++j) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(d));
        for (long i = 0; i < d; ++i)
            coeffs[static_cast<std::size_t>(i)] = sol.at(static_cast<int>(i), j - 1);
        s.u.push_back(UPoly(std::move(coeffs)));
    }
    return s;
}

std::vector<MPoly> shape_to_generators(const ShapeBasis& s, const RingPtr& ring) {
    if (ring->nvars() != s.nvars())
        throw StructuralError("shape arity does not match the ring");
    std::vector<MPoly> gens;
    gens.push_back(upoly_as_mpoly(s.w, ring, 0));
    for (int j = 1; j < s.nvars(); ++j) {
        MPoly g = MPoly::variable(ring, j) -
                  upoly_as_mpoly(s.u[static_cast<std::size_t>(j - 1)], ring, 0);
        gens.push_back(std::move(g));
    }
    return gens;
}

} // namespace pcp
