#include "pcp/pipeline.hpp"

#include <chrono>
#include <utility>

#include "pcp/groebner.hpp"
#include "pcp/rng.hpp"
#include "pcp/roots.hpp"
#include "pcp/zero_dim.hpp"

namespace pcp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MPoly embed(const MPoly& p, const RingPtr& target) {
    std::vector<MPoly::Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(static_cast<std::size_t>(target->nvars()), 0);
        std::copy(t.m.begin(), t.m.end(), m.begin());
        terms.push_back({std::move(m), t.c});
    }
    return MPoly::from_terms(target, std::move(terms));
}

struct ResolvedH {
    RationalMatrix h;
    RationalMatrix h_inv;
    std::optional<long> s;
};

// Candidate coordinate changes in strategy order. Deterministic mode walks
// s = 1, 2, ... through first rows (1, s, s^2, ...); random mode draws first
// rows from the seeded generator; explicit mode yields its single matrix.
class HCandidates {
public:
    HCandidates(const HStrategy& strategy, int m)
        : strategy_(strategy), m_(m) {
        if (strategy.mode == HMode::random) {
            if (!strategy.seed) throw StructuralError("random strategy needs a seed");
            rng_.emplace(*strategy.seed);
        }
        if (strategy.mode == HMode::explicit_matrix && !strategy.matrix)
            throw StructuralError("explicit strategy needs a matrix");
    }

    std::optional<ResolvedH> next() {
        switch (strategy_.mode) {
        case HMode::deterministic: {
            ++s_;
            RationalMatrix sep = RationalMatrix::identity(m_);
            Rational pw(1);
            for (int j = 0; j < m_; ++j) {
                sep.at(0, j) = pw;
                pw *= Rational(s_);
            }
            return ResolvedH{sep.inverse(), sep, s_};
        }
        case HMode::random: {
            RationalMatrix h = RationalMatrix::identity(m_);
            for (int j = 0; j < m_; ++j) {
                long r = 0;
                do {
                    r = rng_->uniform(-65536, 65536);
                } while (j == 0 && r == 0);
                h.at(0, j) = Rational(r);
            }
            return ResolvedH{h, h.inverse(), std::nullopt};
        }
        case HMode::explicit_matrix: {
            if (used_) return std::nullopt;
            used_ = true;
            const RationalMatrix& m = *strategy_.matrix;
            if (m.rows() != m_ || m.cols() != m_)
                throw StructuralError("coordinate matrix has the wrong shape");
            if (strategy_.invert_convention) return ResolvedH{m.inverse(), m, std::nullopt};
            return ResolvedH{m, m.inverse(), std::nullopt};
        }
        }
        return std::nullopt;
    }

private:
    HStrategy strategy_;
    int m_ = 0;
    long s_ = 0;
    bool used_ = false;
    std::optional<DeterministicRng> rng_;
};

} // namespace

int PCPProblem::max_degree() const {
    int d = 0;
    for (const auto& fi : f) d = std::max(d, fi.degree());
    return d;
}

PCPProblem make_problem(RingPtr ring, std::vector<MPoly> f,
                        std::optional<std::string> name) {
    if (static_cast<int>(f.size()) != ring->nvars())
        throw StructuralError("component count must match the variable count");
    for (const auto& fi : f)
        if (fi.ring() != ring && !same_ring(*fi.ring(), *ring))
            throw StructuralError("component over a different ring");
    return PCPProblem{std::move(ring), std::move(f), std::move(name)};
}

std::vector<MPoly> build_ideal_f(const PCPProblem& p) {
    std::vector<MPoly> gens;
    gens.reserve(p.f.size());
    for (int i = 0; i < p.n(); ++i)
        gens.push_back(MPoly::variable(p.ring, i) * p.f[static_cast<std::size_t>(i)]);
    return gens;
}

RingPtr slack_ring(const PCPProblem& p) {
    std::vector<std::string> vars = p.ring->vars;
    for (int i = 1; i <= 2 * p.n(); ++i) vars.push_back("z" + std::to_string(i));
    return make_ring(std::move(vars), OrderKind::grevlex);
}

std::vector<MPoly> build_ideal_fz(const PCPProblem& p) {
    RingPtr ring = slack_ring(p);
    int n = p.n();
    std::vector<MPoly> gens;
    gens.reserve(static_cast<std::size_t>(3 * n));
    for (int i = 0; i < n; ++i)
        gens.push_back(embed(MPoly::variable(p.ring, i) * p.f[static_cast<std::size_t>(i)],
                             ring));
    for (int i = 0; i < n; ++i) {
        MPoly zi = MPoly::variable(ring, n + i);
        gens.push_back(zi * zi - MPoly::variable(ring, i));
    }
    for (int i = 0; i < n; ++i) {
        MPoly zi = MPoly::variable(ring, 2 * n + i);
        gens.push_back(zi * zi - embed(p.f[static_cast<std::size_t>(i)], ring));
    }
    return gens;
}

D0Result classify_d0(const PCPProblem& p) {
    auto gens = build_ideal_f(p);
    GroebnerBasis g = buchberger(gens, OrderKind::grevlex);
    ZeroDimResult zd = is_zero_dimensional(g);
    return {zd.zero_dimensional, zd.missing_variable};
}

UnivarRep univariate_representation(const PCPProblem& p, const HStrategy& strategy,
                                    StageTimings* timings) {
    D0Result d0 = classify_d0(p);
    if (!d0.is_d0) {
        std::string var = d0.witness ? p.ring->vars[static_cast<std::size_t>(*d0.witness)]
                                     : std::string("?");
        throw NotFiniteError("infinitely many complex solutions (variable " + var +
                                 " is unconstrained)",
                             d0.witness);
    }

    auto t0 = std::chrono::steady_clock::now();
    auto gens = build_ideal_fz(p);
    GroebnerBasis g = buchberger(gens);
    if (timings) timings->groebner += seconds_since(t0);
    if (!g.zero_dimensional)
        throw NotFiniteError("lifted ideal is not finite", std::nullopt);

    auto t1 = std::chrono::steady_clock::now();
    GroebnerBasis grad = radical(g);
    QuotientAlgebra qa(std::move(grad));
    if (timings) timings->radical += seconds_since(t1);

    auto t2 = std::chrono::steady_clock::now();
    long delta = qa.dim();
    int m = 3 * p.n();
    // Separating forms are dense in the deterministic family: among any
    // (m-1) * delta * (delta-1) / 2 + 1 distinct candidates at least one
    // separates the delta points.
    long budget = (m - 1) * delta * (delta - 1) / 2 + 1;
    if (strategy.mode == HMode::explicit_matrix) budget = 1;

    HCandidates candidates(strategy, m);
    int tried = 0;
    for (long i = 0; i < budget; ++i) {
        auto cand = candidates.next();
        if (!cand) break;
        ++tried;
        auto shape = shape_via_quotient(qa, cand->h_inv);
        if (!shape) continue;

        UnivarRep rep;
        rep.w = std::move(shape->w);
        int deg = rep.w.degree();
        for (int i_var = 0; i_var < p.n(); ++i_var) {
            UPoly vi;
            for (int j = 0; j < m; ++j) {
                const Rational& c = cand->h.at(i_var, j);
                if (c.is_zero()) continue;
                const UPoly& yj = j == 0 ? UPoly::variable()
                                         : shape->u[static_cast<std::size_t>(j - 1)];
                vi += c * yj;
            }
            if (vi.degree() >= deg && deg >= 0) vi = udivrem(vi, rep.w).second;
            rep.v.push_back(std::move(vi));
        }
        rep.h = std::move(cand->h);
        rep.h_inverse = std::move(cand->h_inv);
        rep.s = cand->s;
        rep.seed = strategy.seed;
        rep.candidates_tried = tried;
        if (timings) timings->shape += seconds_since(t2);
        return rep;
    }
    if (timings) timings->shape += seconds_since(t2);
    throw DomainError(strategy.mode == HMode::explicit_matrix
                          ? "the given coordinate change does not separate the variety"
                          : "no separating coordinate change found within the bound");
}

UnivarRep least_norm_representation(UnivarRep rep) {
    UPoly phi;
    for (const auto& vi : rep.v) phi += vi * vi;
    if (!rep.w.is_zero() && rep.w.degree() >= 0 && !phi.is_zero())
        phi = udivrem(phi, rep.w).second;
    rep.phi = std::move(phi);
    return rep;
}

namespace {

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

SparseRep sparse_representation(const UnivarRep& rep) {
    SparseRep out;
    out.base = rep;
    int n = static_cast<int>(rep.v.size());
    if (rep.w.degree() < 1) return out; // no roots at all
    for (int k = n; k >= 0; --k) {
        std::vector<std::vector<int>> patterns;
        subsets_of_size(n, k, patterns);
        std::vector<std::vector<int>> hits;
        for (const auto& pat : patterns) {
            std::vector<UPoly> gs;
            gs.push_back(rep.w);
            for (int i : pat) gs.push_back(rep.v[static_cast<std::size_t>(i)]);
            UPoly wl = ugcd(gs);
            if (wl.degree() >= 1 && count_real_roots(wl) > 0) hits.push_back(pat);
        }
        if (!hits.empty()) {
            out.k = k;
            out.omega = std::move(hits);
            return out;
        }
    }
    return out;
}

CopositiveResult copositive_solve(const PCPProblem& p, const Rational& eps,
                                  std::uint64_t seed, const HStrategy& strategy,
                                  StageTimings* timings) {
    if (eps.sign() <= 0) throw StructuralError("perturbation size must be positive");
    DeterministicRng rng(seed);
    const int max_draws = 32;
    Rational unit = eps / Rational(65536L * 2 * p.n());
    for (int attempt = 1; attempt <= max_draws; ++attempt) {
        std::vector<Rational> a;
        a.reserve(p.f.size());
        for (int i = 0; i < p.n(); ++i)
            a.push_back(Rational(rng.uniform(1, 65536)) * unit);
        std::vector<MPoly> shifted;
        shifted.reserve(p.f.size());
        for (int i = 0; i < p.n(); ++i)
            shifted.push_back(p.f[static_cast<std::size_t>(i)] +
                              MPoly::constant(p.ring, a[static_cast<std::size_t>(i)]));
        std::optional<std::string> name;
        if (p.name) name = *p.name + "_perturbed";
        PCPProblem shifted_problem = make_problem(p.ring, std::move(shifted), name);
        if (!classify_d0(shifted_problem).is_d0) continue;
        CopositiveResult result;
        result.a = std::move(a);
        result.rep = univariate_representation(shifted_problem, strategy, timings);
        result.perturbed = std::move(shifted_problem);
        result.draws = attempt;
        return result;
    }
    throw DomainError("no finite perturbation found in " + std::to_string(max_draws) +
                      " draws");
}

PCPProblem generate_benchmark(BenchmarkFamily family, int n, int d) {
    if (n < 1) throw StructuralError("benchmark needs n >= 1");
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr ring = make_ring(std::move(vars), OrderKind::grevlex);

    std::vector<MPoly> f;
    std::string name;
    if (family == BenchmarkFamily::p) {
        if (d < 1) throw StructuralError("family p needs degree >= 1");
        for (int i = 0; i < n; ++i) {
            MPoly fi = MPoly::constant(ring, Rational(1));
            for (int j = 1; j <= d; ++j)
                fi = fi * (MPoly::constant(ring, Rational(j)) - MPoly::variable(ring, i));
            f.push_back(std::move(fi));
        }
        name = "p_n" + std::to_string(n) + "_d" + std::to_string(d);
    } else {
        if (d != 2) throw StructuralError("family q is quadratic; use d = 2");
        for (int i = 0; i < n; ++i) {
            MPoly xi = MPoly::variable(ring, i);
            f.push_back(xi * xi - Rational(3) * xi + MPoly::constant(ring, Rational(1)));
        }
        name = "q_n" + std::to_string(n);
    }
    return make_problem(ring, std::move(f), name);
}

} // namespace pcp
