#include "pcp/matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "modarith.hpp"
#include "pcp/errors.hpp"

namespace pcp {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw StructuralError("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational& RationalMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw StructuralError("matrix index out of range");
    return data_[static_cast<std::size_t>(r) * cols_ + c];
}

const Rational& RationalMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw StructuralError("matrix index out of range");
    return data_[static_cast<std::size_t>(r) * cols_ + c];
}

std::vector<Rational> RationalMatrix::row(int r) const {
    std::vector<Rational> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
    RationalMatrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                p.at(i, j) += aik * b.at(k, j);
        }
    return p;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw StructuralError("matrix-vector shape mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Rational acc;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of non-square matrix");
    int n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw DomainError("singular matrix");
        for (int c = 0; c < n; ++c) {
            std::swap(a.at(col, c), a.at(pivot, c));
            std::swap(inv.at(col, c), inv.at(pivot, c));
        }
        Rational d = a.at(col, col).inv();
        for (int c = 0; c < n; ++c) {
            a.at(col, c) *= d;
            inv.at(col, c) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool RationalMatrix::is_invertible() const {
    if (rows_ != cols_) return false;
    try {
        inverse();
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

namespace {

RationalMatrix eliminate_square(RationalMatrix a, RationalMatrix b) {
    int n = a.rows(), k = b.cols();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw DomainError("singular matrix");
        for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
        for (int c = 0; c < k; ++c) std::swap(b.at(col, c), b.at(pivot, c));
        Rational d = a.at(col, col).inv();
        for (int c = 0; c < n; ++c) a.at(col, c) *= d;
        for (int c = 0; c < k; ++c) b.at(col, c) *= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = 0; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
            for (int c = 0; c < k; ++c) b.at(r, c) -= f * b.at(col, c);
        }
    }
    return b;
}

// Below this dimension one exact elimination beats the lifting setup.
constexpr int kLiftingDim = 32;

// Gauss-Jordan inverse over Z/p; false when the reduction is singular.
bool invert_mod(std::vector<u64> a, int n, u64 p, std::vector<u64>& out) {
    const std::size_t nn = static_cast<std::size_t>(n);
    out.assign(nn * nn, 0);
    for (std::size_t i = 0; i < nn; ++i) out[i * nn + i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[static_cast<std::size_t>(r) * nn + col] != 0) { pivot = r; break; }
        if (pivot < 0) return false;
        if (pivot != col)
            for (std::size_t c = 0; c < nn; ++c) {
                std::swap(a[static_cast<std::size_t>(col) * nn + c],
                          a[static_cast<std::size_t>(pivot) * nn + c]);
                std::swap(out[static_cast<std::size_t>(col) * nn + c],
                          out[static_cast<std::size_t>(pivot) * nn + c]);
            }
        const std::size_t pr = static_cast<std::size_t>(col) * nn;
        u64 inv = invmod(a[pr + col], p);
        for (std::size_t c = 0; c < nn; ++c) {
            a[pr + c] = mulmod(a[pr + c], inv, p);
            out[pr + c] = mulmod(out[pr + c], inv, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const std::size_t rr = static_cast<std::size_t>(r) * nn;
            u64 f = a[rr + col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < nn; ++c) {
                a[rr + c] = submod(a[rr + c], mulmod(f, a[pr + c], p), p);
                out[rr + c] = submod(out[rr + c], mulmod(f, out[pr + c], p), p);
            }
        }
    }
    return true;
}

// Smallest rational congruent to x mod m with numerator and denominator at
// most bound; classic remainder-sequence reconstruction.
bool reconstruct_rational(const mpz_class& x, const mpz_class& m, const mpz_class& bound,
                          mpz_class& num, mpz_class& den) {
    mpz_class r0 = m, r1 = x, t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
        q = r0 / r1;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0) return false;
    num = sgn(t1) < 0 ? mpz_class(-r1) : r1;
    den = abs(t1);
    return den <= bound;
}

// Lift the accumulated digits to rationals, one shared denominator per
// column, and confirm each column against the integer system exactly.
bool reconstruct_and_verify(int n, int k, const std::vector<mpz_class>& a,
                            const std::vector<mpz_class>& b,
                            const std::vector<mpz_class>& acc, const mpz_class& modulus,
                            std::vector<Rational>& out) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t kk = static_cast<std::size_t>(k);
    mpz_class bound = (modulus - 1) / 2;
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    const std::size_t mbits = bit_size(modulus);
    out.assign(nn * kk, Rational());
    std::vector<mpz_class> nums(nn);
    mpz_class den, y, ni, di, merged, factor, lhs;
    for (int j = 0; j < k; ++j) {
        den = 1;
        for (int i = 0; i < n; ++i) {
            const mpz_class& x = acc[static_cast<std::size_t>(i) * kk + j];
            y = x * den % modulus;
            if (y * 2 > modulus) y -= modulus;
            // accept outright only with clear slack under the modulus
            if (bit_size(y) + bit_size(den) + 64 <= mbits) {
                nums[static_cast<std::size_t>(i)] = y;
                continue;
            }
            if (!reconstruct_rational(x, modulus, bound, ni, di)) return false;
            mpz_lcm(merged.get_mpz_t(), den.get_mpz_t(), di.get_mpz_t());
            if (merged != den) {
                mpz_divexact(factor.get_mpz_t(), merged.get_mpz_t(), den.get_mpz_t());
                for (int l = 0; l < i; ++l) nums[static_cast<std::size_t>(l)] *= factor;
                den = merged;
            }
            mpz_divexact(factor.get_mpz_t(), den.get_mpz_t(), di.get_mpz_t());
            nums[static_cast<std::size_t>(i)] = ni * factor;
        }
        for (int r = 0; r < n; ++r) {
            lhs = 0;
            const std::size_t rr = static_cast<std::size_t>(r) * nn;
            for (std::size_t l = 0; l < nn; ++l) {
                if (sgn(a[rr + l]) == 0 || sgn(nums[l]) == 0) continue;
                mpz_addmul(lhs.get_mpz_t(), a[rr + l].get_mpz_t(), nums[l].get_mpz_t());
            }
            mpz_submul(lhs.get_mpz_t(), b[static_cast<std::size_t>(r) * kk + j].get_mpz_t(),
                       den.get_mpz_t());
            if (sgn(lhs) != 0) return false;
        }
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i) * kk + j] =
                Rational(mpq_class(nums[static_cast<std::size_t>(i)], den));
    }
    return true;
}

// Solve A X = B over Q for integer A (n x n) and B (n x k) by expanding the
// solution digit by digit against one inverse mod a word prime. False means
// A reduced singular for several independent primes, which certifies a zero
// determinant for all practical purposes; the exact confirmation inside
// reconstruct_and_verify keeps wrong lifts from ever escaping.
bool lifted_solve(int n, int k, const std::vector<mpz_class>& a,
                  const std::vector<mpz_class>& b, std::vector<Rational>& out) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t kk = static_cast<std::size_t>(k);
    u64 p = 0;
    std::vector<u64> ainv;
    for (u64 cand : lifting_primes(5)) {
        std::vector<u64> am(nn * nn);
        for (std::size_t e = 0; e < nn * nn; ++e) am[e] = mod_of(a[e], cand);
        if (invert_mod(std::move(am), n, cand, ainv)) { p = cand; break; }
    }
    if (p == 0) return false;
    if (k == 0) { out.clear(); return true; }

    std::size_t abits = 1, bbits = 1;
    for (const auto& z : a) abits = std::max(abits, bit_size(z));
    for (const auto& z : b) bbits = std::max(bbits, bit_size(z));
    // Cramer-style ceiling past which reconstruction cannot keep failing
    const std::size_t capbits = 2 * (nn * (abits + 64) + bbits) + 256;
    std::size_t checkbits = 128;

    std::vector<mpz_class> resid(b);
    std::vector<mpz_class> acc(nn * kk);
    mpz_class modulus(1);
    std::vector<u64> rm(nn * kk), digit(nn * kk);
    for (;;) {
        for (std::size_t e = 0; e < nn * kk; ++e) rm[e] = mod_of(resid[e], p);
        for (std::size_t i = 0; i < nn; ++i) {
            const u64* arow = &ainv[i * nn];
            for (std::size_t j = 0; j < kk; ++j) {
                u128 s = 0;
                int pending = 0;
                for (std::size_t l = 0; l < nn; ++l) {
                    s += static_cast<u128>(arow[l]) * rm[l * kk + j];
                    if (++pending == 8) { s %= p; pending = 0; }
                }
                digit[i * kk + j] = static_cast<u64>(s % p);
            }
        }
        for (std::size_t e = 0; e < nn * kk; ++e)
            if (digit[e] != 0)
                mpz_addmul_ui(acc[e].get_mpz_t(), modulus.get_mpz_t(), digit[e]);
        for (std::size_t i = 0; i < nn; ++i) {
            const std::size_t rr = i * nn;
            for (std::size_t l = 0; l < nn; ++l) {
                if (sgn(a[rr + l]) == 0) continue;
                for (std::size_t j = 0; j < kk; ++j)
                    if (digit[l * kk + j] != 0)
                        mpz_submul_ui(resid[i * kk + j].get_mpz_t(), a[rr + l].get_mpz_t(),
                                      digit[l * kk + j]);
            }
        }
        bool settled = true;
        for (std::size_t e = 0; e < nn * kk; ++e) {
            mpz_divexact_ui(resid[e].get_mpz_t(), resid[e].get_mpz_t(), p);
            if (sgn(resid[e]) != 0) settled = false;
        }
        modulus *= p;
        if (settled) {
            // a vanished residual pins the exact integer solution
            out.assign(nn * kk, Rational());
            for (std::size_t e = 0; e < nn * kk; ++e) out[e] = Rational(acc[e]);
            return true;
        }
        const std::size_t mbits = bit_size(modulus);
        if (mbits >= checkbits || mbits > capbits) {
            if (reconstruct_and_verify(n, k, a, b, acc, modulus, out)) return true;
            if (mbits > capbits)
                throw StructuralError("digit lifting failed to converge");
            checkbits = mbits + (mbits >> 1);
        }
    }
}

} // namespace

RationalMatrix solve_square(RationalMatrix a, RationalMatrix b) {
    if (a.rows() != a.cols()) throw DomainError("solve_square needs a square matrix");
    if (b.rows() != a.rows()) throw StructuralError("solve_square shape mismatch");
    const int n = a.rows(), k = b.cols();
    if (n < kLiftingDim) return eliminate_square(std::move(a), std::move(b));

    // Row scaling to integers leaves the solution alone.
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<mpz_class> az(nn * nn), bz(nn * kk);
    mpz_class l, f;
    for (int r = 0; r < n; ++r) {
        l = 1;
        for (int c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).den().get_mpz_t());
        for (int c = 0; c < k; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.at(r, c).den().get_mpz_t());
        for (int c = 0; c < n; ++c) {
            const Rational& x = a.at(r, c);
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
            az[static_cast<std::size_t>(r) * nn + c] = x.num() * f;
        }
        for (int c = 0; c < k; ++c) {
            const Rational& x = b.at(r, c);
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
            bz[static_cast<std::size_t>(r) * kk + c] = x.num() * f;
        }
    }
    std::vector<Rational> x;
    if (!lifted_solve(n, k, az, bz, x)) throw DomainError("singular matrix");
    RationalMatrix sol(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j)
            sol.at(i, j) = std::move(x[static_cast<std::size_t>(i) * kk + j]);
    return sol;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw StructuralError("solve_linear shape mismatch");
    int n = a.rows(), m = a.cols();
    std::vector<int> pivot_col_of_row(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int c = 0; c < m; ++c) std::swap(a.at(rank, c), a.at(pivot, c));
        std::swap(b[static_cast<std::size_t>(rank)], b[static_cast<std::size_t>(pivot)]);
        Rational d = a.at(rank, col).inv();
        for (int c = 0; c < m; ++c) a.at(rank, c) *= d;
        b[static_cast<std::size_t>(rank)] *= d;
        for (int r = 0; r < n; ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = 0; c < m; ++c) a.at(r, c) -= f * a.at(rank, c);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(rank)];
        }
        pivot_col_of_row[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (!b[static_cast<std::size_t>(r)].is_zero()) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(m));
    for (int r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
            b[static_cast<std::size_t>(r)];
    return x;
}

} // namespace pcp
