#pragma once

#include <optional>
#include <vector>

#include "pcp/rational.hpp"

namespace pcp {

// Dense rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c);
    const Rational& at(int r, int c) const;

    std::vector<Rational> row(int r) const;

    RationalMatrix transpose() const;
    // Throws DomainError when singular.
    RationalMatrix inverse() const;
    bool is_invertible() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Solve A x = b by exact Gaussian elimination; nullopt when inconsistent.
// A need not be square; returns one solution with free variables at zero.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

// Solve A X = B for square invertible A. Small systems run one exact
// elimination over all right-hand sides; larger ones lift a digit expansion
// of the solution mod a word prime and confirm it with an exact product,
// avoiding the gcd swell of rational pivoting. Throws DomainError when A is
// singular.
RationalMatrix solve_square(RationalMatrix a, RationalMatrix b);

} // namespace pcp
