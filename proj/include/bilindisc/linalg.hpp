#pragma once

#include "bilindisc/errors.hpp"
#include "bilindisc/multipoly.hpp"
#include "bilindisc/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<bilindisc::MultiPoly> : GenericNumTraits<bilindisc::MultiPoly> {
    using Real = bilindisc::MultiPoly;
    using NonInteger = bilindisc::MultiPoly;
    using Nested = bilindisc::MultiPoly;
    using Literal = bilindisc::MultiPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 50,
        MulCost = 200
    };
};

}  // namespace Eigen

namespace bilindisc {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;
using PolyMatrix = Matrix<MultiPoly>;
using PolyVector = Vector<MultiPoly>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

inline constexpr Index kMaxDeterminantSize = 8;
inline constexpr Index kMaxPermanentSize = 12;

// Determinant by cofactor expansion along the top row with every minor
// memoized by its column set. Division-free, so it works over any
// commutative ring scalar; O(n 2^n) ring multiplications.
template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) {
        throw NonSquareError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    const Index n = m.rows();
    if (n > kMaxDeterminantSize) {
        throw WrongShapeError("determinant supports sizes up to " +
                              std::to_string(kMaxDeterminantSize));
    }
    if (n == 0) return Scalar(1);

    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    // minors[mask] = det of the bottom popcount(mask) rows restricted to mask
    std::vector<Scalar> minors(std::size_t{full} + 1, Scalar(0));
    minors[0] = Scalar(1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const Index row = n - std::popcount(mask);
        Scalar acc(0);
        int position = 0;
        for (Index j = 0; j < n; ++j) {
            const std::uint32_t bit = std::uint32_t{1} << j;
            if ((mask & bit) == 0) continue;
            const Scalar& rest = minors[mask ^ bit];
            if (!is_zero(m(row, j)) && !is_zero(rest)) {
                if (position % 2 == 0) {
                    acc += m(row, j) * rest;
                } else {
                    acc -= m(row, j) * rest;
                }
            }
            ++position;
        }
        minors[mask] = std::move(acc);
    }
    return minors[full];
}

// Ryser's inclusion-exclusion formula.
template <typename Scalar>
Scalar permanent(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) {
        throw NonSquareError("permanent of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    const Index n = m.rows();
    if (n > kMaxPermanentSize) {
        throw WrongShapeError("permanent supports sizes up to " +
                              std::to_string(kMaxPermanentSize));
    }
    if (n == 0) return Scalar(1);

    Scalar total(0);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Scalar product(1);
        for (Index i = 0; i < n && !is_zero(product); ++i) {
            Scalar row_sum(0);
            for (Index j = 0; j < n; ++j) {
                if (mask & (std::uint32_t{1} << j)) row_sum += m(i, j);
            }
            product *= row_sum;
        }
        if ((n - std::popcount(mask)) % 2 == 0) {
            total += product;
        } else {
            total -= product;
        }
    }
    return total;
}

// Determinants of all maximal square submatrices. For a tall matrix the
// row subsets are enumerated in lexicographic order ({0,1}, {0,2}, ...).
template <typename Scalar>
std::vector<Scalar> maximal_minors(const Matrix<Scalar>& m) {
    const bool tall = m.rows() >= m.cols();
    const Matrix<Scalar> a = tall ? Matrix<Scalar>(m) : Matrix<Scalar>(m.transpose());
    const Index k = a.cols();
    const Index rows = a.rows();
    std::vector<Scalar> minors;
    std::vector<Index> subset(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        Matrix<Scalar> square(k, k);
        for (Index r = 0; r < k; ++r) square.row(r) = a.row(subset[static_cast<std::size_t>(r)]);
        minors.push_back(determinant(square));
        // next k-subset of {0..rows-1} in lexicographic order
        Index pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == rows - k + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (Index r = pos + 1; r < k; ++r) {
            subset[static_cast<std::size_t>(r)] = subset[static_cast<std::size_t>(r - 1)] + 1;
        }
    }
    return minors;
}

PolyMatrix to_poly(const RationalMatrix& m);
// Raises WrongShapeError if any entry is not a constant polynomial.
RationalMatrix to_rational(const PolyMatrix& m);

struct RowEchelon {
    RationalMatrix reduced;       // reduced row echelon form
    std::vector<Index> pivots;    // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot of each step is the first row (from
// the current one down) with a nonzero entry in the leftmost unfinished column.
RowEchelon row_echelon(const RationalMatrix& m);
Index rank(const RationalMatrix& m);

// Scales v to integer entries with content 1 and first nonzero entry positive.
RationalVector normalize_integer(const RationalVector& v);

// Basis of the right null space, one vector per free column, each normalized
// with normalize_integer. Empty iff m has full column rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

struct LinearSolution {
    RationalVector particular;             // free variables set to zero
    std::vector<RationalVector> nullspace; // kernel_basis of the matrix
};

// Raises InconsistentError when m x = rhs has no solution.
LinearSolution solve_linear(const RationalMatrix& m, const RationalVector& rhs);

std::string to_string(const RationalMatrix& m);
std::string to_string(const PolyMatrix& m);

}  // namespace bilindisc
