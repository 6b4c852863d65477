#pragma once

#include "bilindisc/bilinear.hpp"
#include "bilindisc/linalg.hpp"
#include "bilindisc/multipoly.hpp"
#include "bilindisc/sampler.hpp"
#include "bilindisc/sparse3.hpp"

#include <initializer_list>

namespace bilindisc::test {

inline MultiPoly X(int i) { return MultiPoly::variable(VarRef::x(i)); }
inline MultiPoly Y(int j) { return MultiPoly::variable(VarRef::y(j)); }
inline MultiPoly Z(int j) { return MultiPoly::variable(VarRef::z(j)); }
inline MultiPoly C(int eq, int comp) { return MultiPoly::variable(VarRef::coeff(eq, comp)); }

inline RationalMatrix rmat(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Index>(rows.size());
    const auto c = static_cast<Index>(rows.begin()->size());
    RationalMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline RationalVector rvec(std::initializer_list<long> values) {
    RationalVector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (long x : values) v(i++) = x;
    return v;
}

inline RationalMatrix random_matrix(Index rows, Index cols, Sampler& s) {
    RationalMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = s.rational(5, 3);
    }
    return m;
}

// Random polynomial in x0, x1, y0 with a few terms of degree <= 2 per variable.
inline MultiPoly random_poly(Sampler& s) {
    MultiPoly p;
    const auto terms = s.integer(0, 4);
    for (int t = 0; t < terms; ++t) {
        const Monomial m({{VarRef::x(0), static_cast<unsigned>(s.integer(0, 2))},
                          {VarRef::x(1), static_cast<unsigned>(s.integer(0, 2))},
                          {VarRef::y(0), static_cast<unsigned>(s.integer(0, 1))}});
        p += MultiPoly(m, s.rational(5, 3));
    }
    return p;
}

template <typename Scalar>
bool all_zero(const Matrix<Scalar>& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (!is_zero(m(i, j))) return false;
        }
    }
    return true;
}

template <typename Scalar>
bool symmetric(const Matrix<Scalar>& m) {
    return m.rows() == m.cols() && m == m.transpose();
}

// Bilinear n = m = 1 system from the 2x2 coefficient matrices a = a^(0), b = a^(1).
inline BilinearSystem system11(const RationalMatrix& a, const RationalMatrix& b) {
    return BilinearSystem::numeric(1, 1, {a, b});
}

// Three-player system with zero discriminant and no zero equation: b1 is set so
// |b0 b1; b3 b4| = 0, then a4 so the squared bracket vanishes.
inline ThreePlayerSystem degenerate_three_player(Sampler& s) {
    while (true) {
        ThreePlayerSystem sys = ThreePlayerSystem::random(s);
        const auto at = [](const MultiPoly& p) { return p.to_constant(); };
        const Rational b0 = at(sys.b[0]), b3 = at(sys.b[2]), b4 = at(sys.b[3]);
        if (b3 == 0) continue;
        sys.b[1] = b0 * b4 / b3;
        const Rational b1 = at(sys.b[1]);
        const Rational c0 = at(sys.c[0]), c2 = at(sys.c[1]), c3 = at(sys.c[2]), c4 = at(sys.c[3]);
        const Rational k0 = b3 * c4 - b4 * c3, k1 = b3 * c2 - b4 * c0, k2 = b0 * c4 - b1 * c3,
                       k4 = b0 * c2 - b1 * c0;
        if (k4 == 0) continue;
        const Rational rest = at(sys.a[0]) * k0 - at(sys.a[1]) * k1 - at(sys.a[2]) * k2;
        sys.a[3] = -rest / k4;
        bool zero_equation = false;
        for (const auto& h : sys.equations()) zero_equation = zero_equation || h.is_zero();
        if (!zero_equation) return sys;
    }
}

}  // namespace bilindisc::test
