#pragma once

#include "bilindisc/linalg.hpp"
#include "bilindisc/multipoly.hpp"
#include "bilindisc/sampler.hpp"

#include <vector>

namespace bilindisc {

// n + m equations sum_{i<=n, j<=m} a^(k)_{i,j} x_i y_j on P^n x P^m.
// Equations are indexed k = 0 .. n+m-1. Coefficients are polynomials: numeric
// systems hold constants, symbolic ones hold VarRef::coeff(k, i*(m+1)+j).
class BilinearSystem {
public:
    // coeffs is the flat tensor [k][i][j]; raises WrongShapeError on a size
    // mismatch or non-positive n, m.
    BilinearSystem(int n, int m, std::vector<MultiPoly> coeffs);

    static BilinearSystem symbolic(int n, int m);
    // One (n+1) x (m+1) matrix per equation.
    static BilinearSystem numeric(int n, int m, const std::vector<RationalMatrix>& equations);
    static BilinearSystem random(int n, int m, Sampler& sampler);

    int n() const { return n_; }
    int m() const { return m_; }
    int equation_count() const { return n_ + m_; }

    const MultiPoly& coeff(int k, int i, int j) const { return coeffs_[flat(k, i, j)]; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    bool is_numeric() const;
    // (n+1) x (m+1) coefficient matrix of equation k; numeric systems only.
    RationalMatrix equation_matrix(int k) const;

    MultiPoly equation(int k) const;
    BilinearSystem with_equation_scaled(int k, const MultiPoly& factor) const;
    // The same system read on P^m x P^n: x and y swap roles.
    BilinearSystem transposed() const;

    friend bool operator==(const BilinearSystem&, const BilinearSystem&) = default;

private:
    std::size_t flat(int k, int i, int j) const {
        return static_cast<std::size_t>((k * (n_ + 1) + i) * (m_ + 1) + j);
    }

    int n_;
    int m_;
    std::vector<MultiPoly> coeffs_;
};

// Binary form sum_i c_i x1^i x0^(d-i); coefficients may be symbolic.
struct BinaryForm {
    std::vector<MultiPoly> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    MultiPoly to_poly() const;
    // Reads a polynomial homogeneous of degree d in (x0, x1).
    static BinaryForm from_poly(const MultiPoly& p, int d);
};

// Columns d/dx_1..d/dx_n then d/dy_1..d/dy_m; row k is equation k.
PolyMatrix jacobian(const BilinearSystem& sys);
MultiPoly jacobian_det(const BilinearSystem& sys);

// Generic number of solutions: C(n+m, n).
Integer generic_root_count(int n, int m);

struct DegreeBound {
    Integer per_group;  // bound on the degree in one equation's coefficients
    Integer total;
    Integer mv_term;    // 2nm(n+m-1)!/(n!m!)
};

DegreeBound degree_bound(int n, int m);

// Square matrix of size n+m whose first row has m entries n and n entries m,
// all other entries 1. Its permanent over n!m! is DegreeBound::mv_term.
RationalMatrix mixed_volume_matrix(int n, int m);

// Closed form for n = m = 1 with a_ij = a^(0)_{i,j}, b_ij = a^(1)_{i,j}:
//   (|a00 a01; b10 b11| - |a10 a11; b00 b01|)
//     * (|a00 a10; b01 b11| - |a01 a11; b00 b10|) - 4 |a| |b|.
MultiPoly disc_p11(const BilinearSystem& sys);

// n = 1: determinant of the (m+1) x (m+1) matrix of linear forms
// sum_i a^(k)_{i,j} x_i, a binary form of degree m+1 in (x0, x1).
BinaryForm eliminate_y(const BilinearSystem& sys);

// Dehomogenization chart used when reading a binary form as a polynomial in
// one variable: X0 sets x0 = 1 (leading coefficient c_d), X1 sets x1 = 1.
enum class Chart { X0, X1 };

struct FormDiscriminant {
    MultiPoly value;
    Chart chart;
};

// (-1)^(d(d-1)/2) Res(f, f') / c_d with f(t) = q(t, 1); for d = 2 this is
// c_1^2 - 4 c_2 c_0. Raises WrongShapeError for d < 2.
MultiPoly binary_form_discriminant(const BinaryForm& q);
// Same value, reporting the chart: X0 unless c_d vanishes and c_0 does not.
FormDiscriminant binary_form_discriminant_with_chart(const BinaryForm& q);
// Forces a chart; raises DegenerateLeadingError if its leading coefficient
// is zero.
MultiPoly binary_form_discriminant(const BinaryForm& q, Chart chart);

// Elimination oracle: discriminant of eliminate_y (n = 1), or of the
// transposed system when m = 1.
MultiPoly disc_via_elimination(const BilinearSystem& sys);

// Degree of the symbolic elimination discriminant in the coefficients of
// equation k, for the generic system on P^1 x P^m.
int disc_degree_in_group(int n, int m, int k);

}  // namespace bilindisc
