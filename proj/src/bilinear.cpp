#include "bilindisc/bilinear.hpp"

#include "bilindisc/errors.hpp"

#include <algorithm>

namespace bilindisc {

namespace {

Integer factorial(int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

MultiPoly det2(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d) {
    return a * d - b * c;
}

}  // namespace

// --- BilinearSystem ---------------------------------------------------------

BilinearSystem::BilinearSystem(int n, int m, std::vector<MultiPoly> coeffs)
    : n_(n), m_(m), coeffs_(std::move(coeffs)) {
    if (n < 1 || m < 1) throw WrongShapeError("bilinear system needs n, m >= 1");
    const auto expected = static_cast<std::size_t>((n + m) * (n + 1) * (m + 1));
    if (coeffs_.size() != expected) {
        throw WrongShapeError("bilinear system (" + std::to_string(n) + "," + std::to_string(m) +
                              ") needs " + std::to_string(expected) + " coefficients, got " +
                              std::to_string(coeffs_.size()));
    }
}

BilinearSystem BilinearSystem::symbolic(int n, int m) {
    std::vector<MultiPoly> coeffs;
    for (int k = 0; k < n + m; ++k) {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= m; ++j) {
                coeffs.push_back(MultiPoly::variable(VarRef::coeff(k, i * (m + 1) + j)));
            }
        }
    }
    return {n, m, std::move(coeffs)};
}

BilinearSystem BilinearSystem::numeric(int n, int m, const std::vector<RationalMatrix>& equations) {
    if (static_cast<int>(equations.size()) != n + m) {
        throw WrongShapeError("expected " + std::to_string(n + m) + " equations");
    }
    std::vector<MultiPoly> coeffs;
    for (const auto& e : equations) {
        if (e.rows() != n + 1 || e.cols() != m + 1) {
            throw WrongShapeError("equation coefficients must be " + std::to_string(n + 1) + "x" +
                                  std::to_string(m + 1));
        }
        for (Index i = 0; i <= n; ++i) {
            for (Index j = 0; j <= m; ++j) coeffs.emplace_back(e(i, j));
        }
    }
    return {n, m, std::move(coeffs)};
}

BilinearSystem BilinearSystem::random(int n, int m, Sampler& sampler) {
    std::vector<MultiPoly> coeffs;
    for (int t = 0; t < (n + m) * (n + 1) * (m + 1); ++t) coeffs.emplace_back(sampler.rational());
    return {n, m, std::move(coeffs)};
}

bool BilinearSystem::is_numeric() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const MultiPoly& c) { return c.is_constant(); });
}

RationalMatrix BilinearSystem::equation_matrix(int k) const {
    RationalMatrix out(n_ + 1, m_ + 1);
    for (int i = 0; i <= n_; ++i) {
        for (int j = 0; j <= m_; ++j) out(i, j) = coeff(k, i, j).to_constant();
    }
    return out;
}

MultiPoly BilinearSystem::equation(int k) const {
    MultiPoly f;
    for (int i = 0; i <= n_; ++i) {
        for (int j = 0; j <= m_; ++j) {
            f += coeff(k, i, j) * MultiPoly(Monomial({{VarRef::x(i), 1}, {VarRef::y(j), 1}}), 1);
        }
    }
    return f;
}

BilinearSystem BilinearSystem::with_equation_scaled(int k, const MultiPoly& factor) const {
    BilinearSystem out = *this;
    for (int i = 0; i <= n_; ++i) {
        for (int j = 0; j <= m_; ++j) out.coeffs_[flat(k, i, j)] = coeff(k, i, j) * factor;
    }
    return out;
}

BilinearSystem BilinearSystem::transposed() const {
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(coeffs_.size());
    for (int k = 0; k < n_ + m_; ++k) {
        for (int j = 0; j <= m_; ++j) {
            for (int i = 0; i <= n_; ++i) coeffs.push_back(coeff(k, i, j));
        }
    }
    return {m_, n_, std::move(coeffs)};
}

// --- BinaryForm -------------------------------------------------------------

MultiPoly BinaryForm::to_poly() const {
    const int d = degree();
    MultiPoly q;
    for (int i = 0; i <= d; ++i) {
        q += coefficients[static_cast<std::size_t>(i)] *
             MultiPoly(Monomial({{VarRef::x(1), static_cast<unsigned>(i)},
                                 {VarRef::x(0), static_cast<unsigned>(d - i)}}),
                       1);
    }
    return q;
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, int d) {
    BinaryForm q;
    q.coefficients.assign(static_cast<std::size_t>(d + 1), MultiPoly{});
    for (const auto& [xpart, coeff] : p.split(Group::X)) {
        const unsigned e1 = xpart.exponent(VarRef::x(1));
        const unsigned e0 = xpart.exponent(VarRef::x(0));
        if (static_cast<int>(e0 + e1) != d || xpart.degree(Group::X) != e0 + e1) {
            throw WrongShapeError("not a binary form of degree " + std::to_string(d) + " in (x0, x1)");
        }
        q.coefficients[e1] = coeff;
    }
    return q;
}

// --- Jacobian and counts ----------------------------------------------------

PolyMatrix jacobian(const BilinearSystem& sys) {
    const int n = sys.n();
    const int m = sys.m();
    PolyMatrix jac(n + m, n + m);
    for (int k = 0; k < n + m; ++k) {
        const MultiPoly f = sys.equation(k);
        for (int j = 1; j <= n; ++j) jac(k, j - 1) = f.derivative(VarRef::x(j));
        for (int j = 1; j <= m; ++j) jac(k, n + j - 1) = f.derivative(VarRef::y(j));
    }
    return jac;
}

MultiPoly jacobian_det(const BilinearSystem& sys) { return determinant(jacobian(sys)); }

Integer generic_root_count(int n, int m) {
    return factorial(n + m) / (factorial(n) * factorial(m));
}

DegreeBound degree_bound(int n, int m) {
    DegreeBound b;
    b.mv_term = Integer(2 * n * m) * factorial(n + m - 1) / (factorial(n) * factorial(m));
    b.per_group = b.mv_term + generic_root_count(n, m);
    b.total = Integer(n + m) * b.per_group;
    return b;
}

RationalMatrix mixed_volume_matrix(int n, int m) {
    const int size = n + m;
    RationalMatrix mat = RationalMatrix::Constant(size, size, Rational(1));
    for (int j = 0; j < m; ++j) mat(0, j) = n;
    for (int j = m; j < size; ++j) mat(0, j) = m;
    return mat;
}

// --- Discriminants ----------------------------------------------------------

MultiPoly disc_p11(const BilinearSystem& sys) {
    if (sys.n() != 1 || sys.m() != 1) {
        throw WrongShapeError("closed-form discriminant needs n = m = 1");
    }
    auto a = [&](int i, int j) -> const MultiPoly& { return sys.coeff(0, i, j); };
    auto b = [&](int i, int j) -> const MultiPoly& { return sys.coeff(1, i, j); };
    const MultiPoly first = det2(a(0, 0), a(0, 1), b(1, 0), b(1, 1)) -
                            det2(a(1, 0), a(1, 1), b(0, 0), b(0, 1));
    const MultiPoly second = det2(a(0, 0), a(1, 0), b(0, 1), b(1, 1)) -
                             det2(a(0, 1), a(1, 1), b(0, 0), b(1, 0));
    const MultiPoly det_a = det2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    const MultiPoly det_b = det2(b(0, 0), b(0, 1), b(1, 0), b(1, 1));
    return first * second - MultiPoly(4) * det_a * det_b;
}

BinaryForm eliminate_y(const BilinearSystem& sys) {
    if (sys.n() != 1) throw WrongShapeError("y-elimination needs n = 1");
    const int m = sys.m();
    const MultiPoly x0 = MultiPoly::variable(VarRef::x(0));
    const MultiPoly x1 = MultiPoly::variable(VarRef::x(1));
    PolyMatrix linear(m + 1, m + 1);
    for (int k = 0; k <= m; ++k) {
        for (int j = 0; j <= m; ++j) linear(k, j) = sys.coeff(k, 0, j) * x0 + sys.coeff(k, 1, j) * x1;
    }
    return BinaryForm::from_poly(determinant(linear), m + 1);
}

namespace {

// Sylvester matrix of f and f' with the first f' row reduced by d times the
// first f row. Column 0 then holds only c_d, so
//   Res(f, f') = c_d * det(returned minor)
// as a polynomial identity, and the discriminant needs no division.
PolyMatrix reduced_sylvester_minor(const std::vector<MultiPoly>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    const int size = 2 * d - 1;
    PolyMatrix syl = PolyMatrix::Constant(size, size, MultiPoly{});
    // f rows: coefficients in descending powers of t
    for (int r = 0; r < d - 1; ++r) {
        for (int col = 0; col <= d; ++col) syl(r, r + col) = c[static_cast<std::size_t>(d - col)];
    }
    for (int s = 0; s < d; ++s) {
        for (int col = 0; col < d; ++col) {
            syl(d - 1 + s, s + col) = MultiPoly(d - col) * c[static_cast<std::size_t>(d - col)];
        }
    }
    // row (d-1) -= d * row 0; entry at col becomes -col * c_{d-col}
    for (int col = 0; col <= d; ++col) {
        syl(d - 1, col) = MultiPoly(-col) * c[static_cast<std::size_t>(d - col)];
    }
    return syl.bottomRightCorner(size - 1, size - 1);
}

MultiPoly discriminant_from_coefficients(const std::vector<MultiPoly>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    const MultiPoly det = determinant(reduced_sylvester_minor(c));
    return (d * (d - 1) / 2) % 2 == 0 ? det : -det;
}

void require_degree(const BinaryForm& q) {
    if (q.degree() < 2) {
        throw WrongShapeError("binary form discriminant needs degree >= 2, got " +
                              std::to_string(q.degree()));
    }
}

}  // namespace

MultiPoly binary_form_discriminant(const BinaryForm& q) {
    return binary_form_discriminant_with_chart(q).value;
}

FormDiscriminant binary_form_discriminant_with_chart(const BinaryForm& q) {
    require_degree(q);
    if (q.coefficients.back().is_zero() && !q.coefficients.front().is_zero()) {
        return {binary_form_discriminant(q, Chart::X1), Chart::X1};
    }
    // The reduced Sylvester identity holds for every coefficient vector, so
    // the x0 = 1 reading stays exact even when both end coefficients vanish.
    return {discriminant_from_coefficients(q.coefficients), Chart::X0};
}

MultiPoly binary_form_discriminant(const BinaryForm& q, Chart chart) {
    require_degree(q);
    std::vector<MultiPoly> c = q.coefficients;
    if (chart == Chart::X1) std::reverse(c.begin(), c.end());
    if (c.back().is_zero()) {
        throw DegenerateLeadingError(std::string("leading coefficient vanishes in chart ") +
                                     (chart == Chart::X0 ? "x0 = 1" : "x1 = 1"));
    }
    // Swapping x0 and x1 leaves the discriminant of a binary form unchanged.
    return discriminant_from_coefficients(c);
}

MultiPoly disc_via_elimination(const BilinearSystem& sys) {
    if (sys.n() == 1) return binary_form_discriminant(eliminate_y(sys));
    if (sys.m() == 1) return binary_form_discriminant(eliminate_y(sys.transposed()));
    throw WrongShapeError("elimination oracle needs n = 1 or m = 1");
}

int disc_degree_in_group(int n, int m, int k) {
    if (n != 1 && m != 1) throw WrongShapeError("degree measurement needs n = 1 or m = 1");
    if (k < 0 || k >= n + m) throw WrongShapeError("equation index out of range");
    return disc_via_elimination(BilinearSystem::symbolic(n, m)).degree(Group::Coeff, k);
}

}  // namespace bilindisc
