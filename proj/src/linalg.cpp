#include "bilindisc/linalg.hpp"

#include <algorithm>

namespace bilindisc {

PolyMatrix to_poly(const RationalMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly(m(i, j));
    }
    return out;
}

RationalMatrix to_rational(const PolyMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_constant();
    }
    return out;
}

RowEchelon row_echelon(const RationalMatrix& m) {
    RowEchelon out{m, {}};
    RationalMatrix& a = out.reduced;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) a.row(pivot).swap(a.row(row));
        const Rational inv = 1 / a(row, col);
        a.row(row) *= inv;
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational factor = a(r, col);
            a.row(r) -= factor * a.row(row);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

Index rank(const RationalMatrix& m) { return static_cast<Index>(row_echelon(m).pivots.size()); }

RationalVector normalize_integer(const RationalVector& v) {
    Integer num = 0;
    Integer den = 1;
    for (const auto& c : v) {
        num = gcd(num, Integer(boost::multiprecision::numerator(c)));
        den = lcm(den, Integer(boost::multiprecision::denominator(c)));
    }
    if (num == 0) return v;
    Rational scale(den, num);
    const auto first = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
    if (*first < 0) scale = -scale;
    return v * scale;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const RowEchelon ech = row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<RationalVector> basis;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RationalVector v = RationalVector::Zero(m.cols());
        v(free) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v(ech.pivots[r]) = -ech.reduced(static_cast<Index>(r), free);
        }
        basis.push_back(normalize_integer(v));
    }
    return basis;
}

LinearSolution solve_linear(const RationalMatrix& m, const RationalVector& rhs) {
    if (rhs.size() != m.rows()) {
        throw WrongShapeError("right-hand side has " + std::to_string(rhs.size()) +
                              " entries, matrix has " + std::to_string(m.rows()) + " rows");
    }
    RationalMatrix augmented(m.rows(), m.cols() + 1);
    augmented << m, rhs;
    const RowEchelon ech = row_echelon(augmented);
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) {
        throw InconsistentError("linear system has no solution");
    }
    LinearSolution out;
    out.particular = RationalVector::Zero(m.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        out.particular(ech.pivots[r]) = ech.reduced(static_cast<Index>(r), m.cols());
    }
    out.nullspace = kernel_basis(m);
    return out;
}

namespace {

template <typename M, typename F>
std::string render(const M& m, F&& cell) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            cells.push_back(cell(m(i, j)));
            width = std::max(width, cells.back().size());
        }
    }
    std::string out;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            const auto& c = cells[static_cast<std::size_t>(i * m.cols() + j)];
            out += std::string(width - c.size() + (j == 0 ? 0 : 2), ' ') + c;
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string to_string(const RationalMatrix& m) {
    return render(m, [](const Rational& c) { return to_string(c); });
}

std::string to_string(const PolyMatrix& m) {
    return render(m, [](const MultiPoly& c) { return c.str(); });
}

}  // namespace bilindisc
