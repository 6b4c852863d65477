#include "bilindisc/ideal.hpp"

#include "bilindisc/errors.hpp"

#include <set>

namespace bilindisc {

DerivativeMatrix derivative_matrix(const BilinearSystem& sys, Group group) {
    if (group != Group::X && group != Group::Y) {
        throw WrongShapeError("derivative matrix group must be X or Y");
    }
    const int n = sys.n();
    const int m = sys.m();
    const bool by_x = group == Group::X;
    const int derivs = by_x ? n + 1 : m + 1;
    const int cols = by_x ? m + 1 : n + 1;

    DerivativeMatrix out;
    out.group = group;
    out.entries.resize((n + m) * derivs, cols);
    for (int k = 0; k < n + m; ++k) {
        for (int l = 0; l < derivs; ++l) {
            const Index row = k * derivs + l;
            out.rows.emplace_back(k, l);
            for (int c = 0; c < cols; ++c) {
                out.entries(row, c) = by_x ? sys.coeff(k, l, c) : sys.coeff(k, c, l);
            }
        }
    }
    return out;
}

BilinearSystem rank_deficient_sample(int n, int m, Group group, const RationalVector& kernel,
                                     Sampler& sampler) {
    const bool by_x = group == Group::X;
    if (!by_x && group != Group::Y) throw WrongShapeError("group must be X or Y");
    const int cols = by_x ? m + 1 : n + 1;
    const int derivs = by_x ? n + 1 : m + 1;
    if (kernel.size() != cols) {
        throw WrongShapeError("kernel vector needs " + std::to_string(cols) + " entries");
    }
    const Rational norm2 = kernel.squaredNorm();
    if (norm2 == 0) throw WrongShapeError("kernel vector must be nonzero");

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<RationalMatrix> equations(static_cast<std::size_t>(n + m),
                                              RationalMatrix::Zero(n + 1, m + 1));
        bool degenerate = false;
        for (auto& eq : equations) {
            for (int l = 0; l < derivs; ++l) {
                RationalVector row(cols);
                for (Index c = 0; c < cols; ++c) row(c) = sampler.rational();
                row -= (row.dot(kernel) / norm2) * kernel;
                if (by_x) {
                    eq.row(l) = row.transpose();
                } else {
                    eq.col(l) = row;
                }
            }
            degenerate = degenerate || eq.isZero(0);
        }
        if (!degenerate) return BilinearSystem::numeric(n, m, equations);
    }
    throw DegenerateSampleError("no nondegenerate rank-deficient sample after 100 draws");
}

ProductIdealCertificate product_ideal_certificate() {
    const BilinearSystem sys = BilinearSystem::symbolic(1, 1);
    ProductIdealCertificate cert;
    cert.x_minors = maximal_minors(derivative_matrix(sys, Group::X).entries);
    cert.y_minors = maximal_minors(derivative_matrix(sys, Group::Y).entries);
    const MultiPoly disc = disc_p11(sys);

    std::vector<MultiPoly> products;
    std::vector<std::pair<int, int>> labels;
    for (std::size_t i = 0; i < cert.x_minors.size(); ++i) {
        for (std::size_t j = 0; j < cert.y_minors.size(); ++j) {
            products.push_back(cert.x_minors[i] * cert.y_minors[j]);
            labels.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }

    std::set<Monomial> basis;
    for (const auto& [mono, c] : disc.terms()) basis.insert(mono);
    for (const auto& p : products) {
        for (const auto& [mono, c] : p.terms()) basis.insert(mono);
    }

    const auto rows = static_cast<Index>(basis.size());
    const auto cols = static_cast<Index>(products.size());
    RationalMatrix system(rows, cols);
    RationalVector rhs(rows);
    Index r = 0;
    for (const auto& mono : basis) {
        for (Index c = 0; c < cols; ++c) {
            system(r, c) = products[static_cast<std::size_t>(c)].coefficient(mono);
        }
        rhs(r) = disc.coefficient(mono);
        ++r;
    }

    LinearSolution solution;
    try {
        solution = solve_linear(system, rhs);
    } catch (const InconsistentError&) {
        throw NoCertificateError(
            "discriminant is not a rational combination of the minor products");
    }

    cert.residual = disc;
    for (Index c = 0; c < cols; ++c) {
        const Rational& coeff = solution.particular(c);
        cert.coefficients[labels[static_cast<std::size_t>(c)]] = coeff;
        if (coeff == 0) continue;
        cert.residual -= MultiPoly(coeff) * products[static_cast<std::size_t>(c)];
    }
    return cert;
}

}  // namespace bilindisc
