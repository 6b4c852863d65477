#pragma once

#include "bilindisc/bilinear.hpp"
#include "bilindisc/linalg.hpp"
#include "bilindisc/sampler.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace bilindisc {

// Coefficient matrix of the partial derivatives of a bilinear system with
// respect to one variable group.
//
// X: row (k, l) for l = 0..n holds dF_k/dx_l as a linear form in y, so entry
//    (k, l), j is a^(k)_{l,j}; shape (n+m)(n+1) x (m+1).
// Y: row (k, l) for l = 0..m holds dF_k/dy_l as a linear form in x, entry
//    (k, l), i is a^(k)_{i,l}; shape (n+m)(m+1) x (n+1).
struct DerivativeMatrix {
    Group group = Group::X;
    PolyMatrix entries;
    std::vector<std::pair<int, int>> rows;  // (equation k, derivative index l)
};

DerivativeMatrix derivative_matrix(const BilinearSystem& sys, Group group);

// A system whose derivative matrix for `group` has `kernel` in its right
// kernel: every coefficient row is a random rational row minus its projection
// onto `kernel`. Systems with an identically zero equation are redrawn (at
// most 100 times).
BilinearSystem rank_deficient_sample(int n, int m, Group group, const RationalVector& kernel,
                                     Sampler& sampler);

struct ProductIdealCertificate {
    // (i, j) -> c_ij for the product M_i N_j, 1-based as M_1..M_6, N_1..N_6.
    std::map<std::pair<int, int>, Rational> coefficients;
    std::vector<MultiPoly> x_minors;  // M_i: maximal minors of the X matrix
    std::vector<MultiPoly> y_minors;  // N_j: maximal minors of the Y matrix
    MultiPoly residual;               // disc_p11 - sum c_ij M_i N_j
};

// Writes the symbolic n = m = 1 discriminant as a rational combination of the
// 36 products of maximal minors, solving for the combination exactly in the
// monomial basis. Free unknowns are set to zero. Raises NoCertificateError if
// no combination exists.
ProductIdealCertificate product_ideal_certificate();

}  // namespace bilindisc
