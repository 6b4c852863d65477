#pragma once

#include "bilindisc/bilinear.hpp"
#include "bilindisc/linalg.hpp"
#include "bilindisc/sampler.hpp"

#include <array>
#include <cstdint>

namespace bilindisc {

// Sparse system on P^1 x P^1 x P^1 arising from three-player games:
//   H1 = a0 x1 y1 + a1 x1 y0 + a2 x0 y1 + a4 x0 y0
//   H2 = b0 x1 z1 + b1 x1 z0 + b3 x0 z1 + b4 x0 z0
//   H3 = c0 y1 z1 + c2 y1 z0 + c3 y0 z1 + c4 y0 z0
// Coefficient labels skip a3, b2 and c1; the arrays below are stored in label
// order and the label of slot s is kLabelsA[s] etc.
struct ThreePlayerSystem {
    static constexpr std::array<int, 4> kLabelsA{0, 1, 2, 4};
    static constexpr std::array<int, 4> kLabelsB{0, 1, 3, 4};
    static constexpr std::array<int, 4> kLabelsC{0, 2, 3, 4};

    std::array<MultiPoly, 4> a;
    std::array<MultiPoly, 4> b;
    std::array<MultiPoly, 4> c;

    // Coefficient variables a_0 .. c_4 (VarRef::coeff(player, label)).
    static ThreePlayerSystem symbolic();
    // Twelve values in the order a0 a1 a2 a4 b0 b1 b3 b4 c0 c2 c3 c4.
    static ThreePlayerSystem numeric(const std::array<Rational, 12>& values);
    static ThreePlayerSystem random(Sampler& sampler);

    std::array<MultiPoly, 12> flat() const;
    bool is_numeric() const;

    MultiPoly h1() const;
    MultiPoly h2() const;
    MultiPoly h3() const;
    std::array<MultiPoly, 3> equations() const { return {h1(), h2(), h3()}; }

    friend bool operator==(const ThreePlayerSystem&, const ThreePlayerSystem&) = default;
};

using ProjectivePair = std::array<Rational, 2>;

// Scales a nonzero pair so its first nonzero entry is 1; raises
// ZeroDenominatorError for (0, 0).
ProjectivePair normalize_pair(const ProjectivePair& p);

// Point ((x1:x0), (y1:y0), (z1:z0)), each pair normalized.
struct TriRoot {
    ProjectivePair x;
    ProjectivePair y;
    ProjectivePair z;

    static TriRoot make(const ProjectivePair& x, const ProjectivePair& y, const ProjectivePair& z);
    std::map<VarRef, Rational> assignment() const;

    friend bool operator==(const TriRoot&, const TriRoot&) = default;
};

// (lambda1:lambda2:lambda3) in the kernel of the transposed Jacobian and the
// matching kernel vector u of the 6x6 discriminant matrix, both normalized.
struct KernelWitness {
    std::array<Rational, 3> lambda;
    std::array<Rational, 6> u;
};

struct RootWitness {
    TriRoot root;
    std::array<Rational, 3> lambda;
};

// Sign relating the two discriminant routes:
//   det(build_disc_matrix(s)) == kDeterminantalSign * disc_expanded(s)
// for every system s, established by full symbolic expansion.
inline constexpr int kDeterminantalSign = -1;

// (a0|b3 b4; c3 c4| - a1|b3 b4; c0 c2| - a2|b0 b1; c3 c4| + a4|b0 b1; c0 c2|)^2
//   - 4 |a0 a1; a2 a4| |b0 b1; b3 b4| |c0 c2; c3 c4|
MultiPoly disc_expanded(const ThreePlayerSystem& sys);

// Symmetric 6x6 matrix over (x1, x0, y1, y0, z1, z0): twice the Gram matrix
// of the quadratic form H1 + H2 + H3.
PolyMatrix build_disc_matrix(const ThreePlayerSystem& sys);
MultiPoly disc_determinantal(const ThreePlayerSystem& sys);

// Gram matrix of H1 + H2 + H3, i.e. build_disc_matrix / 2. Numeric systems.
RationalMatrix quadratic_form_matrix(const ThreePlayerSystem& sys);
bool quadratic_form_degenerate(const ThreePlayerSystem& sys);

// Solves H1 = 0 for (y1:y0) and H2 = 0 for (z1:z0) as linear forms in x and
// substitutes into H3. Raises IdenticallyZeroError if the result vanishes.
BinaryForm eliminate_to_quadratic(const ThreePlayerSystem& sys);

// Rows are d/dx1, d/dy1, d/dz1; columns are H1, H2, H3:
//   [dH1/dx1  dH2/dx1  0      ]
//   [dH1/dy1  0        dH3/dy1]
//   [0        dH2/dz1  dH3/dz1]
// evaluated at the given point.
PolyMatrix transposed_jacobian(const ThreePlayerSystem& sys, const TriRoot& root);

// A system with a multiple root at `root` whose transposed Jacobian there has
// lambda in its kernel. Coefficients are an integer combination (entries in
// [-10, 10]) of a basis of the linear constraint space; draws with an
// identically zero equation are redrawn, at most 100 times.
ThreePlayerSystem singular_instance(const TriRoot& root, const std::array<Rational, 3>& lambda,
                                    Sampler& sampler);
ThreePlayerSystem singular_instance(const TriRoot& root, const std::array<Rational, 3>& lambda,
                                    std::uint64_t seed);

// u = (x1/l3 : x0/l3 : y1/l2 : y0/l2 : z1/l1 : z0/l1), checked to satisfy
// M u = 0 exactly (CorrespondenceError otherwise). ZeroDenominatorError if a
// lambda entry vanishes; NotSingularError if M is nonsingular.
KernelWitness kernel_from_root(const ThreePlayerSystem& sys, const TriRoot& root,
                               const std::array<Rational, 3>& lambda);

// Inverse map: (x1:x0, y1:y0, z1:z0) = (u1:u2, u3:u4, u5:u6) and lambda from
// the scalings. Checks M u = 0, H_i(root) = 0 and J^T lambda = 0.
RootWitness root_from_kernel(const ThreePlayerSystem& sys, const std::array<Rational, 6>& u);

// root_from_kernel applied to the first kernel_basis vector of M.
RootWitness recover_multiple_root(const ThreePlayerSystem& sys);

}  // namespace bilindisc
