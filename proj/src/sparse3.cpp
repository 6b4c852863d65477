#include "bilindisc/sparse3.hpp"

#include "bilindisc/errors.hpp"

#include <algorithm>

namespace bilindisc {

namespace {

MultiPoly var(VarRef v) { return MultiPoly::variable(v); }

MultiPoly det2(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d) {
    return a * d - b * c;
}

const std::array<VarRef, 6> kPointVars{VarRef::x(1), VarRef::x(0), VarRef::y(1),
                                       VarRef::y(0), VarRef::z(1), VarRef::z(0)};

bool all_zero(const std::array<MultiPoly, 4>& e) {
    return std::all_of(e.begin(), e.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

std::array<Rational, 3> normalize_triple(std::array<Rational, 3> t) {
    const auto first = std::find_if(t.begin(), t.end(), [](const Rational& r) { return r != 0; });
    if (first == t.end()) throw WrongShapeError("projective triple is zero");
    const Rational scale = *first;
    for (auto& r : t) r /= scale;
    return t;
}

}  // namespace

// --- ThreePlayerSystem ------------------------------------------------------

ThreePlayerSystem ThreePlayerSystem::symbolic() {
    ThreePlayerSystem s;
    for (std::size_t i = 0; i < 4; ++i) {
        s.a[i] = var(VarRef::coeff(0, kLabelsA[i]));
        s.b[i] = var(VarRef::coeff(1, kLabelsB[i]));
        s.c[i] = var(VarRef::coeff(2, kLabelsC[i]));
    }
    return s;
}

ThreePlayerSystem ThreePlayerSystem::numeric(const std::array<Rational, 12>& values) {
    ThreePlayerSystem s;
    for (std::size_t i = 0; i < 4; ++i) {
        s.a[i] = values[i];
        s.b[i] = values[4 + i];
        s.c[i] = values[8 + i];
    }
    return s;
}

ThreePlayerSystem ThreePlayerSystem::random(Sampler& sampler) {
    std::array<Rational, 12> values;
    for (auto& v : values) v = sampler.rational();
    return numeric(values);
}

std::array<MultiPoly, 12> ThreePlayerSystem::flat() const {
    std::array<MultiPoly, 12> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = a[i];
        out[4 + i] = b[i];
        out[8 + i] = c[i];
    }
    return out;
}

bool ThreePlayerSystem::is_numeric() const {
    const auto f = flat();
    return std::all_of(f.begin(), f.end(), [](const MultiPoly& p) { return p.is_constant(); });
}

MultiPoly ThreePlayerSystem::h1() const {
    const MultiPoly x1 = var(VarRef::x(1)), x0 = var(VarRef::x(0));
    const MultiPoly y1 = var(VarRef::y(1)), y0 = var(VarRef::y(0));
    return a[0] * x1 * y1 + a[1] * x1 * y0 + a[2] * x0 * y1 + a[3] * x0 * y0;
}

MultiPoly ThreePlayerSystem::h2() const {
    const MultiPoly x1 = var(VarRef::x(1)), x0 = var(VarRef::x(0));
    const MultiPoly z1 = var(VarRef::z(1)), z0 = var(VarRef::z(0));
    return b[0] * x1 * z1 + b[1] * x1 * z0 + b[2] * x0 * z1 + b[3] * x0 * z0;
}

MultiPoly ThreePlayerSystem::h3() const {
    const MultiPoly y1 = var(VarRef::y(1)), y0 = var(VarRef::y(0));
    const MultiPoly z1 = var(VarRef::z(1)), z0 = var(VarRef::z(0));
    return c[0] * y1 * z1 + c[1] * y1 * z0 + c[2] * y0 * z1 + c[3] * y0 * z0;
}

// --- Points -----------------------------------------------------------------

ProjectivePair normalize_pair(const ProjectivePair& p) {
    if (p[0] != 0) return {Rational(1), p[1] / p[0]};
    if (p[1] != 0) return {Rational(0), Rational(1)};
    throw ZeroDenominatorError("projective pair (0 : 0)");
}

TriRoot TriRoot::make(const ProjectivePair& x, const ProjectivePair& y, const ProjectivePair& z) {
    return {normalize_pair(x), normalize_pair(y), normalize_pair(z)};
}

std::map<VarRef, Rational> TriRoot::assignment() const {
    return {{VarRef::x(1), x[0]}, {VarRef::x(0), x[1]}, {VarRef::y(1), y[0]},
            {VarRef::y(0), y[1]}, {VarRef::z(1), z[0]}, {VarRef::z(0), z[1]}};
}

// --- Discriminant routes ----------------------------------------------------

MultiPoly disc_expanded(const ThreePlayerSystem& s) {
    const auto& [a0, a1, a2, a4] = s.a;
    const auto& [b0, b1, b3, b4] = s.b;
    const auto& [c0, c2, c3, c4] = s.c;
    const MultiPoly bracket = a0 * det2(b3, b4, c3, c4) - a1 * det2(b3, b4, c0, c2) -
                              a2 * det2(b0, b1, c3, c4) + a4 * det2(b0, b1, c0, c2);
    return bracket * bracket -
           MultiPoly(4) * det2(a0, a1, a2, a4) * det2(b0, b1, b3, b4) * det2(c0, c2, c3, c4);
}

PolyMatrix build_disc_matrix(const ThreePlayerSystem& s) {
    const auto& [a0, a1, a2, a4] = s.a;
    const auto& [b0, b1, b3, b4] = s.b;
    const auto& [c0, c2, c3, c4] = s.c;
    const MultiPoly o;
    PolyMatrix m(6, 6);
    m << o, o, a0, a1, b0, b1,
         o, o, a2, a4, b3, b4,
         a0, a2, o, o, c0, c2,
         a1, a4, o, o, c3, c4,
         b0, b3, c0, c3, o, o,
         b1, b4, c2, c4, o, o;
    return m;
}

MultiPoly disc_determinantal(const ThreePlayerSystem& sys) {
    return determinant(build_disc_matrix(sys));
}

RationalMatrix quadratic_form_matrix(const ThreePlayerSystem& sys) {
    return to_rational(build_disc_matrix(sys)) / Rational(2);
}

bool quadratic_form_degenerate(const ThreePlayerSystem& sys) {
    return determinant(quadratic_form_matrix(sys)) == 0;
}

BinaryForm eliminate_to_quadratic(const ThreePlayerSystem& s) {
    const MultiPoly x1 = var(VarRef::x(1)), x0 = var(VarRef::x(0));
    const auto& [a0, a1, a2, a4] = s.a;
    const auto& [b0, b1, b3, b4] = s.b;
    const std::map<VarRef, MultiPoly> values{
        {VarRef::y(1), -(a1 * x1 + a4 * x0)},
        {VarRef::y(0), a0 * x1 + a2 * x0},
        {VarRef::z(1), -(b1 * x1 + b4 * x0)},
        {VarRef::z(0), b0 * x1 + b3 * x0},
    };
    const MultiPoly q = s.h3().substitute(values);
    if (q.is_zero()) throw IdenticallyZeroError("eliminated form vanishes identically");
    return BinaryForm::from_poly(q, 2);
}

PolyMatrix transposed_jacobian(const ThreePlayerSystem& sys, const TriRoot& root) {
    const auto at = root.assignment();
    auto d = [&](const MultiPoly& h, VarRef v) { return h.derivative(v).evaluate(at); };
    const MultiPoly h1 = sys.h1(), h2 = sys.h2(), h3 = sys.h3();
    const MultiPoly o;
    PolyMatrix j(3, 3);
    j << d(h1, VarRef::x(1)), d(h2, VarRef::x(1)), o,
         d(h1, VarRef::y(1)), o, d(h3, VarRef::y(1)),
         o, d(h2, VarRef::z(1)), d(h3, VarRef::z(1));
    return j;
}

// --- Singular instances -----------------------------------------------------

ThreePlayerSystem singular_instance(const TriRoot& root, const std::array<Rational, 3>& lambda,
                                    Sampler& sampler) {
    if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l == 0; })) {
        throw WrongShapeError("lambda must be nonzero");
    }
    const TriRoot point = TriRoot::make(root.x, root.y, root.z);
    const ThreePlayerSystem sym = ThreePlayerSystem::symbolic();
    const auto at = point.assignment();
    const auto hs = sym.equations();

    // Constraints linear in the 12 coefficients: H_i(point) = 0 and the full
    // gradient sum_i lambda_i grad H_i(point) = 0. The gradient rows for
    // x0, y0, z0 follow from the x1, y1, z1 rows by Euler whenever the point
    // has x0, y0, z0 != 0; keeping them makes points at infinity work too.
    std::vector<MultiPoly> constraints;
    for (const auto& h : hs) constraints.push_back(h.evaluate(at));
    for (const VarRef v : kPointVars) {
        MultiPoly g;
        for (std::size_t i = 0; i < 3; ++i) g += MultiPoly(lambda[i]) * hs[i].derivative(v);
        constraints.push_back(g.evaluate(at));
    }

    const auto unknowns = sym.flat();
    RationalMatrix system(static_cast<Index>(constraints.size()), 12);
    for (std::size_t r = 0; r < constraints.size(); ++r) {
        for (std::size_t u = 0; u < 12; ++u) {
            system(static_cast<Index>(r), static_cast<Index>(u)) =
                constraints[r].coefficient(unknowns[u].terms().begin()->first);
        }
    }
    const auto basis = kernel_basis(system);

    for (int attempt = 0; attempt < 100; ++attempt) {
        RationalVector coeffs = RationalVector::Zero(12);
        for (const auto& v : basis) coeffs += Rational(sampler.integer(-10, 10)) * v;
        std::array<Rational, 12> values;
        for (std::size_t u = 0; u < 12; ++u) values[u] = coeffs(static_cast<Index>(u));
        const auto candidate = ThreePlayerSystem::numeric(values);
        if (!all_zero(candidate.a) && !all_zero(candidate.b) && !all_zero(candidate.c)) {
            return candidate;
        }
    }
    throw DegenerateSampleError("no nondegenerate singular instance after 100 draws");
}

ThreePlayerSystem singular_instance(const TriRoot& root, const std::array<Rational, 3>& lambda,
                                    std::uint64_t seed) {
    Sampler sampler(seed);
    return singular_instance(root, lambda, sampler);
}

// --- Kernel correspondence --------------------------------------------------

namespace {

bool in_kernel(const RationalMatrix& m, const std::array<Rational, 6>& u) {
    RationalVector v(6);
    for (Index i = 0; i < 6; ++i) v(i) = u[static_cast<std::size_t>(i)];
    return (m * v).isZero(0);
}

RationalMatrix numeric_disc_matrix(const ThreePlayerSystem& sys) {
    return to_rational(build_disc_matrix(sys));
}

}  // namespace

KernelWitness kernel_from_root(const ThreePlayerSystem& sys, const TriRoot& root,
                               const std::array<Rational, 3>& lambda) {
    const RationalMatrix m = numeric_disc_matrix(sys);
    if (determinant(m) != 0) throw NotSingularError("discriminant matrix is nonsingular");
    if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l == 0; })) {
        throw ZeroDenominatorError("lambda has a zero entry; u is undefined in this chart");
    }
    KernelWitness w;
    w.lambda = normalize_triple(lambda);
    const std::array<Rational, 6> u{root.x[0] / lambda[2], root.x[1] / lambda[2],
                                    root.y[0] / lambda[1], root.y[1] / lambda[1],
                                    root.z[0] / lambda[0], root.z[1] / lambda[0]};
    if (!in_kernel(m, u)) throw CorrespondenceError("constructed u is not in the kernel");
    const auto first = std::find_if(u.begin(), u.end(), [](const Rational& r) { return r != 0; });
    const Rational scale = *first;
    for (std::size_t i = 0; i < 6; ++i) w.u[i] = u[i] / scale;
    return w;
}

RootWitness root_from_kernel(const ThreePlayerSystem& sys, const std::array<Rational, 6>& u) {
    const RationalMatrix m = numeric_disc_matrix(sys);
    if (!in_kernel(m, u)) throw CorrespondenceError("u is not in the kernel of the matrix");
    const ProjectivePair p{u[0], u[1]}, q{u[2], u[3]}, r{u[4], u[5]};
    RootWitness out{TriRoot::make(p, q, r), {}};
    // u = (alpha x, beta y, gamma z) with lambda = (1/gamma, 1/beta, 1/alpha)
    auto scale = [](const ProjectivePair& raw) { return raw[0] != 0 ? raw[0] : raw[1]; };
    out.lambda = normalize_triple({1 / scale(r), 1 / scale(q), 1 / scale(p)});

    const auto at = out.root.assignment();
    for (const auto& h : sys.equations()) {
        if (!h.evaluate(at).is_zero()) throw CorrespondenceError("recovered point is not a root");
    }
    const RationalMatrix jt = to_rational(transposed_jacobian(sys, out.root));
    RationalVector l(3);
    for (Index i = 0; i < 3; ++i) l(i) = out.lambda[static_cast<std::size_t>(i)];
    if (!(jt * l).isZero(0) || determinant(jt) != 0) {
        throw CorrespondenceError("transposed Jacobian is not singular along lambda");
    }
    return out;
}

RootWitness recover_multiple_root(const ThreePlayerSystem& sys) {
    const auto basis = kernel_basis(numeric_disc_matrix(sys));
    if (basis.empty()) throw NotSingularError("discriminant matrix has trivial kernel");
    std::array<Rational, 6> u;
    for (std::size_t i = 0; i < 6; ++i) u[i] = basis.front()(static_cast<Index>(i));
    return root_from_kernel(sys, u);
}

}  // namespace bilindisc
