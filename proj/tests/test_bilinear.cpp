#include "doctest.h"

#include "bilindisc/bilinear.hpp"
#include "bilindisc/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bilindisc;
using namespace bilindisc::test;

namespace {

const RationalMatrix kIdentity = rmat({{1, 0}, {0, 1}});
const RationalMatrix kSwap = rmat({{0, 1}, {1, 0}});
const RationalMatrix kCorner = rmat({{0, 1}, {0, 0}});

BinaryForm form(std::initializer_list<long> c) {
    BinaryForm q;
    for (long v : c) q.coefficients.emplace_back(Rational(v));
    return q;
}

}  // namespace

TEST_CASE("system shape is validated") {
    CHECK_NOTHROW(BilinearSystem(1, 2, std::vector<MultiPoly>(3 * 2 * 3)));
    CHECK_THROWS_AS(BilinearSystem(1, 2, std::vector<MultiPoly>(17)), WrongShapeError);
    CHECK_THROWS_AS(BilinearSystem(0, 1, {}), WrongShapeError);
    CHECK_THROWS_AS(BilinearSystem::numeric(1, 1, {kIdentity}), WrongShapeError);
    CHECK_THROWS_AS(BilinearSystem::numeric(1, 1, {kIdentity, rmat({{1, 2, 3}, {4, 5, 6}})}),
                    WrongShapeError);
}

TEST_CASE("equations are bilinear") {
    Sampler s(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(s.integer(1, 3)), m = static_cast<int>(s.integer(1, 3));
        const auto sys = BilinearSystem::random(n, m, s);
        CHECK(sys.is_numeric());
        for (int k = 0; k < n + m; ++k) {
            const MultiPoly f = sys.equation(k);
            CHECK(f.degree(Group::X) <= 1);
            CHECK(f.degree(Group::Y) <= 1);
            CHECK(sys.equation_matrix(k)(0, 0) == sys.coeff(k, 0, 0).to_constant());
        }
    }
    const auto sym = BilinearSystem::symbolic(2, 1);
    CHECK(!sym.is_numeric());
    CHECK(sym.coeff(2, 2, 1) == C(2, 5));
}

TEST_CASE("jacobian examples") {
    const auto diag = system11(rmat({{1, 0}, {0, 0}}), rmat({{0, 0}, {0, 1}}));
    const PolyMatrix j1 = jacobian(diag);
    CHECK(j1(0, 0).is_zero());
    CHECK(j1(0, 1).is_zero());
    CHECK(j1(1, 0) == Y(1));
    CHECK(j1(1, 1) == X(1));
    CHECK(jacobian_det(diag).is_zero());

    const auto sys = system11(kIdentity, kSwap);
    const PolyMatrix j2 = jacobian(sys);
    CHECK(j2(0, 0) == Y(1));
    CHECK(j2(0, 1) == X(1));
    CHECK(j2(1, 0) == Y(0));
    CHECK(j2(1, 1) == X(0));
    CHECK(jacobian_det(sys) == X(0) * Y(1) - X(1) * Y(0));
}

TEST_CASE("jacobian degrees and support") {
    Sampler s(43);
    const auto sys = BilinearSystem::random(2, 3, s);
    const MultiPoly j = jacobian_det(sys);
    CHECK(j.degree(Group::X) == 3);
    CHECK(j.degree(Group::Y) == 2);

    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(s.integer(1, 3)), m = static_cast<int>(s.integer(1, 3));
        const MultiPoly jd = jacobian_det(BilinearSystem::random(n, m, s));
        REQUIRE(!jd.is_zero());
        CHECK(jd.is_homogeneous(Group::X, m));
        CHECK(jd.is_homogeneous(Group::Y, n));
    }
}

TEST_CASE("jacobian is linear in each equation's coefficients") {
    Sampler s(47);
    for (int trial = 0; trial < 10; ++trial) {
        const auto sys = BilinearSystem::random(2, 2, s);
        const MultiPoly j = jacobian_det(sys);
        for (int k = 0; k < 4; ++k) {
            for (int t : {2, 3}) {
                CHECK(jacobian_det(sys.with_equation_scaled(k, t)) == MultiPoly(t) * j);
            }
        }
    }
    const MultiPoly js = jacobian_det(BilinearSystem::symbolic(1, 2));
    for (int k = 0; k < 3; ++k) CHECK(js.degree(Group::Coeff, k) <= 1);
}

TEST_CASE("generic root count") {
    CHECK(generic_root_count(1, 1) == 2);
    CHECK(generic_root_count(1, 2) == 3);
    CHECK(generic_root_count(2, 2) == 6);
    CHECK(generic_root_count(3, 4) == 35);
}

TEST_CASE("degree bounds") {
    CHECK(degree_bound(1, 1).per_group == 4);
    CHECK(degree_bound(1, 2).per_group == 7);
    const auto b22 = degree_bound(2, 2);
    CHECK(b22.mv_term == 12);
    CHECK(b22.per_group == 18);
    CHECK(b22.total == 72);
    CHECK(degree_bound(1, 2).total == 21);
}

TEST_CASE("mv_term agrees with the permanent") {
    CHECK(permanent(mixed_volume_matrix(1, 1)) == 2);
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const Rational perm = permanent(mixed_volume_matrix(n, m));
            Integer fact_nm1 = 1, fact_n = 1, fact_m = 1;
            for (int i = 2; i <= n + m - 1; ++i) fact_nm1 *= i;
            for (int i = 2; i <= n; ++i) fact_n *= i;
            for (int i = 2; i <= m; ++i) fact_m *= i;
            CHECK(perm == Rational(2 * n * m * fact_nm1));
            CHECK(perm / Rational(fact_n * fact_m) == Rational(degree_bound(n, m).mv_term));
            if (n + m <= 6) CHECK(perm == oracle::leibniz_perm(mixed_volume_matrix(n, m)));
        }
    }
}

TEST_CASE("disc_p11 examples") {
    CHECK(disc_p11(system11(kIdentity, kSwap)) == MultiPoly(4));
    CHECK(disc_p11(system11(kIdentity, kCorner)).is_zero());
    CHECK(disc_p11(system11(rmat({{0, 0}, {0, 0}}), kSwap)).is_zero());
    CHECK_THROWS_AS(disc_p11(BilinearSystem::symbolic(1, 2)), WrongShapeError);
}

TEST_CASE("disc_p11 symbolic form") {
    const MultiPoly a00 = C(0, 0), a01 = C(0, 1), a10 = C(0, 2), a11 = C(0, 3);
    const MultiPoly b00 = C(1, 0), b01 = C(1, 1), b10 = C(1, 2), b11 = C(1, 3);
    const MultiPoly p = a00 * b11 - a01 * b10, q = a10 * b01 - a11 * b00;
    const MultiPoly expected =
        pow(p - q, 2) - MultiPoly(4) * (a00 * a11 - a01 * a10) * (b00 * b11 - b01 * b10);

    const MultiPoly d = disc_p11(BilinearSystem::symbolic(1, 1));
    CHECK(d == expected);
    CHECK(d.total_degree() == 4);
    CHECK(d.is_homogeneous(Group::Coeff, 4));
    CHECK(d.degree(Group::Coeff, 0) == 2);
    CHECK(d.degree(Group::Coeff, 1) == 2);
    CHECK(d == disc_via_elimination(BilinearSystem::symbolic(1, 1)));
}

TEST_CASE("eliminate_y examples") {
    CHECK(eliminate_y(system11(kIdentity, kSwap)).to_poly() == X(0) * X(0) - X(1) * X(1));
    CHECK(eliminate_y(system11(kIdentity, kCorner)).to_poly() == X(0) * X(0));

    // equation k is x_{k%2} y_k
    std::vector<RationalMatrix> eqs;
    for (int k = 0; k < 3; ++k) {
        RationalMatrix a = RationalMatrix::Zero(2, 3);
        a(k % 2, k) = 1;
        eqs.push_back(a);
    }
    const MultiPoly q = eliminate_y(BilinearSystem::numeric(1, 2, eqs)).to_poly();
    CHECK(q.size() == 1);
    CHECK(q == X(0) * X(0) * X(1));

    CHECK_THROWS_AS(eliminate_y(BilinearSystem::symbolic(2, 1)), WrongShapeError);
}

TEST_CASE("elimination form has degree m+1 and vanishes at projected roots") {
    Sampler s(53);
    for (int m = 1; m <= 3; ++m) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto base = BilinearSystem::random(1, m, s);
            const BinaryForm q = eliminate_y(base);
            CHECK(q.degree() == m + 1);

            // Shift a^(k)_{0,0} so that every equation passes through (x*, y*).
            const Rational x1 = s.rational(), y0 = 1;
            std::map<VarRef, Rational> point{{VarRef::x(0), 1}, {VarRef::x(1), x1}, {VarRef::y(0), y0}};
            for (int j = 1; j <= m; ++j) point[VarRef::y(j)] = s.rational();
            std::vector<RationalMatrix> eqs;
            for (int k = 0; k <= m; ++k) {
                RationalMatrix a = base.equation_matrix(k);
                const Rational value = base.equation(k).evaluate(point).to_constant();
                a(0, 0) -= value;
                eqs.push_back(a);
            }
            const auto sys = BilinearSystem::numeric(1, m, eqs);
            for (int k = 0; k <= m; ++k) CHECK(sys.equation(k).evaluate(point).is_zero());
            CHECK(eliminate_y(sys).to_poly().evaluate({{VarRef::x(0), 1}, {VarRef::x(1), x1}}).is_zero());
        }
    }
}

TEST_CASE("binary form discriminant examples") {
    CHECK(binary_form_discriminant(form({0, 1, 0})) == MultiPoly(1));
    CHECK(binary_form_discriminant(form({1, 0, 1})) == MultiPoly(-4));
    CHECK(binary_form_discriminant(form({0, -1, 0, 1})) == MultiPoly(4));
    CHECK_THROWS_AS(binary_form_discriminant(form({1, 1})), WrongShapeError);

    // d = 2 is B^2 - 4AC for every coefficient choice
    BinaryForm sym{{C(0, 0), C(0, 1), C(0, 2)}};
    CHECK(binary_form_discriminant(sym) == C(0, 1) * C(0, 1) - MultiPoly(4) * C(0, 2) * C(0, 0));
}

TEST_CASE("binary form discriminant charts") {
    const auto xx = binary_form_discriminant_with_chart(form({0, 1, 0}));
    CHECK(xx.value == MultiPoly(1));
    CHECK_THROWS_AS(binary_form_discriminant(form({0, 1, 0}), Chart::X0), DegenerateLeadingError);
    CHECK_THROWS_AS(binary_form_discriminant(form({0, 1, 0}), Chart::X1), DegenerateLeadingError);

    // leading x1^2 coefficient vanishes: read along x1 = 1
    const auto lower = binary_form_discriminant_with_chart(form({1, 3, 0}));
    CHECK(lower.chart == Chart::X1);
    CHECK(lower.value == MultiPoly(9));
    CHECK(binary_form_discriminant(form({1, 3, 0}), Chart::X1) == MultiPoly(9));

    const auto generic = binary_form_discriminant_with_chart(form({2, 1, 1}));
    CHECK(generic.chart == Chart::X0);
    CHECK(generic.value == MultiPoly(-7));
    CHECK(binary_form_discriminant(form({2, 1, 1}), Chart::X1) == MultiPoly(-7));

    Sampler s(59);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = static_cast<int>(s.integer(2, 5));
        BinaryForm q;
        for (int i = 0; i <= d; ++i) q.coefficients.emplace_back(s.nonzero_rational(5, 3));
        CHECK(binary_form_discriminant(q, Chart::X0) == binary_form_discriminant(q, Chart::X1));
    }
}

TEST_CASE("binary form discriminant agrees with the Sylvester oracle") {
    Sampler s(61);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = static_cast<int>(s.integer(2, 5));
        std::vector<Rational> c;
        for (int i = 0; i < d; ++i) c.push_back(s.rational(6, 3));
        c.push_back(s.nonzero_rational(6, 3));
        BinaryForm q;
        for (const auto& v : c) q.coefficients.emplace_back(v);
        CHECK(binary_form_discriminant(q) == MultiPoly(oracle::sylvester_discriminant(c)));
    }

    const BinaryForm cubic{{C(0, 0), C(0, 1), C(0, 2), C(0, 3)}};
    CHECK(binary_form_discriminant(cubic) ==
          oracle::cubic_discriminant(C(0, 3), C(0, 2), C(0, 1), C(0, 0)));
}

TEST_CASE("binary form round trip") {
    const BinaryForm q{{C(0, 0), MultiPoly(3), C(0, 2)}};
    const MultiPoly p = q.to_poly();
    CHECK(p == C(0, 0) * X(0) * X(0) + MultiPoly(3) * X(0) * X(1) + C(0, 2) * X(1) * X(1));
    CHECK(BinaryForm::from_poly(p, 2).coefficients == q.coefficients);
}

TEST_CASE("disc_via_elimination examples") {
    CHECK(disc_via_elimination(system11(kIdentity, kSwap)) == MultiPoly(4));
    const auto sys = system11(rmat({{1, 2}, {3, 4}}), rmat({{5, 6}, {7, 8}}));
    CHECK(eliminate_y(sys).to_poly() ==
          MultiPoly(-4) * X(0) * X(0) - MultiPoly(8) * X(0) * X(1) - MultiPoly(4) * X(1) * X(1));
    CHECK(disc_via_elimination(sys).is_zero());
    CHECK_THROWS_AS(disc_via_elimination(BilinearSystem::symbolic(2, 2)), WrongShapeError);
}

TEST_CASE("disc_p11 agrees with elimination on random systems") {
    for (int trial = 0; trial < 200; ++trial) {
        Sampler s(67, static_cast<std::uint64_t>(trial));
        const auto sys = BilinearSystem::random(1, 1, s);
        CHECK(disc_p11(sys) == disc_via_elimination(sys));
        CHECK(disc_p11(sys) == disc_p11(sys.transposed()));
    }
}

TEST_CASE("transposed systems swap the groups") {
    Sampler s(71);
    const auto sys = BilinearSystem::random(2, 1, s);
    const auto t = sys.transposed();
    CHECK(t.n() == 1);
    CHECK(t.m() == 2);
    CHECK(t.transposed() == sys);
    for (int k = 0; k < 3; ++k) {
        const MultiPoly swapped = sys.equation(k).substitute(
            {{VarRef::x(0), Y(0)}, {VarRef::x(1), Y(1)}, {VarRef::x(2), Y(2)}, {VarRef::y(0), X(0)},
             {VarRef::y(1), X(1)}});
        CHECK(t.equation(k) == swapped);
    }
    CHECK(disc_via_elimination(sys) == disc_via_elimination(t));
}

TEST_CASE("measured discriminant degrees") {
    for (int k = 0; k < 2; ++k) CHECK(disc_degree_in_group(1, 1, k) == 2);
    for (int k = 0; k < 3; ++k) {
        const int d = disc_degree_in_group(1, 2, k);
        CHECK(d == 4);
        CHECK(degree_bound(1, 2).per_group >= d);
    }
    CHECK(degree_bound(1, 1).per_group >= disc_degree_in_group(1, 1, 0));
    CHECK_THROWS_AS(disc_degree_in_group(1, 2, 3), WrongShapeError);
}

TEST_CASE("symbolic (1,2) elimination discriminant has no constant factor") {
    const MultiPoly d = disc_via_elimination(BilinearSystem::symbolic(1, 2));
    CHECK(d.content() == 1);
    CHECK(d.is_homogeneous(Group::Coeff, 12));
}
