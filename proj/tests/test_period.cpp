#include <doctest.h>

#include <cmath>
#include <complex>

#include "bryant/errors.hpp"
#include "bryant/integrator.hpp"
#include "bryant/period.hpp"
#include "bryant/surface.hpp"

using namespace bryant;
using C = std::complex<double>;

namespace {

MatrixEnclosure embed(const Matrix2c& F) {
    return {ComplexBox(F.a), ComplexBox(F.b), ComplexBox(F.c), ComplexBox(F.d)};
}

MonodromyPair monodromies(double a, double c, int n) {
    const SurfaceParams par(a, c);
    const MatrixEnclosure F1 = integrate_path(path_alpha1(a), par, n);
    const MatrixEnclosure F2 = integrate_path(path_alpha2(a), par, n);
    return assemble_monodromies(F1, F2);
}

}  // namespace

TEST_CASE("symmetry matrices act on the right slots") {
    const Matrix2c F{Cplx(1.0, 2.0), Cplx(3.0, 4.0), Cplx(5.0, 6.0), Cplx(7.0, 8.0)};
    const Matrix2c s1 = symmetry_matrix(1, F);
    CHECK(s1.a.std() == C(1.0, -2.0));
    CHECK(s1.d.std() == C(7.0, -8.0));
    const Matrix2c s2 = symmetry_matrix(2, F);
    CHECK(s2.a.std() == C(7.0, 8.0));
    CHECK(s2.b.std() == C(5.0, 6.0));
    CHECK(s2.c.std() == C(3.0, 4.0));
    CHECK(s2.d.std() == C(1.0, 2.0));
    const Matrix2c s3 = symmetry_matrix(3, F);
    CHECK(s3.a.std() == C(7.0, -8.0));
    CHECK(s3.b.std() == C(5.0, -6.0));
    const Matrix2c s4 = symmetry_matrix(4, F);
    CHECK(s4.a.std() == C(1.0, -2.0));
    CHECK(s4.b.std() == C(-3.0, 4.0));
    CHECK(s4.c.std() == C(-5.0, 6.0));
    CHECK(s4.d.std() == C(7.0, -8.0));
    CHECK_THROWS_AS(symmetry_matrix(5, F), OutOfRange);
}

TEST_CASE("monodromies stay unimodular and have real traces") {
    const MonodromyPair mon = monodromies(1.78, 0.05, 2000);
    CHECK(det(mon.phi).re().contains(1.0));
    CHECK(det(mon.phi).im().contains(0.0));
    CHECK(det(mon.psi).re().contains(1.0));
    CHECK(det(mon.psi).im().contains(0.0));
    CHECK(det(mon.psi3).re().contains(1.0));

    // trace fixtures from the independent prototype at identical resolution
    const ComplexBox tr_phi = mon.phi.a + mon.phi.d;
    const ComplexBox tr_psi = mon.psi.a + mon.psi.d;
    CHECK(std::fabs(tr_phi.re().mid() - 1.9368767490120624) < 1e-9);
    CHECK(tr_phi.im().contains(0.0));
    CHECK(std::fabs(tr_psi.re().mid() - 1.9858483318503093) < 1e-9);
    CHECK(tr_psi.im().contains(0.0));
}

TEST_CASE("period quotients against prototype fixtures") {
    struct Row {
        double c, f1, f2;
    };
    // n = 4000 floating endpoints fed through the period formulas; f2 passes
    // through a small denominator (~1e-3), so it gets the wider tolerance
    const Row rows[] = {
        {0.0495, 35.47019387995785, 29.163349971733425},
        {0.0505, 34.67002775152698, 42.98210052373317},
    };
    for (const Row& r : rows) {
        const SurfaceParams par(1.78, r.c);
        const Matrix2c F1 = integrate_path_fp(path_alpha1(1.78), par, 4000);
        const Matrix2c F2 = integrate_path_fp(path_alpha2(1.78), par, 4000);
        const PeriodValue f1 = period_f1(embed(F1));
        const PeriodValue f2 = period_f2(embed(F2));
        CHECK(std::fabs(f1.value.mid() - r.f1) < 1e-7);
        CHECK(std::fabs(f2.value.mid() - r.f2) < 1e-4);
        CHECK(f1.imag_residual.contains(0.0));
        CHECK(f2.imag_residual.contains(0.0));

        // the scalar overloads take the floating endpoint matrices directly
        CHECK(std::fabs(period_f1(F1) - r.f1) < 1e-7);
        CHECK(std::fabs(period_f2(F2) - r.f2) < 1e-4);
    }
}

TEST_CASE("interval periods enclose their floating counterparts") {
    const SurfaceParams par(1.78, 0.0495);
    const MatrixEnclosure F1 = integrate_path(path_alpha1(1.78), par, 500);
    const MatrixEnclosure F2 = integrate_path(path_alpha2(1.78), par, 500);
    const PeriodValue f1 = period_f1(F1);
    const PeriodValue f2 = period_f2(F2);
    CHECK(f1.value.contains(period_f1(midpoint(F1))));
    CHECK(f2.value.contains(period_f2(midpoint(F2))));
    CHECK(f1.imag_residual.contains(0.0));
    CHECK(f2.imag_residual.contains(0.0));
    CHECK(f1.value.lo() > 2.0);
    CHECK(f2.value.lo() > 2.0);
}

TEST_CASE("degenerate denominators are reported, not invented around") {
    const MatrixEnclosure id = Mat2<ComplexBox>::identity();
    CHECK_THROWS_AS(period_f1(id), DegenerateDenominator);
    CHECK_THROWS_AS(period_f2(id), DegenerateDenominator);
    const Matrix2c idc = Mat2<Cplx>::identity();
    CHECK_THROWS_AS(period_f1(idc), DegenerateDenominator);
    CHECK_THROWS_AS(period_f2(idc), DegenerateDenominator);
}

TEST_CASE("gauge map inversion") {
    // f(beta) = (1 + 2 beta^2) / (beta sqrt(1 + beta^2)); f(beta(3)) = 3 with
    // beta(3) a root of 5 u^2 + 5 u - 1 = 0 in u = beta^2
    const double b3 = solve_gauge_beta(3.0);
    CHECK(std::fabs(b3 - 0.41330423812239926) < 1e-12);
    const double u = b3 * b3;
    CHECK(std::fabs(5.0 * u * u + 5.0 * u - 1.0) < 1e-12);

    for (double f : {2.1, 5.0, 35.0, 1000.0}) {
        const double b = solve_gauge_beta(f);
        CHECK(b > 0.0);
        const double back = (1.0 + 2.0 * b * b) / (b * std::sqrt(1.0 + b * b));
        CHECK(std::fabs(back - f) < 1e-10 * f);
    }
    CHECK_THROWS_AS(solve_gauge_beta(2.0), OutOfRange);
    CHECK_THROWS_AS(solve_gauge_beta(1.5), OutOfRange);
}

TEST_CASE("gauge conjugation preserves trace and determinant") {
    const MonodromyPair mon = monodromies(1.78, 0.05, 500);
    const double beta = solve_gauge_beta(30.0);
    const MatrixEnclosure G = gauge_conjugate(mon.phi, beta);
    const ComplexBox tr_before = mon.phi.a + mon.phi.d;
    const ComplexBox tr_after = G.a + G.d;
    CHECK(intersects(tr_before, tr_after));
    CHECK(det(G).re().contains(1.0));
    CHECK(det(G).im().contains(0.0));
}

TEST_CASE("su2 distance diagnostic") {
    // an honest SU(2) element sits at distance ~0
    const double th = 0.7;
    const MatrixEnclosure rot{
        ComplexBox(Cplx(std::cos(th), 0.0)), ComplexBox(Cplx(std::sin(th), 0.0)),
        ComplexBox(Cplx(-std::sin(th), 0.0)), ComplexBox(Cplx(std::cos(th), 0.0))};
    CHECK(su2_distance(rot) < 1e-12);

    // diag(2, 1/2) is unimodular but far from unitary
    const MatrixEnclosure stretch{ComplexBox(Cplx(2.0, 0.0)), ComplexBox(0.0),
                                  ComplexBox(0.0), ComplexBox(Cplx(0.5, 0.0))};
    CHECK(su2_distance(stretch) >= 3.0);

    // after gauging with beta from the mean period, the monodromy midpoint is
    // nearly unitary (prototype saw ~1e-4)
    const SurfaceParams par(1.78, 0.05);
    const MatrixEnclosure F1 = integrate_path(path_alpha1(1.78), par, 2000);
    const MatrixEnclosure F2 = integrate_path(path_alpha2(1.78), par, 2000);
    const double f1 = period_f1(midpoint(F1));
    const double f2 = period_f2(midpoint(F2));
    const double beta = solve_gauge_beta(0.5 * (f1 + f2));
    const MonodromyPair mon = assemble_monodromies(F1, F2);
    CHECK(su2_distance(gauge_conjugate(mon.phi, beta)) < 1e-3);
}
