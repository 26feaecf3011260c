#include "bryant/period.hpp"

#include <cmath>

namespace bryant {

MonodromyPair assemble_monodromies(const MatrixEnclosure& F1,
                                   const MatrixEnclosure& F2) {
    const ComplexBox &A1 = F1.a, &B1 = F1.b, &C1 = F1.c, &D1 = F1.d;
    const ComplexBox &A2 = F2.a, &B2 = F2.b, &C2 = F2.c, &D2 = F2.d;

    MonodromyPair out;
    out.phi = F1 *
              MatrixEnclosure{conj(D1), conj(B1), conj(C1), conj(A1)} *
              MatrixEnclosure{D1, -C1, -B1, A1} *
              MatrixEnclosure{conj(A1), -conj(C1), -conj(B1), conj(D1)};
    out.psi = F2 * MatrixEnclosure{conj(D2), -conj(B2), -conj(C2), conj(A2)};
    out.psi3 = MatrixEnclosure{D2, C2, B2, A2} *
               MatrixEnclosure{conj(A2), -conj(C2), -conj(B2), conj(D2)};
    return out;
}

PeriodValue period_f1(const MatrixEnclosure& F) {
    const RealInterval den = re_conj_prod(F.d, F.c) + re_conj_prod(F.b, F.a);
    if (den.contains_zero())
        throw DegenerateDenominator("f1 denominator enclosure contains 0");
    const RealInterval num =
        (re_conj_prod(F.a, F.d) + re_conj_prod(F.c, F.b)) * (-2.0);

    const ComplexBox num_full =
        (conj(F.a) * F.d + conj(F.d) * F.a + conj(F.c) * F.b + conj(F.b) * F.c) *
        ComplexBox(-2.0);
    const ComplexBox den_full =
        conj(F.d) * F.c + conj(F.c) * F.d + conj(F.b) * F.a + conj(F.a) * F.b;
    if (norm2(den_full).contains_zero())
        throw DegenerateDenominator("f1 full denominator box contains 0");

    return {num / den, (num_full / den_full).im()};
}

PeriodValue period_f2(const MatrixEnclosure& F) {
    const RealInterval den = im_conj_prod(F.d, F.c) + im_conj_prod(F.b, F.a);
    if (den.contains_zero())
        throw DegenerateDenominator("f2 denominator enclosure contains 0");
    const RealInterval num =
        (im_conj_prod(F.a, F.d) + im_conj_prod(F.c, F.b)) * 2.0;

    const ComplexBox num_full =
        (conj(F.a) * F.d - conj(F.d) * F.a + conj(F.c) * F.b - conj(F.b) * F.c) *
        ComplexBox(2.0);
    const ComplexBox den_full =
        conj(F.d) * F.c - conj(F.c) * F.d + conj(F.b) * F.a - conj(F.a) * F.b;
    if (norm2(den_full).contains_zero())
        throw DegenerateDenominator("f2 full denominator box contains 0");

    return {num / den, (num_full / den_full).im()};
}

double period_f1(const Matrix2c& F) {
    const double den = re_conj_prod(F.d, F.c) + re_conj_prod(F.b, F.a);
    if (den == 0.0) throw DegenerateDenominator("f1 denominator is 0");
    return (re_conj_prod(F.a, F.d) + re_conj_prod(F.c, F.b)) * (-2.0) / den;
}

double period_f2(const Matrix2c& F) {
    const double den = im_conj_prod(F.d, F.c) + im_conj_prod(F.b, F.a);
    if (den == 0.0) throw DegenerateDenominator("f2 denominator is 0");
    return (im_conj_prod(F.a, F.d) + im_conj_prod(F.c, F.b)) * 2.0 / den;
}

namespace {
double gauge_map(double beta) {
    return (1.0 + 2.0 * beta * beta) / (beta * std::sqrt(1.0 + beta * beta));
}
}  // namespace

double solve_gauge_beta(double f) {
    if (!(f > 2.0)) throw OutOfRange("gauge equation is solvable only for f > 2");
    // gauge_map(beta) > 1/beta, so beta = 1/f brackets from above
    double lo = 1.0 / f;
    double hi = 1.0;
    while (gauge_map(hi) > f) hi *= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gauge_map(mid) > f ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

MatrixEnclosure gauge_conjugate(const MatrixEnclosure& P, double beta) {
    const RealInterval b(beta);
    const RealInterval alpha = sqrt(RealInterval(1.0) + square(b));
    const ComplexBox av(alpha, RealInterval(0.0));
    const ComplexBox bv(b, RealInterval(0.0));
    const MatrixEnclosure K{av, bv, bv, av};
    const MatrixEnclosure Kinv{av, -bv, -bv, av};
    return K * P * Kinv;
}

double su2_distance(const MatrixEnclosure& P) {
    const Matrix2c Q = midpoint(P);
    const Matrix2c G = Q * conj_transpose(Q);
    auto dev = [](Cplx v, double target) {
        return std::sqrt(abs2(v - Cplx(target)));
    };
    return std::max(std::max(dev(G.a, 1.0), dev(G.b, 0.0)),
                    std::max(dev(G.c, 0.0), dev(G.d, 1.0)));
}

}  // namespace bryant
