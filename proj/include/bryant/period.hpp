#pragma once

#include "bryant/matrix.hpp"

namespace bryant {

// Monodromy of the three homology loops, assembled from the two endpoint
// integrations and the reflection symmetries.
struct MonodromyPair {
    MatrixEnclosure phi;   // first loop, from the alpha1 endpoint
    MatrixEnclosure psi;   // second loop, from the alpha2 endpoint
    MatrixEnclosure psi3;  // third loop, recorded diagnostically
};

// A real period quotient together with the enclosure of the imaginary part
// of the unreduced complex quotient; the latter must contain 0.
struct PeriodValue {
    RealInterval value;
    RealInterval imag_residual;
};

// How the endpoint matrix transforms under the four surface symmetries:
//   1: entrywise conjugate            (A B; C D) -> (A* B*; C* D*)
//   2: swap to                        (D C; B A)
//   3: conjugate of 2                 (D* C*; B* A*)
//   4: conjugate with off-sign flip   (A* -B*; -C* D*)
template <class T>
Mat2<T> symmetry_matrix(int which, const Mat2<T>& F) {
    switch (which) {
        case 1: return {conj(F.a), conj(F.b), conj(F.c), conj(F.d)};
        case 2: return {F.d, F.c, F.b, F.a};
        case 3: return {conj(F.d), conj(F.c), conj(F.b), conj(F.a)};
        case 4: return {conj(F.a), -conj(F.b), -conj(F.c), conj(F.d)};
        default: throw OutOfRange("symmetry index must be 1..4");
    }
}

MonodromyPair assemble_monodromies(const MatrixEnclosure& F1,
                                   const MatrixEnclosure& F2);

// Period quotients.  f1 reduces to a ratio of real parts, f2 to a ratio of
// imaginary parts (numerator and denominator are conjugate-symmetric resp.
// conjugate-antisymmetric sums).  Throws DegenerateDenominator when the
// reduced denominator enclosure contains 0 -- an unusable c, not a bug.
PeriodValue period_f1(const MatrixEnclosure& F1);
PeriodValue period_f2(const MatrixEnclosure& F2);
double period_f1(const Matrix2c& F1);
double period_f2(const Matrix2c& F2);

// The unique beta > 0 with (1 + 2 beta^2)/(beta sqrt(1 + beta^2)) = f, by
// bisection to 1e-14 relative width.  The map decreases from +inf to 2 on
// beta in (0, inf); throws OutOfRange for f <= 2.
double solve_gauge_beta(double f);

// K P K^-1 with K = (alpha beta; beta alpha), alpha = sqrt(1 + beta^2).
MatrixEnclosure gauge_conjugate(const MatrixEnclosure& P, double beta);

// Max-entry deviation of Q conj(Q)^t from the identity at the enclosure
// midpoint Q.  Diagnostic only; not part of the certification inequalities.
double su2_distance(const MatrixEnclosure& P);

}  // namespace bryant
