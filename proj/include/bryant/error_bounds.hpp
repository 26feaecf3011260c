#pragma once

#include <vector>

#include "bryant/interval.hpp"
#include "bryant/surface.hpp"

namespace bryant {

// Everything needed to inflate a computed enclosure into a rigorous one:
// epsilon bounds |discrete RK4 output - exact solution| entrywise at fixed c,
// epsilon_hat bounds the drift of the RK4 output across a c-subinterval.
struct ErrorBudget {
    double epsilon;
    double epsilon_hat;
    int n;
    CoefficientBounds bounds;
    double c_ref;  // sup of the c-range the budget covers
};

// One monomial of the zeta polynomial: coef * n^pn * c^pc * M^pM * M1^pM1 *
// M2^pM2 * M3^pM3 / den.  Exposed so a unit test can pin the transcription
// coefficient by coefficient.
struct ZetaTerm {
    long coef;
    long den;
    int pn, pc, pM, pM1, pM2, pM3;
};

const std::vector<ZetaTerm>& zeta_terms();

// The zeta polynomial, evaluated with outward rounding (upper endpoint).
double zeta(double c, int n, double M, double M1, double M2, double M3);
RealInterval zeta_enclosure(const RealInterval& c, int n,
                            const CoefficientBounds& b);

// Entrywise bound on |RK4 output - exact solution| over one path:
//   (e^{2.1cM} + e^{4.1cM}) / (4.2 c M n^12) * zeta.
// Requires Mc/n < 1/100; throws PreconditionViolation otherwise.  The
// interval-c overload returns a single bound valid for every c in the range.
double global_rk4_bound(double c, int n, const CoefficientBounds& b);
double global_rk4_bound(const RealInterval& c, int n, const CoefficientBounds& b);

// Bound on |d/dc of the RK4 output|: 2.48 M e^{2.4Mc}, upward rounded.
double c_derivative_bound(double M, double c);
double c_derivative_bound(double M, const RealInterval& c);

// A-priori growth of the exact solution: |A|, |D| <= (1 + e^{2tcM})/2 and
// |B|, |C| <= (e^{2tcM} - 1)/2 for t in [0,1].
double solution_growth_bound(double c, double M, double t);
double solution_growth_bound_offdiag(double c, double M, double t);

// Worst case over both certification paths: merged coefficient bounds, one
// budget for the subinterval machinery.  half_width is the c-subinterval
// half-width that epsilon_hat must cover.
ErrorBudget make_error_budget(const RealInterval& c_range, int n,
                              const CoefficientBounds& merged_bounds,
                              double half_width);

}  // namespace bryant
