#include "bryant/error_bounds.hpp"

namespace bryant {

// Transcribed group by group; the groups carry (n-power, outer c-power,
// denominator) and each monomial its inner c-power and M-powers.
const std::vector<ZetaTerm>& zeta_terms() {
    //                               coef  den     pn pc pM pM1 pM2 pM3
    static const std::vector<ZetaTerm> table = {
        {96, 72, 9, 4, 4, 0, 0, 0},
        {144, 72, 9, 3, 2, 1, 0, 0},
        {18, 72, 9, 2, 0, 2, 0, 0},
        {48, 72, 9, 2, 1, 0, 1, 0},
        {13, 72, 9, 1, 0, 0, 0, 1},

        {32, 48, 8, 4, 3, 1, 0, 0},
        {12, 48, 8, 3, 1, 2, 0, 0},
        {16, 48, 8, 3, 2, 0, 1, 0},
        {4, 48, 8, 2, 0, 1, 1, 0},
        {11, 48, 8, 2, 1, 0, 0, 1},

        {80, 384, 7, 4, 2, 2, 0, 0},
        {8, 384, 7, 3, 0, 3, 0, 0},
        {96, 384, 7, 4, 3, 0, 1, 0},
        {64, 384, 7, 3, 1, 1, 1, 0},
        {5, 384, 7, 2, 0, 0, 2, 0},
        {79, 384, 7, 3, 2, 0, 0, 1},
        {22, 384, 7, 2, 0, 1, 0, 1},

        {48, 2304, 6, 4, 1, 3, 0, 0},
        {336, 2304, 6, 4, 2, 1, 1, 0},
        {48, 2304, 6, 3, 0, 2, 1, 0},
        {60, 2304, 6, 3, 1, 0, 2, 0},
        {272, 2304, 6, 4, 3, 0, 0, 1},
        {236, 2304, 6, 3, 1, 1, 0, 1},
        {49, 2304, 6, 2, 0, 0, 1, 1},

        {48, 2304, 5, 4, 1, 2, 1, 0},
        {54, 2304, 5, 4, 2, 0, 2, 0},
        {15, 2304, 5, 3, 0, 1, 2, 0},
        {200, 2304, 5, 4, 2, 1, 0, 1},
        {26, 2304, 5, 3, 0, 2, 0, 1},
        {84, 2304, 5, 3, 1, 0, 1, 1},
        {12, 2304, 5, 2, 0, 0, 0, 2},

        {90, 13824, 4, 4, 1, 1, 2, 0},
        {9, 13824, 4, 3, 0, 0, 3, 0},
        {156, 13824, 4, 4, 1, 2, 0, 1},
        {450, 13824, 4, 4, 2, 0, 1, 1},
        {105, 13824, 4, 3, 0, 1, 1, 1},
        {116, 13824, 4, 3, 1, 0, 0, 3},

        {18, 27648, 3, 4, 1, 0, 3, 0},
        {210, 27648, 3, 4, 1, 1, 1, 1},
        {33, 27648, 3, 3, 0, 0, 2, 1},
        {216, 27648, 3, 4, 2, 0, 0, 2},
        {44, 27648, 3, 3, 0, 1, 0, 2},

        {33, 27648, 2, 4, 1, 0, 2, 1},
        {44, 27648, 2, 4, 1, 1, 0, 2},
        {13, 27648, 2, 3, 0, 0, 1, 2},

        {39, 82944, 1, 4, 1, 0, 1, 2},
        {4, 82944, 1, 3, 0, 0, 0, 3},

        {1, 20736, 0, 4, 1, 0, 0, 3},
    };
    return table;
}

RealInterval zeta_enclosure(const RealInterval& c, int n,
                            const CoefficientBounds& b) {
    const RealInterval nn(static_cast<double>(n));
    const RealInterval M(b.M), M1(b.M1), M2(b.M2), M3(b.M3);
    RealInterval total(0.0);
    for (const ZetaTerm& t : zeta_terms()) {
        RealInterval term(static_cast<double>(t.coef));
        term = term * pow_int(nn, t.pn) * pow_int(c, t.pc) * pow_int(M, t.pM) *
               pow_int(M1, t.pM1) * pow_int(M2, t.pM2) * pow_int(M3, t.pM3);
        total = total + term / RealInterval(static_cast<double>(t.den));
    }
    return total;
}

double zeta(double c, int n, double M, double M1, double M2, double M3) {
    if (!(c > 0.0) || n < 1 || M < 0.0 || M1 < 0.0 || M2 < 0.0 || M3 < 0.0)
        throw PreconditionViolation("zeta requires c > 0, n >= 1 and nonnegative bounds");
    return zeta_enclosure(RealInterval(c), n, CoefficientBounds{M, M1, M2, M3}).hi();
}

double global_rk4_bound(const RealInterval& c, int n, const CoefficientBounds& b) {
    if (!(c.lo() > 0.0) || n < 1 || !(b.M > 0.0))
        throw PreconditionViolation("global_rk4_bound requires positive c, n, M");
    const RealInterval M(b.M);
    const RealInterval cM = c * M;
    if (!((cM * 100.0 / RealInterval(static_cast<double>(n))).hi() < 1.0))
        throw PreconditionViolation("global_rk4_bound requires Mc/n < 1/100");
    const RealInterval numer = exp(RealInterval::around(2.1) * cM) +
                               exp(RealInterval::around(4.1) * cM);
    const RealInterval denom = RealInterval::around(4.2) * cM *
                               pow_int(RealInterval(static_cast<double>(n)), 12);
    return (numer / denom * zeta_enclosure(c, n, b)).hi();
}

double global_rk4_bound(double c, int n, const CoefficientBounds& b) {
    return global_rk4_bound(RealInterval(c), n, b);
}

double c_derivative_bound(double M, const RealInterval& c) {
    const RealInterval Mi(M);
    return (RealInterval::around(2.48) * Mi *
            exp(RealInterval::around(2.4) * Mi * c))
        .hi();
}

double c_derivative_bound(double M, double c) {
    return c_derivative_bound(M, RealInterval(c));
}

double solution_growth_bound(double c, double M, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw PreconditionViolation("growth bound only valid for t in [0,1]");
    const RealInterval e = exp(RealInterval(2.0) * t * c * M);
    return ((RealInterval(1.0) + e) / RealInterval(2.0)).hi();
}

double solution_growth_bound_offdiag(double c, double M, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw PreconditionViolation("growth bound only valid for t in [0,1]");
    const RealInterval e = exp(RealInterval(2.0) * t * c * M);
    return ((e - RealInterval(1.0)) / RealInterval(2.0)).hi();
}

ErrorBudget make_error_budget(const RealInterval& c_range, int n,
                              const CoefficientBounds& merged_bounds,
                              double half_width) {
    ErrorBudget budget;
    budget.n = n;
    budget.bounds = merged_bounds;
    budget.c_ref = c_range.hi();
    budget.epsilon = global_rk4_bound(c_range, n, merged_bounds);
    const double deriv = c_derivative_bound(merged_bounds.M, c_range);
    budget.epsilon_hat = (RealInterval(deriv) * RealInterval(half_width)).hi();
    return budget;
}

}  // namespace bryant
