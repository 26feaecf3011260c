#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "bryant/error_bounds.hpp"
#include "bryant/errors.hpp"

using namespace bryant;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

bool has_term(long coef, long den, int pn, int pc, int pM, int pM1, int pM2,
              int pM3) {
    for (const ZetaTerm& t : zeta_terms())
        if (t.coef == coef && t.den == den && t.pn == pn && t.pc == pc &&
            t.pM == pM && t.pM1 == pM1 && t.pM2 == pM2 && t.pM3 == pM3)
            return true;
    return false;
}

}  // namespace

TEST_CASE("zeta term table shape") {
    const auto& terms = zeta_terms();
    REQUIRE(terms.size() == 48);

    // group populations by power of n: n^9..n^0
    int count_by_pn[10] = {0};
    for (const ZetaTerm& t : terms) {
        REQUIRE(t.pn >= 0);
        REQUIRE(t.pn <= 9);
        ++count_by_pn[t.pn];
        CHECK(t.coef > 0);
        CHECK(t.den > 0);
        // every monomial carries total h-derivative weight pM1 + 2 pM2 + 3 pM3
        // and sits in a fixed degree pattern; spot checks below pin samples
        CHECK(t.pM + t.pM1 + t.pM2 + t.pM3 >= 1);
    }
    CHECK(count_by_pn[9] == 5);
    CHECK(count_by_pn[8] == 5);
    CHECK(count_by_pn[7] == 7);
    CHECK(count_by_pn[6] == 7);
    CHECK(count_by_pn[5] == 7);
    CHECK(count_by_pn[4] == 6);
    CHECK(count_by_pn[3] == 5);
    CHECK(count_by_pn[2] == 3);
    CHECK(count_by_pn[1] == 2);
    CHECK(count_by_pn[0] == 1);

    // one witness per group
    CHECK(has_term(96, 72, 9, 4, 4, 0, 0, 0));
    CHECK(has_term(13, 72, 9, 1, 0, 0, 0, 1));
    CHECK(has_term(11, 48, 8, 2, 1, 0, 0, 1));
    CHECK(has_term(5, 384, 7, 2, 0, 0, 2, 0));
    CHECK(has_term(49, 2304, 6, 2, 0, 0, 1, 1));
    CHECK(has_term(12, 2304, 5, 2, 0, 0, 0, 2));
    CHECK(has_term(116, 13824, 4, 3, 1, 0, 0, 3));
    CHECK(has_term(216, 27648, 3, 4, 2, 0, 0, 2));
    CHECK(has_term(13, 27648, 2, 3, 0, 0, 1, 2));
    CHECK(has_term(4, 82944, 1, 3, 0, 0, 0, 3));
    CHECK(has_term(1, 20736, 0, 4, 1, 0, 0, 3));
}

TEST_CASE("zeta single-variable probes have exact rational values") {
    // each probe isolates one slice of the polynomial; values were derived by
    // hand from the term table and cross-checked in extended precision
    CHECK(rel_err(zeta(1.0, 1, 1.0, 0.0, 0.0, 0.0), 4.0 / 3.0) < 1e-12);
    CHECK(rel_err(zeta(1.0, 1, 0.0, 1.0, 0.0, 0.0), 13.0 / 48.0) < 1e-12);
    CHECK(rel_err(zeta(1.0, 1, 0.0, 0.0, 1.0, 0.0), 7.0 / 512.0) < 1e-12);
    CHECK(rel_err(zeta(1.0, 1, 0.0, 0.0, 0.0, 1.0), 0.18581211419753086) < 1e-12);
    CHECK(rel_err(zeta(1.0, 1, 1.0, 1.0, 1.0, 1.0), 7.650414737654321) < 1e-12);
    CHECK(rel_err(zeta(2.0, 3, 1.0, 1.0, 1.0, 1.0), 951404.98283179012) < 1e-12);
}

TEST_CASE("zeta at certification scale matches the extended-precision oracle") {
    const double v = zeta(0.0505, 500, 4.6, 48.0, 850.0, 25000.0);
    CHECK(rel_err(v, 4.6189139394684731e26) < 1e-12);

    const RealInterval enc =
        zeta_enclosure(RealInterval(0.0505), 500, CoefficientBounds{4.6, 48.0, 850.0, 25000.0});
    CHECK(enc.contains(4.6189139394684731e26));
    CHECK(v >= enc.lo());
}

TEST_CASE("global RK4 bound oracles") {
    const CoefficientBounds paper{4.6, 48.0, 850.0, 25000.0};
    const double b500 = global_rk4_bound(0.0505, 500, paper);
    CHECK(rel_err(b500, 8.184532559327989e-6) < 1e-9);
    CHECK(b500 < 1e-5);

    const double b4000 = global_rk4_bound(0.0505, 4000, paper);
    CHECK(rel_err(b4000, 1.5976246226622996e-8) < 1e-9);
    CHECK(b4000 < 1e-7);

    // n^-3 asymptotics of the leading term
    const double ratio =
        global_rk4_bound(0.0505, 1000, paper) / global_rk4_bound(0.0505, 2000, paper);
    CHECK(std::fabs(ratio - 8.0013) < 1e-3);

    // interval-c version must dominate both endpoint values
    const RealInterval c_range(0.0495, 0.0505);
    const double over_range = global_rk4_bound(c_range, 500, paper);
    CHECK(over_range >= global_rk4_bound(0.0495, 500, paper));
    CHECK(over_range >= b500);
    CHECK(over_range < 1.1e-5);

    CHECK_THROWS_AS(global_rk4_bound(1.0, 10, paper), PreconditionViolation);
}

TEST_CASE("c-derivative and growth bounds") {
    CHECK(rel_err(c_derivative_bound(4.6, 0.0505), 19.922203503252690) < 1e-12);
    CHECK(c_derivative_bound(4.6, 0.0505) < 20.0);
    CHECK(c_derivative_bound(4.6, RealInterval(0.0495, 0.0505)) >=
          c_derivative_bound(4.6, 0.0505));

    CHECK(rel_err(solution_growth_bound(0.0505, 4.6, 1.0), 1.2956887552778508) < 1e-12);
    CHECK(rel_err(solution_growth_bound_offdiag(0.0505, 4.6, 1.0),
                  0.29568875527785083) < 1e-12);
    CHECK(solution_growth_bound(0.0505, 4.6, 0.0) >= 1.0);
    CHECK(solution_growth_bound_offdiag(0.0505, 4.6, 0.0) >= 0.0);
    CHECK(solution_growth_bound_offdiag(0.0505, 4.6, 0.0) < 1e-12);
    CHECK_THROWS_AS(solution_growth_bound(0.05, 4.6, 1.5), PreconditionViolation);
    CHECK_THROWS_AS(solution_growth_bound(0.05, 4.6, -0.1), PreconditionViolation);
}

TEST_CASE("error budget assembly") {
    const RealInterval c_range(0.0495, 0.0505);
    const CoefficientBounds paper{4.6, 48.0, 850.0, 25000.0};
    const double half_width = 0.001 / 100.0;  // 50 subintervals
    const ErrorBudget budget = make_error_budget(c_range, 4000, paper, half_width);

    CHECK(budget.n == 4000);
    CHECK(budget.c_ref == 0.0505);
    CHECK(budget.bounds.M == 4.6);
    CHECK(budget.epsilon >= global_rk4_bound(0.0505, 4000, paper));
    CHECK(budget.epsilon < 1e-7);
    const double deriv = c_derivative_bound(4.6, c_range);
    CHECK(budget.epsilon_hat >= deriv * half_width * (1.0 - 1e-12));
    CHECK(budget.epsilon_hat < deriv * half_width * (1.0 + 1e-9));
}
