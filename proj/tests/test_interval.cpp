#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bryant/complex_box.hpp"
#include "bryant/errors.hpp"
#include "bryant/interval.hpp"

using namespace bryant;

namespace {

// Deterministic sampler: an interval and a point guaranteed inside it.
struct IntervalSampler {
    std::mt19937_64 rng{20240817u};
    std::uniform_real_distribution<double> val{-10.0, 10.0};
    std::uniform_real_distribution<double> unit{0.0, 1.0};

    RealInterval interval() {
        const double a = val(rng);
        const double b = val(rng);
        return RealInterval(std::min(a, b), std::max(a, b));
    }
    double inside(const RealInterval& x) {
        const double p = x.lo() + unit(rng) * (x.hi() - x.lo());
        return std::min(x.hi(), std::max(x.lo(), p));
    }
};

}  // namespace

TEST_CASE("interval construction and accessors") {
    const RealInterval x(1.0, 2.0);
    CHECK(x.lo() == 1.0);
    CHECK(x.hi() == 2.0);
    CHECK(x.mid() == doctest::Approx(1.5));
    CHECK(x.width() == doctest::Approx(1.0));
    CHECK(x.contains(1.0));
    CHECK(x.contains(2.0));
    CHECK(!x.contains(2.0000001));
    CHECK(!x.contains_zero());
    CHECK(RealInterval(-1.0, 1.0).contains_zero());

    CHECK_THROWS_AS(RealInterval(2.0, 1.0), InvalidInterval);
    CHECK_THROWS_AS(RealInterval(std::nan(""), 1.0), InvalidInterval);

    const RealInterval a = RealInterval::around(0.1);
    CHECK(a.contains(0.1));
    CHECK(a.width() < 1e-16);
    CHECK(a.lo() < a.hi());
}

TEST_CASE("interval arithmetic encloses point arithmetic") {
    IntervalSampler s;
    int checked_div = 0;
    for (int i = 0; i < 2000; ++i) {
        const RealInterval X = s.interval();
        const RealInterval Y = s.interval();
        const double x = s.inside(X);
        const double y = s.inside(Y);

        CHECK((X + Y).contains(x + y));
        CHECK((X - Y).contains(x - y));
        CHECK((X * Y).contains(x * y));
        CHECK(square(X).contains(x * x));
        CHECK(abs(X).contains(std::fabs(x)));
        CHECK(pow_int(X, 3).contains(x * x * x));
        CHECK((X + y).contains(x + y));
        CHECK((X * y).contains(x * y));
        if (!Y.contains_zero()) {
            CHECK((X / Y).contains(x / y));
            ++checked_div;
        }
    }
    CHECK(checked_div > 500);
}

TEST_CASE("division by an interval containing zero throws") {
    CHECK_THROWS_AS(RealInterval(1.0, 2.0) / RealInterval(-1.0, 1.0),
                    DivisionByZeroInterval);
    CHECK_THROWS_AS(RealInterval(1.0, 2.0) / RealInterval(0.0, 0.0),
                    DivisionByZeroInterval);
}

TEST_CASE("sqrt, clamp and square straddling zero") {
    CHECK_THROWS_AS(sqrt(RealInterval(-2.0, -1.0)), OutOfRange);
    const RealInterval r = sqrt(RealInterval(0.0, 4.0));
    CHECK(r.contains(0.0));
    CHECK(r.contains(2.0));
    CHECK(r.contains(1.5));

    const RealInterval cl = clamp_nonnegative(RealInterval(-1.0, 4.0));
    CHECK(cl.lo() == 0.0);
    CHECK(cl.hi() == 4.0);

    const RealInterval sq = square(RealInterval(-2.0, 3.0));
    CHECK(sq.lo() == 0.0);
    CHECK(sq.contains(9.0));
    CHECK(sq.contains(4.0));
}

TEST_CASE("exp directed bounds bracket the true value") {
    CHECK(exp_down(1.0) <= std::exp(1.0));
    CHECK(exp_up(1.0) >= std::exp(1.0));
    CHECK(exp_up(1.0) - exp_down(1.0) < 1e-13);
    const RealInterval e = exp(RealInterval(0.0, 1.0));
    CHECK(e.contains(1.0));
    CHECK(e.contains(std::exp(1.0)));
    CHECK(e.contains(std::exp(0.5)));

    IntervalSampler s;
    for (int i = 0; i < 500; ++i) {
        RealInterval X = s.interval();
        X = RealInterval(X.lo() / 2.0, X.hi() / 2.0);  // keep exp in range
        const double x = s.inside(X);
        CHECK(exp(X).contains(std::exp(x)));
        const RealInterval ax = abs(X);
        CHECK(sqrt(ax).contains(std::sqrt(s.inside(ax))));
    }
}

TEST_CASE("interval utilities") {
    const RealInterval x(1.0, 2.0), y(1.5, 3.0), z(4.0, 5.0);
    CHECK(intersects(x, y));
    CHECK(!intersects(x, z));
    const RealInterval h = hull(x, z);
    CHECK(h.lo() == 1.0);
    CHECK(h.hi() == 5.0);
    const RealInterval inf = inflate(x, 0.25);
    CHECK(inf.contains(0.75));
    CHECK(inf.contains(2.25));
    CHECK(x.mag() == 2.0);
    CHECK(RealInterval(-3.0, 1.0).mag() == 3.0);
    CHECK(x.rad() == doctest::Approx(0.5));
    CHECK(strictly_less(x, z));
    CHECK(!strictly_less(x, y));
    CHECK(pow_int(RealInterval(2.0), 0).contains(1.0));
}

TEST_CASE("outward widening keeps inexact chains honest") {
    const RealInterval third = RealInterval(1.0) / RealInterval(3.0);
    CHECK(third.contains(1.0 / 3.0));
    CHECK((third * RealInterval(3.0)).contains(1.0));

    RealInterval sum(0.0);
    for (int i = 0; i < 10; ++i) sum = sum + RealInterval::around(0.1);
    CHECK(sum.contains(1.0));

    // x*y/y must re-contain x even when y is a fat interval
    const RealInterval x(0.3, 0.4), y(2.0, 2.5);
    const RealInterval back = (x * y) / y;
    CHECK(back.contains(0.35));
    CHECK(back.lo() <= 0.3);
    CHECK(back.hi() >= 0.4);
}

TEST_CASE("complex box arithmetic encloses complex arithmetic") {
    IntervalSampler s;
    int checked_div = 0;
    for (int i = 0; i < 1500; ++i) {
        const ComplexBox X(s.interval(), s.interval());
        const ComplexBox Y(s.interval(), s.interval());
        const Cplx x(s.inside(X.re()), s.inside(X.im()));
        const Cplx y(s.inside(Y.re()), s.inside(Y.im()));

        auto in = [](const ComplexBox& B, Cplx v) {
            return B.re().contains(v.re) && B.im().contains(v.im);
        };
        CHECK(in(X + Y, x + y));
        CHECK(in(X - Y, x - y));
        CHECK(in(X * Y, x * y));
        CHECK(in(conj(X), conj(x)));
        CHECK(norm2(X).contains(abs2(x)));
        CHECK(abs(X).contains(std::sqrt(abs2(x))));
        CHECK(re_conj_prod(X, Y).contains(re_conj_prod(x, y)));
        CHECK(im_conj_prod(X, Y).contains(im_conj_prod(x, y)));
        if (!norm2(Y).contains_zero()) {
            CHECK(in(X / Y, x / y));
            ++checked_div;
        }
    }
    CHECK(checked_div > 500);

    CHECK_THROWS_AS(ComplexBox(1.0) / ComplexBox(RealInterval(-1.0, 1.0),
                                                 RealInterval(-1.0, 1.0)),
                    DivisionByZeroInterval);
}

TEST_CASE("scalar complex type matches std::complex") {
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const Cplx a(val(rng), val(rng));
        const Cplx b(val(rng), val(rng));
        const std::complex<double> sa = a.std(), sb = b.std();
        const Cplx p = a * b;
        const std::complex<double> sp = sa * sb;
        CHECK(std::abs(p.std() - sp) <= 1e-13 * (1.0 + std::abs(sp)));
        if (abs2(b) > 1e-6) {
            const Cplx q = a / b;
            const std::complex<double> sq = sa / sb;
            CHECK(std::abs(q.std() - sq) <= 1e-13 * (1.0 + std::abs(sq)));
        }
        CHECK(re_conj_prod(a, b) == doctest::Approx(a.re * b.re + a.im * b.im));
        CHECK(im_conj_prod(a, b) == doctest::Approx(a.re * b.im - a.im * b.re));
    }
}

TEST_CASE("square root follows the hinted branch") {
    auto box_of = [](double re, double im) {
        return ComplexBox(RealInterval::around(re), RealInterval::around(im));
    };
    using C = std::complex<double>;

    const ComplexBox minus_one = box_of(-1.0, 0.0);
    const ComplexBox root_up = sqrt_branch(minus_one, C(0.0, 1.0));
    CHECK(root_up.re().contains(0.0));
    CHECK(root_up.im().contains(1.0));
    const ComplexBox root_down = sqrt_branch(minus_one, C(0.0, -1.0));
    CHECK(root_down.im().contains(-1.0));

    const ComplexBox four = box_of(4.0, 0.0);
    CHECK(sqrt_branch(four, C(2.0, 0.0)).re().contains(2.0));
    CHECK(sqrt_branch(four, C(-2.0, 0.0)).re().contains(-2.0));

    // hint nowhere near either root: refuse rather than guess
    CHECK_THROWS_AS(sqrt_branch(box_of(1e-6, 0.0), C(1.0, 0.0)), BranchAmbiguity);

    std::mt19937_64 rng(99u);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        Cplx z(val(rng), val(rng));
        if (abs2(z) < 1e-2) continue;
        const Cplx z2 = z * z;
        const ComplexBox enc = sqrt_branch(ComplexBox(z2), z.std());
        CHECK(enc.re().contains(z.re));
        CHECK(enc.im().contains(z.im));
        const Cplx fp = sqrt_nearest(z2, z);
        CHECK(std::abs(fp.std() - z.std()) < 1e-12);
    }
}
