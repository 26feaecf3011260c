#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "bryant/errors.hpp"

namespace bryant {

inline double step_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double step_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Closed interval [lo, hi] of doubles.  Every arithmetic operation widens its
// result outward by one ulp per endpoint, which dominates the half-ulp error
// of the correctly rounded IEEE operation in between.  No FPU rounding-mode
// switching: results are valid under any compiler reordering and need no
// per-thread mode bookkeeping.  The cost is a slightly wider interval per
// operation (~1 ulp), irrelevant at the widths this project cares about.
class RealInterval {
  public:
    RealInterval() : lo_(0.0), hi_(0.0) {}
    explicit RealInterval(double v) : lo_(v), hi_(v) {
        if (!std::isfinite(v)) throw InvalidInterval("non-finite point interval");
    }
    RealInterval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo <= hi)) throw InvalidInterval("interval endpoints out of order");
    }

    // one-ulp cushion around a decimal constant whose binary64 image is inexact
    static RealInterval around(double v) {
        return RealInterval(step_down(v), step_up(v));
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    double width() const { return hi_ - lo_; }
    double rad() const { return 0.5 * (hi_ - lo_); }
    double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  private:
    double lo_, hi_;
};

inline RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    return RealInterval(step_down(a.lo() + b.lo()), step_up(a.hi() + b.hi()));
}

inline RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    return RealInterval(step_down(a.lo() - b.hi()), step_up(a.hi() - b.lo()));
}

inline RealInterval operator-(const RealInterval& a) {
    return RealInterval(-a.hi(), -a.lo());
}

inline RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    const double p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
    const double p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    return RealInterval(step_down(std::min(std::min(p1, p2), std::min(p3, p4))),
                        step_up(std::max(std::max(p1, p2), std::max(p3, p4))));
}

inline RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero())
        throw DivisionByZeroInterval("interval division by interval containing 0");
    const double q1 = a.lo() / b.lo(), q2 = a.lo() / b.hi();
    const double q3 = a.hi() / b.lo(), q4 = a.hi() / b.hi();
    return RealInterval(step_down(std::min(std::min(q1, q2), std::min(q3, q4))),
                        step_up(std::max(std::max(q1, q2), std::max(q3, q4))));
}

inline RealInterval operator+(const RealInterval& a, double b) { return a + RealInterval(b); }
inline RealInterval operator-(const RealInterval& a, double b) { return a - RealInterval(b); }
inline RealInterval operator*(const RealInterval& a, double b) { return a * RealInterval(b); }
inline RealInterval operator*(double a, const RealInterval& b) { return RealInterval(a) * b; }
inline RealInterval operator/(const RealInterval& a, double b) { return a / RealInterval(b); }

// Tighter than x*x when x straddles zero.
inline RealInterval square(const RealInterval& x) {
    const double a = x.lo() * x.lo(), b = x.hi() * x.hi();
    const double hi = step_up(std::max(a, b));
    if (x.contains_zero()) return RealInterval(0.0, hi);
    return RealInterval(step_down(std::min(a, b)), hi);
}

// Requires a nonnegative interval; callers clamp explicitly when the negative
// part is a rounding artifact.
inline RealInterval sqrt(const RealInterval& x) {
    if (x.lo() < 0.0) throw OutOfRange("sqrt of interval with negative part");
    return RealInterval(step_down(std::sqrt(x.lo())), step_up(std::sqrt(x.hi())));
}

inline RealInterval clamp_nonnegative(const RealInterval& x) {
    return RealInterval(std::max(x.lo(), 0.0), std::max(x.hi(), 0.0));
}

// libm exp is faithful but not provably correctly rounded; a 4-ulp cushion
// absorbs any realistic excess.
inline double exp_up(double x) {
    double v = std::exp(x);
    for (int i = 0; i < 4; ++i) v = step_up(v);
    return v;
}
inline double exp_down(double x) {
    double v = std::exp(x);
    for (int i = 0; i < 4; ++i) v = step_down(v);
    return std::max(v, 0.0);
}
inline RealInterval exp(const RealInterval& x) {
    return RealInterval(exp_down(x.lo()), exp_up(x.hi()));
}

inline RealInterval abs(const RealInterval& x) {
    if (x.lo() >= 0.0) return x;
    if (x.hi() <= 0.0) return -x;
    return RealInterval(0.0, std::max(-x.lo(), x.hi()));
}

inline RealInterval hull(const RealInterval& a, const RealInterval& b) {
    return RealInterval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline bool intersects(const RealInterval& a, const RealInterval& b) {
    return a.lo() <= b.hi() && b.lo() <= a.hi();
}

inline RealInterval inflate(const RealInterval& x, double delta) {
    if (delta < 0.0) throw InvalidInterval("negative inflation");
    return RealInterval(step_down(x.lo() - delta), step_up(x.hi() + delta));
}

inline RealInterval pow_int(const RealInterval& x, int k) {
    if (k < 0) throw OutOfRange("pow_int expects k >= 0");
    RealInterval r(1.0);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

// true when every point of a is strictly below every point of b
inline bool strictly_less(const RealInterval& a, const RealInterval& b) {
    return a.hi() < b.lo();
}

}  // namespace bryant
