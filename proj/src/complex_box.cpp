#include "bryant/complex_box.hpp"

namespace bryant {

namespace {

// Both arguments enclose the same nonempty set, so their intersection does
// too; an empty numeric intersection can only come from rounding, in which
// case either input is still a valid answer.
RealInterval meet(const RealInterval& a, const RealInterval& b) {
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    return lo <= hi ? RealInterval(lo, hi) : a;
}

double axis_distance(const RealInterval& range, double t) {
    return std::max({range.lo() - t, t - range.hi(), 0.0});
}

double box_distance(const ComplexBox& b, std::complex<double> p) {
    return std::hypot(axis_distance(b.re(), p.real()),
                      axis_distance(b.im(), p.imag()));
}

}  // namespace

// Writing s = x + iy and a root as u + iv: 2uv = y and u^2 - v^2 = x, so with
// r = |s|,
//     u^2 = (r + x)/2 ,   v^2 = (r - x)/2 .
// Evaluating these with interval endpoints of r and x gives rigorous ranges
// for |u| and |v| over the whole box.  The sign pattern of (u, v) follows
// from the quadrant structure: uv has the sign of y, and u (resp. v) is
// bounded away from 0 whenever x > 0 (resp. x < 0) on the box.
//
// r and x enter (r -+ x)/2 as independent intervals, so whichever of the two
// squares is nearly cancelled gets badly overestimated for roots close to an
// axis.  Whenever one component is bounded away from 0 the identity 2uv = y
// recovers the other as y over it, which restores the lost correlation; the
// intersection with the decomposition range is then taken on both.
ComplexBox sqrt_branch(const ComplexBox& s, std::complex<double> hint) {
    const RealInterval r = abs(s);
    if (r.lo() <= 0.0)
        throw BranchAmbiguity("sqrt of box touching 0: root components meet");

    const RealInterval half(0.5);
    const RealInterval usq = clamp_nonnegative((r + s.re()) * half);
    const RealInterval vsq = clamp_nonnegative((r - s.re()) * half);
    const RealInterval au = sqrt(usq);  // |Re root|
    const RealInterval av = sqrt(vsq);  // |Im root|
    const RealInterval y = s.im();

    ComplexBox cand;
    if (y.lo() > 0.0) {
        // roots in quadrants I and III; candidate: u > 0, v > 0
        RealInterval u = au, v = av;
        if (au.lo() > 0.0) v = meet(v, y / (au * 2.0));
        if (av.lo() > 0.0) u = meet(u, y / (av * 2.0));
        cand = ComplexBox(u, v);
    } else if (y.hi() < 0.0) {
        // quadrants IV and II; candidate: u > 0, v < 0
        RealInterval u = au, v = -av;
        if (au.lo() > 0.0) v = meet(v, y / (au * 2.0));
        if (av.lo() > 0.0) u = meet(u, y / (-(av * 2.0)));
        cand = ComplexBox(u, v);
    } else if (s.re().lo() > 0.0) {
        // y straddles 0 but x > 0: u is bounded away from 0, v changes sign
        RealInterval v(-av.hi(), av.hi());
        if (au.lo() > 0.0) v = meet(v, y / (au * 2.0));
        cand = ComplexBox(au, v);
    } else if (s.re().hi() < 0.0) {
        // x < 0: v bounded away from 0, u changes sign; candidate: v > 0
        RealInterval u(-au.hi(), au.hi());
        if (av.lo() > 0.0) u = meet(u, y / (av * 2.0));
        cand = ComplexBox(u, av);
    } else {
        // 0 in the box was excluded above, so one of the four cases holds
        throw BranchAmbiguity("sqrt of box spanning both axes");
    }

    // The hint is a root sample accurate to roundoff, so the component it
    // tracks is the candidate box it lies in (up to rounding slack).  Set
    // distance, not distance to the midpoint: a wide but correct box can put
    // its midpoint far from the root.
    const double slack =
        1e-9 * (1.0 + std::hypot(cand.re().mag(), cand.im().mag()));
    const double d_plus = box_distance(cand, hint);
    const double d_minus = box_distance(cand, -hint);
    if (d_plus <= slack && d_minus > 10.0 * slack) return cand;
    if (d_minus <= slack && d_plus > 10.0 * slack) return -cand;
    throw BranchAmbiguity("sqrt branch hint does not separate the roots");
}

Cplx sqrt_nearest(Cplx s, Cplx hint) {
    // same decomposition as sqrt_branch, collapsed to doubles
    const double r = std::sqrt(s.re * s.re + s.im * s.im);
    const double u = std::sqrt(std::max((r + s.re) * 0.5, 0.0));
    const double v = std::sqrt(std::max((r - s.re) * 0.5, 0.0));
    const Cplx root{u, s.im >= 0.0 ? v : -v};
    const double d_plus = abs2(hint - root);
    const double d_minus = abs2(hint + root);
    return d_plus <= d_minus ? root : -root;
}

}  // namespace bryant
