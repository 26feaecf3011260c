#include <cmath>

#include "bryant/surface.hpp"

namespace bryant {

namespace {

// Logarithmic derivative of w^2(z) and its first two z-derivatives:
//   L  = 1/(z+1) + 1/(z-a) - 1/(z-1) - 1/(z+a)    ( = 2 g'/g )
// so that
//   g'   = g L/2
//   g''  = g (L^2/4 + L'/2)
//   g''' = g (L^3/8 + 3/4 L L' + L''/2)
// and 1/g satisfies the same chain with L -> -L.
struct LogDerivs {
    ComplexBox L, L1, L2;
};

LogDerivs log_derivs(const SurfaceParams& par, const ComplexBox& z) {
    const ComplexBox one(1.0), a(par.a);
    const ComplexBox p1 = z + one, m1 = z - one, pa = z + a, ma = z - a;
    const ComplexBox r_p1 = one / p1, r_m1 = one / m1;
    const ComplexBox r_pa = one / pa, r_ma = one / ma;
    LogDerivs d;
    d.L = r_p1 + r_ma - r_m1 - r_pa;
    d.L1 = -(r_p1 * r_p1) - (r_ma * r_ma) + (r_m1 * r_m1) + (r_pa * r_pa);
    d.L2 = ((r_p1 * r_p1 * r_p1) + (r_ma * r_ma * r_ma) - (r_m1 * r_m1 * r_m1) -
            (r_pa * r_pa * r_pa)) *
           2.0;
    return d;
}

struct BoxBounds {
    double m0, m1, m2, m3;
};

// Sup bounds of |h_i| and t-derivatives over one z sub-box.  Since dz/dt = h1
// is constant on a segment, d^m/dt^m pulls out h1^m, so
//   |h2^(m)| <= |h1|^(m+1) |(1/g)^(m)_z| ,   |h3^(m)| <= |h1|^(m+1) |g^(m)_z| .
BoxBounds box_bounds(const SurfaceParams& par, const ComplexBox& z,
                     const RealInterval& habs, const ComplexBox& h1,
                     std::complex<double> w_hint) {
    const ComplexBox wsq = sheet_square(par, z);
    // The sub-box image of w stays in one root component (it is connected and
    // the components are disjoint once 0 is outside wsq); the floating hint
    // from sheet continuation selects that component.
    const ComplexBox g = sqrt_branch(wsq, w_hint);
    const ComplexBox invg = ComplexBox(1.0) / g;
    const LogDerivs d = log_derivs(par, z);

    const RealInterval half(0.5), quarter(0.25), eighth(0.125);
    const ComplexBox L2box = d.L * d.L;
    const ComplexBox L3box = L2box * d.L;
    const ComplexBox LL1 = d.L * d.L1 * RealInterval(0.75);
    const ComplexBox e1 = d.L * half;
    const ComplexBox e2p = L2box * quarter + d.L1 * half;
    const ComplexBox e2m = L2box * quarter - d.L1 * half;
    const ComplexBox e3p = L3box * eighth + LL1 + d.L2 * half;
    const ComplexBox e3m = -(L3box * eighth) + LL1 - d.L2 * half;

    const RealInterval h2 = habs * habs;
    const RealInterval h3 = h2 * habs;
    const RealInterval h4 = h3 * habs;
    (void)h1;

    BoxBounds b;
    b.m0 = std::max({habs.hi(), (habs * abs(g)).hi(), (habs * abs(invg)).hi()});
    b.m1 = std::max((h2 * abs(g * e1)).hi(), (h2 * abs(invg * e1)).hi());
    b.m2 = std::max((h3 * abs(g * e2p)).hi(), (h3 * abs(invg * e2m)).hi());
    b.m3 = std::max((h4 * abs(g * e3p)).hi(), (h4 * abs(invg * e3m)).hi());
    return b;
}

CoefficientBounds bounds_at_depth(const PolygonalPath& path, const SurfaceParams& par,
                                  int depth, double hint_step) {
    CoefficientBounds out{0.0, 0.0, 0.0, 0.0};
    const long pieces = 1L << depth;
    std::complex<double> w_vertex = 1.0;  // base point (0, 1)

    for (int seg = 0; seg < path.segments(); ++seg) {
        const std::complex<double> z0 = path.vertices[seg];
        const std::complex<double> z1 = path.vertices[seg + 1];
        const std::complex<double> dz = z1 - z0;
        if (dz == std::complex<double>(0.0, 0.0)) continue;  // contributes nothing

        const RealInterval dt =
            RealInterval(static_cast<double>(path.breaks[seg + 1].num)) /
                RealInterval(static_cast<double>(path.breaks[seg + 1].den)) -
            RealInterval(static_cast<double>(path.breaks[seg].num)) /
                RealInterval(static_cast<double>(path.breaks[seg].den));
        const ComplexBox h1 = ComplexBox(dz) * (RealInterval(1.0) / dt);
        const RealInterval habs = abs(h1);

        std::complex<double> w_run = w_vertex;
        std::complex<double> z_run = z0;
        for (long j = 0; j < pieces; ++j) {
            // dyadic endpoints are exact doubles, so the sub-boxes tile the
            // segment without gaps
            const double s_lo = static_cast<double>(j) / pieces;
            const double s_hi = static_cast<double>(j + 1) / pieces;
            const ComplexBox s(RealInterval(s_lo, s_hi), RealInterval(0.0));
            const ComplexBox z = ComplexBox(z0) + s * ComplexBox(dz);

            const std::complex<double> z_mid = z0 + (0.5 * (s_lo + s_hi)) * dz;
            w_run = continue_sheet(par, z_run, w_run, z_mid, hint_step);
            z_run = z_mid;

            const BoxBounds b = box_bounds(par, z, habs, h1, w_run);
            out.M = std::max(out.M, b.m0);
            out.M1 = std::max(out.M1, b.m1);
            out.M2 = std::max(out.M2, b.m2);
            out.M3 = std::max(out.M3, b.m3);
        }
        w_vertex = continue_sheet(par, z_run, w_run, z1, hint_step);
    }
    return out;
}

double rel_improvement(const CoefficientBounds& coarse, const CoefficientBounds& fine) {
    auto one = [](double c, double f) { return c > 0.0 ? (c - f) / c : 0.0; };
    return std::max({one(coarse.M, fine.M), one(coarse.M1, fine.M1),
                     one(coarse.M2, fine.M2), one(coarse.M3, fine.M3)});
}

}  // namespace

CoefficientBounds merge(const CoefficientBounds& x, const CoefficientBounds& y) {
    return {std::max(x.M, y.M), std::max(x.M1, y.M1), std::max(x.M2, y.M2),
            std::max(x.M3, y.M3)};
}

CoefficientBounds compute_h_bounds(const PolygonalPath& path, const SurfaceParams& par,
                                   const BoundsOptions& opt) {
    path.validate();
    bool have_prev = false;
    CoefficientBounds prev{};
    for (int depth = opt.initial_depth;; ++depth) {
        if (depth > opt.max_depth)
            throw SubdivisionLimitExceeded(
                "coefficient bounds did not stabilize before max subdivision depth");
        CoefficientBounds cur;
        try {
            cur = bounds_at_depth(path, par, depth, opt.hint_step);
        } catch (const BranchAmbiguity&) {
            continue;  // sub-boxes too fat to keep the root components apart
        } catch (const DivisionByZeroInterval&) {
            continue;  // root enclosure touched 0, so 1/g is unbounded here
        }
        if (have_prev && rel_improvement(prev, cur) <= opt.rel_tol) return cur;
        prev = cur;
        have_prev = true;
    }
}

}  // namespace bryant
