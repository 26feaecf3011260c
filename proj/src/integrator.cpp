#include "bryant/integrator.hpp"

#include <cmath>

namespace bryant {

void validate_grid(const PolygonalPath& path, int n) {
    path.validate();
    if (n < 1) throw PreconditionViolation("step count must be positive");
    for (const Fraction& f : path.breaks) {
        if ((static_cast<long>(n) * f.num) % f.den != 0)
            throw PreconditionViolation(
                "step count does not place every path break on a step boundary");
    }
}

Matrix2c rk4_step_constant(const Matrix2c& F, const HValues& h, double c,
                           double step) {
    const double s = c * step;
    const Mat2<Cplx> N{Cplx(h.h1) * s, Cplx(h.h3) * s, Cplx(h.h2) * s,
                       Cplx(h.h4) * s};
    return rk4_step(F, N, N, N);
}

namespace {

struct FloatPolicy {
    using C = Cplx;
    static C ratio(long p, long q) { return detail::NumTraits<Cplx>::ratio(p, q); }
    static C embed(std::complex<double> z) { return Cplx(z); }
    static C root(const C& wsq, Cplx hint) { return sqrt_nearest(wsq, hint); }
};

struct BoxPolicy {
    using C = ComplexBox;
    static C ratio(long p, long q) { return detail::NumTraits<ComplexBox>::ratio(p, q); }
    static C embed(std::complex<double> z) { return ComplexBox(z); }
    static C root(const C& wsq, Cplx hint) { return sqrt_branch(wsq, hint.std()); }
};

void check_not_branch_point(const SurfaceParams& par, Cplx z) {
    const double tol = 1e-12;
    const auto zs = z.std();
    if (std::abs(zs - 1.0) < tol || std::abs(zs + 1.0) < tol ||
        std::abs(zs - par.a) < tol || std::abs(zs + par.a) < tol)
        throw BranchPointHit("integration stencil within 1e-12 of a branch point");
}

// Shared core.  The floating sheet tracker runs in both modes: in floating
// mode it *is* the stencil value of g; in interval mode it supplies the
// branch hints for the box square root.
template <class P>
Mat2<typename P::C> integrate_core(const PolygonalPath& path,
                                   const SurfaceParams& par, int n) {
    using C = typename P::C;
    validate_grid(path, n);

    Mat2<C> F = Mat2<C>::identity();
    Cplx w_approx(1.0);  // sheet value at the running stencil, floating

    for (int seg = 0; seg < path.segments(); ++seg) {
        const long ka = path.breaks[seg].num * n / path.breaks[seg].den;
        const long kb = path.breaks[seg + 1].num * n / path.breaks[seg + 1].den;
        const long dk = kb - ka;
        if (dk == 0) continue;

        const std::complex<double> z0 = path.vertices[seg];
        const std::complex<double> dz = path.vertices[seg + 1] - z0;
        // u = c h1 / n, the per-step coefficient scale on this segment
        const C h1 = P::embed(dz) * P::ratio(n, dk);
        const C u = h1 * P::ratio(1, n) * P::embed(par.c);

        auto z_at = [&](long j2) {  // j2 counts half-steps within the segment
            return P::embed(z0) + P::embed(dz) * P::ratio(j2, 2 * dk);
        };
        auto z_float = [&](long j2) {
            return Cplx(z0) + Cplx(dz) * FloatPolicy::ratio(j2, 2 * dk);
        };
        auto stencil = [&](long j2, Cplx hint) {
            const Cplx zf = z_float(j2);
            check_not_branch_point(par, zf);
            return sqrt_nearest(sheet_square(par, zf), hint);
        };
        auto N_of = [&](const C& g) {
            return Mat2<C>{u, -(u * g), u / g, -u};
        };

        w_approx = stencil(0, w_approx);
        C g_prev = P::root(sheet_square(par, z_at(0)), w_approx);

        for (long k = 0; k < dk; ++k) {
            const Cplx w_half = stencil(2 * k + 1, w_approx);
            const Cplx w_next = stencil(2 * k + 2, w_half);
            const C g_half = P::root(sheet_square(par, z_at(2 * k + 1)), w_half);
            const C g_next = P::root(sheet_square(par, z_at(2 * k + 2)), w_next);
            F = rk4_step(F, N_of(g_prev), N_of(g_half), N_of(g_next));
            g_prev = g_next;
            w_approx = w_next;
        }
    }
    return F;
}

}  // namespace

MatrixEnclosure integrate_path(const PolygonalPath& path, const SurfaceParams& par,
                               int n) {
    return integrate_core<BoxPolicy>(path, par, n);
}

Matrix2c integrate_path_fp(const PolygonalPath& path, const SurfaceParams& par,
                           int n) {
    return integrate_core<FloatPolicy>(path, par, n);
}

Matrix2c integrate_reference(const PolygonalPath& path, const SurfaceParams& par,
                             int n_ref) {
    return integrate_core<FloatPolicy>(path, par, n_ref);
}

}  // namespace bryant
