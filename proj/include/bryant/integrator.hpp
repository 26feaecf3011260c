#pragma once

#include "bryant/matrix.hpp"
#include "bryant/surface.hpp"

namespace bryant {

enum class IntegrationMode { Interval, Floating };

struct IntegrationConfig {
    int n = 4000;
    IntegrationMode mode = IntegrationMode::Interval;
};

// The uniform 1/n grid must place every path break exactly on a step
// boundary, so each RK4 step sees a single smooth segment.  Throws
// PreconditionViolation otherwise (for the standard paths: n must be a
// multiple of 500).
void validate_grid(const PolygonalPath& path, int n);

namespace detail {
template <class T>
struct NumTraits;
template <>
struct NumTraits<Cplx> {
    static Cplx ratio(long p, long q) {
        return Cplx(static_cast<double>(p) / static_cast<double>(q));
    }
};
template <>
struct NumTraits<ComplexBox> {
    static ComplexBox ratio(long p, long q) {
        return ComplexBox(RealInterval(static_cast<double>(p)) /
                              RealInterval(static_cast<double>(q)),
                          RealInterval(0.0));
    }
};
}  // namespace detail

// One classical RK4 update of F' = F N(t), with the stencil values of N
// already multiplied by the step size: N0 at the step start, Nh at the
// midpoint, N1 at the end.
template <class T>
Mat2<T> rk4_step(const Mat2<T>& F, const Mat2<T>& N0, const Mat2<T>& Nh,
                 const Mat2<T>& N1) {
    const T half = detail::NumTraits<T>::ratio(1, 2);
    const T sixth = detail::NumTraits<T>::ratio(1, 6);
    const Mat2<T> K0 = F * N0;
    const Mat2<T> K1 = (F + scale(K0, half)) * Nh;
    const Mat2<T> K2 = (F + scale(K1, half)) * Nh;
    const Mat2<T> K3 = (F + K2) * N1;
    return F + scale(K0 + scale(K1 + K2, T(2.0)) + K3, sixth);
}

// Convenience wrapper with coefficients held constant across the step.
Matrix2c rk4_step_constant(const Matrix2c& F, const HValues& h, double c,
                           double step);

// Solve F' = F (c h1, c h3; c h2, c h4) along the path from F = identity at
// the base point (0, 1), with g continued stencil to stencil.  The interval
// routine returns a rigorous enclosure of the exact RK4 iterates (that is, of
// the discrete scheme itself; the discretization error against the true
// solution is budgeted separately).  The floating routine runs the identical
// expression structure in plain doubles, so its output lies inside the
// interval enclosure for equal configurations.
MatrixEnclosure integrate_path(const PolygonalPath& path, const SurfaceParams& par,
                               int n);
Matrix2c integrate_path_fp(const PolygonalPath& path, const SurfaceParams& par,
                           int n);

// High-resolution floating run used as a cross-check oracle.
Matrix2c integrate_reference(const PolygonalPath& path, const SurfaceParams& par,
                             int n_ref);

}  // namespace bryant
