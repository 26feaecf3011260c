#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bryant/complex_box.hpp"

namespace bryant {

// Parameters of the family: the surface  (z-1)(z+a) w^2 = (z+1)(z-a)  with
// its twofold branched z-projection, and the mean-curvature-like scale c of
// the matrix equation integrated over it.
struct SurfaceParams {
    double a;
    double c;

    SurfaceParams(double a_, double c_) : a(a_), c(c_) {
        if (!(a > 1.0)) throw OutOfRange("surface parameter a must be > 1");
        if (!(c > 0.0)) throw OutOfRange("surface parameter c must be > 0");
    }
};

struct SurfacePoint {
    std::complex<double> z;
    std::complex<double> w;
};

// Exact rational, used for path time-breaks so that step grids can land on
// them exactly.
struct Fraction {
    long num;
    long den;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Piecewise-linear z-projection of a path on the surface, with rational
// breakpoints in t.  t runs over [0,1]; t is affine in z on each segment.
struct PolygonalPath {
    std::vector<std::complex<double>> vertices;  // size = segments + 1
    std::vector<Fraction> breaks;                // same size; 0/1 first, 1/1 last

    int segments() const { return static_cast<int>(vertices.size()) - 1; }
    void validate() const;
    std::complex<double> z_at(double t) const;
    int segment_of(double t) const;  // index of the segment containing t
};

// The two certification paths: both start at z = 0 on the  w = +1  sheet.
// path_alpha1 ends between the branch points 1 and a; path_alpha2 ends past a.
PolygonalPath path_alpha1(double a);
PolygonalPath path_alpha2(double a);
PolygonalPath path_preset(const std::string& name, double a);

PolygonalPath conjugated(const PolygonalPath& p);  // z -> conj(z)
PolygonalPath negated(const PolygonalPath& p);     // z -> -z

// w^2 as a rational function of z.
std::complex<double> sheet_square(const SurfaceParams& par, std::complex<double> z);
Cplx sheet_square(const SurfaceParams& par, Cplx z);
ComplexBox sheet_square(const SurfaceParams& par, const ComplexBox& z);

// Continue the sheet value w from (z_from, w_from) to z_to along the straight
// segment, stepping finely enough that the nearest-root choice is unambiguous.
// Throws BranchPointHit within 1e-12 of z = +-1, +-a and BranchAmbiguity when
// the two roots fail a 10x separation test.
std::complex<double> continue_sheet(const SurfaceParams& par,
                                    std::complex<double> z_from,
                                    std::complex<double> w_from,
                                    std::complex<double> z_to,
                                    double max_step = 1e-2);

// Path-level wrapper: walk from t_prev (where the sheet value is w_prev) to t,
// passing through any intermediate vertices.
SurfacePoint gauss_map_continue(const PolygonalPath& path, const SurfaceParams& par,
                                double t_prev, std::complex<double> w_prev,
                                double t);

// The four symmetries of the surface:
//   1: (z, w) -> (conj z, conj w)
//   2: (z, w) -> (-z, 1/w)
//   3: (z, w) -> (-conj z, 1/conj w)
//   4: (z, w) -> (conj z, -conj w)
SurfacePoint symmetry_transform(int which, const SurfacePoint& p);

// Per-segment coefficients of the reduced linear system
//   dA/dt = c(h1 A + h2 B),  dB/dt = c(h3 A + h4 B)   (likewise for C, D)
// with h1 = dz/dt constant on the segment, h2 = h1/g, h3 = -h1 g, h4 = -h1.
struct SegmentCoefficients {
    std::complex<double> h1;
    std::complex<double> h4;  // always -h1
};
SegmentCoefficients h_coefficients(const PolygonalPath& path, int segment);

struct HValues {
    std::complex<double> h1, h2, h3, h4;
};
HValues h_values(std::complex<double> h1, std::complex<double> g);

// Uniform sup bounds over a whole path for |h_i| and their first three
// t-derivatives, taken across all four coefficients and both certification
// roles.  These feed the discretization error formula.
struct CoefficientBounds {
    double M;   // sup |h_i|
    double M1;  // sup |h_i'|
    double M2;  // sup |h_i''|
    double M3;  // sup |h_i'''|
};

CoefficientBounds merge(const CoefficientBounds& x, const CoefficientBounds& y);

struct BoundsOptions {
    double rel_tol = 0.01;  // stop refining when every bound improves less than this
    int initial_depth = 5;  // 2^depth sub-boxes per segment
    int max_depth = 13;
    // floating sheet samples used as branch hints are spaced at most this far apart
    double hint_step = 5e-3;
};

// Rigorous bounds by adaptive dyadic subdivision of each segment, evaluating
// closed-form derivative expressions in interval arithmetic on each sub-box.
// Any completed depth yields valid bounds; refinement only tightens them.  A
// depth too coarse to keep the root enclosures off 0 produces no bounds at
// all and is skipped.  Throws SubdivisionLimitExceeded if max_depth is
// reached before the improvement drops below rel_tol.
CoefficientBounds compute_h_bounds(const PolygonalPath& path, const SurfaceParams& par,
                                   const BoundsOptions& opt = {});

}  // namespace bryant
