#include "bryant/surface.hpp"

#include <algorithm>
#include <cmath>

namespace bryant {

void PolygonalPath::validate() const {
    if (vertices.size() < 2) throw OutOfRange("path needs at least one segment");
    if (breaks.size() != vertices.size())
        throw OutOfRange("path breaks/vertices size mismatch");
    if (breaks.front().num != 0)
        throw OutOfRange("path must start at t = 0");
    if (breaks.back().num != breaks.back().den)
        throw OutOfRange("path must end at t = 1");
    for (const Fraction& f : breaks)
        if (f.den <= 0) throw OutOfRange("path break with nonpositive denominator");
    for (size_t i = 1; i < breaks.size(); ++i) {
        // cross-multiplied strict monotonicity
        if (breaks[i - 1].num * breaks[i].den >= breaks[i].num * breaks[i - 1].den)
            throw OutOfRange("path breaks must be strictly increasing");
    }
}

int PolygonalPath::segment_of(double t) const {
    if (t < 0.0 || t > 1.0) throw OutOfRange("path parameter outside [0,1]");
    for (int s = 0; s + 1 < static_cast<int>(breaks.size()); ++s)
        if (t < breaks[s + 1].value() || s + 2 == static_cast<int>(breaks.size()))
            return s;
    return segments() - 1;
}

std::complex<double> PolygonalPath::z_at(double t) const {
    const int s = segment_of(t);
    const double ta = breaks[s].value(), tb = breaks[s + 1].value();
    const double u = (t - ta) / (tb - ta);
    return vertices[s] + u * (vertices[s + 1] - vertices[s]);
}

PolygonalPath path_alpha1(double a) {
    PolygonalPath p;
    p.vertices = {{0.0, 0.0}, {1.0, 0.4}, {(1.0 + a) / 2.0, 0.0}};
    p.breaks = {{0, 1}, {67, 100}, {1, 1}};
    p.validate();
    return p;
}

PolygonalPath path_alpha2(double a) {
    PolygonalPath p;
    p.vertices = {{0.0, 0.0}, {a + 0.2, 0.7}, {a + 0.5, 0.0}};
    p.breaks = {{0, 1}, {343, 500}, {1, 1}};
    p.validate();
    return p;
}

PolygonalPath path_preset(const std::string& name, double a) {
    if (name == "alpha1") return path_alpha1(a);
    if (name == "alpha2") return path_alpha2(a);
    throw OutOfRange("unknown path preset: " + name);
}

PolygonalPath conjugated(const PolygonalPath& p) {
    PolygonalPath q = p;
    for (auto& v : q.vertices) v = std::conj(v);
    return q;
}

PolygonalPath negated(const PolygonalPath& p) {
    PolygonalPath q = p;
    for (auto& v : q.vertices) v = -v;
    return q;
}

std::complex<double> sheet_square(const SurfaceParams& par, std::complex<double> z) {
    return sheet_square(par, Cplx(z)).std();
}

Cplx sheet_square(const SurfaceParams& par, Cplx z) {
    const Cplx one(1.0), a(par.a);
    return ((z + one) * (z - a)) / ((z - one) * (z + a));
}

ComplexBox sheet_square(const SurfaceParams& par, const ComplexBox& z) {
    const ComplexBox one(1.0), a(par.a);
    return ((z + one) * (z - a)) / ((z - one) * (z + a));
}

namespace {

void check_branch_point(const SurfaceParams& par, std::complex<double> z) {
    const double tol = 1e-12;
    if (std::abs(z - 1.0) < tol || std::abs(z + 1.0) < tol ||
        std::abs(z - par.a) < tol || std::abs(z + par.a) < tol)
        throw BranchPointHit("path point within 1e-12 of a branch point");
}

// one continuation step with the 10x nearest-root separation test
std::complex<double> step_root(const SurfaceParams& par, std::complex<double> z,
                               std::complex<double> w_prev) {
    check_branch_point(par, z);
    const Cplx r = sqrt_nearest(sheet_square(par, Cplx(z)), Cplx(w_prev));
    const double d_near = std::abs(r.std() - w_prev);
    const double d_far = std::abs(-r.std() - w_prev);
    if (d_near * 10.0 > d_far)
        throw BranchAmbiguity("sheet continuation step too coarse near a branch point");
    return r.std();
}

}  // namespace

std::complex<double> continue_sheet(const SurfaceParams& par,
                                    std::complex<double> z_from,
                                    std::complex<double> w_from,
                                    std::complex<double> z_to, double max_step) {
    check_branch_point(par, z_from);
    // a destination on a branch point is unreachable however fine the steps,
    // so report it as such instead of letting the step test fire en route
    check_branch_point(par, z_to);
    const double len = std::abs(z_to - z_from);
    const int n = std::max(1, static_cast<int>(std::ceil(len / max_step)));
    std::complex<double> w = w_from;
    for (int j = 1; j <= n; ++j) {
        const std::complex<double> z =
            z_from + (z_to - z_from) * (static_cast<double>(j) / n);
        w = step_root(par, z, w);
    }
    return w;
}

SurfacePoint gauss_map_continue(const PolygonalPath& path, const SurfaceParams& par,
                                double t_prev, std::complex<double> w_prev,
                                double t) {
    if (t < t_prev) throw OutOfRange("gauss_map_continue expects t >= t_prev");
    path.validate();
    std::complex<double> z = path.z_at(t_prev);
    std::complex<double> w = w_prev;
    // visit every breakpoint strictly between t_prev and t in order
    for (size_t i = 1; i + 1 < path.breaks.size(); ++i) {
        const double tb = path.breaks[i].value();
        if (tb > t_prev && tb < t) {
            const std::complex<double> zb = path.vertices[i];
            w = continue_sheet(par, z, w, zb);
            z = zb;
        }
    }
    const std::complex<double> z_end = path.z_at(t);
    w = continue_sheet(par, z, w, z_end);
    return {z_end, w};
}

SurfacePoint symmetry_transform(int which, const SurfacePoint& p) {
    switch (which) {
        case 1: return {std::conj(p.z), std::conj(p.w)};
        case 2: return {-p.z, 1.0 / p.w};
        case 3: return {-std::conj(p.z), 1.0 / std::conj(p.w)};
        case 4: return {std::conj(p.z), -std::conj(p.w)};
        default: throw OutOfRange("symmetry index must be 1..4");
    }
}

SegmentCoefficients h_coefficients(const PolygonalPath& path, int segment) {
    path.validate();
    if (segment < 0 || segment >= path.segments())
        throw OutOfRange("segment index out of range");
    const std::complex<double> dz =
        path.vertices[segment + 1] - path.vertices[segment];
    const double dt = path.breaks[segment + 1].value() - path.breaks[segment].value();
    const std::complex<double> h1 = dz / dt;
    return {h1, -h1};
}

HValues h_values(std::complex<double> h1, std::complex<double> g) {
    return {h1, h1 / g, -h1 * g, -h1};
}

}  // namespace bryant
