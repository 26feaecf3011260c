#include "bryant/mesh.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "bryant/certify.hpp"  // write_file_atomic
#include "bryant/integrator.hpp"
#include "bryant/parallel.hpp"

namespace bryant {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PresetInfo {
    const char* name;
    PresetKind kind;
    double default_c;
};

const PresetInfo kPresets[] = {
    {"horosphere", PresetKind::Horosphere, 1.0},
    {"enneper_cousin", PresetKind::EnneperCousin, 1.0},
    {"catenoid_cousin", PresetKind::CatenoidCousin, 1.0},
    {"genus1_catenoid", PresetKind::Genus1Catenoid, 0.05},
    {"euclidean_minimal_catenoid", PresetKind::EuclideanCatenoid, 1.0},
    {"euclidean_enneper", PresetKind::EuclideanEnneper, 1.0},
};

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const PresetInfo& p : kPresets) names.emplace_back(p.name);
    return names;
}

WeierstrassPreset preset_from_name(const std::string& name, double lambda,
                                   double a, double c) {
    for (const PresetInfo& p : kPresets) {
        if (name == p.name) {
            WeierstrassPreset preset;
            preset.kind = p.kind;
            preset.name = p.name;
            preset.lambda = lambda;
            preset.a = a;
            preset.c = c > 0.0 ? c : p.default_c;
            if (preset.kind == PresetKind::Genus1Catenoid && !(preset.a > 1.0))
                throw OutOfRange("genus-1 preset needs a > 1");
            if (preset.lambda == 0.0)
                throw OutOfRange("lambda = 0 degenerates the Weierstrass data");
            return preset;
        }
    }
    std::string known;
    for (const PresetInfo& p : kPresets) known += std::string(" ") + p.name;
    throw OutOfRange("unknown preset '" + name + "'; expected one of:" + known);
}

GridSpec parse_grid(const std::string& text) {
    int nu = 0, nv = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%dx%d%c", &nu, &nv, &extra) != 2 || nu < 2 ||
        nv < 2)
        throw InvalidRange("grid spec must be NxM with N, M >= 2");
    return {nu, nv};
}

HyperbolicPoint immersion_point(const Matrix2c& F, double c) {
    if (!(c > 0.0)) throw OutOfRange("immersion scale c must be positive");
    const Cplx dt = det(F);
    if (std::abs(dt.std() - 1.0) > 1e-8)
        throw NonUnimodular("det F strays from 1 beyond 1e-8");
    const Matrix2c Fi = inverse(F);
    const Matrix2c H = Fi * conj_transpose(Fi);  // c * Phi, Hermitean

    HyperbolicPoint p;
    p.t = (H.a.re + H.d.re) / (2.0 * c);
    p.x3 = (H.a.re - H.d.re) / (2.0 * c);
    p.x1 = H.b.re / c;
    p.x2 = H.b.im / c;
    const double denom = 1.0 + c * p.t;
    p.p1 = c * p.x1 / denom;
    p.p2 = c * p.x2 / denom;
    p.p3 = c * p.x3 / denom;
    return p;
}

namespace {

using C64 = std::complex<double>;

struct DataValues {
    Cplx g, f;
};

DataValues eval_data(const WeierstrassPreset& preset, Cplx z) {
    switch (preset.kind) {
        case PresetKind::Horosphere:
            return {Cplx(1.0), Cplx(1.0)};
        case PresetKind::EnneperCousin:
            return {z, Cplx(preset.lambda)};
        case PresetKind::CatenoidCousin:
            if (abs2(z) < 1e-18)
                throw GridSingularity("catenoid data has a puncture at z = 0");
            return {z, Cplx(preset.lambda) / (z * z)};
        default:
            throw OutOfRange("no explicit (g, f) data for this preset");
    }
}

Mat2<Cplx> weier_N(const WeierstrassPreset& preset, Cplx z, Cplx step_scale) {
    const DataValues d = eval_data(preset, z);
    const Cplx s = d.f * step_scale;
    return {d.g * s, -(d.g * d.g * s), s, -(d.g * s)};
}

// RK4 for F' = F * c f (g -g^2; 1 -g) along the straight segment z0 -> z1.
Matrix2c integrate_weier(const WeierstrassPreset& preset, Matrix2c F, C64 z0,
                         C64 z1) {
    const double len = std::abs(z1 - z0);
    if (len == 0.0) return F;
    const Cplx dz(z1 - z0);
    const int n = std::max(8, static_cast<int>(std::ceil(len * 48.0)));
    const Cplx step_scale = dz * (1.0 / n) * Cplx(preset.c);
    for (int k = 0; k < n; ++k) {
        auto z_at = [&](double s) { return Cplx(z0) + dz * ((k + s) / n); };
        F = rk4_step(F, weier_N(preset, z_at(0.0), step_scale),
                     weier_N(preset, z_at(0.5), step_scale),
                     weier_N(preset, z_at(1.0), step_scale));
    }
    return F;
}

Matrix2c weier_endpoint(const WeierstrassPreset& preset,
                        const std::vector<C64>& vertices) {
    Matrix2c F = Matrix2c::identity();
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        F = integrate_weier(preset, F, vertices[i], vertices[i + 1]);
    return F;
}

// The genus-1 surface lives on the double cover; reuse the certification
// integrator on a one-segment ray from the base point (0, w = 1).
Matrix2c genus1_endpoint(const WeierstrassPreset& preset, C64 z) {
    if (z == 0.0) return Matrix2c::identity();
    const SurfaceParams par(preset.a, preset.c);
    PolygonalPath ray;
    ray.vertices = {C64(0.0), z};
    ray.breaks = {{0, 1}, {1, 1}};
    const int n = std::max(8, static_cast<int>(std::ceil(std::abs(z) * 64.0)));
    return integrate_path_fp(ray, par, n);
}

void check_punctures(C64 z, const std::vector<C64>& punctures) {
    for (C64 p : punctures)
        if (std::abs(z - p) < 1e-9)
            throw GridSingularity("grid node hits a puncture of the data");
}

SurfaceMesh rect_mesh_structure(int nu, int nv) {
    SurfaceMesh mesh;
    mesh.positions.resize(static_cast<size_t>(nu) * nv);
    for (int iu = 0; iu + 1 < nu; ++iu)
        for (int iv = 0; iv + 1 < nv; ++iv)
            mesh.quads.push_back({iu * nv + iv, (iu + 1) * nv + iv,
                                  (iu + 1) * nv + iv + 1, iu * nv + iv + 1});
    return mesh;
}

SurfaceMesh annulus_mesh_structure(int nu, int nv) {
    SurfaceMesh mesh;
    mesh.positions.resize(static_cast<size_t>(nu) * nv);
    for (int ia = 0; ia < nu; ++ia) {
        const int ib = (ia + 1) % nu;
        for (int ir = 0; ir + 1 < nv; ++ir)
            mesh.quads.push_back(
                {ia * nv + ir, ib * nv + ir, ib * nv + ir + 1, ia * nv + ir + 1});
    }
    return mesh;
}

C64 rect_node(int iu, int iv, int nu, int nv, double half) {
    const double u = -half + 2.0 * half * (static_cast<double>(iu) / (nu - 1));
    const double v = -half + 2.0 * half * (static_cast<double>(iv) / (nv - 1));
    return {u, v};
}

// Unit-circle chord polyline from angle 0 to angle index ia, then radial.
std::vector<C64> annulus_path(int ia, int nu, double r) {
    std::vector<C64> path;
    for (int t = 0; t <= ia; ++t) {
        const double th = 2.0 * kPi * t / nu;
        path.push_back(C64(std::cos(th), std::sin(th)));
    }
    path.push_back(r * path.back());
    return path;
}

SurfaceMesh sample_rect_cmc(const WeierstrassPreset& preset, const GridSpec& grid,
                            double half) {
    SurfaceMesh mesh = rect_mesh_structure(grid.nu, grid.nv);
    mesh.hyperbolic.resize(mesh.positions.size());
    parallel_for(grid.nu * grid.nv, [&](int idx) {
        const int iu = idx / grid.nv, iv = idx % grid.nv;
        const C64 z = rect_node(iu, iv, grid.nu, grid.nv, half);
        const Matrix2c F = weier_endpoint(preset, {C64(0.0), z});
        const HyperbolicPoint hp = immersion_point(F, preset.c);
        mesh.hyperbolic[static_cast<size_t>(idx)] = hp;
        mesh.positions[static_cast<size_t>(idx)] = {hp.p1, hp.p2, hp.p3};
    });
    return mesh;
}

SurfaceMesh sample_genus1(const WeierstrassPreset& preset, const GridSpec& grid,
                          double half) {
    const std::vector<C64> punctures = {C64(1.0), C64(-1.0), C64(preset.a),
                                        C64(-preset.a)};
    SurfaceMesh mesh = rect_mesh_structure(grid.nu, grid.nv);
    mesh.hyperbolic.resize(mesh.positions.size());
    parallel_for(grid.nu * grid.nv, [&](int idx) {
        const int iu = idx / grid.nv, iv = idx % grid.nv;
        const C64 z = rect_node(iu, iv, grid.nu, grid.nv, half);
        check_punctures(z, punctures);
        const Matrix2c F = genus1_endpoint(preset, z);
        // project at unit mean-curvature scale whatever c the flow used; the
        // quadric identity only needs det F = 1
        const HyperbolicPoint hp = immersion_point(F, 1.0);
        mesh.hyperbolic[static_cast<size_t>(idx)] = hp;
        mesh.positions[static_cast<size_t>(idx)] = {hp.p1, hp.p2, hp.p3};
    });
    return mesh;
}

SurfaceMesh sample_annulus_cmc(const WeierstrassPreset& preset,
                               const GridSpec& grid, double r_in, double r_out) {
    SurfaceMesh mesh = annulus_mesh_structure(grid.nu, grid.nv);
    mesh.hyperbolic.resize(mesh.positions.size());
    parallel_for(grid.nu * grid.nv, [&](int idx) {
        const int ia = idx / grid.nv, ir = idx % grid.nv;
        const double r = r_in + (r_out - r_in) * (static_cast<double>(ir) / (grid.nv - 1));
        const Matrix2c F = weier_endpoint(preset, annulus_path(ia, grid.nu, r));
        const HyperbolicPoint hp = immersion_point(F, preset.c);
        mesh.hyperbolic[static_cast<size_t>(idx)] = hp;
        mesh.positions[static_cast<size_t>(idx)] = {hp.p1, hp.p2, hp.p3};
    });
    return mesh;
}

SurfaceMesh sample_rect_euclid(const WeierstrassPreset& preset,
                               const GridSpec& grid, double half) {
    SurfaceMesh mesh = rect_mesh_structure(grid.nu, grid.nv);
    parallel_for(grid.nu * grid.nv, [&](int idx) {
        const int iu = idx / grid.nv, iv = idx % grid.nv;
        const C64 z = rect_node(iu, iv, grid.nu, grid.nv, half);
        mesh.positions[static_cast<size_t>(idx)] = minimal_point(preset, {C64(0.0), z});
    });
    return mesh;
}

SurfaceMesh sample_annulus_euclid(const WeierstrassPreset& preset,
                                  const GridSpec& grid, double r_in,
                                  double r_out) {
    SurfaceMesh mesh = annulus_mesh_structure(grid.nu, grid.nv);
    parallel_for(grid.nu * grid.nv, [&](int idx) {
        const int ia = idx / grid.nv, ir = idx % grid.nv;
        const double r = r_in + (r_out - r_in) * (static_cast<double>(ir) / (grid.nv - 1));
        mesh.positions[static_cast<size_t>(idx)] =
            minimal_point(preset, annulus_path(ia, grid.nu, r));
    });
    return mesh;
}

}  // namespace

SurfaceMesh sample_surface(const WeierstrassPreset& preset, const GridSpec& grid) {
    if (grid.nu < 2 || grid.nv < 2) throw InvalidRange("grid must be at least 2x2");
    if (!(preset.domain_scale > 0.0))
        throw InvalidRange("domain_scale must be positive");
    const double s = preset.domain_scale;
    switch (preset.kind) {
        case PresetKind::Horosphere:
        case PresetKind::EnneperCousin:
            return sample_rect_cmc(preset, grid, 1.0 * s);
        case PresetKind::Genus1Catenoid:
            return sample_genus1(preset, grid, 0.6 * s);
        case PresetKind::CatenoidCousin:
            return sample_annulus_cmc(preset, grid, 0.4, 2.5 * s);
        case PresetKind::EuclideanEnneper:
            return sample_rect_euclid(preset, grid, 1.0 * s);
        case PresetKind::EuclideanCatenoid:
            return sample_annulus_euclid(preset, grid, 0.4, 2.5 * s);
    }
    throw OutOfRange("unhandled preset kind");
}

std::array<double, 3> minimal_point(const WeierstrassPreset& preset,
                                    const std::vector<std::complex<double>>& vertices) {
    // 5-point Gauss-Legendre on [-1, 1]
    static const double node[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                   0.5384693101056831, 0.9061798459386640};
    static const double weight[5] = {0.2369268850561891, 0.4786286704993665,
                                     0.5688888888888889, 0.4786286704993665,
                                     0.2369268850561891};

    auto data = [&](C64 z) -> std::pair<C64, C64> {
        switch (preset.kind) {
            case PresetKind::EuclideanEnneper:
                return {z, C64(preset.lambda)};
            case PresetKind::EuclideanCatenoid:
                if (std::norm(z) < 1e-18)
                    throw GridSingularity("catenoid data has a puncture at z = 0");
                return {z, C64(preset.lambda) / (z * z)};
            default:
                throw OutOfRange("minimal_point expects a Euclidean preset");
        }
    };

    C64 I1 = 0.0, I2 = 0.0, I3 = 0.0;
    const C64 iu(0.0, 1.0);
    for (size_t s = 0; s + 1 < vertices.size(); ++s) {
        const C64 z0 = vertices[s], z1 = vertices[s + 1];
        const double len = std::abs(z1 - z0);
        if (len == 0.0) continue;
        const int m = std::max(4, static_cast<int>(std::ceil(len / 0.05)));
        for (int j = 0; j < m; ++j) {
            const C64 a_ = z0 + (z1 - z0) * (static_cast<double>(j) / m);
            const C64 b_ = z0 + (z1 - z0) * (static_cast<double>(j + 1) / m);
            const C64 mid = 0.5 * (a_ + b_), halfstep = 0.5 * (b_ - a_);
            for (int q = 0; q < 5; ++q) {
                const C64 zeta = mid + halfstep * node[q];
                const auto [g, f] = data(zeta);
                const C64 w = weight[q] * halfstep;
                I1 += w * (1.0 - g * g) * f;
                I2 += w * iu * (1.0 + g * g) * f;
                I3 += w * 2.0 * g * f;
            }
        }
    }
    return {I1.real(), I2.real(), I3.real()};
}

void export_obj(const SurfaceMesh& mesh, const std::string& path) {
    if (mesh.positions.empty()) throw Error("refusing to export an empty mesh");
    std::string out;
    out.reserve(mesh.positions.size() * 40 + mesh.quads.size() * 24);
    char line[128];
    for (const std::array<double, 3>& p : mesh.positions) {
        std::snprintf(line, sizeof line, "v %.9g %.9g %.9g\n", p[0], p[1], p[2]);
        out += line;
    }
    for (const std::array<int, 4>& q : mesh.quads) {
        std::snprintf(line, sizeof line, "f %d %d %d %d\n", q[0] + 1, q[1] + 1,
                      q[2] + 1, q[3] + 1);
        out += line;
    }
    write_file_atomic(path, out);
}

}  // namespace bryant
