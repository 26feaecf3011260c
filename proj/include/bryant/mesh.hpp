#pragma once

#include <array>
#include <string>
#include <vector>

#include "bryant/matrix.hpp"
#include "bryant/surface.hpp"

namespace bryant {

enum class PresetKind {
    Horosphere,        // g = 1, f = 1
    EnneperCousin,     // g = z, f = lambda
    CatenoidCousin,    // g = z, f = lambda / z^2
    Genus1Catenoid,    // the certified two-ended genus-1 data on its double cover
    EuclideanCatenoid, // minimal counterpart of the catenoid data
    EuclideanEnneper,  // minimal counterpart of the Enneper data
};

struct WeierstrassPreset {
    PresetKind kind;
    std::string name;
    double lambda = 1.0;
    double a = 1.78;  // genus-1 only
    double c = 1.0;
    // Scales the preset's default parameter domain (rectangle half-width, or
    // the outer annulus radius).  Enlarged domains may reach punctures, in
    // which case sample_surface throws GridSingularity.
    double domain_scale = 1.0;
};

// Looks the preset up by name; lambda/a apply where meaningful.  c <= 0
// selects the preset default (1.0 for the cousins, the certified midpoint
// 0.05 for the genus-1 surface).  Unknown names throw OutOfRange.
WeierstrassPreset preset_from_name(const std::string& name, double lambda,
                                   double a, double c);
std::vector<std::string> preset_names();

// A sampled point of a CMC surface: Minkowski coordinates on the quadric
// x1^2+x2^2+x3^2 - t^2 = -1/c^2 and their image in the Poincare unit ball
// after rescaling to unit curvature.
struct HyperbolicPoint {
    double t, x1, x2, x3;
    double p1, p2, p3;
};

// Hermitean projection of a solution matrix: Phi = (1/c) F^-1 conj(F^-1)^t,
// split as t = (Phi11+Phi22)/2, x3 = (Phi11-Phi22)/2, x1 + i x2 = Phi12,
// then p = c·x / (1 + c·t).  Throws NonUnimodular if |det F - 1| > 1e-8.
HyperbolicPoint immersion_point(const Matrix2c& F, double c);

struct GridSpec {
    int nu, nv;
};
// "NxM" with N, M >= 2; throws InvalidRange otherwise.
GridSpec parse_grid(const std::string& text);

struct SurfaceMesh {
    std::vector<std::array<double, 3>> positions;  // Poincare or Euclidean
    std::vector<std::array<int, 4>> quads;         // 0-based corner indices
    // parallel to positions for the hyperbolic presets; empty for Euclidean
    std::vector<HyperbolicPoint> hyperbolic;
};

// Evaluates the preset over its domain grid by floating RK4 (hyperbolic
// presets) or Gauss quadrature (Euclidean ones) along a canonical path from
// the preset base point to every node, so output is deterministic.  Throws
// GridSingularity if a node lands on a puncture of the Weierstrass data.
SurfaceMesh sample_surface(const WeierstrassPreset& preset, const GridSpec& grid);

// Euclidean minimal immersion via the Weierstrass integral
//   Re \int ((1-g^2) f, i (1+g^2) f, 2 g f) dzeta
// along the straight segments through `vertices`, by composite Gauss-Legendre.
std::array<double, 3> minimal_point(const WeierstrassPreset& preset,
                                    const std::vector<std::complex<double>>& vertices);

// Wavefront OBJ: `v` lines with 9 significant digits, `f` quad lines,
// deterministic ordering, atomic write.  Refuses empty meshes.
void export_obj(const SurfaceMesh& mesh, const std::string& path);

}  // namespace bryant
