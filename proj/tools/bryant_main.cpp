#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bryant/certify.hpp"
#include "bryant/error_bounds.hpp"
#include "bryant/integrator.hpp"
#include "bryant/mesh.hpp"
#include "bryant/period.hpp"

namespace {

struct RunConfig {
    double a = 1.78;
    double c1 = 0.0495;
    double c2 = 0.0505;
    double c = 0.05;
    int n = 4000;
    int subintervals = 50;
    std::string grid = "0.0495:0.0505:0.0001";
    std::string mesh_grid = "48x16";
    std::string out;
    std::string path_name = "alpha1";
    std::string mode = "interval";
    std::string preset;
    std::string revalidate_path;
    double lambda = 1.0;
    double mesh_c = 0.0;
    double domain_scale = 1.0;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const bryant::RealInterval& x) {
    return "[" + fmt(x.lo()) + ", " + fmt(x.hi()) + "]";
}

void print_box(const char* name, const bryant::ComplexBox& b) {
    std::cout << "  " << name << " = " << fmt(b.re()) << " + " << fmt(b.im())
              << " i  (width " << fmt(b.max_width()) << ")\n";
}

std::vector<double> parse_sweep_grid(const std::string& text) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3 ||
        !(step > 0.0) || !(lo <= hi))
        throw bryant::InvalidRange("sweep grid must be lo:hi:step with step > 0");
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) grid[static_cast<size_t>(k)] = lo + k * step;
    return grid;
}

int run_certify(const RunConfig& cfg) {
    using namespace bryant;
    if (!cfg.revalidate_path.empty()) {
        const Certificate cert = read_certificate(cfg.revalidate_path);
        const RevalidationReport report = revalidate(cert);
        std::cout << report.detail << "\n";
        if (!report.ok) return 2;
        std::cout << (cert.verified ? "VERIFIED" : "FAILED: " + cert.failure_reason)
                  << "\n";
        return cert.verified ? 0 : 2;
    }

    CertifyRequest req;
    req.a = cfg.a;
    req.c1 = cfg.c1;
    req.c2 = cfg.c2;
    req.n = cfg.n;
    req.subintervals = cfg.subintervals;
    const Certificate cert = certify_existence(req);

    const std::string out = cfg.out.empty() ? "certificate.json" : cfg.out;
    write_certificate(cert, out);

    std::cout << "a = " << fmt(cert.a) << ", c in [" << fmt(cert.c1) << ", "
              << fmt(cert.c2) << "], n = " << cert.n << ", subintervals = "
              << cert.subintervals << "\n";
    std::cout << "coefficient bounds (merged): M = " << fmt(cert.budget.bounds.M)
              << ", M1 = " << fmt(cert.budget.bounds.M1)
              << ", M2 = " << fmt(cert.budget.bounds.M2)
              << ", M3 = " << fmt(cert.budget.bounds.M3) << "\n";
    std::cout << "epsilon = " << fmt(cert.budget.epsilon)
              << ", epsilon_hat = " << fmt(cert.budget.epsilon_hat) << "\n";
    std::cout << "f1 at c1: " << fmt(cert.lower.f1) << "\n";
    std::cout << "f2 at c1: " << fmt(cert.lower.f2) << "\n";
    std::cout << "f1 at c2: " << fmt(cert.upper.f1) << "\n";
    std::cout << "f2 at c2: " << fmt(cert.upper.f2) << "\n";
    int passed = 0;
    for (const SubintervalRecord& r : cert.sweep) passed += r.pass ? 1 : 0;
    std::cout << "subintervals certified: " << passed << "/" << cert.sweep.size()
              << "\n";
    std::cout << "certificate written to " << out << "\n";
    if (cert.verified) {
        std::cout << "VERIFIED\n";
        return 0;
    }
    std::cout << "FAILED: " << cert.failure_reason << "\n";
    return 2;
}

int run_sweep(const RunConfig& cfg) {
    using namespace bryant;
    const std::vector<double> grid = parse_sweep_grid(cfg.grid);
    const std::vector<SweepRow> rows = sweep_periods(cfg.a, grid, cfg.n);
    const std::string out = cfg.out.empty() ? "sweep.csv" : cfg.out;
    write_sweep_csv(rows, out);
    std::cout << rows.size() << " rows written to " << out << "\n";
    return 0;
}

int run_bounds(const RunConfig& cfg) {
    using namespace bryant;
    if (!(cfg.a > 1.0) || !(cfg.c1 > 0.0) || !(cfg.c1 < cfg.c2))
        throw InvalidRange("bounds requires a > 1 and 0 < c1 < c2");
    const PolygonalPath p1 = path_alpha1(cfg.a);
    const PolygonalPath p2 = path_alpha2(cfg.a);
    const SurfaceParams shape(cfg.a, cfg.c2);
    const CoefficientBounds b1 = compute_h_bounds(p1, shape);
    const CoefficientBounds b2 = compute_h_bounds(p2, shape);
    const CoefficientBounds m = merge(b1, b2);
    auto row = [](const char* label, const CoefficientBounds& b) {
        std::cout << label << ": M = " << fmt(b.M) << ", M1 = " << fmt(b.M1)
                  << ", M2 = " << fmt(b.M2) << ", M3 = " << fmt(b.M3) << "\n";
    };
    row("alpha1", b1);
    row("alpha2", b2);
    row("merged", m);
    std::cout << "zeta(c2, n) = " << fmt(zeta(cfg.c2, cfg.n, m.M, m.M1, m.M2, m.M3))
              << "\n";
    const RealInterval c_range(cfg.c1, cfg.c2);
    std::cout << "global_rk4_bound = " << fmt(global_rk4_bound(c_range, cfg.n, m))
              << "\n";
    std::cout << "c_derivative_bound = " << fmt(c_derivative_bound(m.M, c_range))
              << "\n";
    return 0;
}

int run_integrate(const RunConfig& cfg) {
    using namespace bryant;
    const PolygonalPath path = path_preset(cfg.path_name, cfg.a);
    const SurfaceParams par(cfg.a, cfg.c);
    if (cfg.mode == "floating") {
        const Matrix2c F = integrate_path_fp(path, par, cfg.n);
        auto entry = [](const char* name, Cplx v) {
            std::cout << "  " << name << " = " << fmt(v.re) << " + " << fmt(v.im)
                      << " i\n";
        };
        std::cout << cfg.path_name << " endpoint (floating, n = " << cfg.n << "):\n";
        entry("A", F.a);
        entry("B", F.b);
        entry("C", F.c);
        entry("D", F.d);
        return 0;
    }
    if (cfg.mode != "interval")
        throw InvalidRange("mode must be interval or floating");
    const MatrixEnclosure F = integrate_path(path, par, cfg.n);
    std::cout << cfg.path_name << " endpoint (interval, n = " << cfg.n << "):\n";
    print_box("A", F.a);
    print_box("B", F.b);
    print_box("C", F.c);
    print_box("D", F.d);
    const ComplexBox dt = det(F);
    std::cout << "  det = " << fmt(dt.re()) << " + " << fmt(dt.im()) << " i\n";
    return 0;
}

int run_mesh(const RunConfig& cfg) {
    using namespace bryant;
    WeierstrassPreset preset =
        preset_from_name(cfg.preset, cfg.lambda, cfg.a, cfg.mesh_c);
    preset.domain_scale = cfg.domain_scale;
    const GridSpec grid = parse_grid(cfg.mesh_grid);
    const SurfaceMesh mesh = sample_surface(preset, grid);
    const std::string out = cfg.out.empty() ? preset.name + ".obj" : cfg.out;
    export_obj(mesh, out);
    std::cout << mesh.positions.size() << " vertices, " << mesh.quads.size()
              << " quads written to " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"rigorous periods, certification and meshes for catenoid cousins"};
    app.require_subcommand(1);

    CLI::App* certify = app.add_subcommand(
        "certify", "run the interval certification over [c1, c2]");
    certify->add_option("--a", cfg.a, "surface parameter a")->capture_default_str();
    certify->add_option("--c1", cfg.c1, "lower end of the c-range")
        ->capture_default_str();
    certify->add_option("--c2", cfg.c2, "upper end of the c-range")
        ->capture_default_str();
    certify->add_option("--n", cfg.n, "RK4 steps per path")->capture_default_str();
    certify->add_option("--subintervals", cfg.subintervals, "c-subinterval count")
        ->capture_default_str();
    certify->add_option("--out", cfg.out, "certificate path (certificate.json)");
    certify->add_option("--revalidate", cfg.revalidate_path,
                        "recheck an existing certificate file instead of running");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "tabulate f1, f2 midpoints over a c-grid (CSV)");
    sweep->add_option("--a", cfg.a, "surface parameter a")->capture_default_str();
    sweep->add_option("--grid", cfg.grid, "c-grid as lo:hi:step")
        ->capture_default_str();
    sweep->add_option("--n", cfg.n, "RK4 steps per path")->capture_default_str();
    sweep->add_option("--out", cfg.out, "CSV path (sweep.csv)");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "print coefficient bounds and the error budget");
    bounds->add_option("--a", cfg.a, "surface parameter a")->capture_default_str();
    bounds->add_option("--c1", cfg.c1, "lower end of the c-range")
        ->capture_default_str();
    bounds->add_option("--c2", cfg.c2, "upper end of the c-range")
        ->capture_default_str();
    bounds->add_option("--n", cfg.n, "RK4 steps per path")->capture_default_str();

    CLI::App* integrate = app.add_subcommand(
        "integrate", "integrate one certification path and print the endpoint");
    integrate->add_option("--a", cfg.a, "surface parameter a")->capture_default_str();
    integrate->add_option("--c", cfg.c, "parameter c")->capture_default_str();
    integrate->add_option("--path", cfg.path_name, "alpha1 or alpha2")
        ->capture_default_str();
    integrate->add_option("--n", cfg.n, "RK4 steps")->capture_default_str();
    integrate->add_option("--mode", cfg.mode, "interval or floating")
        ->capture_default_str();

    CLI::App* mesh = app.add_subcommand("mesh", "sample a preset surface to OBJ");
    mesh->add_option("--preset", cfg.preset, "preset name")->required();
    mesh->add_option("--lambda", cfg.lambda, "preset parameter lambda")
        ->capture_default_str();
    mesh->add_option("--a", cfg.a, "surface parameter a (genus-1)")
        ->capture_default_str();
    mesh->add_option("--c", cfg.mesh_c, "CMC scale c; 0 = preset default")
        ->capture_default_str();
    mesh->add_option("--grid", cfg.mesh_grid, "sampling grid NxM")
        ->capture_default_str();
    mesh->add_option("--domain-scale", cfg.domain_scale,
                     "scale factor on the preset domain")
        ->capture_default_str();
    mesh->add_option("--out", cfg.out, "OBJ path (<preset>.obj)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (certify->parsed()) return run_certify(cfg);
        if (sweep->parsed()) return run_sweep(cfg);
        if (bounds->parsed()) return run_bounds(cfg);
        if (integrate->parsed()) return run_integrate(cfg);
        if (mesh->parsed()) return run_mesh(cfg);
    } catch (const bryant::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
