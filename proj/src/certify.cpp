#include "bryant/certify.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bryant/integrator.hpp"
#include "bryant/parallel.hpp"

using ordered_json = nlohmann::ordered_json;

namespace bryant {

namespace {

std::string iso_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string toolchain_fingerprint() {
#if defined(__clang__)
    return std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    return std::string("gcc ") + __VERSION__;
#else
    return "unknown compiler";
#endif
}

struct PeriodPair {
    RealInterval f1, f2;
    bool usable = false;
    std::string note;
};

// Entrywise inflation of both endpoint matrices, then the period quotients.
// A degenerate denominator or a realness failure is reported, not thrown:
// at certification level it means "this c cannot be certified", and the
// caller records that verdict.
PeriodPair inflated_periods(const MatrixEnclosure& F1, const MatrixEnclosure& F2,
                            double entry_inflation) {
    PeriodPair out;
    const MatrixEnclosure G1 = inflate(F1, entry_inflation);
    const MatrixEnclosure G2 = inflate(F2, entry_inflation);
    try {
        const PeriodValue v1 = period_f1(G1);
        const PeriodValue v2 = period_f2(G2);
        out.f1 = v1.value;
        out.f2 = v2.value;
        if (!v1.imag_residual.contains_zero() ||
            !v2.imag_residual.contains_zero()) {
            out.note = "imaginary residual excludes 0";
            return out;
        }
        out.usable = true;
    } catch (const DegenerateDenominator& e) {
        out.note = e.what();
    }
    return out;
}

EndpointRecord evaluate_endpoint(const PolygonalPath& p1, const PolygonalPath& p2,
                                 double a, double c, int n, double eps,
                                 bool lower_end) {
    EndpointRecord rec;
    rec.c = c;
    const SurfaceParams par(a, c);
    rec.F1 = integrate_path(p1, par, n);
    rec.F2 = integrate_path(p2, par, n);
    const PeriodPair pp = inflated_periods(rec.F1, rec.F2, eps);
    rec.f1 = pp.f1;
    rec.f2 = pp.f2;
    rec.note = pp.note;
    rec.separated = pp.usable && (lower_end ? strictly_less(rec.f2, rec.f1)
                                            : strictly_less(rec.f1, rec.f2));
    return rec;
}

SubintervalRecord evaluate_subinterval(const PolygonalPath& p1,
                                       const PolygonalPath& p2, double a,
                                       double lo, double hi, int n,
                                       double eps_total) {
    SubintervalRecord rec;
    rec.c_range = RealInterval(lo, hi);
    rec.c_mid = 0.5 * (lo + hi);
    const SurfaceParams par(a, rec.c_mid);
    rec.F1 = integrate_path(p1, par, n);
    rec.F2 = integrate_path(p2, par, n);
    const PeriodPair pp = inflated_periods(rec.F1, rec.F2, eps_total);
    rec.f1 = pp.f1;
    rec.f2 = pp.f2;
    rec.note = pp.note;
    rec.pass = pp.usable && rec.f1.lo() > 2.0 && rec.f2.lo() > 2.0;
    return rec;
}

}  // namespace

Certificate certify_existence(const CertifyRequest& req) {
    if (!(req.a > 1.0) || !(req.c1 > 0.0) || !(req.c1 < req.c2))
        throw InvalidRange("certification requires a > 1 and 0 < c1 < c2");
    if (req.subintervals < 1)
        throw InvalidRange("subinterval count must be at least 1");
    if (!(req.epsilon_scale >= 1.0))
        throw InvalidRange("epsilon_scale below 1 would understate the error");

    const PolygonalPath p1 = path_alpha1(req.a);
    const PolygonalPath p2 = path_alpha2(req.a);
    validate_grid(p1, req.n);
    validate_grid(p2, req.n);

    Certificate cert;
    cert.a = req.a;
    cert.c1 = req.c1;
    cert.c2 = req.c2;
    cert.n = req.n;
    cert.subintervals = req.subintervals;
    cert.epsilon_scale = req.epsilon_scale;

    const SurfaceParams shape(req.a, req.c2);
    cert.bounds_alpha1 = compute_h_bounds(p1, shape, req.bounds_options);
    cert.bounds_alpha2 = compute_h_bounds(p2, shape, req.bounds_options);
    const CoefficientBounds merged = merge(cert.bounds_alpha1, cert.bounds_alpha2);

    const int S = req.subintervals;
    std::vector<double> grid(static_cast<size_t>(S) + 1);
    grid[0] = req.c1;
    grid[static_cast<size_t>(S)] = req.c2;
    for (int k = 1; k < S; ++k)
        grid[static_cast<size_t>(k)] =
            req.c1 + (req.c2 - req.c1) * (static_cast<double>(k) / S);
    for (int k = 0; k < S; ++k)
        if (!(grid[static_cast<size_t>(k)] < grid[static_cast<size_t>(k) + 1]))
            throw InvalidRange("subinterval grid collapsed: c-range too narrow for that many subintervals");

    // Outward-rounded worst half-width; the midpoint of two doubles always
    // lies between them, so the two one-sided distances cover the range.
    double max_hw = 0.0;
    for (int k = 0; k < S; ++k) {
        const double lo = grid[static_cast<size_t>(k)];
        const double hi = grid[static_cast<size_t>(k) + 1];
        const double m = 0.5 * (lo + hi);
        const double hw = std::max((RealInterval(m) - RealInterval(lo)).hi(),
                                   (RealInterval(hi) - RealInterval(m)).hi());
        max_hw = std::max(max_hw, hw);
    }

    const RealInterval c_range(req.c1, req.c2);
    cert.budget = make_error_budget(c_range, req.n, merged, max_hw);
    cert.budget.epsilon =
        (RealInterval(cert.budget.epsilon) * RealInterval(req.epsilon_scale)).hi();

    const double eps = cert.budget.epsilon;
    const double eps_total =
        (RealInterval(eps) + RealInterval(cert.budget.epsilon_hat)).hi();

    cert.sweep.resize(static_cast<size_t>(S));
    parallel_for(S + 2, [&](int j) {
        if (j == 0) {
            cert.lower = evaluate_endpoint(p1, p2, req.a, req.c1, req.n, eps, true);
        } else if (j == 1) {
            cert.upper = evaluate_endpoint(p1, p2, req.a, req.c2, req.n, eps, false);
        } else {
            const int k = j - 2;
            cert.sweep[static_cast<size_t>(k)] = evaluate_subinterval(
                p1, p2, req.a, grid[static_cast<size_t>(k)],
                grid[static_cast<size_t>(k) + 1], req.n, eps_total);
        }
    });

    cert.verified = true;
    auto fail = [&](const std::string& reason) {
        if (cert.verified) {
            cert.verified = false;
            cert.failure_reason = reason;
        }
    };
    if (!cert.lower.separated)
        fail("f1 > f2 not certified at endpoint c1" +
             (cert.lower.note.empty() ? "" : " (" + cert.lower.note + ")"));
    if (!cert.upper.separated)
        fail("f1 < f2 not certified at endpoint c2" +
             (cert.upper.note.empty() ? "" : " (" + cert.upper.note + ")"));
    for (int k = 0; k < S; ++k) {
        const SubintervalRecord& r = cert.sweep[static_cast<size_t>(k)];
        if (!r.pass)
            fail("subinterval " + std::to_string(k) + " not certified" +
                 (r.note.empty() ? "" : " (" + r.note + ")"));
    }

    cert.timestamp = iso_timestamp_utc();
    cert.toolchain = toolchain_fingerprint();
    return cert;
}

RevalidationReport revalidate(const Certificate& cert) {
    std::vector<std::string> problems;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    };

    require(cert.schema_version == 1, "unknown schema version");
    require(cert.a > 1.0 && cert.c1 > 0.0 && cert.c1 < cert.c2,
            "parameter rectangle invalid");
    require(cert.epsilon_scale >= 1.0, "epsilon_scale understates the error");
    require(static_cast<int>(cert.sweep.size()) == cert.subintervals,
            "sweep length disagrees with subinterval count");

    // Budget honesty: stored values must cover a fresh recomputation from the
    // stored coefficient bounds (pure arithmetic; no integration).
    const CoefficientBounds merged = merge(cert.bounds_alpha1, cert.bounds_alpha2);
    require(cert.budget.bounds.M >= merged.M && cert.budget.bounds.M1 >= merged.M1 &&
                cert.budget.bounds.M2 >= merged.M2 &&
                cert.budget.bounds.M3 >= merged.M3,
            "budget bounds below per-path bounds");
    double fresh_eps = 0.0;
    try {
        fresh_eps = global_rk4_bound(RealInterval(cert.c1, cert.c2), cert.n,
                                     cert.budget.bounds);
    } catch (const Error& e) {
        problems.push_back(std::string("budget recomputation failed: ") + e.what());
    }
    require(cert.budget.epsilon >= fresh_eps * (1.0 - 1e-9),
            "stored epsilon below recomputed bound");

    double max_hw = 0.0;
    for (const SubintervalRecord& r : cert.sweep) {
        const double hw =
            std::max((RealInterval(r.c_mid) - RealInterval(r.c_range.lo())).hi(),
                     (RealInterval(r.c_range.hi()) - RealInterval(r.c_mid)).hi());
        max_hw = std::max(max_hw, hw);
    }
    const double fresh_eps_hat =
        (RealInterval(c_derivative_bound(cert.budget.bounds.M,
                                         RealInterval(cert.c1, cert.c2))) *
         RealInterval(max_hw))
            .hi();
    require(cert.budget.epsilon_hat >= fresh_eps_hat * (1.0 - 1e-9),
            "stored epsilon_hat below recomputed bound");

    // Coverage: the subintervals tile [c1, c2] without gaps.
    if (!cert.sweep.empty()) {
        require(cert.sweep.front().c_range.lo() == cert.c1,
                "first subinterval does not start at c1");
        require(cert.sweep.back().c_range.hi() == cert.c2,
                "last subinterval does not end at c2");
        for (size_t k = 0; k + 1 < cert.sweep.size(); ++k)
            require(cert.sweep[k].c_range.hi() == cert.sweep[k + 1].c_range.lo(),
                    "gap between subintervals " + std::to_string(k) + " and " +
                        std::to_string(k + 1));
        for (size_t k = 0; k < cert.sweep.size(); ++k)
            require(cert.sweep[k].c_range.contains(cert.sweep[k].c_mid),
                    "midpoint outside subinterval " + std::to_string(k));
    }

    // Replay the inequality layer from the stored raw enclosures.
    const double eps = cert.budget.epsilon;
    const double eps_total =
        (RealInterval(eps) + RealInterval(cert.budget.epsilon_hat)).hi();
    auto close = [](const RealInterval& x, const RealInterval& y) {
        const double tol = 1e-12 * std::max(1.0, std::max(std::abs(x.lo()), std::abs(x.hi())));
        return std::abs(x.lo() - y.lo()) <= tol && std::abs(x.hi() - y.hi()) <= tol;
    };

    auto check_endpoint = [&](const EndpointRecord& rec, bool lower_end,
                              const std::string& label) {
        const PeriodPair pp = inflated_periods(rec.F1, rec.F2, eps);
        if (!pp.usable) {
            require(!rec.separated, label + ": separated despite unusable periods");
            return;
        }
        require(close(pp.f1, rec.f1), label + ": stored f1 does not replay");
        require(close(pp.f2, rec.f2), label + ": stored f2 does not replay");
        const bool sep = lower_end ? strictly_less(pp.f2, pp.f1)
                                   : strictly_less(pp.f1, pp.f2);
        require(rec.separated == sep, label + ": separation flag does not replay");
    };
    check_endpoint(cert.lower, true, "lower endpoint");
    check_endpoint(cert.upper, false, "upper endpoint");

    bool all_pass = cert.lower.separated && cert.upper.separated;
    for (size_t k = 0; k < cert.sweep.size(); ++k) {
        const SubintervalRecord& r = cert.sweep[k];
        const std::string label = "subinterval " + std::to_string(k);
        const PeriodPair pp = inflated_periods(r.F1, r.F2, eps_total);
        if (!pp.usable) {
            require(!r.pass, label + ": pass despite unusable periods");
        } else {
            require(close(pp.f1, r.f1), label + ": stored f1 does not replay");
            require(close(pp.f2, r.f2), label + ": stored f2 does not replay");
            const bool pass = pp.f1.lo() > 2.0 && pp.f2.lo() > 2.0;
            require(r.pass == pass, label + ": pass flag does not replay");
        }
        all_pass = all_pass && r.pass;
    }
    require(cert.verified == all_pass, "verdict inconsistent with stored checks");
    require(cert.verified == cert.failure_reason.empty(),
            "failure reason inconsistent with verdict");

    RevalidationReport report;
    report.ok = problems.empty();
    if (report.ok) {
        report.detail = cert.verified
                            ? "revalidated: VERIFIED verdict reproduced from stored enclosures"
                            : "revalidated: FAILED verdict is consistent with stored enclosures";
    } else {
        std::ostringstream out;
        out << problems.size() << " problem(s):";
        for (const std::string& p : problems) out << "\n  - " << p;
        report.detail = out.str();
    }
    return report;
}

namespace {

ordered_json interval_json(const RealInterval& x) {
    return ordered_json::array({x.lo(), x.hi()});
}

RealInterval interval_from(const ordered_json& j) {
    return RealInterval(j.at(0).get<double>(), j.at(1).get<double>());
}

// 4 bound values per entry (lower/upper real, lower/upper imaginary), so a
// matrix carries its 16 bounds verbatim.
ordered_json box_json(const ComplexBox& b) {
    return ordered_json::array(
        {b.re().lo(), b.re().hi(), b.im().lo(), b.im().hi()});
}

ComplexBox box_from(const ordered_json& j) {
    return ComplexBox(RealInterval(j.at(0).get<double>(), j.at(1).get<double>()),
                      RealInterval(j.at(2).get<double>(), j.at(3).get<double>()));
}

ordered_json matrix_json(const MatrixEnclosure& m) {
    return ordered_json{{"A", box_json(m.a)},
                        {"B", box_json(m.b)},
                        {"C", box_json(m.c)},
                        {"D", box_json(m.d)}};
}

MatrixEnclosure matrix_from(const ordered_json& j) {
    return {box_from(j.at("A")), box_from(j.at("B")), box_from(j.at("C")),
            box_from(j.at("D"))};
}

ordered_json bounds_json(const CoefficientBounds& b) {
    return ordered_json{{"M", b.M}, {"M1", b.M1}, {"M2", b.M2}, {"M3", b.M3}};
}

CoefficientBounds bounds_from(const ordered_json& j) {
    return {j.at("M").get<double>(), j.at("M1").get<double>(),
            j.at("M2").get<double>(), j.at("M3").get<double>()};
}

ordered_json endpoint_json(const EndpointRecord& rec) {
    return ordered_json{{"c", rec.c},
                        {"F1", matrix_json(rec.F1)},
                        {"F2", matrix_json(rec.F2)},
                        {"f1", interval_json(rec.f1)},
                        {"f2", interval_json(rec.f2)},
                        {"separated", rec.separated},
                        {"note", rec.note}};
}

EndpointRecord endpoint_from(const ordered_json& j) {
    EndpointRecord rec;
    rec.c = j.at("c").get<double>();
    rec.F1 = matrix_from(j.at("F1"));
    rec.F2 = matrix_from(j.at("F2"));
    rec.f1 = interval_from(j.at("f1"));
    rec.f2 = interval_from(j.at("f2"));
    rec.separated = j.at("separated").get<bool>();
    rec.note = j.at("note").get<std::string>();
    return rec;
}

ordered_json subinterval_json(const SubintervalRecord& rec) {
    return ordered_json{{"c_lo", rec.c_range.lo()},
                        {"c_hi", rec.c_range.hi()},
                        {"c_mid", rec.c_mid},
                        {"F1", matrix_json(rec.F1)},
                        {"F2", matrix_json(rec.F2)},
                        {"f1", interval_json(rec.f1)},
                        {"f2", interval_json(rec.f2)},
                        {"pass", rec.pass},
                        {"note", rec.note}};
}

SubintervalRecord subinterval_from(const ordered_json& j) {
    SubintervalRecord rec;
    rec.c_range = RealInterval(j.at("c_lo").get<double>(), j.at("c_hi").get<double>());
    rec.c_mid = j.at("c_mid").get<double>();
    rec.F1 = matrix_from(j.at("F1"));
    rec.F2 = matrix_from(j.at("F2"));
    rec.f1 = interval_from(j.at("f1"));
    rec.f2 = interval_from(j.at("f2"));
    rec.pass = j.at("pass").get<bool>();
    rec.note = j.at("note").get<std::string>();
    return rec;
}

}  // namespace

std::string to_json(const Certificate& cert) {
    ordered_json j{
        {"schema_version", cert.schema_version},
        {"kind", "existence-certificate"},
        {"params",
         ordered_json{{"a", cert.a},
                      {"c1", cert.c1},
                      {"c2", cert.c2},
                      {"n", cert.n},
                      {"subintervals", cert.subintervals},
                      {"epsilon_scale", cert.epsilon_scale}}},
        {"bounds_alpha1", bounds_json(cert.bounds_alpha1)},
        {"bounds_alpha2", bounds_json(cert.bounds_alpha2)},
        {"budget",
         ordered_json{{"epsilon", cert.budget.epsilon},
                      {"epsilon_hat", cert.budget.epsilon_hat},
                      {"n", cert.budget.n},
                      {"c_ref", cert.budget.c_ref},
                      {"bounds", bounds_json(cert.budget.bounds)}}},
        {"endpoints",
         ordered_json{{"lower", endpoint_json(cert.lower)},
                      {"upper", endpoint_json(cert.upper)}}},
        {"sweep", ordered_json::array()},
        {"verdict", cert.verified ? "VERIFIED" : "FAILED"},
        {"failure_reason", cert.failure_reason},
        {"timestamp", cert.timestamp},
        {"toolchain", cert.toolchain},
    };
    for (const SubintervalRecord& rec : cert.sweep)
        j["sweep"].push_back(subinterval_json(rec));
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema_version").get<int>() != 1)
        throw Error("unsupported certificate schema version");
    Certificate cert;
    cert.schema_version = 1;
    const ordered_json& p = j.at("params");
    cert.a = p.at("a").get<double>();
    cert.c1 = p.at("c1").get<double>();
    cert.c2 = p.at("c2").get<double>();
    cert.n = p.at("n").get<int>();
    cert.subintervals = p.at("subintervals").get<int>();
    cert.epsilon_scale = p.at("epsilon_scale").get<double>();
    cert.bounds_alpha1 = bounds_from(j.at("bounds_alpha1"));
    cert.bounds_alpha2 = bounds_from(j.at("bounds_alpha2"));
    const ordered_json& b = j.at("budget");
    cert.budget.epsilon = b.at("epsilon").get<double>();
    cert.budget.epsilon_hat = b.at("epsilon_hat").get<double>();
    cert.budget.n = b.at("n").get<int>();
    cert.budget.c_ref = b.at("c_ref").get<double>();
    cert.budget.bounds = bounds_from(b.at("bounds"));
    cert.lower = endpoint_from(j.at("endpoints").at("lower"));
    cert.upper = endpoint_from(j.at("endpoints").at("upper"));
    for (const ordered_json& rec : j.at("sweep"))
        cert.sweep.push_back(subinterval_from(rec));
    cert.verified = j.at("verdict").get<std::string>() == "VERIFIED";
    cert.failure_reason = j.at("failure_reason").get<std::string>();
    cert.timestamp = j.at("timestamp").get<std::string>();
    cert.toolchain = j.at("toolchain").get<std::string>();
    return cert;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp + " for writing");
        out << contents;
        out.flush();
        if (!out) throw Error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("could not move " + tmp + " into place");
}

void write_certificate(const Certificate& cert, const std::string& path) {
    write_file_atomic(path, to_json(cert));
}

Certificate read_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open certificate file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return certificate_from_json(buf.str());
}

std::vector<SweepRow> sweep_periods(double a, const std::vector<double>& c_grid,
                                    int n) {
    const PolygonalPath p1 = path_alpha1(a);
    const PolygonalPath p2 = path_alpha2(a);
    validate_grid(p1, n);
    validate_grid(p2, n);
    std::vector<SweepRow> rows(c_grid.size());
    parallel_for(static_cast<int>(c_grid.size()), [&](int i) {
        SweepRow row;
        row.c = c_grid[static_cast<size_t>(i)];
        try {
            const SurfaceParams par(a, row.c);
            const PeriodValue v1 = period_f1(integrate_path(p1, par, n));
            const PeriodValue v2 = period_f2(integrate_path(p2, par, n));
            row.f1 = v1.value.mid();
            row.f2 = v2.value.mid();
            row.f1_width = v1.value.width();
            row.f2_width = v2.value.width();
            row.ok = true;
        } catch (const DegenerateDenominator&) {
            row.ok = false;
        }
        rows[static_cast<size_t>(i)] = row;
    });
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::string out = "c,f1,f2,f1_width,f2_width,flag\n";
    char line[256];
    for (const SweepRow& row : rows) {
        if (row.ok) {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,ok\n",
                          row.c, row.f1, row.f2, row.f1_width, row.f2_width);
        } else {
            std::snprintf(line, sizeof line, "%.17g,,,,,degenerate\n", row.c);
        }
        out += line;
    }
    write_file_atomic(path, out);
}

}  // namespace bryant
