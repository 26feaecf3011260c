#pragma once

#include <string>
#include <vector>

#include "bryant/error_bounds.hpp"
#include "bryant/period.hpp"
#include "bryant/surface.hpp"

namespace bryant {

struct CertifyRequest {
    double a = 1.78;
    double c1 = 0.0495;
    double c2 = 0.0505;
    int n = 4000;
    int subintervals = 50;
    // Multiplies epsilon (and hence epsilon_hat's entry inflation) before any
    // inequality is checked.  1.0 in production; tests crank it up to prove
    // the checks can actually fail.
    double epsilon_scale = 1.0;
    BoundsOptions bounds_options{};
};

// A c-endpoint evaluation: raw (uninflated) endpoint enclosures for both
// paths, and the period enclosures after entrywise epsilon-inflation.
struct EndpointRecord {
    double c;
    MatrixEnclosure F1, F2;
    RealInterval f1, f2;
    bool separated = false;
    std::string note;
};

// One c-subinterval with its midpoint evaluation; the period enclosures are
// inflated entrywise by epsilon + epsilon_hat so they cover every c in range.
struct SubintervalRecord {
    RealInterval c_range;
    double c_mid;
    MatrixEnclosure F1, F2;
    RealInterval f1, f2;
    bool pass = false;
    std::string note;
};

struct Certificate {
    int schema_version = 1;
    double a, c1, c2;
    int n;
    int subintervals;
    double epsilon_scale;
    CoefficientBounds bounds_alpha1, bounds_alpha2;
    ErrorBudget budget;  // worst case over both paths, epsilon_scale applied
    EndpointRecord lower, upper;
    std::vector<SubintervalRecord> sweep;
    bool verified = false;
    std::string failure_reason;
    std::string timestamp;  // informational; excluded from determinism claims
    std::string toolchain;
};

// The full pipeline: h-coefficient bounds, error budget, endpoint sign
// checks at c1 and c2, and the midpoint sweep over the subinterval grid.
// Throws InvalidRange on a bad parameter rectangle; a run that completes but
// fails a check returns a certificate with verified = false.
Certificate certify_existence(const CertifyRequest& req);

struct RevalidationReport {
    bool ok = false;
    std::string detail;
};

// Re-derives every certified inequality from the stored enclosures and
// budget alone -- no integration.  Also recomputes the budget values from the
// stored coefficient bounds and requires the stored ones to be at least as
// large, so a certificate cannot understate its own error.
RevalidationReport revalidate(const Certificate& cert);

std::string to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
void write_certificate(const Certificate& cert, const std::string& path);
Certificate read_certificate(const std::string& path);

// Non-rigorous companion table: interval evaluations at grid points, but the
// table keeps only midpoints and widths (for plotting / eyeballing).
struct SweepRow {
    double c = 0.0;
    double f1 = 0.0, f2 = 0.0;
    double f1_width = 0.0, f2_width = 0.0;
    bool ok = false;  // false: degenerate denominator, value fields meaningless
};

std::vector<SweepRow> sweep_periods(double a, const std::vector<double>& c_grid,
                                    int n);
// Header `c,f1,f2,f1_width,f2_width,flag`; degenerate rows leave the four
// value fields empty.  Written atomically (temp file + rename).
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

// Shared atomic-write helper for all file outputs.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace bryant
