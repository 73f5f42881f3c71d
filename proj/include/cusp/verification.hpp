#pragma once

/// Verification suites: every published constant beside the value this
/// library computes for it, plus the sampling-oracle cross checks.  The CLI
/// serializes these results; the acceptance runner maps them onto its
/// pass/fail gate.

#include <string>
#include <vector>

namespace cusp::verify {

struct CaseResult {
    std::string suite;
    std::string case_id;
    double expected = 0.0;
    double got = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string errata_note;  // non-empty marks a documented print/math divergence
};

struct Options {
    std::vector<int> n_list = {4, 6, 8};
    int samples = 2048;          // reachable-set / image-curve samples
    int boundary_samples = 8192; // polyline density for winding tests
    double oracle_tol = 1e-5;    // bisection tolerance
};

std::vector<CaseResult> suite_table2_closed(const Options& o = {});
std::vector<CaseResult> suite_table2_oracle(const Options& o = {});
std::vector<CaseResult> suite_limits();
std::vector<CaseResult> suite_inscribed_disk(const Options& o = {});
std::vector<CaseResult> suite_coefficients();
std::vector<CaseResult> suite_inclusion();
std::vector<CaseResult> suite_domain_invariants();
std::vector<CaseResult> suite_unit_radius(const Options& o = {});
std::vector<CaseResult> suite_forward_touching(const Options& o = {});

/// All suites in a fixed order.
std::vector<CaseResult> run_all(const Options& o = {});

/// Published backward radii (rows SL*, RL, R, sin, SG, ne, ze^z, asinh;
/// columns n = 4, 6, 8).
extern const char* const kTable2Classes[8];
double table2_value(int row, int n);

}  // namespace cusp::verify
