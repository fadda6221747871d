#pragma once

#include <string>
#include <vector>

#include "lctjt/joint.hpp"
#include "lctjt/types.hpp"

namespace lctjt {

// Default simulation grid: t in [-8, 8), N = 1024.
Grid default_grid(std::size_t n = 1024);

// x(t) = (11/5) sinc((11/2)(t + 3/2)) + e^{-2(t-2)^2} cos(2 pi t)
RealSignal test_signal_sinc_gauss(const Grid& grid);

// x(t) = e^{-pi (13/45)(t+2)^2} cos(2 pi (6/5)(t+2))
//      + e^{-pi (16/25)(t-3/2)^2} cos(2 pi (8/5)(t-3/2))
RealSignal test_signal_two_gauss(const Grid& grid);

RealSignal test_signal_by_id(const std::string& id, const Grid& grid);

// The simulation matrices. The published a=0 matrix has determinant -1; the
// builtin uses c = -1/b so that ad - bc = 1 (surfaced in the report header).
LctParams builtin_matrix_aneq0();
LctParams builtin_matrix_a0();

struct VerificationCase {
    std::string name;
    JointKind kind;
    LctParams m;
    std::string signal_id;  // "sincgauss" or "twogauss"
    double tolerance;
};

struct CaseResult {
    std::string name;
    JointKind kind;
    LctParams m;
    double max_abs_diff;
    double tolerance;
    bool passed;
    double seconds;
};

struct VerificationReport {
    std::vector<CaseResult> cases;
    std::string header;

    bool all_passed() const;
    double worst() const;
    std::string to_text() const;
    std::string to_json() const;
};

// The paper's equality checks for one matrix: (a) LA on the Hilbert transform,
// (b) LH, (c) AL^-1, (d) -HL^-1, (e) LHL^-1, (f) LcL^-1, plus LcA.
std::vector<VerificationCase> default_cases(const LctParams& m, const std::string& signal_id,
                                            double tol_integral, double tol_lhl,
                                            double tol_pointwise);

// Runs every case: builds the needed input (x, Hx, LCTs of them) on the grid,
// computes joint and cascade routes independently, records the difference.
// Per-case failures are recorded, never aborting the suite. Cases run in
// parallel, capped by LCT_JOINT_THREADS.
VerificationReport run_suite(const std::vector<VerificationCase>& cases,
                             const Grid& grid = default_grid());

}  // namespace lctjt
