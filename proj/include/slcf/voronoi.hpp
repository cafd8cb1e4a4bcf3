#ifndef SLCF_VORONOI_HPP
#define SLCF_VORONOI_HPP

#include <vector>

#include "slcf/error_term.hpp"
#include "slcf/lfunc.hpp"

namespace slcf {

struct TruncationResult {
    double y = 0;
    double M = 0; // cutoff on mu_n
    double value = 0;
    i64 terms_used = 0;
};

// Leading Tong/Voronoi series
//   R1(y;M) = kappa0 y^theta sum_{mu_n <= M} b(n) mu_n^{-(r+rho-theta)}
//             cos(h (y mu_n)^{1/(2 alpha)} + c0 pi)
// Phases are computed in double precision from exact n with one Newton
// polish on the root: for h (y mu_n)^{1/d} up to 1e9 the absolute phase
// error stays below ~1e-7 rad (relative rounding 1e-16 scaled by the
// phase), well under the cosine-sum noise floor.
TruncationResult truncated_r1(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                              double y, double M, int rho = 0);

// Constants of the same series rewritten over (a(n), n):
//   amp * y^theta0 sum a(n) n^{-(r-theta0)} cos(freq (y n)^{1/(2 alpha)} + phase0)
struct ClassicalForm {
    double amp;
    double freq;
    double phase0; // reduced to (-pi, pi]
};
ClassicalForm classical_normalization(const LFunctionInstance& inst);

// evaluates R1 in the rewritten normalization (identity check support)
double r1_classical(const LFunctionInstance& inst, const ArithmeticSequence& coeffs, double y,
                    double M, int rho = 0);

struct ResidualRow {
    double M = 0;
    double rms_residual = 0; // RMS(E - R1(.;M))
    double rms_e = 0;        // RMS(E) baseline
    double rms_r1 = 0;
};

struct ResidualStats {
    std::vector<ResidualRow> rows;
    double y_lo = 0, y_hi = 0;
    i64 samples = 0;
};

// RMS of E - R1 over equispaced half-integer samples of [y_lo, y_hi].
ResidualStats residual_stats(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                             double y_lo, double y_hi, i64 samples,
                             const std::vector<double>& M_list);

} // namespace slcf

#endif
