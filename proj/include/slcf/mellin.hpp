#ifndef SLCF_MELLIN_HPP
#define SLCF_MELLIN_HPP

#include <vector>

#include "slcf/coeffs.hpp"
#include "slcf/common.hpp"
#include "slcf/lfunc.hpp"

namespace slcf {

// Polygonal path with vertices a-i*inf, a-iR, b-iR, b+iR, a+iR, a+i*inf.
// The vertical tails run straight to height t_max and then continue along
// a 45-degree leftward diagonal, which is where the oscillatory integrand
// finally decays exponentially; the reported tail bound comes from the
// diagonal endpoint.
struct ContourSpec {
    double a = 0.0;
    double b = 1.57;
    double R = 2.3;
    double t_max = 0.0;         // bend height; 0 = derive from x
    double nodes_per_unit = 1.0; // density multiplier
};

ContourSpec default_contour(const DerivedInvariants& inv, double x, double rho);

struct ContourResult {
    double value = 0.0;
    double imag_diag = 0.0; // imaginary part of the quadrature (realness check)
    double tail_bound = 0.0;
    std::size_t nodes = 0;
};

ContourResult f_rho_contour_full(const DerivedInvariants& inv, double x, double rho,
                                 const ContourSpec& spec, double tol = 1e-10);
double f_rho_contour(const DerivedInvariants& inv, double x, double rho,
                     const ContourSpec& spec, double tol = 1e-10);
double f_rho_contour(const DerivedInvariants& inv, double x, double rho);

// Leading cosine expansion; m <= 1 (no closed form beyond kappa1).
double f_rho_asym(const DerivedInvariants& inv, double x, double rho, int m);

// Riesz mean A_rho(y) for integer rho >= 0 (rho = 0 reproduces the primed
// prefix sum).
double a_rho(const ArithmeticSequence& seq, double y, int rho);

struct TongOptions {
    double contour_cutoff = 1.2e5; // f argument below which the contour path is used
    double tol = 1e-5;             // requested truncation budget
    i64 max_terms = 30'000'000;
    int gl_nodes = 16;             // L-part iterated integrals
};

struct TongCheckReport {
    double x = 0, y = 0;
    int k = 0;
    int rho = 0;
    double L = 0;
    double lhs = 0, rhs = 0;
    double rel_error = 0;
    i64 terms_used = 0;
    double tail_bound = 0;
};

// Two-sided numerical oracle for the Tong identity.  k below the
// admissibility threshold is raised to the minimal admissible integer.
TongCheckReport tong_check(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                           double x, double y, int k, int rho, double L,
                           TongOptions opt = {});

// Empirical fit of the l = 2 expansion coefficient from contour data; not a
// published constant, exposed for inspection only.
double fit_kappa2(const DerivedInvariants& inv, const std::vector<double>& xs);

} // namespace slcf

#endif
