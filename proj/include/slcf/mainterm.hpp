#ifndef SLCF_MAINTERM_HPP
#define SLCF_MAINTERM_HPP

#include <vector>

#include "slcf/common.hpp"

namespace slcf {

class LFunctionInstance;

// Sum of terms y^expo * P(log y); closed under antidifferentiation, which
// is what the iterated Tong averages need.
struct LogPolySum {
    struct Term {
        double expo;
        std::vector<double> logpoly; // c0 + c1 L + c2 L^2 + ...
    };
    std::vector<Term> terms;

    double eval(double y) const;
    LogPolySum antiderivative() const;
};

// Main term Q_rho(y): the phi-side poles carry Laurent data
// (s-s0)^order * phi(s) = sum laurent[j] u^j, and the Gamma-factor pole at
// s = 0 contributes phi(0).  The rho = 0 log-polynomials are baked at
// construction.
class MainTerm {
public:
    struct Pole {
        double s0;
        int order;
        std::vector<double> laurent;
    };

    MainTerm() = default;
    MainTerm(std::vector<Pole> poles, double phi_at_0);

    double eval0(double y) const;          // Q_0(y)
    LogPolySum logpoly0() const;           // Q_0 as a LogPolySum
    const std::vector<Pole>& poles() const { return poles_; }
    double phi0() const { return phi0_; }

private:
    std::vector<Pole> poles_;
    double phi0_ = 0.0;
    LogPolySum baked0_;
};

double eval_main(const MainTerm& main, double y);

// Q_rho(y) for integer rho >= 0: phi-pole residues against the Taylor
// series of Gamma(s)/Gamma(s+rho+1), plus the poles of that ratio at
// s = 0,-1,...,-rho weighted by phi(-j).  j_window restricts the ratio
// poles to j <= j_window: the Tong identity lives on a residue rectangle
// [r-b, c] with b - r < 1, which keeps only j = 0 there.
double eval_main_riesz(const LFunctionInstance& inst, double y, int rho);
LogPolySum main_riesz_logpoly(const LFunctionInstance& inst, int rho, int j_window = 1 << 20);

struct ResidueOptions {
    double radius = 0.35;
    int nodes = 64;
};

// Numerical-residue oracle: small-circle contour quadrature of
// Gamma(s) phi(s) y^{rho+s} / Gamma(s+rho+1) around every pole.
double numeric_residues(const LFunctionInstance& inst, double y, double rho,
                        ResidueOptions opt = {});

} // namespace slcf

#endif
