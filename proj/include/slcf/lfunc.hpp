#ifndef SLCF_LFUNC_HPP
#define SLCF_LFUNC_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "slcf/coeffs.hpp"
#include "slcf/common.hpp"
#include "slcf/mainterm.hpp"

namespace slcf {

struct GammaFactor {
    double alpha;
    cplx beta;
};

struct FunctionalEquation {
    double Q = 1.0;
    double omega = 1.0;
    double r = 1.0;
    std::vector<GammaFactor> delta1;
    std::vector<GammaFactor> delta2;

    void validate() const;
};

// Everything the cosine expansion and the truncated series consume,
// computed by direct
// evaluation of the defining sums.
struct DerivedInvariants {
    double rho = 0.0;
    double alpha = 0.0;
    double degree = 0.0; // 2 alpha
    double mu = 0.0, mu_p = 0.0;
    double nu = 0.0, nu_p = 0.0;
    double tau = 0.0, tau_p = 0.0;
    double h = 0.0;
    double theta_rho = 0.0;
    double kappa0 = 0.0;
    double kappa1 = 0.0;
    double c0 = 0.0; // cos phase offset c_0; c_l = c_0 + l/2
    bool complex_beta = false; // untested corner, flagged
    FunctionalEquation fe;     // carried so constants can be re-derived
};

DerivedInvariants derive_invariants(const FunctionalEquation& fe, double rho);

struct KappaConstants {
    double kappa0, kappa1, c0;
};
KappaConstants kappa_constants(const DerivedInvariants& inv, double rho);

// Mean-square error exponent 2 - (3-4s)/(2d(1-s)-1); the precondition names
// the sigma* window.
double error_exponent(int d, double sigma_star);
// exact rational form for sigma* = p/q
std::pair<i64, i64> error_exponent_rational(int d, i64 p, i64 q);

class LFunctionInstance {
public:
    std::string name;
    FunctionalEquation fe;
    double theta = 0.0;       // Ramanujan exponent
    double sigma_star = 0.5;  // mean-square abscissa
    double sigma_star_conditional = 0.0; // 0 = none
    double sigma_b_star = 1.0;
    bool nonneg = false;
    MainTerm main;
    std::function<cplx(cplx)> phi;
    std::function<ArithmeticSequence(i64)> make_coeffs;

    // dual series data: b(n) = omega Q^{-1} a(n), mu_n = n Q^{-2}
    double b_scale() const { return fe.omega / fe.Q; }
    double mu_step() const { return 1.0 / (fe.Q * fe.Q); }
    int degree() const { return int(std::lround(2.0 * alpha())); }
    double alpha() const;

    double main0(double y) const { return eval_main(main, y); }
    DerivedInvariants invariants(double rho = 0.0) const { return derive_invariants(fe, rho); }
};

// global cap for the tau pipeline (default 2e6), adjustable from the CLI
i64 tau_limit();
void set_tau_limit(i64 n);

std::vector<std::string> registry_names();
// Shared immutable instances; "dedekind-quad:D" accepts any fundamental D.
const LFunctionInstance& instance(const std::string& name);

} // namespace slcf

#endif
