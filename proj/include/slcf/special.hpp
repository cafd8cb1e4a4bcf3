#ifndef SLCF_SPECIAL_HPP
#define SLCF_SPECIAL_HPP

#include <cmath>
#include <vector>

#include "slcf/common.hpp"

namespace slcf {

// x^s for real x > 0.
inline cplx rpow(double x, cplx s) { return std::exp(s * std::log(x)); }

// x^{1/d} with a Newton polish for integer d; the phase h (y mu_n)^{1/d}
// is the accuracy bottleneck of every cosine sum downstream.
inline double root_d(double x, double d) {
    double u = std::exp(std::log(x) / d);
    long rd = std::lround(d);
    if (std::abs(d - double(rd)) < 1e-12 && rd >= 1 && rd <= 8) {
        double up = 1.0;
        for (long i = 0; i < rd; i++) up *= u;
        u += u * (x - up) / (d * up);
    }
    return u;
}

// Principal-branch complex log-gamma (Lanczos g=7 with reflection for
// Re z < 1/2).  Additive 2*pi*i branch slips are possible left of the
// imaginary axis; every consumer exponentiates sums of these values, so
// only the value mod 2*pi*i matters there.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// Hurwitz zeta(s,a), a > 0, by Euler-Maclaurin.  Absolute error below
// 1e-12 for |Im s| <= 1e3, -10 <= Re s <= 10.
cplx hurwitz_zeta(cplx s, double a, int extra_terms = 0);

// Riemann zeta via hurwitz_zeta(s,1); throws on s == 1.
cplx riemann_zeta(cplx s, int extra_terms = 0);

// L(s,chi) for the real character chi = kronecker(D,.) of modulus |D|,
// evaluated over a single period block of Hurwitz zetas.
cplx dirichlet_l(cplx s, i64 D);

// Upper incomplete gamma Gamma(a,x), complex a, real x > 0.
cplx upper_gamma(cplx a, double x);

// Bernoulli polynomial B2.
inline double bernoulli2(double x) { return x * x - x + 1.0 / 6.0; }

// polygamma values at positive integer arguments (exact closed forms).
double psi0_int(int m);
double psi1_int(int m);
double psi2_int(int m);

// real digamma, any x > 0
double digamma(double x);

// Kronecker symbol (D|n) for n >= 1.
int kronecker_symbol(i64 D, u64 n);
bool is_fundamental_discriminant(i64 D);

} // namespace slcf

#endif
