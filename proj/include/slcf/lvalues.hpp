#ifndef SLCF_LVALUES_HPP
#define SLCF_LVALUES_HPP

#include <memory>
#include <vector>

#include "slcf/common.hpp"

namespace slcf {

// Exact tau(1..N) by direct expansion of q prod (1-q^n)^24; O(N^2) with
// checked 128-bit arithmetic.  Small N only; the production path is the
// NTT pipeline in coeffs.cpp.
std::vector<i128> brute_tau(i64 N);
std::vector<double> brute_lambda(i64 N);

// L(f,s) for the weight-12 level-1 cusp form, valid on all of C, via the
// theta-split incomplete-gamma representation.  Exponentially convergent.
class CuspL {
public:
    CuspL();
    cplx operator()(cplx s) const;

private:
    std::vector<double> lambda_; // lambda(n), n <= 40
};

// L(sym^2 f, s) through the completed-function integral: Theta(t) is
// precomputed on a fixed Gauss-Legendre grid once, after which each
// evaluation is a short dot product.  gamma(s) here is
// pi^{-3s/2} G((s+1)/2) G((s+11)/2) G((s+12)/2).
class Sym2L {
public:
    Sym2L();
    cplx operator()(cplx s) const;
    cplx completed(cplx s) const; // Lambda(s) = gamma(s) L(s)

private:
    double theta_at(double t) const;
    std::vector<double> c2_;          // Dirichlet coefficients of sym^2
    std::vector<double> grid_t_, grid_w_, grid_theta_;
};

} // namespace slcf

#endif
