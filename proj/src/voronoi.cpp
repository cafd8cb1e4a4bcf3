#include "slcf/voronoi.hpp"

#include <cmath>

#include "slcf/special.hpp"
#include "slcf/util.hpp"

namespace slcf {

TruncationResult truncated_r1(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                              double y, double M, int rho) {
    require(y > 0.0, "truncated_r1: y must be positive");
    auto inv = inst.invariants(double(rho));
    double mu1 = inst.mu_step();
    double bscale = inst.b_scale();
    double d = 2.0 * inv.alpha;
    double rexp = inv.fe.r + double(rho) - inv.theta_rho;

    TruncationResult out;
    out.y = y;
    out.M = M;
    i64 nmax = i64(std::floor(M / mu1));
    require(nmax <= coeffs.size(), "truncated_r1: M beyond available coefficient range");
    Kahan acc;
    for (i64 n = 1; n <= nmax; n++) {
        double a_n = coeffs.at(n);
        if (a_n == 0.0) continue;
        double mu_n = mu1 * double(n);
        double phase = inv.h * root_d(y * mu_n, d) + inv.c0 * kPi;
        acc.add(bscale * a_n * std::pow(mu_n, -rexp) * std::cos(phase));
    }
    out.terms_used = nmax;
    out.value = inv.kappa0 * std::pow(y, inv.theta_rho) * acc.value();
    return out;
}

ClassicalForm classical_normalization(const LFunctionInstance& inst) {
    auto inv = inst.invariants(0.0);
    double Q = inst.fe.Q;
    ClassicalForm cf;
    cf.amp = inv.kappa0 * inst.fe.omega * std::pow(Q, 2.0 * (inst.fe.r - inv.theta_rho) - 1.0);
    cf.freq = inv.h * std::pow(Q, -1.0 / inv.alpha);
    double p = inv.c0 * kPi;
    p = std::remainder(p, 2.0 * kPi);
    if (p <= -kPi) p += 2.0 * kPi;
    cf.phase0 = p;
    return cf;
}

double r1_classical(const LFunctionInstance& inst, const ArithmeticSequence& coeffs, double y,
                    double M, int rho) {
    require(rho == 0, "r1_classical: rewritten form is kept at rho = 0");
    auto inv = inst.invariants(0.0);
    auto cf = classical_normalization(inst);
    double d = 2.0 * inv.alpha;
    double rexp = inst.fe.r - inv.theta_rho;
    i64 nmax = i64(std::floor(M / inst.mu_step()));
    require(nmax <= coeffs.size(), "r1_classical: M beyond available coefficient range");
    Kahan acc;
    for (i64 n = 1; n <= nmax; n++) {
        double a_n = coeffs.at(n);
        if (a_n == 0.0) continue;
        double phase = cf.freq * root_d(y * double(n), d) + cf.phase0;
        acc.add(a_n * std::pow(double(n), -rexp) * std::cos(phase));
    }
    return cf.amp * std::pow(y, inv.theta_rho) * acc.value();
}

ResidualStats residual_stats(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                             double y_lo, double y_hi, i64 samples,
                             const std::vector<double>& M_list) {
    require(y_lo >= 1.0 && y_hi > y_lo, "residual_stats: bad range");
    require(samples >= 2, "residual_stats: need at least 2 samples");
    require(y_hi <= double(coeffs.size()), "residual_stats: range beyond coefficients");
    ErrorTerm E(inst, coeffs);

    // half-integer grid
    std::vector<double> ys(static_cast<std::size_t>(samples));
    double step = (y_hi - y_lo) / double(samples);
    for (i64 i = 0; i < samples; i++)
        ys[std::size_t(i)] = std::floor(y_lo + double(i) * step) + 0.5;

    std::vector<double> ev(static_cast<std::size_t>(samples));
    double sum_e2 = parallel_sum(std::size_t(samples), [&](std::size_t i) {
        double v = E(ys[i]);
        ev[i] = v;
        return v * v;
    });

    auto inv = inst.invariants(0.0);
    double mu1 = inst.mu_step();
    double bscale = inst.b_scale();
    double d = 2.0 * inv.alpha;
    double rexp = inst.fe.r - inv.theta_rho;

    ResidualStats out;
    out.y_lo = y_lo;
    out.y_hi = y_hi;
    out.samples = samples;
    for (double M : M_list) {
        i64 nmax = i64(std::floor(M / mu1));
        require(nmax <= coeffs.size(), "residual_stats: M beyond coefficient range");
        // precompute coefficient weights
        std::vector<double> w(static_cast<std::size_t>(std::max<i64>(nmax, 0)));
        std::vector<double> mu_pow(w.size());
        for (i64 n = 1; n <= nmax; n++) {
            double mu_n = mu1 * double(n);
            w[std::size_t(n - 1)] = bscale * coeffs.at(n) * std::pow(mu_n, -rexp);
            mu_pow[std::size_t(n - 1)] = mu_n;
        }
        Kahan res2, r12;
        std::vector<double> partial_res(static_cast<std::size_t>(samples));
        std::vector<double> partial_r1(static_cast<std::size_t>(samples));
        parallel_chunks(std::size_t(samples), 256, [&](std::size_t, std::size_t b0, std::size_t e0) {
            for (std::size_t i = b0; i < e0; i++) {
                double y = ys[i];
                Kahan acc;
                for (std::size_t j = 0; j < w.size(); j++) {
                    if (w[j] == 0.0) continue;
                    acc.add(w[j] * std::cos(inv.h * root_d(y * mu_pow[j], d) + inv.c0 * kPi));
                }
                double r1 = inv.kappa0 * std::pow(y, inv.theta_rho) * acc.value();
                partial_r1[i] = r1;
                partial_res[i] = ev[i] - r1;
            }
        });
        for (i64 i = 0; i < samples; i++) {
            res2.add(partial_res[std::size_t(i)] * partial_res[std::size_t(i)]);
            r12.add(partial_r1[std::size_t(i)] * partial_r1[std::size_t(i)]);
        }
        ResidualRow row;
        row.M = M;
        row.rms_residual = std::sqrt(res2.value() / double(samples));
        row.rms_e = std::sqrt(sum_e2 / double(samples));
        row.rms_r1 = std::sqrt(r12.value() / double(samples));
        out.rows.push_back(row);
    }
    return out;
}

} // namespace slcf
