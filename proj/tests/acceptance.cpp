// Acceptance suite: exercises every headline numerical claim end to end and
// prints one PASS/FAIL line per criterion.  Exits nonzero on any failure.
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "slcf/coeffs.hpp"
#include "slcf/error_term.hpp"
#include "slcf/experiments.hpp"
#include "slcf/lfunc.hpp"
#include "slcf/lvalues.hpp"
#include "slcf/mainterm.hpp"
#include "slcf/mellin.hpp"
#include "slcf/special.hpp"
#include "slcf/voronoi.hpp"

using namespace slcf;

namespace {

int g_failures = 0;

void report(int idx, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", idx, what.c_str(),
                detail.c_str());
    if (!pass) g_failures++;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

int main() {
    std::printf("slcf acceptance suite\n");

    // ---- criterion 5: classical-formula reproduction --------------------
    {
        auto cf2 = classical_normalization(instance("zeta2"));
        auto cff = classical_normalization(instance("cusp12"));
        double amp = 1.0 / (kPi * std::sqrt(2.0));
        bool ok = std::abs(cf2.amp - amp) < 1e-12 && std::abs(cf2.freq - 4.0 * kPi) < 1e-12 &&
                  std::abs(cf2.phase0 + kPi / 4.0) < 1e-12 && std::abs(cff.amp - amp) < 1e-12 &&
                  std::abs(cff.freq - 4.0 * kPi) < 1e-12 && std::abs(cff.phase0 + kPi / 4.0) < 1e-12;
        report(5, ok, "R1 specializes to the classical truncated formula",
               "amp " + fmt(cf2.amp) + " vs 1/(pi sqrt2) = " + fmt(amp) + ", phase " +
                   fmt(cf2.phase0) + " vs -pi/4");
    }

    // ---- criterion 9: exponent calculator --------------------------------
    {
        auto r1 = error_exponent_rational(2, 1, 2);
        auto r2 = error_exponent_rational(3, 5, 8);
        auto r3 = error_exponent_rational(3, 7, 12);
        bool ok = r1 == std::make_pair(i64(1), i64(1)) && r2 == std::make_pair(i64(8), i64(5)) &&
                  r3 == std::make_pair(i64(14), i64(9));
        report(9, ok, "error_exponent reproduces 1, 8/5, 14/9 exactly",
               std::to_string(r1.first) + "/" + std::to_string(r1.second) + ", " +
                   std::to_string(r2.first) + "/" + std::to_string(r2.second) + ", " +
                   std::to_string(r3.first) + "/" + std::to_string(r3.second));
    }

    // ---- criterion 4: cosine expansion vs contour -------------------------
    {
        const auto& z2 = instance("zeta2");
        auto inv = z2.invariants(0.0);
        bool ok = true;
        std::string detail;
        double fc4 = f_rho_contour(inv, 1e4, 0.0);
        double fa4 = f_rho_asym(inv, 1e4, 0.0, 1);
        double bound = 1e-3 * std::pow(1e4, inv.theta_rho);
        ok = ok && std::abs(fc4 - fa4) < bound;
        detail += "x=1e4 err " + fmt(std::abs(fc4 - fa4)) + " < " + fmt(bound);
        for (double x : {1e3, 1e4, 1e5}) {
            double fc = f_rho_contour(inv, x, 0.0);
            double e1 = std::abs(fc - f_rho_asym(inv, x, 0.0, 1));
            double e0 = std::abs(fc - f_rho_asym(inv, x, 0.0, 0));
            ok = ok && e1 < e0;
        }
        auto spec = default_contour(inv, 2e3, 0.0);
        double base = f_rho_contour(inv, 2e3, 0.0, spec);
        auto spec2 = spec;
        spec2.b += 1.0;
        spec2.R *= 2.0;
        double moved = f_rho_contour(inv, 2e3, 0.0, spec2);
        double pathrel = std::abs(moved - base) / std::abs(base);
        ok = ok && pathrel < 1e-9;
        detail += ", path invariance " + fmt(pathrel);
        report(4, ok, "generalized-Bessel expansion against the contour oracle", detail);
    }

    // ---- criterion 3: Tong identity oracle -------------------------------
    {
        auto d2s = sieve_divisor(2, 2'000'000);
        auto repA = tong_check(instance("zeta2"), d2s, 100.5, 1.0, 1, 0, 0.0);
        auto repB = tong_check(instance("zeta2"), d2s, 100.5, 1.0, 1, 0, 10.0);
        auto lam = normalized_lambda(1'200'000);
        auto repC = tong_check(instance("cusp12"), lam, 50.5, 1.0, 1, 0, 0.0);
        bool ok = repA.rel_error < 1e-6 && repC.rel_error < 1e-6 &&
                  std::abs(repA.rhs - repB.rhs) <= 1e-6 * std::abs(repA.lhs) &&
                  repB.rel_error < 1e-6;
        report(3, ok, "Tong identity at (100.5,1,1) and (50.5,1,1)",
               "zeta2 rel " + fmt(repA.rel_error) + ", L=10 rel " + fmt(repB.rel_error) +
                   ", cusp12 rel " + fmt(repC.rel_error));
    }

    // ---- criterion 8: oracle suite ---------------------------------------
    {
        bool ok = true;
        std::string detail;
        // divisor sieve vs brute force to 1e4
        auto d3 = sieve_divisor(3, 10000);
        for (i64 n = 1; n <= 10000 && ok; n++) {
            i64 c = 0;
            for (i64 a = 1; a <= n; a++) {
                if (n % a) continue;
                i64 m = n / a;
                for (i64 b = 1; b * b <= m; b++)
                    if (m % b == 0) c += (b * b == m) ? 1 : 2;
            }
            if (d3.at64(n) != c) ok = false;
        }
        detail += ok ? "d3 sieve==brute(1e4)" : "d3 sieve mismatch";
        // tau vs direct q-expansion to 1e3
        auto tau = tau_coeffs(1000);
        auto direct = brute_tau(1000);
        bool tau_ok = true;
        for (i64 n = 1; n <= 1000; n++)
            if (tau.at128(n) != direct[std::size_t(n - 1)]) tau_ok = false;
        ok = ok && tau_ok;
        detail += tau_ok ? ", tau==q-expansion(1e3)" : ", tau mismatch";
        // Deligne bound for all computed n
        auto lam = normalized_lambda(50000);
        auto d2 = sieve_divisor(2, 50000);
        bool del_ok = true;
        for (i64 n = 1; n <= 50000; n++)
            if (std::abs(lam.at(n)) > double(d2.at64(n)) * (1.0 + 1e-12)) del_ok = false;
        ok = ok && del_ok;
        detail += del_ok ? ", Deligne ok" : ", Deligne violated";
        // Hecke relations for p <= 100
        auto tauH = tau_coeffs(10000);
        bool hecke_ok = true;
        for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                      71, 73, 79, 83, 89, 97}) {
            i128 p11 = 1;
            for (int i = 0; i < 11; i++) p11 *= p;
            if (tauH.at128(p * p) != tauH.at128(p) * tauH.at128(p) - p11) hecke_ok = false;
        }
        ok = ok && hecke_ok;
        detail += hecke_ok ? ", Hecke ok" : ", Hecke violated";
        // closed-form main terms vs the residue oracle
        double worst = 0.0;
        for (const auto& name : registry_names()) {
            const auto& inst = instance(name);
            for (double yv : {10.0, 1e3, 1e6}) {
                double closed = inst.main0(yv);
                double oracle = numeric_residues(inst, yv, 0.0);
                double rel = std::abs(closed - oracle) / std::max(1.0, std::abs(closed));
                worst = std::max(worst, rel);
            }
        }
        ok = ok && worst < 1e-9;
        detail += ", main-term worst rel " + fmt(worst);
        report(8, ok, "oracle suite (sieves, tau, Deligne, Hecke, residues)", detail);
    }

    // ---- zeta2 at scale: criteria 1, 6, 7 --------------------------------
    {
        const auto& z2 = instance("zeta2");
        auto d2 = sieve_divisor(2, 10'000'000);

        // criterion 1: Cramer constant at T = 1e7 within 5%
        auto rep = mean_square(z2, d2, {1e5, 1e6, 1e7}, 4);
        double cramer =
            std::pow(riemann_zeta(cplx(1.5, 0.0)).real(), 4.0) / (6.0 * kPi * kPi * kZeta3);
        double ratio = rep.rows[2].ratio;
        bool ok1 = std::abs(ratio / cramer - 1.0) < 0.05;
        report(1, ok1, "Cramer constant from the zeta2 mean square",
               "R(1e7) = " + fmt(ratio) + ", zeta^4(3/2)/(6 pi^2 zeta(3)) = " + fmt(cramer) +
                   ", ratio-1 = " + fmt(ratio / cramer - 1.0));

        // criterion 6: residual decay across M = 1e2, 1e3, 1e4 in the Q=1
        // normalization of the truncated formula (mu_n = n there, so the
        // cutoffs are n-counts; the API cutoff is on mu_n)
        double mu1 = z2.mu_step();
        auto st = residual_stats(z2, d2, 1e4, 2e4, 1000, {1e2 * mu1, 1e3 * mu1, 1e4 * mu1});
        bool ok6 = st.rows[1].rms_residual <= st.rows[0].rms_residual * (1 + 1e-9) &&
                   st.rows[2].rms_residual <= st.rows[1].rms_residual * (1 + 1e-9) &&
                   st.rows[2].rms_residual < 0.25 * st.rows[2].rms_e;
        report(6, ok6, "Voronoi residual decay over [1e4, 2e4]",
               "RMS(E-R1) = " + fmt(st.rows[0].rms_residual) + " -> " + fmt(st.rows[1].rms_residual) +
                   " -> " + fmt(st.rows[2].rms_residual) + ", RMS(E) = " + fmt(st.rows[2].rms_e));

        // criterion 7: distribution + moments
        DistributionOptions opt;
        opt.model = true;
        opt.N1 = 1000;
        opt.model_samples = 24000;
        opt.seed = 1;
        auto dist_rep = distribution(z2, d2, 1e7, 1'000'000, opt);
        bool ok_ks = dist_rep.ks < 0.05;
        // reported (non-gating): sample mean and the Parseval split at two
        // frequency-box sizes
        double theta = z2.invariants(0.0).theta_rho;
        ErrorTerm E7(z2, d2);
        double wvar = weighted_e2_integral(E7, 1.0, 1e7, -2.0 * theta, 4) / 1e7;
        double mv1k = model_variance(z2, d2, 1000, 200);
        double mv60k = model_variance(z2, d2, 60000, 200);
        std::printf(
            "    [info] criterion 7 extras: mean = %.4f, Parseval diff N1=1e3: %.3f, N1=6e4: %.3f\n",
            dist_rep.mean, std::abs(wvar - mv1k) / wvar, std::abs(wvar - mv60k) / wvar);

        auto mom = moments(z2, d2, {0.5, 1.0, 1.5, 2.0}, {1e5, 1e6, 1e7}, 4);
        // rows are grouped by u (3 T's each); u = 2 block is the last
        double u2_at_1e7 = mom[11].value;
        bool ok_u2 = std::abs(u2_at_1e7 - rep.rows[2].ratio) <=
                     1e-6 * std::max(1.0, std::abs(rep.rows[2].ratio));
        bool ok_cauchy = true;
        std::string cdetail;
        for (int ui = 0; ui < 3; ui++) {
            double a = mom[std::size_t(3 * ui)].value;
            double b = mom[std::size_t(3 * ui + 1)].value;
            double c = mom[std::size_t(3 * ui + 2)].value;
            double d1 = std::abs(b / a - 1.0), d2r = std::abs(c / b - 1.0);
            if (!(d1 < 0.05 && d2r < 0.05)) ok_cauchy = false;
            cdetail += " u=" + fmt(mom[std::size_t(3 * ui)].u) + ":" + fmt(d2r);
        }
        report(7, ok_ks && ok_u2 && ok_cauchy, "distribution model and moment limits",
               "KS = " + fmt(dist_rep.ks) + ", |moments(2)-ratio| = " +
                   fmt(std::abs(u2_at_1e7 - rep.rows[2].ratio)) + ", Cauchy diffs" + cdetail);
    }

    // ---- criterion 2: degree-3 asymptotic --------------------------------
    {
        const auto& z3 = instance("zeta3");
        auto d3 = sieve_divisor(3, 10'000'000);
        auto rep = mean_square(z3, d3, {1e5, 1e6, 1e7}, 4);
        double C3 = rep.predicted.value;
        double e5 = std::abs(rep.rows[0].ratio / C3 - 1.0);
        double e6 = std::abs(rep.rows[1].ratio / C3 - 1.0);
        double e7 = std::abs(rep.rows[2].ratio / C3 - 1.0);
        bool ok = e5 >= e6 && e6 >= e7 && e7 < 0.15;
        report(2, ok, "zeta3 mean square approaches C_3",
               "R = " + fmt(rep.rows[0].ratio) + ", " + fmt(rep.rows[1].ratio) + ", " +
                   fmt(rep.rows[2].ratio) + " vs C3 = " + fmt(C3) + "; |R/C-1| = " + fmt(e5) +
                   " -> " + fmt(e6) + " -> " + fmt(e7));
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
