#include "doctest.h"

#include <cmath>

#include "slcf/coeffs.hpp"
#include "slcf/lfunc.hpp"
#include "slcf/mellin.hpp"

using namespace slcf;
using doctest::Approx;

TEST_CASE("contour vs asymptotic expansion for zeta2") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    for (double x : {1e3, 1e4}) {
        double fc = f_rho_contour(inv, x, 0.0);
        double fa0 = f_rho_asym(inv, x, 0.0, 0);
        double fa1 = f_rho_asym(inv, x, 0.0, 1);
        double scale = std::pow(x, inv.theta_rho);
        CHECK(std::abs(fc - fa1) < 1e-3 * scale);
        CHECK(std::abs(fc - fa1) < std::abs(fc - fa0));
    }
}

TEST_CASE("contour realness diagnostic") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    auto res = f_rho_contour_full(inv, 500.0, 0.0, default_contour(inv, 500.0, 0.0));
    CHECK(std::abs(res.imag_diag) < 1e-9 * std::max(1.0, std::abs(res.value)));
}

TEST_CASE("contour path independence") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    double x = 2000.0;
    auto spec = default_contour(inv, x, 0.0);
    double base = f_rho_contour(inv, x, 0.0, spec);
    auto spec2 = spec;
    spec2.b += 1.0;
    spec2.R *= 2.0;
    double moved = f_rho_contour(inv, x, 0.0, spec2);
    CHECK(std::abs(moved - base) < 1e-9 * std::abs(base));
}

TEST_CASE("derivative identity d/dx f_{rho+1} = f_rho") {
    const auto& z2 = instance("zeta2");
    auto inv0 = z2.invariants(0.0);
    auto inv1 = z2.invariants(1.0);
    double x = 1000.0, dlt = 0.25;
    // five-point stencil
    double d = (-f_rho_contour(inv1, x + 2 * dlt, 1.0) + 8 * f_rho_contour(inv1, x + dlt, 1.0) -
                8 * f_rho_contour(inv1, x - dlt, 1.0) + f_rho_contour(inv1, x - 2 * dlt, 1.0)) /
               (12.0 * dlt);
    double f0 = f_rho_contour(inv0, x, 0.0);
    CHECK(std::abs(d - f0) / std::abs(f0) < 1e-6);
}

TEST_CASE("index shift identity") {
    const auto& z2 = instance("zeta2");
    auto inv0 = z2.invariants(0.0);
    auto inv1 = z2.invariants(1.0);
    // int_0^y f_rho((u+t) mu) dt = (f_{rho+1}((u+y) mu) - f_{rho+1}(u mu)) / mu
    double u = 80.0, y = 2.0, mu = instance("zeta2").mu_step() * 3.0; // mu_3
    int n = 64;
    double integral = 0.0;
    for (int i = 0; i < n; i++) {
        double t = y * (i + 0.5) / n;
        integral += f_rho_contour(inv0, (u + t) * mu, 0.0) * (y / n);
    }
    double rhs = (f_rho_contour(inv1, (u + y) * mu, 1.0) - f_rho_contour(inv1, u * mu, 1.0)) / mu;
    CHECK(std::abs(integral - rhs) < 1e-4 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("envelope domination at large x") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    for (double x : {1e3, 3e3, 1e4, 3e4}) {
        double f = f_rho_contour(inv, x, 0.0);
        CHECK(std::abs(f) <= 1.5 * inv.kappa0 * std::pow(x, inv.theta_rho));
    }
}

TEST_CASE("zero crossing spacing halves in sqrt x when x -> 4x") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    // count sign changes of the leading asymptotic over [x, 2x]
    auto count = [&](double x0) {
        int c = 0;
        double prev = f_rho_asym(inv, x0, 0.0, 0);
        int steps = 4000;
        for (int i = 1; i <= steps; i++) {
            double x = x0 * (1.0 + double(i) / steps);
            double v = f_rho_asym(inv, x, 0.0, 0);
            if ((v < 0) != (prev < 0)) c++;
            prev = v;
        }
        return c;
    };
    int c1 = count(1e4);
    int c2 = count(4e4);
    // phase h sqrt(x): over [x,2x] phase grows by h(sqrt2-1)sqrt(x): doubling expected
    CHECK(std::abs(double(c2) / double(c1) - 2.0) < 0.1);
}

TEST_CASE("a_rho riesz means") {
    auto d2 = sieve_divisor(2, 100);
    // divisor, rho=1, y=3: 1*(3-1) + 2*(3-2) = 4
    CHECK(a_rho(d2, 3.0, 1) == Approx(4.0));
    CHECK(a_rho(d2, 0.5, 0) == Approx(0.0));
    CHECK(a_rho(d2, 0.5, 3) == Approx(0.0));
    // rho = 0 matches the primed prefix query
    PrefixSum ps(d2);
    CHECK(a_rho(d2, 10.0, 0) == Approx(ps.query(10.0, true)));
    CHECK(a_rho(d2, 10.5, 0) == Approx(ps.query(10.5)));
}

TEST_CASE("m >= 2 asymptotic terms are rejected") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    CHECK_THROWS_AS((void)f_rho_asym(inv, 100.0, 0.0, 2), Error);
}

TEST_CASE("non-integer rho evaluations agree") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.5);
    double x = 2000.0;
    double fc = f_rho_contour(inv, x, 0.5);
    double fa = f_rho_asym(inv, x, 0.5, 1);
    CHECK(std::abs(fc - fa) < 1e-2 * std::pow(x, inv.theta_rho));
}

TEST_CASE("contour precondition violations") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    auto spec = default_contour(inv, 100.0, 0.0);
    auto bad = spec;
    bad.a = 0.9; // beyond the absolute-convergence constraint a < 1/2
    CHECK_THROWS_AS((void)f_rho_contour(inv, 100.0, 0.0, bad), Error);
    bad = spec;
    bad.b = 0.5; // must exceed r
    CHECK_THROWS_AS((void)f_rho_contour(inv, 100.0, 0.0, bad), Error);
    CHECK_THROWS_AS((void)f_rho_contour(inv, -3.0, 0.0, spec), Error);
}

TEST_CASE("tong identity for zeta2") {
    const auto& z2 = instance("zeta2");
    auto d2 = sieve_divisor(2, 2'000'000);
    auto rep = tong_check(z2, d2, 100.5, 1.0, 1, 0, 0.0);
    INFO("lhs=", rep.lhs, " rhs=", rep.rhs, " rel=", rep.rel_error);
    CHECK(rep.rel_error < 1e-6);
    // split form with L = 10 agrees
    auto rep10 = tong_check(z2, d2, 100.5, 1.0, 1, 0, 10.0);
    CHECK(rep10.rel_error < 1e-6);
    CHECK(rep.rhs == Approx(rep10.rhs).epsilon(1e-6));
}

TEST_CASE("tong identity for cusp12") {
    const auto& f = instance("cusp12");
    auto lam = normalized_lambda(1'200'000);
    auto rep = tong_check(f, lam, 50.5, 1.0, 1, 0, 0.0);
    INFO("lhs=", rep.lhs, " rhs=", rep.rhs, " rel=", rep.rel_error);
    CHECK(rep.rel_error < 1e-6);
}

TEST_CASE("tong identity across the x grid") {
    // log-spaced anchors; 100.5 is covered by the dedicated cases above
    {
        auto d2 = sieve_divisor(2, 6'000'000);
        for (double x : {50.5, 1000.5}) {
            auto rep = tong_check(instance("zeta2"), d2, x, 1.0, 1, 0, 0.0);
            INFO("zeta2 x=", x, " rel=", rep.rel_error);
            CHECK(rep.rel_error < 1e-6);
        }
    }
    {
        auto lam = normalized_lambda(1'200'000);
        auto rep = tong_check(instance("cusp12"), lam, 1000.5, 1.0, 1, 0, 0.0);
        INFO("cusp12 x=1000.5 rel=", rep.rel_error);
        CHECK(rep.rel_error < 1e-6);
    }
}

TEST_CASE("tong identity at a positive rho shift") {
    auto d2 = sieve_divisor(2, 2'000'000);
    auto rep = tong_check(instance("zeta2"), d2, 100.5, 1.0, 1, 1, 0.0);
    CHECK(rep.rel_error < 1e-5);
}

TEST_CASE("tong auto-raises k for degree 3") {
    // rho + k must exceed alpha - 1/2 = 1 for zeta3, so k = 1 is raised to 2
    // and the iterated average runs through the k = 2 Riesz differences.
    // The d = 3 asymptotic arm converges like X^{-1/3}, hence the looser
    // tolerance here; the 1e-6 oracle claims are for the degree-2 cases.
    auto d3 = sieve_divisor(3, 3'000'000);
    TongOptions opt;
    opt.tol = 1e-4;
    auto rep = tong_check(instance("zeta3"), d3, 50.5, 1.0, 1, 0, 0.0, opt);
    CHECK(rep.k == 2);
    CHECK(rep.rel_error < 2e-3);
}

TEST_CASE("tong auto-raises k for degree 4") {
    // zeta4 admissibility needs rho + k > 3/2; terms decay like n^{-9/8},
    // so the series is long and the handshake is checked at a loose budget
    auto d4 = sieve_divisor(4, 6'000'000);
    TongOptions opt;
    opt.tol = 1e-3;
    auto rep = tong_check(instance("zeta4"), d4, 30.5, 1.0, 1, 0, 0.0, opt);
    CHECK(rep.k == 2);
    CHECK(rep.rel_error < 2e-2);
}

TEST_CASE("kappa2 fit is finite and small") {
    const auto& z2 = instance("zeta2");
    auto inv = z2.invariants(0.0);
    std::vector<double> xs;
    for (int i = 0; i < 12; i++) xs.push_back(800.0 + 140.0 * i);
    double k2 = fit_kappa2(inv, xs);
    CHECK(std::isfinite(k2));
    CHECK(std::abs(k2) < 10.0 * inv.kappa0);
}
