#include "doctest.h"

#include <cmath>

#include "slcf/coeffs.hpp"
#include "slcf/lfunc.hpp"
#include "slcf/mainterm.hpp"

using namespace slcf;
using doctest::Approx;

TEST_CASE("zeta2 closed form") {
    const auto& z2 = instance("zeta2");
    // Q(y) = y log y + (2 gamma - 1) y + 1/4
    for (double y : {1.0, std::exp(1.0), 1000.0}) {
        double expect = y * std::log(y) + (2.0 * kEulerGamma - 1.0) * y + 0.25;
        CHECK(z2.main0(y) == Approx(expect).epsilon(1e-14));
    }
    CHECK(z2.main0(1.0) == Approx(2.0 * kEulerGamma - 0.75).epsilon(1e-14));
    CHECK(z2.main.phi0() == Approx(0.25));
}

TEST_CASE("closed forms against the residue oracle") {
    for (const auto& name : registry_names()) {
        const auto& inst = instance(name);
        for (double y : {10.0, 1e3, 1e6}) {
            double closed = inst.main0(y);
            double oracle = numeric_residues(inst, y, 0.0);
            INFO(name, " y=", y);
            REQUIRE(std::abs(closed - oracle) <= 1e-9 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST_CASE("oracle is radius independent") {
    const auto& z3 = instance("zeta3");
    ResidueOptions o1, o2;
    o1.radius = 0.2;
    o2.radius = 0.4;
    double a = numeric_residues(z3, 1e2, 0.0, o1);
    double b = numeric_residues(z3, 1e2, 0.0, o2);
    CHECK(a == Approx(b).epsilon(1e-11));
    // circle reaching a neighboring pole is rejected
    ResidueOptions bad;
    bad.radius = 1.1;
    CHECK_THROWS_AS((void)numeric_residues(z3, 1e2, 0.0, bad), Error);
}

TEST_CASE("cusp12 main term is the constant L_f(0)") {
    const auto& f = instance("cusp12");
    double c = f.main0(7.0);
    CHECK(c == Approx(f.main0(1234.5)).epsilon(1e-15));
    CHECK(c == Approx(numeric_residues(f, 50.0, 0.0)).epsilon(1e-10));
}

TEST_CASE("E + Q reproduces the prefix sum at half integers") {
    const auto& z2 = instance("zeta2");
    auto d2 = sieve_divisor(2, 2000);
    PrefixSum ps(d2);
    for (double y : {10.5, 333.5, 1999.5}) {
        double E = ps.query(y) - z2.main0(y);
        CHECK(E + z2.main0(y) == Approx(ps.query(y)).epsilon(1e-15));
    }
}

TEST_CASE("riesz main term shifts") {
    const auto& z2 = instance("zeta2");
    // rho = 1: y^2 (log y + 2 gamma - 3/2)/2 + y/4 - phi(-1)
    double y = 50.0;
    double expect = 0.5 * y * y * (std::log(y) + 2.0 * kEulerGamma - 1.5) + 0.25 * y;
    // the G-ratio pole at s=-1 contributes -phi(-1) = -zeta(-1)^2
    double z_m1 = -1.0 / 12.0;
    expect -= z_m1 * z_m1;
    CHECK(eval_main_riesz(z2, y, 1) == Approx(expect).epsilon(1e-12));
    // rho = 0 must agree with the baked polynomial
    CHECK(eval_main_riesz(z2, y, 0) == Approx(z2.main0(y)).epsilon(1e-14));
    // oracle agreement at rho = 1 and 2
    for (int rho : {1, 2}) {
        double closed = eval_main_riesz(z2, 200.0, rho);
        double oracle = numeric_residues(z2, 200.0, double(rho));
        CHECK(closed == Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("logpoly antiderivative differentiates back") {
    const auto& z3 = instance("zeta3");
    auto q = main_riesz_logpoly(z3, 0);
    auto Q1 = q.antiderivative();
    double y = 123.0, h = 1e-4;
    double deriv = (Q1.eval(y + h) - Q1.eval(y - h)) / (2.0 * h);
    CHECK(deriv == Approx(q.eval(y)).epsilon(1e-8));
    // Gauss-Legendre cross check of the definite integral
    double a = 10.0, b = 250.0;
    double exact = Q1.eval(b) - Q1.eval(a);
    double num = 0.0;
    int n = 2000;
    for (int i = 0; i < n; i++) {
        double t = a + (b - a) * (i + 0.5) / n;
        num += q.eval(t) * (b - a) / n;
    }
    CHECK(exact == Approx(num).epsilon(1e-6));
}
