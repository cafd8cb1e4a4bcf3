#include "slcf/mainterm.hpp"

#include <cmath>

#include "slcf/lfunc.hpp"
#include "slcf/special.hpp"

namespace slcf {

double LogPolySum::eval(double y) const {
    require(y > 0.0, "main term: y must be positive");
    double L = std::log(y);
    double acc = 0.0;
    for (const auto& t : terms) {
        double p = 0.0;
        for (std::size_t i = t.logpoly.size(); i-- > 0;) p = p * L + t.logpoly[i];
        acc += std::pow(y, t.expo) * p;
    }
    return acc;
}

LogPolySum LogPolySum::antiderivative() const {
    LogPolySum out;
    for (const auto& t : terms) {
        require(t.expo != -1.0, "main term antiderivative: exponent -1 unsupported");
        double b1 = t.expo + 1.0;
        Term nt;
        nt.expo = b1;
        nt.logpoly.assign(t.logpoly.size(), 0.0);
        // int y^b L^m dy = y^{b+1} sum_i (-1)^i m!/(m-i)! / (b+1)^{i+1} L^{m-i}
        for (std::size_t m = 0; m < t.logpoly.size(); m++) {
            double c = t.logpoly[m];
            if (c == 0.0) continue;
            double falling = 1.0;
            double powb = b1;
            for (std::size_t i = 0; i <= m; i++) {
                nt.logpoly[m - i] += c * ((i % 2) ? -1.0 : 1.0) * falling / powb;
                falling *= double(m - i);
                powb *= b1;
            }
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

namespace {

// series product truncated at `order` coefficients
std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b,
                               std::size_t order) {
    std::vector<double> c(order, 0.0);
    for (std::size_t i = 0; i < a.size() && i < order; i++)
        for (std::size_t j = 0; j < b.size() && i + j < order; j++) c[i + j] += a[i] * b[j];
    return c;
}

// Taylor coefficients of 1/prod_{j=0..rho} (s0+j+u) up to `order` terms
std::vector<double> g_ratio_series(double s0, int rho, std::size_t order) {
    std::vector<double> acc(order, 0.0);
    acc[0] = 1.0;
    for (int j = 0; j <= rho; j++) {
        double c = s0 + double(j);
        std::vector<double> f(order, 0.0);
        double p = 1.0 / c;
        for (std::size_t k = 0; k < order; k++) {
            f[k] = p;
            p *= -1.0 / c;
        }
        acc = series_mul(acc, f, order);
    }
    return acc;
}

// log-polynomial of one phi-pole residue: y^{rho+s0} * P(log y)
LogPolySum::Term pole_term(const MainTerm::Pole& pole, int rho) {
    std::size_t ord = std::size_t(pole.order);
    auto g = g_ratio_series(pole.s0, rho, ord);
    LogPolySum::Term t;
    t.expo = double(rho) + pole.s0;
    t.logpoly.assign(ord, 0.0);
    double mfact = 1.0;
    for (std::size_t m = 0; m < ord; m++) {
        if (m > 0) mfact *= double(m);
        double d = 0.0;
        std::size_t rem = ord - 1 - m;
        for (std::size_t i = 0; i <= rem && i < pole.laurent.size(); i++)
            d += pole.laurent[i] * g[rem - i];
        t.logpoly[m] = d / mfact;
    }
    return t;
}

} // namespace

MainTerm::MainTerm(std::vector<Pole> poles, double phi_at_0)
    : poles_(std::move(poles)), phi0_(phi_at_0) {
    for (const auto& p : poles_) {
        require(p.order >= 1 && p.order <= 8, "main term: pole order out of range");
        require(p.laurent.size() == std::size_t(p.order),
                "main term: laurent data must match pole order");
        baked0_.terms.push_back(pole_term(p, 0));
    }
    baked0_.terms.push_back(LogPolySum::Term{0.0, {phi0_}});
}

double MainTerm::eval0(double y) const { return baked0_.eval(y); }

LogPolySum MainTerm::logpoly0() const { return baked0_; }

double eval_main(const MainTerm& main, double y) { return main.eval0(y); }

LogPolySum main_riesz_logpoly(const LFunctionInstance& inst, int rho, int j_window) {
    require(rho >= 0, "main term: rho must be a nonnegative integer");
    LogPolySum out;
    for (const auto& p : inst.main.poles()) out.terms.push_back(pole_term(p, rho));
    // poles of Gamma(s)/Gamma(s+rho+1) at s = -j, j = 0..min(rho, j_window)
    double jf = 1.0; // j!
    for (int j = 0; j <= rho && j <= j_window; j++) {
        if (j > 0) jf *= double(j);
        double rf = 1.0; // (rho-j)!
        for (int i = 2; i <= rho - j; i++) rf *= double(i);
        double phi_mj = (j == 0) ? inst.main.phi0() : inst.phi(cplx(-double(j), 0.0)).real();
        double coef = phi_mj * ((j % 2) ? -1.0 : 1.0) / (jf * rf);
        out.terms.push_back(LogPolySum::Term{double(rho - j), {coef}});
    }
    return out;
}

double eval_main_riesz(const LFunctionInstance& inst, double y, int rho) {
    return main_riesz_logpoly(inst, rho).eval(y);
}

double numeric_residues(const LFunctionInstance& inst, double y, double rho, ResidueOptions opt) {
    require(y > 0.0, "numeric_residues: y must be positive");
    require(std::abs(rho - std::round(rho)) < 1e-12,
            "numeric_residues: only integer rho is supported");
    int irho = int(std::lround(rho));
    require(irho >= 0, "numeric_residues: rho must be nonnegative");
    require(opt.nodes >= 8, "numeric_residues: need at least 8 quadrature nodes");

    std::vector<double> centers;
    for (const auto& p : inst.main.poles()) centers.push_back(p.s0);
    for (int j = 0; j <= irho; j++) centers.push_back(-double(j));
    for (std::size_t i = 0; i < centers.size(); i++)
        for (std::size_t j = 0; j < centers.size(); j++) {
            if (i == j) continue;
            require(std::abs(centers[i] - centers[j]) > opt.radius + 1e-9,
                    "numeric_residues: circle radius reaches a neighboring pole");
        }

    double ly = std::log(y);
    cplx total(0.0, 0.0);
    for (double s0 : centers) {
        cplx acc(0.0, 0.0);
        for (int k = 0; k < opt.nodes; k++) {
            double th = 2.0 * kPi * (k + 0.5) / opt.nodes;
            cplx e(std::cos(th), std::sin(th));
            cplx s = s0 + opt.radius * e;
            cplx gratio = 1.0;
            for (int j = 0; j <= irho; j++) gratio *= (s + double(j));
            cplx f = inst.phi(s) * std::exp((rho + s) * ly) / gratio;
            acc += f * e;
        }
        total += acc * (opt.radius / double(opt.nodes));
    }
    return total.real();
}

} // namespace slcf
