#include "slcf/lfunc.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>

#include "slcf/lvalues.hpp"
#include "slcf/special.hpp"

namespace slcf {

void FunctionalEquation::validate() const {
    require(Q > 0.0, "functional equation: Q must be positive");
    require(std::abs(std::abs(omega) - 1.0) < 1e-12, "functional equation: |omega| must be 1");
    require(!delta1.empty() && !delta2.empty(), "functional equation: empty gamma factor list");
    double a1 = 0.0, a2 = 0.0;
    for (const auto& g : delta1) {
        require(g.alpha > 0.0, "gamma factor: alpha must be positive");
        require(g.beta.real() >= 0.0, "gamma factor: Re(beta) must be nonnegative");
        a1 += g.alpha;
    }
    for (const auto& g : delta2) {
        require(g.alpha > 0.0, "gamma factor: alpha must be positive");
        require(g.beta.real() >= 0.0, "gamma factor: Re(beta) must be nonnegative");
        a2 += g.alpha;
    }
    require(std::abs(a1 - a2) < 1e-12,
            "functional equation: degree mismatch between delta1 and delta2 (Eq. def-degree)");
}

double LFunctionInstance::alpha() const {
    double a = 0.0;
    for (const auto& g : fe.delta1) a += g.alpha;
    return a;
}

DerivedInvariants derive_invariants(const FunctionalEquation& fe, double rho) {
    fe.validate();
    DerivedInvariants v;
    v.rho = rho;
    v.fe = fe;
    cplx mu(0.5, 0.0), mu_p(0.5, 0.0), nu(0.0, 0.0), nu_p(0.0, 0.0);
    double alpha = 0.0, tau = 0.0, tau_p = 0.0;
    for (const auto& g : fe.delta1) {
        alpha += g.alpha;
        mu += g.beta - 0.5;
        nu += (g.beta - 0.5) * std::log(g.alpha);
        tau += g.alpha * std::log(g.alpha);
    }
    for (const auto& g : fe.delta2) {
        mu_p += g.beta - 0.5;
        nu_p += (g.beta - 0.5) * std::log(g.alpha);
        tau_p += g.alpha * std::log(g.alpha);
    }
    v.complex_beta = std::abs(mu.imag()) > 1e-13 || std::abs(mu_p.imag()) > 1e-13;
    v.alpha = alpha;
    v.degree = 2.0 * alpha;
    v.mu = mu.real();
    v.mu_p = mu_p.real();
    v.nu = nu.real();
    v.nu_p = nu_p.real();
    v.tau = tau;
    v.tau_p = tau_p;
    v.h = 2.0 * alpha * std::exp(-(tau + tau_p) / (2.0 * alpha));
    v.theta_rho = fe.r / 2.0 - 1.0 / (4.0 * alpha) + rho * (1.0 - 1.0 / (2.0 * alpha)) +
                  (v.mu_p - v.mu) / (2.0 * alpha);
    auto kc = kappa_constants(v, rho);
    v.kappa0 = kc.kappa0;
    v.kappa1 = kc.kappa1;
    v.c0 = kc.c0;
    return v;
}

KappaConstants kappa_constants(const DerivedInvariants& inv, double rho) {
    const FunctionalEquation& fe = inv.fe;
    double alpha = inv.alpha, r = fe.r;
    double N1 = double(fe.delta1.size()), N2 = double(fe.delta2.size());
    KappaConstants kc;
    kc.c0 = -0.5 * (inv.mu + inv.mu_p + r * alpha + rho + 0.5);
    kc.kappa0 = std::pow(2.0 * kPi, 0.5 * (N2 - N1)) *
                std::pow(2.0 * alpha / inv.h, rho) * std::sqrt(2.0 / (inv.h * kPi)) *
                std::exp(inv.nu_p - inv.nu -
                         (inv.tau_p + inv.tau) * (inv.mu_p - inv.mu) / (2.0 * alpha) +
                         (r / 2.0) * (inv.tau_p - inv.tau));
    double B = 0.0;
    for (const auto& g : fe.delta2) B += bernoulli2(g.beta.real()) / g.alpha;
    for (const auto& g : fe.delta1) B += bernoulli2(g.alpha * r + g.beta.real()) / g.alpha;
    B += -bernoulli2(r) + bernoulli2(r + rho + 1.0);
    B *= 0.5;
    double m = inv.mu_p - inv.mu - alpha * r - rho - 1.0;
    kc.kappa1 = kc.kappa0 * (2.0 * alpha / inv.h) *
                (-(1.0 / (2.0 * alpha)) * (0.5 * m * m - 1.0 / 24.0) + B);
    return kc;
}

double error_exponent(int d, double sigma_star) {
    require(d >= 2, "error_exponent: degree d >= 2 required");
    require(sigma_star >= 0.5 && sigma_star < (d + 1.0) / (2.0 * d),
            "error_exponent: sigma* must satisfy 1/2 <= sigma* < (d+1)/2d (Eq. sigmastarcondition)");
    return 2.0 - (3.0 - 4.0 * sigma_star) / (2.0 * d * (1.0 - sigma_star) - 1.0);
}

std::pair<i64, i64> error_exponent_rational(int d, i64 p, i64 q) {
    require(q > 0, "error_exponent_rational: q > 0");
    require(2 * p >= q && 2LL * i64(d) * p < i64(d + 1) * q,
            "error_exponent_rational: sigma* must satisfy 1/2 <= sigma* < (d+1)/2d (Eq. sigmastarcondition)");
    i64 num = 4 * i64(d) * (q - p) - 5 * q + 4 * p;
    i64 den = 2 * i64(d) * (q - p) - q;
    i64 g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

// ---- registry ---------------------------------------------------------

namespace {

std::atomic<i64> g_tau_limit{2'000'000};

GammaFactor gf(double a, double b) { return GammaFactor{a, cplx(b, 0.0)}; }

FunctionalEquation zeta_power_fe(int k) {
    FunctionalEquation fe;
    fe.Q = std::pow(kPi, -0.5 * k);
    fe.omega = 1.0;
    fe.r = 1.0;
    for (int j = 0; j < k; j++) {
        fe.delta1.push_back(gf(0.5, 0.0));
        fe.delta2.push_back(gf(0.5, 0.0));
    }
    return fe;
}

// Laurent coefficients of (u zeta(1+u))^k around u = 0, up to u^{k-1}.
std::vector<double> zeta_power_laurent(int k) {
    // u zeta(1+u) = 1 + g0 u - g1 u^2 + (g2/2) u^3 - ...
    const double base[4] = {1.0, kEulerGamma, -kStieltjes1, 0.5 * kStieltjes2};
    std::vector<double> acc = {1.0};
    for (int rep = 0; rep < k; rep++) {
        std::vector<double> nxt(std::size_t(k), 0.0);
        for (std::size_t i = 0; i < acc.size(); i++)
            for (std::size_t j = 0; i + j < std::size_t(k) && j < 4; j++)
                nxt[i + j] += acc[i] * base[j];
        acc = nxt;
    }
    acc.resize(std::size_t(k));
    return acc;
}

const CuspL& cusp_l() {
    static CuspL L;
    return L;
}

const Sym2L& sym2_l() {
    static Sym2L L;
    return L;
}

LFunctionInstance make_zeta_power(int k) {
    LFunctionInstance inst;
    inst.name = "zeta" + std::to_string(k);
    inst.fe = zeta_power_fe(k);
    inst.theta = 0.0;
    inst.sigma_star = k == 2 ? 0.5 : 5.0 / 8.0;
    inst.sigma_star_conditional = k == 3 ? 7.0 / 12.0 : 0.0;
    inst.nonneg = true;
    double phi0 = std::pow(-0.5, k); // zeta(0)^k
    inst.main = MainTerm({MainTerm::Pole{1.0, k, zeta_power_laurent(k)}}, phi0);
    inst.phi = [k](cplx s) {
        cplx z = riemann_zeta(s);
        cplx r = 1.0;
        for (int i = 0; i < k; i++) r *= z;
        return r;
    };
    inst.make_coeffs = [k](i64 N) { return sieve_divisor(k, N); };
    return inst;
}

LFunctionInstance make_cusp12() {
    LFunctionInstance inst;
    inst.name = "cusp12";
    inst.fe.Q = 1.0 / (2.0 * kPi);
    inst.fe.omega = 1.0;
    inst.fe.r = 1.0;
    inst.fe.delta1 = {gf(1.0, 5.5)};
    inst.fe.delta2 = {gf(1.0, 5.5)};
    inst.theta = 0.0;
    inst.sigma_star = 0.5;
    inst.nonneg = false;
    double Lf0 = cusp_l()(cplx(0.0, 0.0)).real();
    inst.main = MainTerm({}, Lf0);
    inst.phi = [](cplx s) { return cusp_l()(s); };
    inst.make_coeffs = [](i64 N) { return normalized_lambda(N, tau_limit()); };
    return inst;
}

LFunctionInstance make_dedekind(i64 D) {
    require(is_fundamental_discriminant(D) && D != 1,
            "dedekind-quad: D must be a fundamental discriminant != 1");
    LFunctionInstance inst;
    char nm[48];
    std::snprintf(nm, sizeof(nm), "dedekind-quad:%lld", (long long)D);
    inst.name = nm;
    inst.fe.Q = std::sqrt(double(D < 0 ? -D : D)) / kPi;
    inst.fe.omega = 1.0;
    inst.fe.r = 1.0;
    if (D > 0) {
        inst.fe.delta1 = {gf(0.5, 0.0), gf(0.5, 0.0)};
    } else {
        inst.fe.delta1 = {gf(0.5, 0.0), gf(0.5, 0.5)};
    }
    inst.fe.delta2 = inst.fe.delta1;
    inst.theta = 0.0;
    inst.sigma_star = 0.5;
    inst.nonneg = true;
    double L1 = dirichlet_l(cplx(1.0, 0.0), D).real();
    double L0 = dirichlet_l(cplx(0.0, 0.0), D).real();
    inst.main = MainTerm({MainTerm::Pole{1.0, 1, {L1}}}, -0.5 * L0);
    inst.phi = [D](cplx s) { return riemann_zeta(s) * dirichlet_l(s, D); };
    inst.make_coeffs = [D](i64 N) { return quad_ideal_counts(D, N); };
    return inst;
}

LFunctionInstance make_zeta_times_cusp12() {
    LFunctionInstance inst;
    inst.name = "zeta-times-cusp12";
    inst.fe.Q = std::pow(kPi, -0.5) / (2.0 * kPi);
    inst.fe.omega = 1.0;
    inst.fe.r = 1.0;
    inst.fe.delta1 = {gf(0.5, 0.0), gf(1.0, 5.5)};
    inst.fe.delta2 = inst.fe.delta1;
    inst.theta = 0.0;
    inst.sigma_star = 5.0 / 8.0;
    inst.sigma_star_conditional = 7.0 / 12.0;
    inst.nonneg = false;
    double Lf1 = cusp_l()(cplx(1.0, 0.0)).real();
    double Lf0 = cusp_l()(cplx(0.0, 0.0)).real();
    inst.main = MainTerm({MainTerm::Pole{1.0, 1, {Lf1}}}, -0.5 * Lf0);
    inst.phi = [](cplx s) { return riemann_zeta(s) * cusp_l()(s); };
    inst.make_coeffs = [](i64 N) {
        auto lam = normalized_lambda(N, tau_limit());
        return dirichlet_convolve(ones_sequence(N), lam);
    };
    return inst;
}

LFunctionInstance make_cusp12_squared() {
    LFunctionInstance inst;
    inst.name = "cusp12-squared";
    inst.fe.Q = std::pow(2.0 * kPi, -2.0);
    inst.fe.omega = 1.0;
    inst.fe.r = 1.0;
    inst.fe.delta1 = {gf(1.0, 5.5), gf(1.0, 5.5)};
    inst.fe.delta2 = inst.fe.delta1;
    inst.theta = 0.0;
    inst.sigma_star = 5.0 / 8.0;
    inst.nonneg = false;
    double Lf0 = cusp_l()(cplx(0.0, 0.0)).real();
    inst.main = MainTerm({}, Lf0 * Lf0);
    inst.phi = [](cplx s) {
        cplx v = cusp_l()(s);
        return v * v;
    };
    inst.make_coeffs = [](i64 N) {
        auto lam = normalized_lambda(N, tau_limit());
        return dirichlet_convolve(lam, lam);
    };
    return inst;
}

LFunctionInstance make_rankin() {
    LFunctionInstance inst;
    inst.name = "rankin-selberg-cusp12";
    inst.fe.Q = std::pow(2.0 * kPi, -2.0);
    inst.fe.omega = 1.0;
    inst.fe.r = 1.0;
    inst.fe.delta1 = {gf(1.0, 0.0), gf(1.0, 11.0)};
    inst.fe.delta2 = inst.fe.delta1;
    inst.theta = 0.0;
    inst.sigma_star = 5.0 / 8.0;
    inst.nonneg = true;
    double S1 = sym2_l()(cplx(1.0, 0.0)).real();
    double S0 = sym2_l()(cplx(0.0, 0.0)).real();
    inst.main = MainTerm({MainTerm::Pole{1.0, 1, {S1}}}, -0.5 * S0);
    inst.phi = [](cplx s) { return riemann_zeta(s) * sym2_l()(s); };
    inst.make_coeffs = [](i64 N) { return rankin_coeffs(N, tau_limit()); };
    return inst;
}

} // namespace

i64 tau_limit() { return g_tau_limit.load(); }
void set_tau_limit(i64 n) { g_tau_limit.store(n); }

std::vector<std::string> registry_names() {
    return {"zeta2",  "cusp12",        "dedekind-quad:-4",     "zeta3",
            "zeta-times-cusp12", "zeta4", "cusp12-squared", "rankin-selberg-cusp12"};
}

const LFunctionInstance& instance(const std::string& name) {
    static std::mutex mtx;
    static std::map<std::string, std::unique_ptr<LFunctionInstance>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(name);
    if (it != cache.end()) return *it->second;

    LFunctionInstance inst;
    if (name == "zeta2")
        inst = make_zeta_power(2);
    else if (name == "zeta3")
        inst = make_zeta_power(3);
    else if (name == "zeta4")
        inst = make_zeta_power(4);
    else if (name == "cusp12")
        inst = make_cusp12();
    else if (name == "zeta-times-cusp12")
        inst = make_zeta_times_cusp12();
    else if (name == "cusp12-squared")
        inst = make_cusp12_squared();
    else if (name == "rankin-selberg-cusp12")
        inst = make_rankin();
    else if (name.rfind("dedekind-quad:", 0) == 0)
        inst = make_dedekind(std::stoll(name.substr(14)));
    else
        fail("unknown instance name: " + name);

    auto ptr = std::make_unique<LFunctionInstance>(std::move(inst));
    auto& ref = *ptr;
    cache[name] = std::move(ptr);
    return ref;
}

} // namespace slcf
