#include "slcf/lvalues.hpp"

#include <cmath>

#include "slcf/special.hpp"

namespace slcf {

namespace {

// 256-bit two's-complement accumulator: the partial products of the
// direct eta-power expansion reach ~2^(2.8 sqrt N), past 128 bits already
// at N ~ 1000.
struct I256 {
    u64 l[4] = {0, 0, 0, 0};

    void add(const I256& b) {
        u128 carry = 0;
        for (int i = 0; i < 4; i++) {
            u128 s = u128(l[i]) + b.l[i] + carry;
            l[i] = u64(s);
            carry = s >> 64;
        }
    }
    void sub(const I256& b) {
        u128 borrow = 0;
        for (int i = 0; i < 4; i++) {
            u128 s = u128(l[i]) - b.l[i] - borrow;
            l[i] = u64(s);
            borrow = (s >> 64) ? 1 : 0;
        }
    }
    bool fits_i128() const {
        bool top_zero = l[2] == 0 && l[3] == 0 && (l[1] >> 63) == 0;
        bool top_ones = l[2] == ~u64(0) && l[3] == ~u64(0) && (l[1] >> 63) == 1;
        return top_zero || top_ones;
    }
    i128 to_i128() const {
        require(fits_i128(), "brute_tau: coefficient exceeds 128 bits");
        return i128((u128(l[1]) << 64) | l[0]);
    }
};

} // namespace

std::vector<i128> brute_tau(i64 N) {
    require(N >= 1 && N <= 2500, "brute_tau: direct expansion limited to N <= 2500");
    // coefficients of prod_{n<=N} (1-q^n)^24 up to degree N-1
    std::vector<I256> c(static_cast<std::size_t>(N));
    c[0].l[0] = 1;
    for (i64 n = 1; n < N; n++) {
        for (int rep = 0; rep < 24; rep++) {
            for (i64 m = N - 1; m >= n; m--) c[std::size_t(m)].sub(c[std::size_t(m - n)]);
        }
    }
    std::vector<i128> out(static_cast<std::size_t>(N));
    for (i64 i = 0; i < N; i++) out[std::size_t(i)] = c[std::size_t(i)].to_i128();
    // wraparound in the middle of the expansion would corrupt the values;
    // the Deligne envelope is a cheap end-to-end guard
    for (i64 n = 1; n <= N; n++) {
        long double bound = 0.0;
        i64 dn = 0;
        for (i64 dd = 1; dd * dd <= n; dd++)
            if (n % dd == 0) dn += (dd * dd == n) ? 1 : 2;
        bound = (long double)dn * powl((long double)n, 5.5L);
        require(fabsl((long double)out[std::size_t(n - 1)]) <= bound * (1.0L + 1e-15L),
                "brute_tau: Deligne envelope violated, expansion corrupt");
    }
    return out; // tau(n) = c[n-1]
}

std::vector<double> brute_lambda(i64 N) {
    auto t = brute_tau(N);
    std::vector<double> v(static_cast<std::size_t>(N));
    for (i64 n = 1; n <= N; n++)
        v[std::size_t(n - 1)] = double((long double)t[std::size_t(n - 1)] /
                                       powl((long double)n, 5.5L));
    return v;
}

CuspL::CuspL() : lambda_(brute_lambda(40)) {}

cplx CuspL::operator()(cplx s) const {
    // (2pi)^{-11/2} Lambda(s) =
    //   sum lambda(n) n^{11/2} [ (2pi n)^{-s-11/2} G(s+11/2, 2pi n)
    //                          + (2pi n)^{s-13/2} G(13/2-s, 2pi n) ]
    const double k2 = 11.0 / 2.0; // (k-1)/2
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < lambda_.size(); i++) {
        double n = double(i + 1);
        double x = 2.0 * kPi * n;
        if (x > 130.0) break; // e^{-x} below double underflow threshold anyway
        cplx t1 = rpow(x, -s - k2) * upper_gamma(s + k2, x);
        cplx t2 = rpow(x, s - k2 - 1.0) * upper_gamma(k2 + 1.0 - s, x);
        acc += lambda_[i] * std::pow(n, k2) * (t1 + t2);
    }
    // L(s) = acc * (2pi)^{s+11/2} / Gamma(s+11/2)
    return acc * std::exp((s + k2) * std::log(2.0 * kPi) - log_gamma(s + k2));
}

namespace {

const double kSymMellinLine = 2.5;
const double kSymMellinCut = 48.0;
const double kSymMellinStep = 0.25;
const double kSymKernelReach = 26.0; // W ~ e^{-7.3 x^{2/3}}: below 1e-24 here

cplx sym2_gamma(cplx s) {
    return std::exp(-1.5 * s * std::log(kPi) + log_gamma(0.5 * (s + 1.0)) +
                    log_gamma(0.5 * (s + 11.0)) + log_gamma(0.5 * (s + 12.0)));
}

// W(x) = (1/2 pi i) int gamma(w) x^{-w} dw on Re w = 2.5; trapezoid in u
// (the integrand is analytic in a strip of width ~3.5, so the trapezoid
// converges geometrically in 1/step).
double sym2_w(double x) {
    double acc = 0.0;
    double lx = std::log(x);
    for (double u = 0.0; u <= kSymMellinCut; u += kSymMellinStep) {
        cplx w(kSymMellinLine, u);
        cplx val = sym2_gamma(w) * std::exp(-w * lx);
        acc += (u == 0.0 ? 0.5 : 1.0) * val.real();
    }
    return acc * kSymMellinStep / kPi;
}

} // namespace

Sym2L::Sym2L() {
    // c2(m) = sum_{j^2 | m} lambda((m/j^2)^2); only m below the kernel reach
    // matter
    const int M = 40;
    auto lam = brute_lambda(M * M + 1);
    c2_.assign(M + 1, 0.0);
    for (int j = 1; j * j <= M; j++)
        for (int n = 1; n * j * j <= M; n++)
            c2_[std::size_t(n * j * j)] += lam[std::size_t(n) * std::size_t(n) - 1];

    // Gauss-Legendre 16-point panels of Theta over [1, t_end]
    static const double gl_x[8] = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
    static const double gl_w[8] = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
    const double t_end = kSymKernelReach;
    const int panels = 40;
    for (int p = 0; p < panels; p++) {
        double a = 1.0 + (t_end - 1.0) * p / panels;
        double b = 1.0 + (t_end - 1.0) * (p + 1) / panels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 8; i++) {
            for (int sign = -1; sign <= 1; sign += 2) {
                double t = mid + sign * half * gl_x[i];
                grid_t_.push_back(t);
                grid_w_.push_back(half * gl_w[i]);
            }
        }
    }
    grid_theta_.resize(grid_t_.size());
    for (std::size_t i = 0; i < grid_t_.size(); i++) grid_theta_[i] = theta_at(grid_t_[i]);
}

double Sym2L::theta_at(double t) const {
    double acc = 0.0;
    for (std::size_t m = 1; m < c2_.size(); m++) {
        if (c2_[m] == 0.0) continue;
        double x = double(m) * t;
        if (x > kSymKernelReach) break;
        acc += c2_[m] * sym2_w(x);
    }
    return acc;
}

cplx Sym2L::completed(cplx s) const {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < grid_t_.size(); i++) {
        double t = grid_t_[i];
        acc += grid_w_[i] * grid_theta_[i] * (rpow(t, s - 1.0) + rpow(t, -s));
    }
    return acc;
}

cplx Sym2L::operator()(cplx s) const { return completed(s) / sym2_gamma(s); }

} // namespace slcf
