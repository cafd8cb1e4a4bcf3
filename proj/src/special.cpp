#include "slcf/special.hpp"

#include <cmath>

namespace slcf {

namespace {

const double kLanczosG = 7.0;
const double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log(sin(pi z)) stable for large |Im z|; branch is immaterial mod 2*pi*i.
// sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
cplx log_sin_pi(cplx z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    const cplx i(0.0, 1.0);
    cplx q = std::exp(2.0 * kPi * i * z); // |q| <= 1 for Im z >= 0
    return -i * kPi * z + std::log(1.0 - q) + cplx(-std::log(2.0), 0.5 * kPi);
}

cplx log_gamma_right(cplx z) {
    // valid for Re z >= 0.5
    cplx a = kLanczos[0];
    for (int k = 1; k < 9; k++) a += kLanczos[k] / (z - 1.0 + double(k));
    cplx t = z + (kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(a);
}

// B_{2k} for k = 1..15
const double kB2k[15] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0,
};

} // namespace

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) {
    if (z.real() < 0.5 && z.imag() == 0.0 && z.real() == std::floor(z.real()))
        fail("gamma: pole at non-positive integer");
    return std::exp(log_gamma(z));
}

cplx hurwitz_zeta(cplx s, double a, int extra_terms) {
    require(a > 0.0, "hurwitz_zeta: a must be positive");
    require(!(s.real() == 1.0 && s.imag() == 0.0), "hurwitz_zeta: pole at s=1");
    double size = std::abs(s);
    int N = int(std::ceil(std::max(24.0, 1.3 * size))) + extra_terms;
    const int K = 14;
    cplx head(0.0, 0.0);
    // direct block; summed smallest-first would not matter at this accuracy
    for (int n = 0; n < N; n++) head += rpow(double(n) + a, -s);
    double Na = double(N) + a;
    cplx tail = rpow(Na, 1.0 - s) / (s - 1.0) + 0.5 * rpow(Na, -s);
    // Euler-Maclaurin correction sum
    cplx rising = s;                      // (s)_{2k-1} built incrementally
    double fact = 2.0;                    // (2k)!
    cplx powNa = rpow(Na, -s - 1.0);
    for (int k = 1; k <= K; k++) {
        tail += kB2k[k - 1] / fact * rising * powNa;
        // update rising from length 2k-1 to 2k+1, fact from (2k)! to (2k+2)!
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        fact *= double(2 * k + 1) * double(2 * k + 2);
        powNa *= 1.0 / (Na * Na);
    }
    return head + tail;
}

cplx riemann_zeta(cplx s, int extra_terms) { return hurwitz_zeta(s, 1.0, extra_terms); }

double digamma(double x) {
    require(x > 0.0, "digamma: x must be positive");
    double acc = 0.0;
    while (x < 16.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    // asymptotic series through B_12
    double series = std::log(x) - 0.5 * inv -
                    inv2 * (1.0 / 12.0 -
                            inv2 * (1.0 / 120.0 -
                                    inv2 * (1.0 / 252.0 -
                                            inv2 * (1.0 / 240.0 -
                                                    inv2 * (1.0 / 132.0 -
                                                            inv2 * (691.0 / 32760.0))))));
    return acc + series;
}

cplx dirichlet_l(cplx s, i64 D) {
    require(is_fundamental_discriminant(D), "dirichlet_l: D must be a fundamental discriminant");
    u64 q = u64(D < 0 ? -D : D);
    if (q == 1) return riemann_zeta(s);
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-12) {
        // the 1/(s-1) poles cancel (sum chi = 0); the finite parts are -psi(r/q)
        double acc = 0.0;
        for (u64 r = 1; r <= q; r++) {
            int chi = kronecker_symbol(D, r);
            if (chi == 0) continue;
            acc -= double(chi) * digamma(double(r) / double(q));
        }
        return cplx(acc / double(q), 0.0);
    }
    cplx acc(0.0, 0.0);
    for (u64 r = 1; r <= q; r++) {
        int chi = kronecker_symbol(D, r);
        if (chi == 0) continue;
        acc += double(chi) * hurwitz_zeta(s, double(r) / double(q));
    }
    return rpow(double(q), -s) * acc;
}

cplx upper_gamma(cplx a, double x) {
    require(x > 0.0, "upper_gamma: x must be positive");
    if (x > a.real() + 1.0) {
        // Lentz continued fraction
        const double tiny = 1e-300;
        cplx b = x + 1.0 - a;
        cplx c = 1.0 / tiny;
        cplx d = 1.0 / b;
        cplx h = d;
        for (int i = 1; i <= 400; i++) {
            cplx an = -double(i) * (double(i) - a);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            cplx delta = d * c;
            h *= delta;
            if (std::abs(delta - 1.0) < 1e-17) break;
        }
        return std::exp(-x + a * std::log(x)) * h;
    }
    // series for the lower incomplete gamma, then complement
    cplx ap = a;
    cplx term = 1.0 / a;
    cplx sum = term;
    for (int i = 0; i < 500; i++) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    cplx lower = sum * std::exp(-x + a * std::log(x));
    return std::exp(log_gamma(a)) - lower;
}

double psi0_int(int m) {
    double h = 0.0;
    for (int k = 1; k < m; k++) h += 1.0 / k;
    return -kEulerGamma + h;
}

double psi1_int(int m) {
    double h = 0.0;
    for (int k = 1; k < m; k++) h += 1.0 / (double(k) * k);
    return kZeta2 - h;
}

double psi2_int(int m) {
    double h = 0.0;
    for (int k = 1; k < m; k++) h += 1.0 / (double(k) * k * k);
    return -2.0 * (kZeta3 - h);
}

int kronecker_symbol(i64 D, u64 n) {
    // Cohen, Alg. 1.4.10, specialized to positive lower argument.
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    i64 a = D;
    u64 b = n;
    if ((a & 1) == 0 && (b & 1) == 0) return 0;
    int v = 0;
    while ((b & 1) == 0) {
        b >>= 1;
        v++;
    }
    int k = 1;
    if (v & 1) {
        u64 am8 = u64(((a % 8) + 8) % 8);
        k = (am8 == 1 || am8 == 7) ? 1 : -1; // (a|2)
    }
    if (a < 0) {
        a = -a;
        if (b % 4 == 3) k = -k;
    }
    u64 x = u64(a % i64(b));
    while (x != 0) {
        int w = 0;
        while ((x & 1) == 0) {
            x >>= 1;
            w++;
        }
        if (w & 1) {
            u64 bm8 = b % 8;
            if (bm8 == 3 || bm8 == 5) k = -k;
        }
        if ((x % 4 == 3) && (b % 4 == 3)) k = -k;
        u64 r = x;
        x = b % r;
        b = r;
    }
    return (b == 1) ? k : 0;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 1) return false; // trivial character excluded as an instance
    auto squarefree = [](i64 m) {
        if (m < 0) m = -m;
        for (i64 p = 2; p * p <= m; p++)
            if (m % (p * p) == 0) return false;
        return true;
    };
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r == 0) {
        i64 m = D / 4;
        i64 rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

} // namespace slcf
