#include "slcf/mellin.hpp"

#include <algorithm>
#include <cmath>

#include "slcf/mainterm.hpp"
#include "slcf/special.hpp"
#include "slcf/util.hpp"

namespace slcf {

namespace {

const double gl16_x[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
const double gl16_w[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

struct Integrand {
    const DerivedInvariants* inv;
    double rho;
    double lx; // log x
    int rho_int = -1;

    void init(const DerivedInvariants& v, double rho_, double x) {
        inv = &v;
        rho = rho_;
        lx = std::log(x);
        double rr = std::round(rho_);
        rho_int = (std::abs(rho_ - rr) < 1e-12 && rr >= 0.0) ? int(rr) : -1;
    }

    // G_rho(s) x^{r+rho-s}
    cplx operator()(cplx s) const {
        const auto& fe = inv->fe;
        cplx lg(0.0, 0.0);
        for (const auto& g : fe.delta2) lg += log_gamma(g.alpha * s + g.beta);
        for (const auto& g : fe.delta1) lg -= log_gamma(g.alpha * (fe.r - s) + g.beta);
        lg += (fe.r + rho - s) * lx;
        cplx ratio(1.0, 0.0);
        if (rho_int >= 0) {
            for (int j = 0; j <= rho_int; j++) ratio /= (fe.r + double(j) - s);
        } else {
            lg += log_gamma(fe.r - s) - log_gamma(fe.r + rho + 1.0 - s);
        }
        return std::exp(lg) * ratio;
    }
};

// adds the Gauss-Legendre panel integral of f over the segment z0 -> z1
void add_panel(const Integrand& f, cplx z0, cplx z1, cplx& acc, std::size_t& nodes) {
    cplx mid = 0.5 * (z0 + z1), half = 0.5 * (z1 - z0);
    cplx sum(0.0, 0.0);
    for (int i = 0; i < 8; i++) {
        sum += gl16_w[i] * (f(mid + gl16_x[i] * half) + f(mid - gl16_x[i] * half));
    }
    acc += sum * half;
    nodes += 16;
}

// splits z0 -> z1 into panels so the local phase advance stays resolvable
void integrate_segment(const Integrand& f, cplx z0, cplx z1, double phase_rate, double density,
                       cplx& acc, std::size_t& nodes) {
    double len = std::abs(z1 - z0);
    double per_panel = 5.0 / std::max(phase_rate, 1e-3);
    int panels = std::max(1, int(std::ceil(len / per_panel * density)));
    panels = std::min(panels, 4000);
    cplx step = (z1 - z0) / double(panels);
    for (int i = 0; i < panels; i++) add_panel(f, z0 + double(i) * step, z0 + double(i + 1) * step, acc, nodes);
}

} // namespace

ContourSpec default_contour(const DerivedInvariants& inv, double x, double rho) {
    ContourSpec spec;
    double amax = inv.fe.r / 2.0 + (rho - inv.mu_p + inv.mu) / (2.0 * inv.alpha);
    spec.a = amax - 1.25 / (2.0 * inv.alpha);
    // keep the vertical tails clear of the Delta2 poles on the real axis
    for (const auto& g : inv.fe.delta2) {
        for (int k = 0; k < 40; k++) {
            double pole = -(g.beta.real() + k) / g.alpha;
            if (pole > spec.a - 0.06 && pole < spec.a + 0.06) spec.a -= 0.11;
        }
    }
    spec.b = inv.fe.r + 0.57;
    spec.R = 2.3;
    double y = x * std::exp(-(inv.tau + inv.tau_p));
    double saddle = std::pow(y, 1.0 / (2.0 * inv.alpha));
    spec.t_max = std::max(2.5 * saddle, spec.R + 4.0);
    spec.nodes_per_unit = 1.0;
    return spec;
}

ContourResult f_rho_contour_full(const DerivedInvariants& inv, double x, double rho,
                                 const ContourSpec& spec, double tol) {
    require(x > 0.0, "f_rho_contour: x must be positive");
    double amax = inv.fe.r / 2.0 + (rho - inv.mu_p + inv.mu) / (2.0 * inv.alpha);
    require(spec.a < amax, "contour: left abscissa violates the absolute-convergence constraint");
    require(spec.b > inv.fe.r, "contour: b must exceed r");
    for (const auto& g : inv.fe.delta2)
        require(spec.b > -g.beta.real() / g.alpha, "contour: b must exceed the Delta2 poles");
    require(spec.R > 0.0 && spec.t_max > spec.R, "contour: need t_max > R > 0");

    Integrand f;
    f.init(inv, rho, x);

    double y = x * std::exp(-(inv.tau + inv.tau_p));
    double saddle = std::pow(std::max(y, 1.0), 1.0 / (2.0 * inv.alpha));
    double a = spec.a, b = spec.b, R = spec.R;
    double alpha = inv.alpha;
    // natural size of f at this x; tolerances are relative to it
    auto kc = kappa_constants(inv, rho);
    double theta = inv.fe.r / 2.0 - 1.0 / (4.0 * alpha) + rho * (1.0 - 1.0 / (2.0 * alpha)) +
                   (inv.mu_p - inv.mu) / (2.0 * alpha);
    double fscale = std::abs(kc.kappa0) * std::pow(x, theta) + 1.0;

    auto vrate = [&](double t) {
        double m = std::abs(t) < 1e-9 ? 1e-9 : std::abs(t);
        return 2.0 * alpha * std::abs(std::log(m / saddle)) + 3.0 / std::sqrt(saddle + 4.0) + 0.05;
    };

    cplx acc(0.0, 0.0);
    std::size_t nodes = 0;
    const cplx I(0.0, 1.0);

    // piecewise straight verticals with rate-adaptive panel growth
    auto vertical = [&](double sign) {
        // from sign*iR to sign*i*t_max at Re = a (orientation applied by caller)
        double t = R;
        cplx seg_acc(0.0, 0.0);
        double density = std::max(spec.nodes_per_unit, 0.25);
        while (t < spec.t_max) {
            double rate = vrate(t);
            double len = std::min({5.0 / std::max(rate, 0.05) / density, 0.45 * t, spec.t_max - t});
            len = std::max(len, 1e-3);
            add_panel(f, cplx(a, sign * t), cplx(a, sign * (t + len)), seg_acc, nodes);
            t += len;
        }
        return seg_acc;
    };

    // diagonal continuation: s = a - u + i sign (t_max + u)
    double tail_bound = 0.0;
    auto diagonal = [&](double sign) {
        cplx seg_acc(0.0, 0.0);
        double u = 0.0;
        double step = 1.5;
        double cutoff = tol * 1e-3 * fscale;
        for (int it = 0; it < 400; it++) {
            cplx z0(a - u, sign * (spec.t_max + u));
            cplx z1(a - u - step, sign * (spec.t_max + u + step));
            add_panel(f, z0, z1, seg_acc, nodes);
            u += step;
            double mag = std::abs(f(cplx(a - u, sign * (spec.t_max + u))));
            if (mag * step < cutoff || u > 400.0) {
                tail_bound = std::max(tail_bound, mag * 4.0);
                break;
            }
        }
        return seg_acc;
    };

    // Lower tail a-i*inf -> a-iR: the helpers integrate outward (from R
    // towards infinity), which is against the path direction here, so the
    // value enters negated.
    acc = -(diagonal(-1.0) + vertical(-1.0));

    // bottom horizontal a-iR -> b-iR
    integrate_segment(f, cplx(a, -R), cplx(b, -R), std::abs(f.lx) + 2.0 * alpha * std::log(2.0 + R + saddle) + 1.0,
                      spec.nodes_per_unit, acc, nodes);
    // right vertical b-iR -> b+iR
    integrate_segment(f, cplx(b, -R), cplx(b, R), std::abs(f.lx) + 1.0, spec.nodes_per_unit, acc, nodes);
    // top horizontal b+iR -> a+iR
    integrate_segment(f, cplx(b, R), cplx(a, R), std::abs(f.lx) + 2.0 * alpha * std::log(2.0 + R + saddle) + 1.0,
                      spec.nodes_per_unit, acc, nodes);
    // upper tail a+iR -> a+i*inf
    acc += vertical(1.0) + diagonal(1.0);

    // (1/2 pi i) closes the definition
    cplx result = acc / (2.0 * kPi * I);

    ContourResult out;
    out.value = result.real();
    out.imag_diag = result.imag();
    out.tail_bound = tail_bound / (2.0 * kPi);
    out.nodes = nodes;
    if (out.tail_bound > tol * fscale)
        fail("f_rho_contour: tail bound exceeds tolerance; increase t_max");
    return out;
}

double f_rho_contour(const DerivedInvariants& inv, double x, double rho,
                     const ContourSpec& spec, double tol) {
    return f_rho_contour_full(inv, x, rho, spec, tol).value;
}

double f_rho_contour(const DerivedInvariants& inv, double x, double rho) {
    return f_rho_contour(inv, x, rho, default_contour(inv, x, rho));
}

double f_rho_asym(const DerivedInvariants& inv, double x, double rho, int m) {
    require(m >= 0, "f_rho_asym: m must be nonnegative");
    require(m <= 1, "f_rho_asym: expansion terms beyond m=1 are not available");
    auto kc = kappa_constants(inv, rho);
    double alpha = inv.alpha;
    double theta = inv.fe.r / 2.0 - 1.0 / (4.0 * alpha) + rho * (1.0 - 1.0 / (2.0 * alpha)) +
                   (inv.mu_p - inv.mu) / (2.0 * alpha);
    double xr = root_d(x, 2.0 * alpha);
    double phase = inv.h * xr;
    double acc = kc.kappa0 * std::pow(x, theta) * std::cos(phase + kc.c0 * kPi);
    if (m >= 1)
        acc += kc.kappa1 * std::pow(x, theta - 1.0 / (2.0 * alpha)) *
               std::cos(phase + (kc.c0 + 0.5) * kPi);
    return acc;
}

double a_rho(const ArithmeticSequence& seq, double y, int rho) {
    require(rho >= 0, "a_rho: rho must be a nonnegative integer");
    require(y <= double(seq.size()), "a_rho: y beyond coefficient range");
    if (y < 1.0) return 0.0;
    Kahan acc;
    i64 top = i64(std::floor(y));
    double fact = 1.0;
    for (int i = 2; i <= rho; i++) fact *= double(i);
    for (i64 n = 1; n <= top; n++) {
        double w = y - double(n);
        double term;
        if (rho == 0)
            term = (w == 0.0) ? 0.5 * seq.at(n) : seq.at(n);
        else
            term = seq.at(n) * std::pow(w, double(rho)) / fact;
        acc.add(term);
    }
    return acc.value();
}

namespace {

double binom(int k, int j) {
    double r = 1.0;
    for (int i = 0; i < j; i++) r = r * double(k - i) / double(i + 1);
    return r;
}

} // namespace

TongCheckReport tong_check(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                           double x, double y, int k, int rho, double L, TongOptions opt) {
    require(x >= 1.0 && y > 0.0, "tong_check: need x >= 1 and y > 0");
    require(rho >= 0, "tong_check: rho must be a nonnegative integer");
    auto inv = inst.invariants(double(rho));
    double alpha = inv.alpha;
    // admissibility threshold for rho+k; raise k to the minimal admissible integer
    double threshold = 2.0 * alpha * inst.sigma_b_star - alpha * inv.fe.r - 0.5 + inv.mu_p - inv.mu;
    while (double(rho + k) <= threshold) k++;

    TongCheckReport rep;
    rep.x = x;
    rep.y = y;
    rep.k = k;
    rep.rho = rho;
    rep.L = L;

    // ---- LHS: k-fold average of E_rho via Riesz-mean differences --------
    double top = x + double(k) * y;
    require(top <= double(coeffs.size()), "tong_check: x + k y beyond coefficient range");
    double lhs = 0.0;
    for (int j = 0; j <= k; j++) {
        double sgn = ((k - j) % 2) ? -1.0 : 1.0;
        lhs += sgn * binom(k, j) * a_rho(coeffs, x + double(j) * y, rho + k);
    }
    // subtract the k-fold average of the main term (exact antiderivatives).
    // The identity's residue rectangle has b - r < 1, so only the j = 0
    // pole of the Gamma ratio belongs to Q_rho here; the matching content
    // sits in the contour f's enclosed-pole set.
    LogPolySum q = main_riesz_logpoly(inst, rho, 0);
    for (int i = 0; i < k; i++) q = q.antiderivative();
    for (int j = 0; j <= k; j++) {
        double sgn = ((k - j) % 2) ? -1.0 : 1.0;
        lhs -= sgn * binom(k, j) * q.eval(x + double(j) * y);
    }
    rep.lhs = lhs;

    // ---- RHS -------------------------------------------------------------
    double bscale = inst.b_scale();
    double mu1 = inst.mu_step();
    auto invk = inst.invariants(double(rho + k));
    auto kck = kappa_constants(inv, double(rho + k));
    double thetak = invk.theta_rho;
    double rexp = inv.fe.r + double(rho + k);

    // truncation: cut where the block-averaged leading-term envelope drops below
    // tol/10 (isolated |b(n)| spikes carry negligible tail mass), then taper
    // smoothly over one octave
    double tol10 = opt.tol / 10.0;
    i64 navail = std::min(coeffs.size(), opt.max_terms);
    i64 n1 = 0;
    {
        const i64 block = 256;
        for (i64 b0 = 1; b0 <= navail; b0 += block) {
            i64 b1 = std::min(b0 + block - 1, navail);
            double mean_abs = 0.0;
            for (i64 n = b0; n <= b1; n++) mean_abs += std::abs(coeffs.at(n));
            mean_abs /= double(b1 - b0 + 1);
            double mu_n = mu1 * double(b1);
            double env = kck.kappa0 * std::abs(bscale) * mean_abs * std::pow(mu_n, -rexp) *
                         std::pow(top * mu_n, thetak);
            if (env < tol10 && b0 > 1) {
                n1 = b1;
                break;
            }
        }
        require(n1 > 0, "tong_check: non-convergent tail at requested tol within coefficient range");
        require(2 * n1 <= navail,
                "tong_check: taper window exceeds coefficient range; raise the limit");
    }
    i64 n2 = 2 * n1;
    rep.terms_used = n2;

    // reported tail estimate: envelope at the cut times one coherence block
    {
        double mu_n = mu1 * double(n1);
        double env = kck.kappa0 * std::abs(bscale) * std::abs(coeffs.at(n1)) *
                     std::pow(mu_n, -rexp) * std::pow(top * mu_n, thetak);
        double dphase = inv.h * std::pow(top, 1.0 / (2.0 * alpha)) / (2.0 * alpha) *
                        std::pow(mu_n, 1.0 / (2.0 * alpha) - 1.0) * mu1;
        rep.tail_bound = env * std::max(1.0, kPi / std::max(dphase, 1e-12));
    }

    double cutoff = opt.contour_cutoff;

    // Make the asymptotic arm agree with the contour f it hands over to.
    // Two effects are fitted against the contour oracle on a log grid below
    // the crossover: the next cosine corrections (no closed form exists for
    // the l >= 2 coefficients) and the algebraic X^{I-m} pole pieces of the
    // Gamma ratio that the cosine expansion does not carry.
    const int I = rho + k;
    std::vector<double> osc_expo = {thetak - 2.0 / (2.0 * alpha), thetak - 3.0 / (2.0 * alpha)};
    std::vector<double> alg_expo;
    for (int m = 1; m <= I; m++) alg_expo.push_back(double(I - m));
    std::size_t nb = osc_expo.size() + alg_expo.size();
    std::vector<double> fitc(nb, 0.0);
    {
        auto basis = [&](double X, std::vector<double>& g) {
            double ph = invk.h * std::pow(X, 1.0 / (2.0 * alpha));
            g[0] = std::pow(X, osc_expo[0]) * std::cos(ph + (kck.c0 + 1.0) * kPi);
            g[1] = std::pow(X, osc_expo[1]) * std::cos(ph + (kck.c0 + 1.5) * kPi);
            for (std::size_t m = 0; m < alg_expo.size(); m++)
                g[2 + m] = std::pow(X, alg_expo[m]);
        };
        const int pts = 8 + 6 * int(nb);
        std::vector<std::vector<double>> G(static_cast<std::size_t>(pts), std::vector<double>(nb));
        std::vector<double> resv(static_cast<std::size_t>(pts));
        for (int i = 0; i < pts; i++) {
            double X = cutoff * std::pow(8.0, -double(i) / double(pts - 1));
            double fc = f_rho_contour(invk, X, double(I),
                                      default_contour(invk, X, double(I)), 1e-8);
            resv[std::size_t(i)] = fc - f_rho_asym(invk, X, double(I), 1);
            basis(X, G[std::size_t(i)]);
        }
        // column normalization, then normal equations by Gaussian elimination
        std::vector<double> norm(nb, 0.0);
        for (int i = 0; i < pts; i++)
            for (std::size_t p = 0; p < nb; p++) norm[p] += G[std::size_t(i)][p] * G[std::size_t(i)][p];
        for (std::size_t p = 0; p < nb; p++) norm[p] = std::sqrt(std::max(norm[p], 1e-300));
        std::vector<double> A(nb * nb, 0.0), rv(nb, 0.0);
        for (int i = 0; i < pts; i++) {
            for (std::size_t p = 0; p < nb; p++) {
                double gp = G[std::size_t(i)][p] / norm[p];
                rv[p] += resv[std::size_t(i)] * gp;
                for (std::size_t q = 0; q < nb; q++)
                    A[p * nb + q] += gp * G[std::size_t(i)][q] / norm[q];
            }
        }
        for (std::size_t p = 0; p < nb; p++) A[p * nb + p] += 1e-10;
        std::vector<double> sol(rv);
        for (std::size_t col = 0; col < nb; col++) {
            std::size_t piv = col;
            for (std::size_t rix = col + 1; rix < nb; rix++)
                if (std::abs(A[rix * nb + col]) > std::abs(A[piv * nb + col])) piv = rix;
            for (std::size_t q = 0; q < nb; q++) std::swap(A[col * nb + q], A[piv * nb + q]);
            std::swap(sol[col], sol[piv]);
            for (std::size_t rix = col + 1; rix < nb; rix++) {
                double fct = A[rix * nb + col] / A[col * nb + col];
                for (std::size_t q = col; q < nb; q++) A[rix * nb + q] -= fct * A[col * nb + q];
                sol[rix] -= fct * sol[col];
            }
        }
        for (std::size_t rix = nb; rix-- > 0;) {
            for (std::size_t q = rix + 1; q < nb; q++) sol[rix] -= A[rix * nb + q] * sol[q];
            sol[rix] /= A[rix * nb + rix];
        }
        for (std::size_t p = 0; p < nb; p++) fitc[p] = sol[p] / norm[p];
    }
    auto asym_corrected = [&](double arg) {
        double fval = f_rho_asym(invk, arg, double(I), 1);
        double ph = invk.h * std::pow(arg, 1.0 / (2.0 * alpha));
        fval += fitc[0] * std::pow(arg, osc_expo[0]) * std::cos(ph + (kck.c0 + 1.0) * kPi);
        fval += fitc[1] * std::pow(arg, osc_expo[1]) * std::cos(ph + (kck.c0 + 1.5) * kPi);
        for (std::size_t m = 0; m < alg_expo.size(); m++)
            fval += fitc[2 + m] * std::pow(arg, alg_expo[m]);
        return fval;
    };

    // series over mu_n > L with the j-alternation folded in
    std::vector<double> jsum(std::size_t(k) + 1, 0.0);
    for (int j = 0; j <= k; j++) {
        double X = x + double(j) * y;
        jsum[std::size_t(j)] = parallel_sum(std::size_t(n2), [&](std::size_t idx) -> double {
            i64 n = i64(idx) + 1;
            double mu_n = mu1 * double(n);
            if (mu_n <= L) return 0.0;
            double b_n = bscale * coeffs.at(n);
            if (b_n == 0.0) return 0.0;
            double arg = X * mu_n;
            double fval;
            if (arg <= cutoff) {
                fval = f_rho_contour(invk, arg, double(I),
                                     default_contour(invk, arg, double(I)), 1e-8);
            } else {
                fval = asym_corrected(arg);
            }
            double w = 1.0;
            if (n > n1) w = 0.5 * (1.0 + std::cos(kPi * double(n - n1) / double(n1)));
            return w * b_n * std::pow(mu_n, -rexp) * fval;
        }, std::max<std::size_t>(512, std::size_t(n2) / 16));
    }
    double rhs = 0.0;
    for (int j = 0; j <= k; j++) {
        double sgn = ((k - j) % 2) ? -1.0 : 1.0;
        rhs += sgn * binom(k, j) * jsum[std::size_t(j)];
    }

    // mu_n <= L: iterated integral of f_rho over the k-cube by nested GL
    for (i64 n = 1; n <= navail; n++) {
        double mu_n = mu1 * double(n);
        if (mu_n > L) break;
        double b_n = bscale * coeffs.at(n);
        if (b_n == 0.0) continue;
        // nested Gauss-Legendre over [0,y]^k of f_rho((x+sum t_i) mu_n)
        std::vector<int> dim(std::size_t(k), 0);
        std::function<double(int, double)> nest = [&](int depth, double shift) -> double {
            double acc = 0.0;
            for (int i = 0; i < 8; i++) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    double t = 0.5 * y + sgn * 0.5 * y * gl16_x[i];
                    double w = 0.5 * y * gl16_w[i];
                    double val;
                    if (depth + 1 == k) {
                        double arg = (x + shift + t) * mu_n;
                        val = (arg <= cutoff)
                                  ? f_rho_contour(inv, arg, double(rho),
                                                  default_contour(inv, arg, double(rho)), 1e-8)
                                  : f_rho_asym(inv, arg, double(rho), 1);
                    } else {
                        val = nest(depth + 1, shift + t);
                    }
                    acc += w * val;
                }
            }
            return acc;
        };
        rhs += b_n * std::pow(mu_n, -(inv.fe.r + double(rho))) * nest(0, 0.0);
    }

    rep.rhs = rhs;
    rep.rel_error = std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
    return rep;
}

double fit_kappa2(const DerivedInvariants& inv, const std::vector<double>& xs) {
    require(!xs.empty(), "fit_kappa2: need sample points");
    double alpha = inv.alpha;
    double num = 0.0, den = 0.0;
    for (double x : xs) {
        double r = f_rho_contour(inv, x, inv.rho) - f_rho_asym(inv, x, inv.rho, 1);
        double g = std::pow(x, inv.theta_rho - 1.0 / alpha) *
                   std::cos(inv.h * root_d(x, 2.0 * alpha) + (inv.c0 + 1.0) * kPi);
        num += r * g;
        den += g * g;
    }
    require(den > 0.0, "fit_kappa2: degenerate sample set");
    return num / den;
}

} // namespace slcf
