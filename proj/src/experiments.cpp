#include "slcf/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "slcf/util.hpp"

namespace slcf {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    require(n >= 2, "gauss_legendre: order must be at least 2");
    x.assign(std::size_t(n), 0.0);
    w.assign(std::size_t(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; i++) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 60; it++) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; k++) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double delta = p1 / dp;
            t -= delta;
            if (std::abs(delta) < 1e-15) break;
        }
        x[std::size_t(i)] = -t;
        x[std::size_t(n - 1 - i)] = t;
        double ww = 2.0 / ((1.0 - t * t) * dp * dp);
        w[std::size_t(i)] = ww;
        w[std::size_t(n - 1 - i)] = ww;
    }
}

namespace {

// integral over one smooth piece [a,b] of |A - Q(y)|^u * y^w
double piece_integral(const ErrorTerm& E, double A, double a, double b, double u, double w,
                      const std::vector<double>& gx, const std::vector<double>& gw) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < gx.size(); i++) {
        double y = mid + half * gx[i];
        double e = A - E.main(y);
        double v;
        if (u == 2.0)
            v = e * e;
        else
            v = std::pow(std::abs(e), u);
        if (w != 0.0) v *= std::pow(y, w);
        acc += gw[i] * v;
    }
    return acc * half;
}

// zero of A - Q(y) inside [a,b] assuming monotone Q (bisection)
double crossing(const ErrorTerm& E, double A, double a, double b) {
    double lo = a, hi = b;
    for (int it = 0; it < 80; it++) {
        double mid = 0.5 * (lo + hi);
        if ((A - E.main(mid)) * (A - E.main(lo)) <= 0.0)
            hi = mid;
        else
            lo = mid;
        if (hi - lo < 1e-13 * std::max(1.0, std::abs(a))) break;
    }
    return 0.5 * (lo + hi);
}

// int_lo^hi |E|^u y^w dy with pieces split at the lambda_n jumps; odd/
// fractional u additionally splits pieces at sign changes of E.
double piecewise_integral(const ErrorTerm& E, double lo, double hi, double u, double w,
                          int order) {
    require(lo >= 1.0 && hi >= lo, "piecewise integral: bad range");
    require(hi <= double(E.range()) + 1.0 - 1e-9, "piecewise integral: range beyond coefficients");
    require(order >= 2, "quadrature order must be at least 2");
    if (hi == lo) return 0.0;
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);
    bool smooth_pow = (u == 2.0) || (u == 0.0) || (std::floor(u / 2.0) * 2.0 == u);
    i64 first = i64(std::floor(lo));
    i64 last = i64(std::ceil(hi)) - 1;
    std::size_t pieces = std::size_t(last - first + 1);
    return parallel_sum(
        pieces,
        [&](std::size_t idx) -> double {
            i64 n = first + i64(idx);
            double a = std::max(double(n), lo);
            double b = std::min(double(n + 1), hi);
            if (b <= a) return 0.0;
            double A = E.cum(n);
            if (smooth_pow) return piece_integral(E, A, a, b, u, w, gx, gw);
            double ea = A - E.main(a), eb = A - E.main(b);
            if ((ea > 0.0) == (eb > 0.0))
                return piece_integral(E, A, a, b, u, w, gx, gw);
            double c = crossing(E, A, a, b);
            return piece_integral(E, A, a, c, u, w, gx, gw) +
                   piece_integral(E, A, c, b, u, w, gx, gw);
        },
        std::max<std::size_t>(256, pieces / 4096));
}

} // namespace

double weighted_e2_integral(const ErrorTerm& E, double lo, double hi, double w, int order) {
    return piecewise_integral(E, lo, hi, 2.0, w, order);
}

PredictedC predicted_C(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                       i64 cutoff) {
    require(cutoff >= 64, "predicted_C: cutoff too small");
    require(cutoff <= coeffs.size(), "predicted_C: cutoff beyond coefficient range");
    auto inv = inst.invariants(0.0);
    double d = inv.degree;
    double s = (d + 1.0) / d;
    double Q = inst.fe.Q;
    // b^2(n) mu_n^{-(d+1)/d} = Q^{2/d} a^2(n) n^{-(d+1)/d}
    double scale = std::pow(Q, 2.0 / d) * inv.kappa0 * inv.kappa0 / 2.0 * d / (2.0 * d - 1.0);

    Kahan partial;
    double s2_q4 = 0.0, s2_h = 0.0, s2_f = 0.0; // sum a^2 over (X/4,X/2], (X/2,X]
    for (i64 n = 1; n <= cutoff; n++) {
        double a = coeffs.at(n);
        if (a == 0.0) continue;
        double a2 = a * a;
        partial.add(a2 * std::pow(double(n), -s));
        if (n > cutoff / 4 && n <= cutoff / 2) s2_q4 += a2;
        if (n > cutoff / 2) s2_h += a2;
        (void)s2_f;
    }
    // integral-comparison tail from the measured local density m(y); when
    // the density still grows strongly at the cutoff (slowly convergent
    // series, e.g. the d_3^2 weights), the growth extrapolation is not
    // trustworthy and the plain local-density form is used with a +-100%
    // error bar.
    double m1 = s2_h / (double(cutoff) / 2.0);
    double m0 = s2_q4 / (double(cutoff) / 4.0);
    double p = (m0 > 0.0 && m1 > 0.0) ? std::log(m1 / m0) / std::log(2.0) : 0.0;
    PredictedC out;
    out.cutoff = cutoff;
    out.partial = scale * partial.value();
    if (p < 0.6 * (s - 1.0)) {
        // mild growth: extrapolation is reliable, fold it into the value
        double tail = m1 * std::pow(double(cutoff), 1.0 - s) / (s - 1.0 - p);
        out.tail = scale * tail;
        out.uncertainty = 0.25 * out.tail;
        out.value = out.partial + out.tail;
    } else {
        // strongly growing density (log-power regime): the remainder is not
        // resolvable at desk scale; report the cutoff sum as the value and
        // the local-density integral comparison as an explicit window
        double tail = m1 * std::pow(double(cutoff), 1.0 - s) / (s - 1.0);
        out.tail = scale * tail;
        out.uncertainty = out.tail;
        out.value = out.partial;
    }
    return out;
}

MeanSquareReport mean_square(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                             std::vector<double> T_grid, int order, bool classical) {
    require(!T_grid.empty(), "mean_square: empty T grid");
    require(order >= 2, "mean_square: quadrature order < 2 rejected");
    std::sort(T_grid.begin(), T_grid.end());
    require(T_grid.front() >= 1.0, "mean_square: T must be >= 1");
    require(T_grid.back() <= double(coeffs.size()), "mean_square: T beyond coefficient range");

    ErrorTerm E(inst, coeffs, classical);
    double d = inst.invariants(0.0).degree;
    MeanSquareReport rep;
    rep.instance = inst.name;
    rep.order = order;
    rep.classical = classical;
    double cum = 0.0, prev = 1.0;
    for (double T : T_grid) {
        cum += piecewise_integral(E, prev, T, 2.0, 0.0, order);
        MeanSquareRow row;
        row.T = T;
        row.integral = cum;
        row.ratio = cum / std::pow(T, 2.0 - 1.0 / d);
        rep.rows.push_back(row);
        prev = T;
    }
    rep.predicted = predicted_C(inst, coeffs, std::min<i64>(1'000'000, coeffs.size()));
    return rep;
}

std::vector<MomentsRow> moments(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                                const std::vector<double>& u_list, std::vector<double> T_grid,
                                int order) {
    std::sort(T_grid.begin(), T_grid.end());
    require(!T_grid.empty() && T_grid.front() >= 1.0, "moments: bad T grid");
    require(T_grid.back() <= double(coeffs.size()), "moments: T beyond coefficient range");
    for (double u : u_list)
        require(u >= 0.0 && u <= 2.0, "moments: u outside [0,2] rejected");
    ErrorTerm E(inst, coeffs);
    double d = inst.invariants(0.0).degree;
    std::vector<MomentsRow> rows;
    for (double u : u_list) {
        double cum = 0.0, prev = 1.0;
        for (double T : T_grid) {
            cum += piecewise_integral(E, prev, T, u, 0.0, order);
            MomentsRow row;
            row.u = u;
            row.T = T;
            row.value = cum / std::pow(T, 1.0 + (d - 1.0) * u / (2.0 * d));
            rows.push_back(row);
            prev = T;
        }
    }
    return rows;
}

namespace {

struct ModelTables {
    // flattened per-n inner coefficients a(n m^d) m^{-(d+1)/2}
    std::vector<double> pref;   // q_d(n) n^{-(d+1)/(2d)} (zero when not d-free)
    std::vector<i64> m_count;
    std::vector<double> coef;   // concatenated
    std::vector<std::size_t> offset;
    double c0pi = 0.0;
    double kappa0 = 0.0;
};

ModelTables build_model_tables(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                               i64 N1, int m_cap) {
    auto inv = inst.invariants(0.0);
    int d = inst.degree();
    require(N1 >= 1, "distribution model: N1 >= 1");
    require(N1 <= coeffs.size(), "distribution model: N1 beyond coefficient range for a(n m^d)");
    ModelTables mt;
    mt.c0pi = inv.c0 * kPi;
    // the model frequencies run over plain n, so the dual-series weights
    // b(n) mu_n^{-(r-theta)} contribute the extra omega Q^{1/d} here
    mt.kappa0 = inv.kappa0 * inst.fe.omega * std::pow(inst.fe.Q, 1.0 / double(d));
    // d-free sieve
    std::vector<char> dfree(std::size_t(N1) + 1, 1);
    for (i64 q = 2;; q++) {
        double qd = std::pow(double(q), double(d));
        if (qd > double(N1)) break;
        i64 qdi = i64(std::llround(qd));
        for (i64 m = qdi; m <= N1; m += qdi) dfree[std::size_t(m)] = 0;
    }
    mt.pref.resize(std::size_t(N1) + 1, 0.0);
    mt.m_count.resize(std::size_t(N1) + 1, 0);
    mt.offset.resize(std::size_t(N1) + 2, 0);
    for (i64 n = 1; n <= N1; n++) {
        mt.offset[std::size_t(n)] = mt.coef.size();
        if (!dfree[std::size_t(n)]) continue;
        mt.pref[std::size_t(n)] = std::pow(double(n), -(d + 1.0) / (2.0 * d));
        i64 mmax = 0;
        while (true) {
            i64 m = mmax + 1;
            double nmd = double(n) * std::pow(double(m), double(d));
            if (m > m_cap || nmd > double(coeffs.size())) break;
            mmax = m;
        }
        require(mmax >= 1, "distribution model: N1 beyond coefficient range for a(n m^d)");
        for (i64 m = 1; m <= mmax; m++) {
            i64 idx = n;
            for (int i = 0; i < d; i++) idx *= m;
            mt.coef.push_back(coeffs.at(idx) * std::pow(double(m), -(d + 1.0) / 2.0));
        }
        mt.m_count[std::size_t(n)] = mmax;
    }
    mt.offset[std::size_t(N1) + 1] = mt.coef.size();
    return mt;
}

double model_sample(const ModelTables& mt, i64 N1, Rng& rng) {
    double acc = 0.0;
    double cp = std::cos(mt.c0pi), sp = std::sin(mt.c0pi);
    for (i64 n = 1; n <= N1; n++) {
        double pref = mt.pref[std::size_t(n)];
        if (pref == 0.0) {
            (void)rng.next_double();
            continue;
        }
        double phi = rng.next_double();
        double cb = std::cos(2.0 * kPi * phi), sb = std::sin(2.0 * kPi * phi);
        // e_m = e^{i 2 pi phi m}, term = Re(e_m e^{i c0 pi})
        double cr = cb, si = sb;
        double inner = 0.0;
        const double* cf = mt.coef.data() + mt.offset[std::size_t(n)];
        i64 mc = mt.m_count[std::size_t(n)];
        for (i64 m = 0; m < mc; m++) {
            inner += cf[m] * (cr * cp - si * sp);
            double nr = cr * cb - si * sb;
            si = cr * sb + si * cb;
            cr = nr;
        }
        acc += pref * inner;
    }
    return mt.kappa0 * acc;
}

double ks_distance(std::vector<double>& a, std::vector<double>& b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ks = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            i++;
        else
            j++;
        double fa = double(i) / double(a.size());
        double fb = double(j) / double(b.size());
        ks = std::max(ks, std::abs(fa - fb));
    }
    return ks;
}

} // namespace

double model_variance(const LFunctionInstance& inst, const ArithmeticSequence& coeffs, i64 N1,
                      int m_cap) {
    auto mt = build_model_tables(inst, coeffs, N1, m_cap);
    double var = 0.0;
    for (i64 n = 1; n <= N1; n++) {
        double pref = mt.pref[std::size_t(n)];
        if (pref == 0.0) continue;
        const double* cf = mt.coef.data() + mt.offset[std::size_t(n)];
        double s2 = 0.0;
        for (i64 m = 0; m < mt.m_count[std::size_t(n)]; m++) s2 += cf[m] * cf[m];
        var += pref * pref * 0.5 * s2;
    }
    return mt.kappa0 * mt.kappa0 * var;
}

DistributionReport distribution(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                                double T, i64 samples, DistributionOptions opt) {
    require(samples >= 1000, "distribution: need at least 1e3 samples");
    require(T > 1.0 && T <= double(coeffs.size()), "distribution: T beyond coefficient range");
    require(opt.bins >= 4 && opt.range > 0.0, "distribution: bad histogram spec");
    ErrorTerm E(inst, coeffs);
    double theta = inst.invariants(0.0).theta_rho;

    DistributionReport rep;
    rep.T = T;
    rep.samples = samples;
    rep.bins = opt.bins;
    rep.range = opt.range;
    rep.seed = opt.seed;
    rep.moment_u = opt.moment_u;

    std::vector<double> vals(static_cast<std::size_t>(samples));
    double step = (T - 1.0) / double(samples);
    parallel_chunks(std::size_t(samples), 512, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; i++) {
            double t = 1.0 + (double(i) + 0.5) * step;
            vals[i] = std::pow(t, -theta) * E(t);
        }
    });

    auto histogram = [&](const std::vector<double>& v) {
        std::vector<double> h(std::size_t(opt.bins), 0.0);
        double bw = 2.0 * opt.range / opt.bins;
        for (double x : v) {
            int b = int(std::floor((x + opt.range) / bw));
            b = std::clamp(b, 0, opt.bins - 1);
            h[std::size_t(b)] += 1.0;
        }
        for (auto& x : h) x /= double(v.size());
        return h;
    };
    rep.hist = histogram(vals);

    Kahan mean, var;
    double t2 = 0, t3 = 0, t4 = 0;
    for (double v : vals) {
        mean.add(v);
        if (std::abs(v) > 2.0) t2 += 1.0;
        if (std::abs(v) > 3.0) t3 += 1.0;
        if (std::abs(v) > 4.0) t4 += 1.0;
    }
    rep.mean = mean.value() / double(samples);
    for (double v : vals) var.add((v - rep.mean) * (v - rep.mean));
    rep.variance = var.value() / double(samples);
    rep.tail2 = t2 / double(samples);
    rep.tail3 = t3 / double(samples);
    rep.tail4 = t4 / double(samples);
    for (double u : opt.moment_u) {
        Kahan mu;
        for (double v : vals) mu.add(std::pow(std::abs(v), u));
        rep.moment_val.push_back(mu.value() / double(samples));
    }

    if (opt.model) {
        rep.has_model = true;
        rep.N1 = opt.N1;
        rep.model_samples = opt.model_samples;
        auto mt = build_model_tables(inst, coeffs, opt.N1, opt.model_m_cap);
        std::vector<double> mv(static_cast<std::size_t>(opt.model_samples));
        parallel_chunks(std::size_t(opt.model_samples), 512,
                        [&](std::size_t, std::size_t b, std::size_t e) {
                            for (std::size_t i = b; i < e; i++) {
                                Rng rng(opt.seed, u64(i));
                                mv[i] = model_sample(mt, opt.N1, rng);
                            }
                        });
        rep.model_hist = histogram(mv);
        Kahan mm, mvar;
        for (double v : mv) mm.add(v);
        rep.model_mean = mm.value() / double(opt.model_samples);
        for (double v : mv) mvar.add((v - rep.model_mean) * (v - rep.model_mean));
        rep.model_variance = mvar.value() / double(opt.model_samples);
        rep.ks = ks_distance(vals, mv);
    }
    return rep;
}

std::vector<ExtremaWindow> extrema_scan(const LFunctionInstance& inst,
                                        const ArithmeticSequence& coeffs, double x0,
                                        int window_count, double B) {
    require(x0 >= 2.0, "extrema_scan: x0 too small");
    require(window_count >= 1 && B > 0.0, "extrema_scan: bad window spec");
    ErrorTerm E(inst, coeffs);
    double d = inst.invariants(0.0).degree;
    std::vector<ExtremaWindow> out;
    double x = x0;
    for (int wi = 0; wi < window_count; wi++) {
        double len = B * std::pow(x, 1.0 - 1.0 / d);
        double end = x + len;
        require(end <= double(coeffs.size()), "extrema_scan: window beyond coefficient range");
        // exact extrema rely on Q nondecreasing across the window (true for
        // every built-in); guard against silent misuse
        require(E.main(end) >= E.main(x) - 1e-9 * (std::abs(E.main(x)) + 1.0),
                "extrema_scan: main term not monotone on the window");
        ExtremaWindow win;
        win.x = x;
        win.len = len;
        // piecewise structure: E decreasing (or constant) between jumps
        double vmax = -1e300, vmin = 1e300;
        i64 nA = i64(std::floor(x));
        i64 nB = i64(std::floor(end));
        i64 signflips = 0;
        double prev_v = 0.0;
        bool have_prev = false;
        for (i64 n = nA; n <= nB; n++) {
            double lo = std::max(double(n), x);
            double hi = std::min(double(n + 1), end);
            if (hi <= lo) continue;
            double A = E.cum(n);
            double vhi = A - E.main(lo); // value just inside the piece start
            double vlo = A - E.main(hi); // infimum approaching the piece end
            vmax = std::max(vmax, vhi);
            vmin = std::min(vmin, vlo);
            if (have_prev && ((prev_v < 0.0) != (vhi < 0.0))) signflips++; // jump crossing
            if ((vhi < 0.0) != (vlo < 0.0)) signflips++;                  // in-piece crossing
            prev_v = vlo;
            have_prev = true;
        }
        win.max_e = vmax;
        win.min_e = vmin;
        win.sign_changes = signflips;
        out.push_back(win);
        x = end;
    }
    return out;
}

} // namespace slcf
