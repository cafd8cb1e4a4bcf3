// slcf: L-function summatory error terms, Voronoi/Tong series and
// mean-square experiments from the command line.
//
// Subcommands: coeffs, invariants, mainterm, voronoi, bessel, tong-check,
// meansquare, dist, moments, scan.  Every run emits a JSON report with full
// provenance (instance, cutoffs, tolerances, seed); data tables go to CSV.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slcf/coeffs.hpp"
#include "slcf/error_term.hpp"
#include "slcf/experiments.hpp"
#include "slcf/lfunc.hpp"
#include "slcf/mainterm.hpp"
#include "slcf/mellin.hpp"
#include "slcf/util.hpp"
#include "slcf/voronoi.hpp"

using json = nlohmann::ordered_json;
using namespace slcf;

namespace {

struct Global {
    unsigned threads = 0;
    std::string cache_dir;
    u64 seed = 1;
    i64 tau_max = 2'000'000;
    std::chrono::steady_clock::time_point t0;
};

json base_report(const Global& g, const std::string& cmd) {
    json j;
    j["tool"] = "slcf";
    j["version"] = kVersion;
    j["command"] = cmd;
    j["seed"] = g.seed;
    return j;
}

void finish_report(json& j, const Global& g, const std::string& out_path) {
    auto dt = std::chrono::steady_clock::now() - g.t0;
    j["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    std::string text = j.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

ArithmeticSequence load_coeffs(const Global& g, const LFunctionInstance& inst, i64 limit) {
    if (!g.cache_dir.empty()) {
        std::string path = g.cache_dir + "/" + inst.name + "_" + std::to_string(limit) + ".slcf";
        std::ifstream probe(path);
        if (probe.good()) {
            probe.close();
            auto seq = read_cache(path);
            if (seq.size() == limit) return seq;
        }
        auto seq = inst.make_coeffs(limit);
        write_cache(seq, path);
        return seq;
    }
    return inst.make_coeffs(limit);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::strtod(s.substr(pos, next - pos).c_str(), nullptr));
        pos = next + 1;
    }
    require(!out.empty(), "empty list argument");
    return out;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream f(path);
    require(f.good(), "cannot open CSV output " + path);
    f << header << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); i++) f << (i ? "," : "") << fmt_g17(r[i]);
        f << "\n";
    }
}

void emit_plot_script(const std::string& gp_path, const std::string& csv_path,
                      const std::string& kind, const json& extra) {
    std::ofstream f(gp_path);
    require(f.good(), "cannot open plot script " + gp_path);
    f << "# gnuplot script generated by slcf\n";
    f << "set datafile separator ','\n";
    f << "set key top right\n";
    if (kind == "meansquare") {
        f << "set logscale x\n";
        f << "set xlabel 'T'\nset ylabel 'R(T)'\n";
        f << "C = " << fmt_g17(extra.value("predicted_C", 0.0)) << "\n";
        f << "plot '" << csv_path << "' using 1:3 with linespoints title 'R(T)', C with lines title 'C_d'\n";
    } else if (kind == "dist") {
        f << "set xlabel 'alpha'\nset ylabel 'density'\n";
        f << "set style data histeps\n";
        f << "plot '" << csv_path << "' using 1:2 title 'empirical', '" << csv_path
          << "' using 1:3 title 'model'\n";
    } else if (kind == "scan") {
        f << "set xlabel 'x'\nset ylabel 'E extrema'\n";
        f << "plot '" << csv_path << "' using 1:3 with lines title 'max E', '" << csv_path
          << "' using 1:4 with lines title 'min E', 0.1*x**0.25 title 'B\\' x^{1/4}', -0.1*x**0.25 notitle\n";
    } else {
        f << "plot '" << csv_path << "' using 1:2 with lines\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    Global g;
    g.t0 = std::chrono::steady_clock::now();
    if (const char* env = std::getenv("SLCF_CACHE")) g.cache_dir = env;

    CLI::App app{"Selberg-class summatory error terms: Voronoi/Tong machinery"};
    app.set_config("--config", "", "flat key=value configuration; flags override");
    app.add_option("--threads", g.threads, "worker cap (0 = hardware)");
    app.add_option("--cache", g.cache_dir, "coefficient cache directory");
    app.add_option("--seed", g.seed, "random seed recorded in outputs");
    app.add_option("--tau-max", g.tau_max, "tau pipeline limit (default 2e6)");
    app.require_subcommand(1);

    // ---- coeffs --------------------------------------------------------
    auto* c_cmd = app.add_subcommand("coeffs", "generate or load coefficient sequences");
    std::string c_inst = "zeta2";
    i64 c_limit = 1000;
    c_cmd->add_option("--instance", c_inst)->required();
    c_cmd->add_option("--limit", c_limit)->required();

    // ---- invariants ----------------------------------------------------
    auto* i_cmd = app.add_subcommand("invariants", "derived functional-equation invariants");
    std::string i_inst, i_fmt = "json", i_out;
    double i_rho = 0.0, i_sigma = -1.0;
    bool i_expo = false;
    i_cmd->add_option("--instance", i_inst)->required();
    i_cmd->add_option("--rho", i_rho);
    i_cmd->add_option("--format", i_fmt)->check(CLI::IsMember({"json", "csv"}));
    i_cmd->add_flag("--exponent", i_expo, "mean-square error exponent for the instance");
    i_cmd->add_option("--sigma-star", i_sigma, "override the mean-square abscissa");
    i_cmd->add_option("--out", i_out);

    // ---- mainterm ------------------------------------------------------
    auto* m_cmd = app.add_subcommand("mainterm", "closed-form main term and the residue oracle");
    std::string m_inst;
    double m_y = 100.0;
    bool m_oracle = false;
    m_cmd->add_option("--instance", m_inst)->required();
    m_cmd->add_option("--y", m_y)->required();
    m_cmd->add_flag("--oracle", m_oracle);

    // ---- voronoi -------------------------------------------------------
    auto* v_cmd = app.add_subcommand("voronoi", "truncated leading series and residuals");
    std::string v_inst, v_range = "10000:20000", v_mlist = "100,1000", v_csv, v_json;
    i64 v_samples = 1000, v_limit = 0;
    v_cmd->add_option("--instance", v_inst)->required();
    v_cmd->add_option("--range", v_range, "A:B");
    v_cmd->add_option("--samples", v_samples);
    v_cmd->add_option("--M", v_mlist, "comma list of mu_n cutoffs");
    v_cmd->add_option("--limit", v_limit);
    v_cmd->add_option("--csv", v_csv);
    v_cmd->add_option("--json", v_json);

    // ---- bessel --------------------------------------------------------
    auto* b_cmd = app.add_subcommand("bessel", "generalized Bessel function f_rho");
    std::string b_inst;
    double b_x = 1e4, b_rho = 0.0;
    int b_terms = 1;
    bool b_oracle = false;
    b_cmd->add_option("--instance", b_inst)->required();
    b_cmd->add_option("--x", b_x)->required();
    b_cmd->add_option("--rho", b_rho);
    b_cmd->add_option("--terms", b_terms);
    b_cmd->add_flag("--oracle", b_oracle);

    // ---- tong-check ----------------------------------------------------
    auto* t_cmd = app.add_subcommand("tong-check", "two-sided Tong identity oracle");
    std::string t_inst;
    double t_x = 100.5, t_y = 1.0, t_L = 0.0, t_tol = 1e-5;
    int t_k = 1, t_rho = 0;
    i64 t_limit = 0;
    t_cmd->add_option("--instance", t_inst)->required();
    t_cmd->add_option("--x", t_x)->required();
    t_cmd->add_option("--y", t_y);
    t_cmd->add_option("--k", t_k);
    t_cmd->add_option("--rho", t_rho);
    t_cmd->add_option("--L", t_L);
    t_cmd->add_option("--tol", t_tol);
    t_cmd->add_option("--limit", t_limit);

    // ---- meansquare ----------------------------------------------------
    auto* ms_cmd = app.add_subcommand("meansquare", "mean-square asymptotics with C_d");
    std::string ms_inst, ms_T = "1e5", ms_csv, ms_json, ms_plot;
    int ms_order = 4;
    bool ms_classical = false;
    i64 ms_limit = 0;
    ms_cmd->add_option("--instance", ms_inst)->required();
    ms_cmd->add_option("--T", ms_T, "comma list of T values");
    ms_cmd->add_option("--order", ms_order);
    ms_cmd->add_flag("--classical", ms_classical, "drop the s=0 constant from Q");
    ms_cmd->add_option("--limit", ms_limit);
    ms_cmd->add_option("--csv", ms_csv);
    ms_cmd->add_option("--json", ms_json);
    ms_cmd->add_option("--plot", ms_plot);

    // ---- dist ----------------------------------------------------------
    auto* d_cmd = app.add_subcommand("dist", "value distribution of the normalized error term");
    std::string d_inst, d_csv, d_json, d_plot;
    double d_T = 1e6;
    i64 d_samples = 100000, d_N1 = 1000, d_mc = 24000;
    int d_bins = 80;
    bool d_model = false;
    i64 d_limit = 0;
    d_cmd->add_option("--instance", d_inst)->required();
    d_cmd->add_option("--T", d_T);
    d_cmd->add_option("--samples", d_samples);
    d_cmd->add_option("--bins", d_bins);
    d_cmd->add_flag("--model", d_model);
    d_cmd->add_option("--N1", d_N1);
    d_cmd->add_option("--mc", d_mc);
    d_cmd->add_option("--limit", d_limit);
    d_cmd->add_option("--csv", d_csv);
    d_cmd->add_option("--json", d_json);
    d_cmd->add_option("--plot", d_plot);

    // ---- moments -------------------------------------------------------
    auto* mo_cmd = app.add_subcommand("moments", "normalized |E|^u averages");
    std::string mo_inst, mo_u = "0.5,1,1.5,2", mo_T = "1e5", mo_csv, mo_json;
    int mo_order = 4;
    i64 mo_limit = 0;
    mo_cmd->add_option("--instance", mo_inst)->required();
    mo_cmd->add_option("--u", mo_u);
    mo_cmd->add_option("--T", mo_T);
    mo_cmd->add_option("--order", mo_order);
    mo_cmd->add_option("--limit", mo_limit);
    mo_cmd->add_option("--csv", mo_csv);
    mo_cmd->add_option("--json", mo_json);

    // ---- scan ----------------------------------------------------------
    auto* s_cmd = app.add_subcommand("scan", "short-interval extrema and sign changes");
    std::string s_inst, s_csv, s_json, s_plot;
    double s_x0 = 1e5, s_B = 4.0;
    int s_windows = 100;
    i64 s_limit = 0;
    s_cmd->add_option("--instance", s_inst)->required();
    s_cmd->add_option("--x0", s_x0);
    s_cmd->add_option("--windows", s_windows);
    s_cmd->add_option("--B", s_B);
    s_cmd->add_option("--limit", s_limit);
    s_cmd->add_option("--csv", s_csv);
    s_cmd->add_option("--json", s_json);
    s_cmd->add_option("--plot", s_plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    set_thread_limit(g.threads);
    set_tau_limit(g.tau_max);

    try {
        if (*c_cmd) {
            const auto& inst = instance(c_inst);
            auto seq = load_coeffs(g, inst, c_limit);
            json j = base_report(g, "coeffs");
            j["instance"] = inst.name;
            j["limit"] = c_limit;
            j["kind"] = seq.kind() == ArithmeticSequence::Kind::real ? "real" : "integer";
            j["wide"] = seq.wide();
            j["ramanujan_C"] = seq.ramanujan_constant(inst.theta);
            j["cache_dir"] = g.cache_dir;
            finish_report(j, g, "");
        } else if (*i_cmd) {
            const auto& inst = instance(i_inst);
            auto inv = derive_invariants(inst.fe, i_rho);
            if (i_fmt == "csv") {
                std::string hdr = "alpha,d,mu,mu_p,nu,nu_p,tau,tau_p,h,theta_rho,kappa0,kappa1,c0,rho";
                std::vector<std::vector<double>> rows = {
                    {inv.alpha, inv.degree, inv.mu, inv.mu_p, inv.nu, inv.nu_p, inv.tau,
                     inv.tau_p, inv.h, inv.theta_rho, inv.kappa0, inv.kappa1, inv.c0, inv.rho}};
                if (i_out.empty()) {
                    std::cout << hdr << "\n";
                    for (std::size_t i = 0; i < rows[0].size(); i++)
                        std::cout << (i ? "," : "") << fmt_g17(rows[0][i]);
                    std::cout << "\n";
                } else {
                    write_csv(i_out, hdr, rows);
                }
            } else {
                json j = base_report(g, "invariants");
                j["instance"] = inst.name;
                j["rho"] = i_rho;
                char buf[40];
                auto put = [&](const char* k, double v) {
                    std::snprintf(buf, sizeof(buf), "%.15g", v);
                    j[k] = std::strtod(buf, nullptr);
                };
                put("alpha", inv.alpha);
                put("d", inv.degree);
                put("mu", inv.mu);
                put("mu_prime", inv.mu_p);
                put("nu", inv.nu);
                put("nu_prime", inv.nu_p);
                put("tau", inv.tau);
                put("tau_prime", inv.tau_p);
                put("h", inv.h);
                put("theta_rho", inv.theta_rho);
                put("kappa0", inv.kappa0);
                put("kappa1", inv.kappa1);
                put("c0", inv.c0);
                j["theta"] = inst.theta;
                j["sigma_star"] = inst.sigma_star;
                j["sigma_star_conditional"] = inst.sigma_star_conditional;
                j["sigma_b_star"] = inst.sigma_b_star;
                if (i_expo) {
                    double ss = i_sigma >= 0.0 ? i_sigma : inst.sigma_star;
                    j["error_exponent"] = error_exponent(inst.degree(), ss);
                    j["error_exponent_sigma_star"] = ss;
                }
                finish_report(j, g, i_out);
            }
        } else if (*m_cmd) {
            const auto& inst = instance(m_inst);
            double closed = inst.main0(m_y);
            json j = base_report(g, "mainterm");
            j["instance"] = inst.name;
            j["y"] = m_y;
            j["closed_form"] = closed;
            std::cout << "closed-form Q(y) = " << fmt_g17(closed) << "\n";
            if (m_oracle) {
                double oracle = numeric_residues(inst, m_y, 0.0);
                j["oracle"] = oracle;
                j["difference"] = closed - oracle;
                std::cout << "residue oracle   = " << fmt_g17(oracle) << "\n";
                std::cout << "difference       = " << fmt_g17(closed - oracle) << "\n";
            }
            finish_report(j, g, "");
        } else if (*v_cmd) {
            const auto& inst = instance(v_inst);
            auto colon = v_range.find(':');
            require(colon != std::string::npos, "voronoi: --range expects A:B");
            double lo = std::strtod(v_range.substr(0, colon).c_str(), nullptr);
            double hi = std::strtod(v_range.substr(colon + 1).c_str(), nullptr);
            auto Ms = parse_list(v_mlist);
            i64 limit = v_limit > 0 ? v_limit : i64(hi) + 1;
            auto seq = load_coeffs(g, inst, limit);
            auto st = residual_stats(inst, seq, lo, hi, v_samples, Ms);
            json j = base_report(g, "voronoi");
            j["instance"] = inst.name;
            j["range"] = {lo, hi};
            j["samples"] = v_samples;
            j["limit"] = limit;
            json rows = json::array();
            for (const auto& r : st.rows) {
                rows.push_back({{"M", r.M},
                                {"rms_residual", r.rms_residual},
                                {"rms_E", r.rms_e},
                                {"rms_R1", r.rms_r1}});
            }
            j["rows"] = rows;
            if (!v_csv.empty()) {
                // per-sample table for the largest M
                ErrorTerm E(inst, seq);
                std::vector<std::vector<double>> data;
                double step = (hi - lo) / double(v_samples);
                double M = Ms.back();
                for (i64 i = 0; i < v_samples; i++) {
                    double y = std::floor(lo + double(i) * step) + 0.5;
                    double e = E(y);
                    double r1 = truncated_r1(inst, seq, y, M, 0).value;
                    data.push_back({y, e, r1, e - r1});
                }
                write_csv(v_csv, "y,E,R1,residual", data);
                j["csv"] = v_csv;
            }
            finish_report(j, g, v_json);
        } else if (*b_cmd) {
            const auto& inst = instance(b_inst);
            auto inv = derive_invariants(inst.fe, b_rho);
            double asym = f_rho_asym(inv, b_x, b_rho, b_terms);
            json j = base_report(g, "bessel");
            j["instance"] = inst.name;
            j["x"] = b_x;
            j["rho"] = b_rho;
            j["terms"] = b_terms;
            j["asymptotic"] = asym;
            std::cout << "f_asym(x)    = " << fmt_g17(asym) << "\n";
            if (b_oracle) {
                auto full = f_rho_contour_full(inv, b_x, b_rho, default_contour(inv, b_x, b_rho));
                j["contour"] = full.value;
                j["imag_diagnostic"] = full.imag_diag;
                j["tail_bound"] = full.tail_bound;
                j["difference"] = full.value - asym;
                std::cout << "f_contour(x) = " << fmt_g17(full.value) << "\n";
                std::cout << "difference   = " << fmt_g17(full.value - asym) << "\n";
            }
            finish_report(j, g, "");
        } else if (*t_cmd) {
            const auto& inst = instance(t_inst);
            i64 limit = t_limit > 0 ? t_limit : 2'000'000;
            auto seq = load_coeffs(g, inst, limit);
            TongOptions opt;
            opt.tol = t_tol;
            auto rep = tong_check(inst, seq, t_x, t_y, t_k, t_rho, t_L, opt);
            json j = base_report(g, "tong-check");
            j["instance"] = inst.name;
            j["x"] = rep.x;
            j["y"] = rep.y;
            j["k"] = rep.k;
            j["rho"] = rep.rho;
            j["L"] = rep.L;
            j["tol"] = t_tol;
            j["limit"] = limit;
            j["lhs"] = rep.lhs;
            j["rhs"] = rep.rhs;
            j["rel_error"] = rep.rel_error;
            j["terms_used"] = rep.terms_used;
            j["tail_bound"] = rep.tail_bound;
            std::printf("lhs = %s\nrhs = %s\nrel_error = %.3e  (terms %lld, tail %.2e)\n",
                        fmt_g17(rep.lhs).c_str(), fmt_g17(rep.rhs).c_str(), rep.rel_error,
                        (long long)rep.terms_used, rep.tail_bound);
            finish_report(j, g, "");
        } else if (*ms_cmd) {
            const auto& inst = instance(ms_inst);
            auto Ts = parse_list(ms_T);
            i64 limit = ms_limit > 0 ? ms_limit : i64(*std::max_element(Ts.begin(), Ts.end()));
            auto seq = load_coeffs(g, inst, limit);
            auto rep = mean_square(inst, seq, Ts, ms_order, ms_classical);
            json j = base_report(g, "meansquare");
            j["instance"] = inst.name;
            j["order"] = ms_order;
            j["classical"] = ms_classical;
            j["limit"] = limit;
            j["series_cutoff"] = rep.predicted.cutoff;
            j["predicted_C"] = rep.predicted.value;
            j["predicted_C_partial"] = rep.predicted.partial;
            j["predicted_C_tail"] = rep.predicted.tail;
            j["tail_uncertainty"] = rep.predicted.uncertainty;
            json rows = json::array();
            std::vector<std::vector<double>> data;
            for (const auto& r : rep.rows) {
                rows.push_back({{"T", r.T}, {"integral", r.integral}, {"ratio", r.ratio}});
                data.push_back({r.T, r.integral, r.ratio});
            }
            j["rows"] = rows;
            if (!ms_plot.empty() && ms_csv.empty()) ms_csv = ms_plot + ".csv";
            if (!ms_csv.empty()) {
                write_csv(ms_csv, "T,integral,ratio", data);
                j["csv"] = ms_csv;
            }
            if (!ms_plot.empty()) {
                json extra;
                extra["predicted_C"] = rep.predicted.value;
                emit_plot_script(ms_plot, ms_csv, "meansquare", extra);
                j["plot"] = ms_plot;
            }
            finish_report(j, g, ms_json);
        } else if (*d_cmd) {
            const auto& inst = instance(d_inst);
            i64 limit = d_limit > 0 ? d_limit : i64(d_T);
            auto seq = load_coeffs(g, inst, limit);
            DistributionOptions opt;
            opt.bins = d_bins;
            opt.model = d_model;
            opt.N1 = d_N1;
            opt.model_samples = d_mc;
            opt.seed = g.seed;
            auto rep = distribution(inst, seq, d_T, d_samples, opt);
            json j = base_report(g, "dist");
            j["instance"] = inst.name;
            j["T"] = d_T;
            j["samples"] = d_samples;
            j["bins"] = d_bins;
            j["range"] = rep.range;
            j["mean"] = rep.mean;
            j["variance"] = rep.variance;
            j["tail_mass_2"] = rep.tail2;
            j["tail_mass_3"] = rep.tail3;
            j["tail_mass_4"] = rep.tail4;
            if (d_model) {
                j["N1"] = d_N1;
                j["model_samples"] = d_mc;
                j["model_mean"] = rep.model_mean;
                j["model_variance"] = rep.model_variance;
                j["ks"] = rep.ks;
            }
            if (!d_plot.empty() && d_csv.empty()) d_csv = d_plot + ".csv";
            if (!d_csv.empty()) {
                std::vector<std::vector<double>> data;
                double bw = 2.0 * rep.range / rep.bins;
                for (int b = 0; b < rep.bins; b++) {
                    double center = -rep.range + (b + 0.5) * bw;
                    double model = d_model ? rep.model_hist[std::size_t(b)] : 0.0;
                    data.push_back({center, rep.hist[std::size_t(b)], model});
                }
                write_csv(d_csv, "alpha,empirical,model", data);
                j["csv"] = d_csv;
            }
            if (!d_plot.empty()) {
                emit_plot_script(d_plot, d_csv, "dist", json{});
                j["plot"] = d_plot;
            }
            finish_report(j, g, d_json);
        } else if (*mo_cmd) {
            const auto& inst = instance(mo_inst);
            auto us = parse_list(mo_u);
            auto Ts = parse_list(mo_T);
            i64 limit = mo_limit > 0 ? mo_limit : i64(*std::max_element(Ts.begin(), Ts.end()));
            auto seq = load_coeffs(g, inst, limit);
            auto rows = moments(inst, seq, us, Ts, mo_order);
            json j = base_report(g, "moments");
            j["instance"] = inst.name;
            j["order"] = mo_order;
            j["limit"] = limit;
            json jr = json::array();
            std::vector<std::vector<double>> data;
            for (const auto& r : rows) {
                jr.push_back({{"u", r.u}, {"T", r.T}, {"value", r.value}});
                data.push_back({r.u, r.T, r.value});
            }
            j["rows"] = jr;
            if (!mo_csv.empty()) {
                write_csv(mo_csv, "u,T,value", data);
                j["csv"] = mo_csv;
            }
            finish_report(j, g, mo_json);
        } else if (*s_cmd) {
            const auto& inst = instance(s_inst);
            double d = double(inst.degree());
            double reach = s_x0;
            for (int i = 0; i < s_windows; i++) reach += s_B * std::pow(reach, 1.0 - 1.0 / d);
            i64 limit = s_limit > 0 ? s_limit : i64(reach) + 2;
            auto seq = load_coeffs(g, inst, limit);
            auto wins = extrema_scan(inst, seq, s_x0, s_windows, s_B);
            json j = base_report(g, "scan");
            j["instance"] = inst.name;
            j["x0"] = s_x0;
            j["windows"] = s_windows;
            j["B"] = s_B;
            j["limit"] = limit;
            json jr = json::array();
            std::vector<std::vector<double>> data;
            for (const auto& w : wins) {
                jr.push_back({{"x", w.x},
                              {"len", w.len},
                              {"max_E", w.max_e},
                              {"min_E", w.min_e},
                              {"sign_changes", w.sign_changes}});
                data.push_back({w.x, w.len, w.max_e, w.min_e, double(w.sign_changes)});
            }
            j["rows"] = jr;
            if (!s_plot.empty() && s_csv.empty()) s_csv = s_plot + ".csv";
            if (!s_csv.empty()) {
                write_csv(s_csv, "x,len,max_E,min_E,sign_changes", data);
                j["csv"] = s_csv;
            }
            if (!s_plot.empty()) {
                emit_plot_script(s_plot, s_csv, "scan", json{});
                j["plot"] = s_plot;
            }
            finish_report(j, g, s_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
