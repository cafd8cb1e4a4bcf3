// CLI contract tests: exit codes, JSON shape, cache round trips,
// reproducibility.  Invoked with the slcf binary path as argv[1].
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

std::string g_bin;
int g_fail = 0;

#define CHECK_MSG(cond, msg)                                              \
    do {                                                                  \
        if (!(cond)) {                                                    \
            std::cerr << "[FAIL] " << __LINE__ << ": " << msg << "\n";    \
            g_fail++;                                                     \
        }                                                                 \
    } while (0)

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r{-1, ""};
    if (!p) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), p)) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WEXITSTATUS(st);
    return r;
}

nlohmann::json parse_json(const std::string& s) {
    return nlohmann::json::parse(s, nullptr, false);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <slcf binary>\n";
        return 2;
    }
    g_bin = argv[1];

    // no arguments -> usage, exit 2
    {
        auto r = run("");
        CHECK_MSG(r.status == 2, "no-args exit status, got " << r.status);
    }
    // unknown subcommand -> exit 2
    {
        auto r = run("frobnicate");
        CHECK_MSG(r.status == 2, "unknown subcommand status, got " << r.status);
    }
    // invariants zeta2: JSON contains h = 4 and theta = 0.25
    {
        auto r = run("invariants --instance zeta2");
        CHECK_MSG(r.status == 0, "invariants status " << r.status);
        auto j = parse_json(r.out);
        CHECK_MSG(!j.is_discarded(), "invariants emits JSON");
        CHECK_MSG(std::abs(j.value("h", 0.0) - 4.0) < 1e-12, "h = 4");
        CHECK_MSG(std::abs(j.value("theta_rho", 0.0) - 0.25) < 1e-12, "theta0 = 0.25");
        CHECK_MSG(j.contains("kappa0"), "kappa0 present");
        CHECK_MSG(j.contains("seed"), "seed recorded");
    }
    // precondition violation -> exit 1 with the named condition
    {
        auto r = run("tong-check --instance zeta2 --x 0.5 --y 1");
        CHECK_MSG(r.status == 1, "precondition violation exits 1, got " << r.status);
    }
    // the sigma* window error names the violated condition
    {
        std::string cmd = g_bin + " invariants --instance zeta4 --exponent 2>&1";
        FILE* p = popen(cmd.c_str(), "r");
        std::string out;
        char buf[512];
        while (std::size_t n = fread(buf, 1, sizeof(buf), p)) out.append(buf, n);
        int st = WEXITSTATUS(pclose(p));
        CHECK_MSG(st == 1, "zeta4 exponent violates the window, got " << st);
        CHECK_MSG(out.find("sigmastarcondition") != std::string::npos,
                  "error names Eq. (sigmastarcondition)");
        auto ok = run("invariants --instance zeta3 --exponent");
        auto j = parse_json(ok.out);
        CHECK_MSG(std::abs(j.value("error_exponent", 0.0) - 1.6) < 1e-12, "zeta3 exponent 8/5");
        auto cond = run("invariants --instance zeta3 --exponent --sigma-star 0.58333333333333333");
        auto jc = parse_json(cond.out);
        CHECK_MSG(std::abs(jc.value("error_exponent", 0.0) - 14.0 / 9.0) < 1e-9,
                  "conditional sigma* gives 14/9");
    }
    // meansquare smoke: CSV with one populated row
    {
        auto r = run("meansquare --instance zeta2 --T 1e4 --csv /tmp/slcf_ms.csv --json /tmp/slcf_ms.json");
        CHECK_MSG(r.status == 0, "meansquare status " << r.status);
        std::ifstream csv("/tmp/slcf_ms.csv");
        std::string hdr, row;
        std::getline(csv, hdr);
        std::getline(csv, row);
        CHECK_MSG(hdr == "T,integral,ratio", "csv header");
        CHECK_MSG(row.find(',') != std::string::npos, "csv row populated");
        double T = 0, integral = 0, ratio = 0;
        std::sscanf(row.c_str(), "%lf,%lf,%lf", &T, &integral, &ratio);
        CHECK_MSG(T == 1e4 && integral > 0 && ratio > 0, "ratio column populated");
    }
    // reruns bit-identical except wall time
    {
        auto r1 = run("--seed 9 meansquare --instance zeta2 --T 3e3 --json /dev/stdout");
        auto r2 = run("--seed 9 meansquare --instance zeta2 --T 3e3 --json /dev/stdout");
        auto j1 = parse_json(r1.out);
        auto j2 = parse_json(r2.out);
        CHECK_MSG(!j1.is_discarded() && !j2.is_discarded(), "both runs emit JSON");
        j1.erase("wall_ms");
        j2.erase("wall_ms");
        CHECK_MSG(j1.dump() == j2.dump(), "reports identical modulo wall time");
    }
    // coefficient cache: second run hits the cache and agrees
    {
        int rc = std::system("rm -rf /tmp/slcf_cache && mkdir -p /tmp/slcf_cache");
        CHECK_MSG(rc == 0, "cache dir setup");
        auto r1 = run("--cache /tmp/slcf_cache coeffs --instance zeta3 --limit 5000");
        CHECK_MSG(r1.status == 0, "coeffs build status " << r1.status);
        std::ifstream probe("/tmp/slcf_cache/zeta3_5000.slcf");
        CHECK_MSG(probe.good(), "cache file written");
        auto r2 = run("--cache /tmp/slcf_cache coeffs --instance zeta3 --limit 5000");
        CHECK_MSG(r2.status == 0, "coeffs cached status " << r2.status);
        auto j1 = parse_json(r1.out);
        auto j2 = parse_json(r2.out);
        j1.erase("wall_ms");
        j2.erase("wall_ms");
        CHECK_MSG(j1.dump() == j2.dump(), "cache round trip preserves the report");
    }
    // config file with flag override
    {
        std::ofstream cfg("/tmp/slcf.cfg");
        cfg << "[invariants]\ninstance=zeta3\nrho=0\n";
        cfg.close();
        auto r = run("--config /tmp/slcf.cfg invariants --instance zeta2");
        CHECK_MSG(r.status == 0, "config run status " << r.status);
        auto j = parse_json(r.out);
        CHECK_MSG(j.value("instance", "") == "zeta2", "flag overrides config file");
        // config can satisfy a required option on its own
        auto r2 = run("--config /tmp/slcf.cfg invariants");
        CHECK_MSG(r2.status == 0, "config-only run status " << r2.status);
        auto j2 = parse_json(r2.out);
        CHECK_MSG(j2.value("instance", "") == "zeta3", "config supplies the instance");
    }
    // environment variable selects the cache directory
    {
        int rc = std::system("rm -rf /tmp/slcf_envcache && mkdir -p /tmp/slcf_envcache");
        CHECK_MSG(rc == 0, "env cache dir setup");
        std::string cmd = "SLCF_CACHE=/tmp/slcf_envcache " + g_bin +
                          " coeffs --instance zeta2 --limit 2000 > /dev/null 2>&1";
        rc = std::system(cmd.c_str());
        CHECK_MSG(WEXITSTATUS(rc) == 0, "env cache run");
        std::ifstream probe("/tmp/slcf_envcache/zeta2_2000.slcf");
        CHECK_MSG(probe.good(), "SLCF_CACHE honored");
    }
    // mainterm oracle output
    {
        auto r = run("mainterm --instance zeta2 --y 1000 --oracle");
        CHECK_MSG(r.status == 0, "mainterm status " << r.status);
        CHECK_MSG(r.out.find("closed-form") != std::string::npos, "closed form printed");
        CHECK_MSG(r.out.find("oracle") != std::string::npos, "oracle printed");
    }
    // bessel both evaluations and difference
    {
        auto r = run("bessel --instance zeta2 --x 2000 --rho 0 --terms 1 --oracle");
        CHECK_MSG(r.status == 0, "bessel status " << r.status);
        CHECK_MSG(r.out.find("difference") != std::string::npos, "difference printed");
    }
    // voronoi CSV schema
    {
        auto r = run("voronoi --instance zeta2 --range 1000:2000 --samples 50 --M 99,987 "
                     "--csv /tmp/slcf_vor.csv --json /dev/stdout");
        CHECK_MSG(r.status == 0, "voronoi status " << r.status);
        std::ifstream csv("/tmp/slcf_vor.csv");
        std::string hdr;
        std::getline(csv, hdr);
        CHECK_MSG(hdr == "y,E,R1,residual", "voronoi csv header");
        auto j = parse_json(r.out);
        CHECK_MSG(j.contains("rows") && j["rows"].size() == 2, "voronoi rows per M");
    }
    // dist and moments smoke
    {
        auto r = run("--seed 3 dist --instance zeta2 --T 2e4 --samples 2000 --bins 20 "
                     "--csv /tmp/slcf_dist.csv --json /dev/stdout");
        CHECK_MSG(r.status == 0, "dist status " << r.status);
        auto j = parse_json(r.out);
        CHECK_MSG(j.value("seed", 0) == 3, "dist seed recorded");
        auto m = run("moments --instance zeta2 --u 1,2 --T 1e4 --json /dev/stdout");
        CHECK_MSG(m.status == 0, "moments status " << m.status);
        auto jm = parse_json(m.out);
        CHECK_MSG(jm.contains("rows") && jm["rows"].size() == 2, "moments rows");
    }
    // plot script emission
    {
        auto r = run("scan --instance zeta2 --x0 10000 --windows 5 --B 4 --csv /tmp/slcf_scan.csv "
                     "--plot /tmp/slcf_scan.gp");
        CHECK_MSG(r.status == 0, "scan status " << r.status);
        std::ifstream gp("/tmp/slcf_scan.gp");
        std::stringstream ss;
        ss << gp.rdbuf();
        CHECK_MSG(ss.str().find("plot") != std::string::npos, "gnuplot script has a plot line");
        CHECK_MSG(ss.str().find("slcf_scan.csv") != std::string::npos, "script references the data");
    }

    if (g_fail == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << g_fail << " failures\n";
    return 1;
}
