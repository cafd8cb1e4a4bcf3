#ifndef SLCF_EXPERIMENTS_HPP
#define SLCF_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "slcf/error_term.hpp"

namespace slcf {

// Gauss-Legendre nodes/weights on [-1,1], any order >= 2.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

struct MeanSquareRow {
    double T = 0;
    double integral = 0; // int_1^T E^2
    double ratio = 0;    // integral / T^{2-1/d}
};

struct PredictedC {
    double value = 0;       // partial series + extrapolated tail, scaled
    double partial = 0;     // scaled partial sum through the cutoff
    double tail = 0;        // scaled extrapolated tail (added into value)
    double uncertainty = 0; // reported error bar on the tail extrapolation
    i64 cutoff = 0;
};

struct MeanSquareReport {
    std::string instance;
    std::vector<MeanSquareRow> rows;
    PredictedC predicted;
    int order = 0;
    bool classical = false;
};

MeanSquareReport mean_square(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                             std::vector<double> T_grid, int order, bool classical = false);

PredictedC predicted_C(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                       i64 cutoff = 1'000'000);

// int_lo^hi y^w E(y)^2 dy, piecewise Gauss-Legendre
double weighted_e2_integral(const ErrorTerm& E, double lo, double hi, double w, int order);

struct DistributionReport {
    double T = 0;
    i64 samples = 0;
    int bins = 0;
    double range = 0; // histogram covers [-range, range]; edge bins absorb outliers
    std::vector<double> hist;
    double mean = 0, variance = 0;
    double tail2 = 0, tail3 = 0, tail4 = 0; // mass beyond |alpha| in {2,3,4}
    std::vector<double> moment_u;   // requested u
    std::vector<double> moment_val; // (1/samples) sum |v|^u
    bool has_model = false;
    i64 model_samples = 0;
    i64 N1 = 0;
    u64 seed = 0;
    std::vector<double> model_hist;
    double model_mean = 0, model_variance = 0;
    double ks = 0;
};

struct DistributionOptions {
    int bins = 80;
    double range = 4.0;
    bool model = false;
    i64 N1 = 1000;
    i64 model_samples = 24'000;
    int model_m_cap = 24;
    u64 seed = 1;
    std::vector<double> moment_u; // u-moments of the normalized samples
};

DistributionReport distribution(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                                double T, i64 samples, DistributionOptions opt = {});

// variance of the random-phase model, sum of half-squared amplitudes
double model_variance(const LFunctionInstance& inst, const ArithmeticSequence& coeffs, i64 N1,
                      int m_cap = 24);

struct MomentsRow {
    double u = 0;
    double T = 0;
    double value = 0; // T^{-1-(d-1)u/(2d)} int_1^T |E|^u
};

std::vector<MomentsRow> moments(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
                                const std::vector<double>& u_list, std::vector<double> T_grid,
                                int order);

struct ExtremaWindow {
    double x = 0;
    double len = 0; // B x^{1-1/d}
    double max_e = 0;
    double min_e = 0;
    i64 sign_changes = 0;
};

std::vector<ExtremaWindow> extrema_scan(const LFunctionInstance& inst,
                                        const ArithmeticSequence& coeffs, double x0,
                                        int window_count, double B);

} // namespace slcf

#endif
