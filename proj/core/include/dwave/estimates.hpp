#pragma once

// Decay exponents, norm-decay regression, parameter admissibility and
// Hoelder exponent construction for the nonlinear estimates.

#include "dwave/grid.hpp"
#include "dwave/profiles.hpp"
#include "dwave/propagators.hpp"

#include <boost/rational.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dwave {

using rational = boost::rational<long long>;

struct EstimateParams {
    int n = 1;
    double p_lebesgue = 2.0;  // target L^p norm; +inf allowed
    double q = 1.0;           // data L^q norm
    double r = 2.0;
    double s = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double p_power = 2.0;

    double beta_lplq = 0.0;       // (n-1)|1/2 - 1/p_lebesgue|
    double beta_nonlinear = 0.0;  // (n-1)(1/r - 1/2)
    double sigma1 = 1.0;
    double sigma2 = 2.0;
    double eta = 0.0;
    double omega = 0.0;
    double p_c = 0.0;

    bool admissible_global = false;     // r range and p upper range
    bool admissible_critical = false;   // global, and p >= p_c
    bool admissible_weighted = false;   // narrower r range, p >= p_c
    bool admissible_subcritical = false;  // global, and p < p_c
    bool subcritical = false;             // p < p_c
};

// n >= 1, r in (1, 2], s >= 0, p_power > 1.
EstimateParams param_set(int n, double r, double s, double p_power);
// Attach the linear-estimate fields (p, q, s1, s2).
EstimateParams with_norms(EstimateParams params, double p_lebesgue, double q, double s1, double s2);

// Upper end of the p range: 1 + min{n, 2}/(n - 2s) when 2s < n, else +inf.
double p_power_upper(int n, double s);

double theoretical_low_exponent(const EstimateParams& params);
double theoretical_diff_exponent(const EstimateParams& params);
double theoretical_dt_exponent(const EstimateParams& params);

// Exact version: inv_p = 1/p (0 for p = infinity), inv_q = 1/q, ds = s1 - s2.
rational low_exponent_exact(int n, rational inv_q, rational inv_p, rational ds);

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    double r2 = 0.0;
    std::vector<double> times;
    std::vector<double> norms;
};

// Least squares of log y against log <t>; needs >= 8 positive samples.
DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& values);

// count log-spaced points on [t0, t1].
std::vector<double> log_spaced(double t0, double t1, int count);
// [10, 0.8 (L/4)^2] with 16 log-spaced points.
std::vector<double> default_time_grid(const GridSpec& grid);

// Operators: D, D_low, dtD, G, diff_DG, nishihara ("nishihara_triple" accepted by the parser).
Propagator parse_decay_operator(const std::string& name);

// Slope of log || |grad|^{s1} op(t) g ||_{L^p} against log <t>.
DecayFit measure_decay(Propagator op, const DataProfile& profile, const EstimateParams& params,
                       const std::vector<double>& t_grid, const GridSpec& grid);

// Generic witness for L^q data: Gaussian for q = 1, RegularizedPower with k = n/q otherwise.
DataProfile decay_witness(int n, double q);

struct HolderExponents {
    double q0 = 0.0;
    std::vector<double> q;  // q_1 .. q_[s]
    std::vector<int> k;
};

// Constraint system for the exponents: returns the first violated clause, if any.
std::optional<std::string> holder_violation(int n, double s, double p_power, double r, const HolderExponents& h);

// s > 1, [s] < p_power, multi-index k of length [s] summing to [s]-1.
HolderExponents holder_exponents(int n, double s, double p_power, double r, const std::vector<int>& k);

// All non-negative multi-indices of the given length and sum.
std::vector<std::vector<int>> multi_indices(int length, int total);

struct SuiteCell {
    Propagator op = Propagator::D;
    double q = 1.0;
    double p = 2.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

struct SuiteConfig {
    GridSpec grid;
    std::vector<SuiteCell> cells;
    std::vector<double> t_grid;  // empty: default_time_grid
    double tolerance = 0.1;
    double tolerance_inf = 0.15;
    int threads = 1;
};

struct SuiteRow {
    std::string cell_id;
    int n = 1;
    double p = 0.0;
    double q = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double theory_slope = 0.0;
    double fitted_slope = 0.0;
    double r2 = 0.0;
    bool pass = false;
};

std::vector<SuiteRow> verify_estimate_suite(const SuiteConfig& config);
void write_suite_csv(std::ostream& os, const std::vector<SuiteRow>& rows);

// The Lebesgue matrix q in {1, 1.5, 2}, p in {2, 4, inf}, s1 - s2 in {0, 1} (q <= p).
std::vector<SuiteCell> standard_matrix(Propagator op);

}  // namespace dwave
