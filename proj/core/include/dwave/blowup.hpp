#pragma once

// Test-function blow-up machinery: psi_R, the constant A, the sufficient
// condition for blow-up, the lower bound of the weighted average, and
// lifespan sweeps.

#include "dwave/grid.hpp"
#include "dwave/nonlinear.hpp"
#include "dwave/profiles.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dwave {

// Phi = l(l-1)|grad psi_R|^2 + l psi_R Lap psi_R at radius r (zero on the plateau).
double test_phi(int n, int l, double R, double r);
// psi_R(r) = chi(r/R).
double test_psi(double R, double r);

struct TestFunction {
    int n = 1;
    double p = 2.0;
    int l = 5;
    double R = 1.0;
    double psi_l_norm = 0.0;  // || psi_R^l ||_1
    double phi_norm = 0.0;    // || |Phi|^{p'} psi_R^{l - 2p'} ||_1
    double A = 0.0;
};

// Radial composite Gauss-Legendre quadrature with `panels` panels on [R, 2R].
TestFunction make_test_function(int n, double p, int l, double R, int panels = 256);

// A(n, p, l, psi_R); requires l > 2p'.
double big_A(int n, double p, int l, double R, int panels = 256);

double mu(double p, double A);

struct RadiusResult {
    double R = 0.0;
    int branch = 0;  // 1: floor, 2: data-size branch, 3: small-eps branch
    double floor = 0.0, data_branch = 0.0, small_branch = 0.0;
};

// n/r < k < min{n, 2/(p-1)}.
RadiusResult radius_R(double eps, int n, double r, double p, double k, double c0, double C0, int l, double A_psi,
                      double psi_l_norm);

struct BlowupCertificate {
    double eps = 0.0;
    double p = 2.0;
    double R = 0.0;
    double I0 = 0.0;
    double I0_prime = 0.0;
    double A = 0.0;
    double psi_l_norm = 0.0;
    double J0 = 0.0;
    double Jtilde0 = 0.0;
    double A1 = 0.0;
    double mu = 0.0;
    bool lower_ok = false;  // 0 < J0
    bool upper_ok = false;  // J0 < 2^{1/(p-1)} ||psi^l||_1
    bool derivative_ok = false;  // I0' > 0
    bool condition_ok = false;
    double t_star = 0.0;  // pole of the lower bound (infinite when not certified)
};

// Weighted average I(u) = sum u psi_R^l dx^n on the grid.
double weighted_average(const Field& u, const TestFunction& phi);

// u0, u1: unscaled space-rep data; eps multiplies both.
BlowupCertificate certify(const Field& u0, const Field& u1, double eps, const TestFunction& phi);

// J0 (1 - mu Jtilde0^{p-1} t)^{-2/(p-1)}; PoleError for t >= t_star.
double odi_lower_bound(const BlowupCertificate& cert, double t);

void write_certificate(std::ostream& os, const BlowupCertificate& cert);

struct IPhiTrace {
    std::vector<double> times;
    std::vector<double> I;
    std::vector<double> bound;  // NaN where not asserted
    std::vector<double> violations_I;  // times with I < 0.95 bound
    std::vector<double> violations_J;  // times with I - A < 0.95 bound
    double min_ratio_I = 0.0;  // min of I / bound over asserted times
    double min_ratio_J = 0.0;
    bool asserted = false;
};

IPhiTrace track_I_phi(const IntegrationResult& run, const TestFunction& phi,
                      const std::optional<BlowupCertificate>& cert);

void write_iphi_csv(std::ostream& os, const IPhiTrace& trace);

struct LifespanScenario {
    int n = 1;
    double r = 2.0;
    double p = 2.0;
    double k = 0.6;
    double c0 = 0.25;
    double c1 = 0.25;
    double C0 = 0.0;  // 0: smallest admissible constant for the profile
    int l = 5;
    CoreKind core = CoreKind::mass_matched;
    double half_width = 4608.0;
    int points = 32768;
};

struct LifespanPoint {
    double eps = 0.0;
    double R = 0.0;
    int branch = 0;
    RunStatus status = RunStatus::completed;
    double T = 0.0;
    double T_perturbed = 0.0;  // detection time with the blow-up threshold x10 (0 if not run)
    bool certified = false;
    bool flagged = false;  // excluded from the fit
};

struct SweepResult {
    std::vector<LifespanPoint> points;
    bool fit_valid = false;
    std::string fit_note;
    double slope = 0.0;
    double intercept = 0.0;
    double band_lo = 0.0;
    double band_hi = 0.0;
    bool in_band = false;
    double max_threshold_shift = 0.0;  // max |log T' - log T|
    double eps2 = 0.0;                 // largest eps with the small-eps branch active (0 if none)
};

// Fields u0 = power profile, u1 = (c1/c0) u0 for the scenario.
PowerDecay scenario_profile(const LifespanScenario& sc);
double scenario_C0(const LifespanScenario& sc);

SweepResult lifespan_sweep(const std::vector<double>& eps_list, const LifespanScenario& scenario,
                           const IntegratorControls& controls, bool threshold_check = true, double slack = 0.2,
                           int threads = 1);

struct BoundCheck {
    double R = 0.0;
    int branch = 0;
    BlowupCertificate cert;
    IntegrationResult run;
    IPhiTrace trace;
    bool pass = false;  // certified, asserted at some snapshot, no I_phi violation
};

// Certified run of the scenario at one eps with I_phi tracked at every snapshot.
BoundCheck blowup_bound_check(const LifespanScenario& scenario, double eps, const IntegratorControls& controls);

void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

}  // namespace dwave
