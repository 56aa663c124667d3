#pragma once

// Exponential Duhamel integration of u_tt - Lap u + u_t = N(u).

#include "dwave/estimates.hpp"
#include "dwave/grid.hpp"
#include "dwave/propagators.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dwave {

enum class NonlinearityKind { signed_power, focusing_power };

struct NonlinearitySpec {
    NonlinearityKind kind = NonlinearityKind::signed_power;
    double p = 2.0;
    double sign = 1.0;       // signed_power: sign * |u|^p
    double amplitude = 1.0;  // overall factor; 0 switches the nonlinearity off
};

// Pointwise N(u) on a space-rep field.
Field nonlinearity_eval(const Field& u, const NonlinearitySpec& spec);

// Source term N(u) given the space-rep u and the time.
using Source = std::function<Field(const Field& u, double t)>;
Source make_source(const NonlinearitySpec& spec);

enum class DuhamelScheme { trapezoid, midpoint };

// Single-step integrator with cached linear flows per step size.
class DuhamelStepper {
public:
    DuhamelStepper(const GridSpec& grid, Source source, DuhamelScheme scheme = DuhamelScheme::trapezoid,
                   bool dealias = true);

    // state in frequency rep; u_space is its inverse transform.
    PairState step(const PairState& state, const Field& u_space, double dt);
    PairState step(const PairState& state, double dt) { return step(state, inverse_transform(state.u), dt); }

private:
    const LinearFlow& flow(double dt);
    Field source_hat(const Field& u_space, double t);

    GridSpec grid_;
    Source source_;
    DuhamelScheme scheme_;
    bool dealias_;
    std::map<double, LinearFlow> flows_;
};

PairState duhamel_step(const PairState& state, double dt, const NonlinearitySpec& spec,
                       DuhamelScheme scheme = DuhamelScheme::trapezoid, bool dealias = true);

struct IntegratorControls {
    double dt_init = 0.05;
    double dt_min = 1e-8;
    double safety = 0.05;           // max relative sup-norm change per step
    double blowup_factor_inf = 1e6;  // L^inf cap relative to initial data
    double blowup_factor_l2 = 1e6;   // L^2 cap relative to initial data
    double horizon = 100.0;
    double snapshot_interval = 1.0;
    bool keep_snapshots = true;
    bool adaptive = true;
    bool dealias = true;
    DuhamelScheme scheme = DuhamelScheme::trapezoid;
};

struct NormTraceRow {
    double t = 0.0;
    double x_hs = 0.0;  // <t>^{a + s/2} || |grad|^s u ||_2, a = (n/2)(1/r - 1/2)
    double x_l2 = 0.0;  // <t>^{a} || u ||_2
    double x_lr = 0.0;  // || u ||_r
    double x_total = 0.0;
    double x_sup = 0.0;  // running supremum of x_total
    double y_hs = 0.0;     // <t>^{eta} || |grad|^{s-1} N(u) ||_2 (high frequencies only when s <= 1)
    double y_gamma = 0.0;  // sup over gamma in [sigma1, sigma2] of <t>^{(n/2)(p/r - 1/gamma)} ||N(u)||_gamma
    double y_sup = 0.0;
    double linf = 0.0;
    double l2 = 0.0;
};

struct NormTrace {
    std::vector<NormTraceRow> rows;
    double x_sup() const { return rows.empty() ? 0.0 : rows.back().x_sup; }
};

enum class RunStatus { completed, blowup, dt_underflow };
std::string status_name(RunStatus s);

struct Snapshot {
    double t = 0.0;
    Field u;  // space rep
};

struct IntegrationResult {
    RunStatus status = RunStatus::completed;
    double t_end = 0.0;
    long steps = 0;
    long rejected = 0;
    std::vector<Snapshot> snapshots;
    NormTrace trace;
    PairState final_state;
};

struct TraceParams {
    double r = 2.0;
    double s = 0.0;
};

// u(0) = eps u0, u_t(0) = eps u1 (space-rep fields on the same grid).
IntegrationResult integrate(const Field& u0, const Field& u1, double eps, const NonlinearitySpec& spec,
                            const IntegratorControls& controls, const TraceParams& trace = {});

// Same, with an arbitrary source term.
IntegrationResult integrate_source(const Field& u0, const Field& u1, double eps, const Source& source,
                                   const IntegratorControls& controls, const TraceParams& trace,
                                   std::optional<NonlinearitySpec> spec_for_trace);

void write_trace_csv(std::ostream& os, const NormTrace& trace);
// 1D snapshots as (t, x, u) rows; for n > 1 only the first-axis line through the origin.
void write_snapshots_csv(std::ostream& os, const std::vector<Snapshot>& snapshots);

struct ProfileErrorReport {
    DecayFit hs;   // || |grad|^s (u - eps G(t)(u0+u1)) ||_2
    DecayFit l2;   // || u - eps G(t)(u0+u1) ||_2
    DecayFit lr;   // || u - eps G(t)(u0+u1) ||_r
    DecayFit solution_l2;
    double theory_hs = 0.0;
    double theory_l2 = 0.0;
    double theory_lr = 0.0;
    bool theory_applicable = false;  // strictly supercritical p > p_c
};

// Exponents of the asymptotic-profile error for supercritical parameters.
double profile_rate_l2(const EstimateParams& e);
double profile_rate_hs(const EstimateParams& e);
double profile_rate_lr(const EstimateParams& e);

// Fits the three profile-error norms over snapshots with t in [t_min, t_max].
ProfileErrorReport asymptotic_profile_error(const IntegrationResult& run, const Field& u0, const Field& u1, double eps,
                                            const EstimateParams& params, double t_min, double t_max);

}  // namespace dwave
