#pragma once

// Scalar Fourier symbols of the damped wave, heat and wave propagators,
// and the smooth cutoff family used to split frequencies.

namespace dwave::symbols {

struct BranchPolicy {
    double series_radius = 0.05;  // band ||xi| - 1/2| < radius uses the series
    int series_terms = 16;
    double series_arg_max = 1.0;  // series only while t^2 |z| stays below this
};

// sinh(t sqrt z)/sqrt z, continued to sin(t sqrt(-z))/sqrt(-z) for z < 0.
double symbol_m(double t, double z);
double symbol_m_series(double t, double z, int terms);
double symbol_m_direct(double t, double z);
// d/dt of symbol_m: cosh(t sqrt z), cos(t sqrt(-z)).
double symbol_mdot_series(double t, double z, int terms);

struct DampedValue {
    double value;  // e^{-t/2} m(t, 1/4 - xi^2)
    double dt;     // its time derivative
};

// xi is the modulus |xi| >= 0.
DampedValue damped_pair(double t, double xi, const BranchPolicy& policy = {});
double damped(double t, double xi, const BranchPolicy& policy = {});
double damped_dt(double t, double xi, const BranchPolicy& policy = {});
// Second time derivative, from the symbol ODE.
double damped_dtt(double t, double xi, const BranchPolicy& policy = {});

double heat(double t, double xi);
// sin(t|xi|)/|xi|, equal to t at xi = 0.
double wave(double t, double xi);

// Base cutoff: 1 on |r| <= 1, 0 on |r| >= 2, smooth in between.
double chi(double r);
// First and second derivatives of chi in r (for r >= 0).
double chi_d1(double r);
double chi_d2(double r);

enum class CutoffKind { below, above, band };

double cutoff_below(double a, double r);
double cutoff_above(double a, double r);
double cutoff_band(double a, double b, double r);
double cutoff(double a, CutoffKind kind, double r, double b = 0.0);

}  // namespace dwave::symbols
