#pragma once

// Radial initial-data profiles sampled onto a grid.

#include "dwave/grid.hpp"

#include <string>
#include <variant>
#include <vector>

namespace dwave {

// exp(-a |x|^2)
struct Gaussian {
    double a = 1.0;
};

enum class CoreKind { zero, mass_matched };

// c0 |x|^{-k} outside the unit ball, blended to a core level over 1/2 <= |x| <= 1.
// The zero core vanishes on |x| <= 1/2; the mass-matched core is a constant
// chosen so the unit-ball mass equals that of c0 |x|^{-k}.
// C0 is the upper constant in u <= C0 (1+|x|)^{-k}; sampling checks it.
struct PowerDecay {
    double k = 0.5;
    double c0 = 1.0;
    double C0 = 1.0;
    CoreKind core = CoreKind::zero;
};

// chi(|x|/R): 1 on |x| <= R, 0 on |x| >= 2R.
struct Bump {
    double R = 1.0;
};

// (|x|^2 + a^2)^{-k/2} + b exp(-|x|^2), with b making the integral of the
// difference against |x|^{-k} vanish (0 < k < n). Decays like |x|^{-k}, so it
// sits in L^q exactly for q > n/k.
struct RegularizedPower {
    double k = 0.5;
    double a = 1.0;
};

// Piecewise-linear radial table, zero past the last radius.
struct CustomTable {
    std::vector<double> r;
    std::vector<double> value;
};

using DataProfile = std::variant<Gaussian, PowerDecay, Bump, RegularizedPower, CustomTable>;

double profile_value(const DataProfile& profile, double r, int dim);
Field sample(const DataProfile& profile, const GridSpec& grid);
std::string profile_name(const DataProfile& profile);

// Core level K (per unit c0) for the mass-matched power profile.
double power_core_level(double k, int dim);
// Smallest C0/c0 for which the power profile satisfies the upper bound.
double power_min_upper_ratio(double k, int dim, CoreKind core);
// Correction weight b of RegularizedPower.
double regularized_power_weight(double k, double a, int dim);

// Surface measure of the unit sphere in R^n.
double sphere_measure(int dim);

}  // namespace dwave
