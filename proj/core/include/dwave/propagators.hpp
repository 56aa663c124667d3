#pragma once

// Linear propagators acting on frequency-rep fields, and the exact linear
// flow of the damped wave equation on (u, u_t) pairs.

#include "dwave/grid.hpp"
#include "dwave/symbols.hpp"

#include <string>

namespace dwave {

enum class Propagator {
    D,          // damped wave solution operator
    dtD,        // its time derivative
    G,          // heat semigroup
    W,          // free wave operator sin(t|xi|)/|xi|
    D_low,      // chi_{<1}(|xi|) D
    D_high,     // chi_{>=1}(|xi|) D
    diff_DG,    // D - G
    nishihara,  // D - G - e^{-t/2} W
};

Propagator parse_propagator(const std::string& name);
std::string propagator_name(Propagator op);

double propagator_symbol(Propagator op, double t, double xi);

// t >= 0 except for W, which accepts any real t.
Field apply(Propagator op, const Field& g, double t);

inline Field apply_D(const Field& g, double t) { return apply(Propagator::D, g, t); }
inline Field apply_dtD(const Field& g, double t) { return apply(Propagator::dtD, g, t); }
inline Field apply_G(const Field& g, double t) { return apply(Propagator::G, g, t); }
inline Field apply_W(const Field& g, double t) { return apply(Propagator::W, g, t); }
inline Field apply_D_low(const Field& g, double t) { return apply(Propagator::D_low, g, t); }
inline Field apply_D_high(const Field& g, double t) { return apply(Propagator::D_high, g, t); }
inline Field apply_diff_DG(const Field& g, double t) { return apply(Propagator::diff_DG, g, t); }
inline Field apply_nishihara(const Field& g, double t) { return apply(Propagator::nishihara, g, t); }

// (u, u_t) in frequency rep at time `time`.
struct PairState {
    Field u;
    Field v;
    double time = 0.0;
};

// Precomputed 2x2 linear flow over a fixed step dt:
//   u' = (dD + D) u + D v,   v' = -|xi|^2 D u + dD v.
class LinearFlow {
public:
    LinearFlow(const GridSpec& grid, double dt);

    double dt() const { return dt_; }
    PairState apply(const PairState& s) const;
    // Multipliers D(dt) and dD(dt), used by the Duhamel quadrature.
    const std::vector<double>& d() const { return d_; }
    const std::vector<double>& dd() const { return dd_; }
    const std::vector<double>& vu() const { return vu_; }

private:
    double dt_;
    GridSpec grid_;
    std::vector<double> d_, dd_, vu_;
};

PairState linear_flow(const PairState& s, double dt);

// (1/2)||u_t||^2 + (1/2)||grad u||^2 from the frequency side.
double energy(const PairState& s);

}  // namespace dwave
