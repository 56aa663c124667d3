#include "dwave/propagators.hpp"

#include "dwave/error.hpp"

#include <cmath>

namespace dwave {

namespace {

void require_freq(const Field& f) {
    if (f.rep != Rep::frequency) throw StateError("propagators act on frequency-rep fields");
}

}  // namespace

Propagator parse_propagator(const std::string& name) {
    if (name == "D") return Propagator::D;
    if (name == "dtD") return Propagator::dtD;
    if (name == "G") return Propagator::G;
    if (name == "W") return Propagator::W;
    if (name == "D_low") return Propagator::D_low;
    if (name == "D_high") return Propagator::D_high;
    if (name == "diff_DG") return Propagator::diff_DG;
    if (name == "nishihara") return Propagator::nishihara;
    throw ConfigError("unknown propagator '" + name + "'");
}

std::string propagator_name(Propagator op) {
    switch (op) {
        case Propagator::D: return "D";
        case Propagator::dtD: return "dtD";
        case Propagator::G: return "G";
        case Propagator::W: return "W";
        case Propagator::D_low: return "D_low";
        case Propagator::D_high: return "D_high";
        case Propagator::diff_DG: return "diff_DG";
        case Propagator::nishihara: return "nishihara";
    }
    return "?";
}

double propagator_symbol(Propagator op, double t, double xi) {
    using namespace symbols;
    switch (op) {
        case Propagator::D: return damped(t, xi);
        case Propagator::dtD: return damped_dt(t, xi);
        case Propagator::G: return heat(t, xi);
        case Propagator::W: return wave(t, xi);
        case Propagator::D_low: return cutoff_below(1.0, xi) * damped(t, xi);
        case Propagator::D_high: return cutoff_above(1.0, xi) * damped(t, xi);
        case Propagator::diff_DG: return damped(t, xi) - heat(t, xi);
        case Propagator::nishihara: return damped(t, xi) - heat(t, xi) - std::exp(-0.5 * t) * wave(t, xi);
    }
    return 0.0;
}

Field apply(Propagator op, const Field& g, double t) {
    require_freq(g);
    if (op != Propagator::W && !(t >= 0.0)) throw DomainError("propagator time must be >= 0");
    Field out = g;
    const auto& xm = g.grid.xi_mag();
    for (std::size_t i = 0; i < out.size(); ++i) out.data[i] *= propagator_symbol(op, t, xm[i]);
    return out;
}

LinearFlow::LinearFlow(const GridSpec& grid, double dt) : dt_(dt), grid_(grid) {
    if (!(dt >= 0.0)) throw DomainError("linear flow step must be >= 0");
    const auto& xm = grid.xi_mag();
    d_.resize(xm.size());
    dd_.resize(xm.size());
    vu_.resize(xm.size());
    for (std::size_t i = 0; i < xm.size(); ++i) {
        const auto p = symbols::damped_pair(dt, xm[i]);
        d_[i] = p.value;
        dd_[i] = p.dt;
        vu_[i] = -xm[i] * xm[i] * p.value;
    }
}

PairState LinearFlow::apply(const PairState& s) const {
    require_freq(s.u);
    require_freq(s.v);
    if (!(s.u.grid == grid_)) throw StateError("linear flow built for a different grid");
    PairState out{s.u, s.v, s.time + dt_};
    for (std::size_t i = 0; i < d_.size(); ++i) {
        const complex u = s.u.data[i];
        const complex v = s.v.data[i];
        out.u.data[i] = (dd_[i] + d_[i]) * u + d_[i] * v;
        out.v.data[i] = vu_[i] * u + dd_[i] * v;
    }
    return out;
}

PairState linear_flow(const PairState& s, double dt) { return LinearFlow(s.u.grid, dt).apply(s); }

double energy(const PairState& s) {
    require_freq(s.u);
    require_freq(s.v);
    const auto& xm = s.u.grid.xi_mag();
    double sum = 0.0;
    for (std::size_t i = 0; i < xm.size(); ++i) sum += std::norm(s.v.data[i]) + xm[i] * xm[i] * std::norm(s.u.data[i]);
    return 0.5 * sum * s.u.grid.dual_cell_volume();
}

}  // namespace dwave
