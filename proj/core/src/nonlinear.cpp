#include "dwave/nonlinear.hpp"

#include "dwave/error.hpp"
#include "dwave/field_io.hpp"
#include "dwave/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace dwave {

namespace {

double bracket(double t) { return std::sqrt(1.0 + t * t); }

// || |grad|^s f ||_2 for a frequency-rep field (s = 0 is the plain L^2 norm).
double hs_norm(const Field& f_hat, double s) {
    if (s == 0.0) return l2_norm_spectral(f_hat);
    const auto& xm = f_hat.grid.xi_mag();
    double sum = 0.0;
    for (std::size_t i = 0; i < xm.size(); ++i)
        if (xm[i] > 0.0) sum += std::pow(xm[i], 2.0 * s) * std::norm(f_hat.data[i]);
    return std::sqrt(sum * f_hat.grid.dual_cell_volume());
}

// Y-norm derivative part: |grad|^{s-1}, restricted to |xi| >= 1 by the smooth cutoff when s <= 1.
double y_derivative_norm(const Field& n_hat, double s) {
    const auto& xm = n_hat.grid.xi_mag();
    double sum = 0.0;
    for (std::size_t i = 0; i < xm.size(); ++i) {
        const double k = xm[i];
        if (k == 0.0) continue;
        double w = std::pow(k, s - 1.0);
        if (s <= 1.0) w *= symbols::cutoff_above(1.0, k);
        sum += w * w * std::norm(n_hat.data[i]);
    }
    return std::sqrt(sum * n_hat.grid.dual_cell_volume());
}

}  // namespace

Field nonlinearity_eval(const Field& u, const NonlinearitySpec& spec) {
    if (u.rep != Rep::space) throw StateError("nonlinearity_eval needs a space-rep field");
    Field out = Field::zeros(u.grid, Rep::space);
    if (spec.amplitude == 0.0) return out;
    const double p = spec.p;
    const double c = spec.amplitude * (spec.kind == NonlinearityKind::signed_power ? spec.sign : 1.0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double x = u.data[i].real();
        const double a = std::abs(x);
        const double v = spec.kind == NonlinearityKind::signed_power ? std::pow(a, p) : std::pow(a, p - 1.0) * x;
        out.data[i] = c * v;
    }
    return out;
}

Source make_source(const NonlinearitySpec& spec) {
    return [spec](const Field& u, double) { return nonlinearity_eval(u, spec); };
}

DuhamelStepper::DuhamelStepper(const GridSpec& grid, Source source, DuhamelScheme scheme, bool dealias)
    : grid_(grid), source_(std::move(source)), scheme_(scheme), dealias_(dealias) {}

const LinearFlow& DuhamelStepper::flow(double dt) {
    auto it = flows_.find(dt);
    if (it == flows_.end()) it = flows_.emplace(dt, LinearFlow(grid_, dt)).first;
    return it->second;
}

Field DuhamelStepper::source_hat(const Field& u_space, double t) {
    Field n = forward_transform(source_(u_space, t));
    if (dealias_) dealias_two_thirds(n);
    return n;
}

PairState DuhamelStepper::step(const PairState& state, const Field& u_space, double dt) {
    if (!(dt > 0.0)) throw DomainError("Duhamel step needs dt > 0");
    if (flows_.size() > 16) flows_.clear();
    const double t = state.time;
    const Field n0 = source_hat(u_space, t);
    const LinearFlow& full = flow(dt);
    PairState out = full.apply(state);
    const std::size_t m = n0.size();

    if (scheme_ == DuhamelScheme::trapezoid) {
        Field pred = out.u;
        for (std::size_t i = 0; i < m; ++i) pred.data[i] += dt * full.d()[i] * n0.data[i];
        const Field n1 = source_hat(inverse_transform(pred), t + dt);
        for (std::size_t i = 0; i < m; ++i) {
            out.u.data[i] += 0.5 * dt * full.d()[i] * n0.data[i];
            out.v.data[i] += 0.5 * dt * (full.dd()[i] * n0.data[i] + n1.data[i]);
        }
        return out;
    }

    const LinearFlow& half = flow(0.5 * dt);
    PairState mid = half.apply(state);
    for (std::size_t i = 0; i < m; ++i) mid.u.data[i] += 0.5 * dt * half.d()[i] * n0.data[i];
    const Field nm = source_hat(inverse_transform(mid.u), t + 0.5 * dt);
    for (std::size_t i = 0; i < m; ++i) {
        out.u.data[i] += dt * half.d()[i] * nm.data[i];
        out.v.data[i] += dt * half.dd()[i] * nm.data[i];
    }
    return out;
}

PairState duhamel_step(const PairState& state, double dt, const NonlinearitySpec& spec, DuhamelScheme scheme,
                       bool dealias) {
    DuhamelStepper stepper(state.u.grid, make_source(spec), scheme, dealias);
    return stepper.step(state, dt);
}

std::string status_name(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::blowup: return "blowup";
        case RunStatus::dt_underflow: return "dt_underflow";
    }
    return "?";
}

namespace {

class TraceRecorder {
public:
    TraceRecorder(const GridSpec& grid, const TraceParams& tp, std::optional<NonlinearitySpec> spec)
        : n_(grid.dim()), tp_(tp), spec_(std::move(spec)) {
        if (spec_ && spec_->p > 1.0) {
            const EstimateParams e = param_set(n_, tp.r, tp.s, spec_->p);
            eta_ = e.eta;
            // empty gamma range when sigma2 < sigma1 (p below the admissible range)
            if (e.sigma2 >= e.sigma1)
                for (int i = 0; i < 9; ++i) gammas_.push_back(e.sigma1 + (e.sigma2 - e.sigma1) * i / 8.0);
        }
    }

    void record(NormTrace& trace, double t, const Field& u_space, const Field& u_hat) {
        NormTraceRow row;
        row.t = t;
        const double a = 0.5 * n_ * (1.0 / tp_.r - 0.5);
        const double bt = bracket(t);
        row.l2 = l2_norm_spectral(u_hat);
        row.linf = max_abs(u_space);
        row.x_hs = std::pow(bt, a + 0.5 * tp_.s) * hs_norm(u_hat, tp_.s);
        row.x_l2 = std::pow(bt, a) * row.l2;
        row.x_lr = lp_norm(u_space, tp_.r);
        row.x_total = row.x_hs + row.x_l2 + row.x_lr;
        if (spec_ && spec_->p > 1.0) {
            const Field nu = nonlinearity_eval(u_space, *spec_);
            row.y_hs = std::pow(bt, eta_) * y_derivative_norm(forward_transform(nu), tp_.s);
            for (double g : gammas_)
                row.y_gamma = std::max(row.y_gamma, std::pow(bt, 0.5 * n_ * (spec_->p / tp_.r - 1.0 / g)) * lp_norm(nu, g));
        }
        const double prev_x = trace.rows.empty() ? 0.0 : trace.rows.back().x_sup;
        const double prev_y = trace.rows.empty() ? 0.0 : trace.rows.back().y_sup;
        row.x_sup = std::max(prev_x, row.x_total);
        row.y_sup = std::max(prev_y, row.y_hs + row.y_gamma);
        trace.rows.push_back(row);
    }

private:
    int n_;
    TraceParams tp_;
    std::optional<NonlinearitySpec> spec_;
    double eta_ = 0.0;
    std::vector<double> gammas_;
};

}  // namespace

IntegrationResult integrate_source(const Field& u0, const Field& u1, double eps, const Source& source,
                                   const IntegratorControls& c, const TraceParams& tp,
                                   std::optional<NonlinearitySpec> spec_for_trace) {
    if (u0.rep != Rep::space || u1.rep != Rep::space) throw StateError("initial data must be space-rep fields");
    if (!(u0.grid == u1.grid)) throw ConfigError("initial data on different grids");
    if (!(c.dt_init > 0.0) || !(c.dt_min > 0.0) || !(c.dt_min < c.dt_init)) throw ConfigError("need 0 < dt_min < dt_init");
    if (!(c.horizon > 0.0)) throw ConfigError("horizon must be positive");
    if (!(c.safety > 0.0)) throw ConfigError("safety factor must be positive");
    if (!(c.snapshot_interval > 0.0)) throw ConfigError("snapshot interval must be positive");
    if (!(c.blowup_factor_inf > 1.0) || !(c.blowup_factor_l2 > 1.0)) throw ConfigError("blow-up thresholds must exceed the initial norms");

    const GridSpec& grid = u0.grid;
    Field u_space = eps * u0;
    PairState s{forward_transform(u_space), forward_transform(eps * u1), 0.0};
    const double ref_inf = std::max(max_abs(u_space), eps * max_abs(u1));
    const double ref_l2 = std::max(lp_norm(u_space, 2.0), std::abs(eps) * lp_norm(u1, 2.0));

    DuhamelStepper stepper(grid, source, c.scheme, c.dealias);
    TraceRecorder recorder(grid, tp, std::move(spec_for_trace));
    IntegrationResult res;
    recorder.record(res.trace, 0.0, u_space, s.u);
    if (c.keep_snapshots) res.snapshots.push_back({0.0, u_space});

    const double T = c.horizon;
    double dt = c.dt_init;
    double next_snap = c.snapshot_interval;
    const double t_eps = 1e-12 * std::max(1.0, T);
    while (s.time < T - t_eps) {
        double h = std::min(dt, T - s.time);
        bool clipped = h < dt;
        if (next_snap - s.time < h) {
            h = next_snap - s.time;
            clipped = true;
        }
        PairState cand = stepper.step(s, u_space, h);
        Field cu = inverse_transform(cand.u);
        const double base = std::max(max_abs(u_space), ref_inf);
        double diff = 0.0;
        for (std::size_t i = 0; i < cu.size(); ++i) diff = std::max(diff, std::abs(cu.data[i] - u_space.data[i]));
        const double change = base > 0.0 ? diff / base : (diff > 0.0 ? INFINITY : 0.0);
        const bool finite = std::isfinite(diff);
        if (c.adaptive && (!finite || change > c.safety)) {
            ++res.rejected;
            dt = 0.5 * h;
            if (dt < c.dt_min) {
                res.status = RunStatus::dt_underflow;
                break;
            }
            continue;
        }
        s = std::move(cand);
        if (std::abs(s.time - next_snap) <= t_eps) s.time = next_snap;
        u_space = std::move(cu);
        ++res.steps;

        const double linf = max_abs(u_space);
        const bool blown = !finite || !std::isfinite(linf) || (ref_inf > 0.0 && linf > c.blowup_factor_inf * ref_inf) ||
                           (ref_l2 > 0.0 && lp_norm(u_space, 2.0) > c.blowup_factor_l2 * ref_l2);
        if (blown) {
            res.status = RunStatus::blowup;
            break;
        }
        if (c.adaptive && !clipped && change < c.safety / 8.0) dt = std::min(2.0 * dt, c.dt_init);
        if (s.time >= next_snap - t_eps) {
            recorder.record(res.trace, s.time, u_space, s.u);
            if (c.keep_snapshots) res.snapshots.push_back({s.time, u_space});
            next_snap += c.snapshot_interval;
        }
    }
    res.t_end = s.time;
    if (res.status == RunStatus::completed && (res.trace.rows.empty() || res.trace.rows.back().t < s.time)) {
        recorder.record(res.trace, s.time, u_space, s.u);
        if (c.keep_snapshots) res.snapshots.push_back({s.time, u_space});
    }
    res.final_state = std::move(s);
    return res;
}

IntegrationResult integrate(const Field& u0, const Field& u1, double eps, const NonlinearitySpec& spec,
                            const IntegratorControls& controls, const TraceParams& trace) {
    if (!(spec.p > 1.0)) throw ConfigError("nonlinearity power must exceed 1");
    return integrate_source(u0, u1, eps, make_source(spec), controls, trace, spec);
}

void write_trace_csv(std::ostream& os, const NormTrace& trace) {
    CsvWriter w(os, {"t", "x_hs", "x_l2", "x_lr", "x_total", "x_sup", "y_hs", "y_gamma", "y_sup", "linf", "l2"});
    for (const auto& r : trace.rows) {
        w.cell(r.t).cell(r.x_hs).cell(r.x_l2).cell(r.x_lr).cell(r.x_total).cell(r.x_sup);
        w.cell(r.y_hs).cell(r.y_gamma).cell(r.y_sup).cell(r.linf).cell(r.l2);
        w.end_row();
    }
}

void write_snapshots_csv(std::ostream& os, const std::vector<Snapshot>& snapshots) {
    CsvWriter w(os, {"t", "x", "u"});
    for (const auto& snap : snapshots) {
        const GridSpec& g = snap.u.grid;
        const std::size_t stride = g.dim() == 1 ? 1 : (g.dim() == 2 ? g.points() : std::size_t(g.points()) * g.points());
        const std::size_t offset = g.dim() == 1 ? 0 : (g.dim() == 2 ? g.points() / 2 : (g.points() / 2) * (g.points() + 1));
        for (int i = 0; i < g.points(); ++i) {
            w.cell(snap.t).cell(g.coordinate(i)).cell(snap.u.data[offset + i * stride].real());
            w.end_row();
        }
    }
}

}  // namespace dwave
