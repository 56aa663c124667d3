#include "dwave/blowup.hpp"

#include "dwave/error.hpp"
#include "dwave/estimates.hpp"
#include "dwave/field_io.hpp"
#include "dwave/parallel.hpp"
#include "dwave/symbols.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace dwave {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double conjugate(double p) { return p / (p - 1.0); }

// |S| int_a^b f(r) r^{n-1} dr with composite 20-point Gauss-Legendre.
template <class F>
double radial_integral(int n, double a, double b, int panels, F f) {
    using Q = boost::math::quadrature::gauss<double, 20>;
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * h;
        sum += Q::integrate([&](double r) { return f(r) * std::pow(r, n - 1); }, lo, lo + h);
    }
    return sphere_measure(n) * sum;
}

}  // namespace

double test_psi(double R, double r) { return symbols::chi(r / R); }

double test_phi(int n, int l, double R, double r) {
    const double y = r / R;
    if (y <= 1.0 || y >= 2.0) return 0.0;
    const double c = symbols::chi(y);
    const double c1 = symbols::chi_d1(y) / R;
    const double c2 = symbols::chi_d2(y) / (R * R);
    const double lap = c2 + (n - 1) * c1 / r;
    return l * (l - 1.0) * c1 * c1 + l * c * lap;
}

TestFunction make_test_function(int n, double p, int l, double R, int panels) {
    if (!(p > 1.0)) throw DomainError("test function needs p > 1");
    const double pp = conjugate(p);
    if (!(l > 2.0 * pp)) throw DomainError("test function needs l > 2p'");
    if (!(R > 0.0)) throw DomainError("test function needs R > 0");
    if (panels < 1) throw DomainError("quadrature needs at least one panel");
    TestFunction tf;
    tf.n = n;
    tf.p = p;
    tf.l = l;
    tf.R = R;
    tf.psi_l_norm = sphere_measure(n) * std::pow(R, n) / n +
                    radial_integral(n, R, 2.0 * R, panels, [&](double r) { return std::pow(test_psi(R, r), l); });
    tf.phi_norm = radial_integral(n, R, 2.0 * R, panels, [&](double r) {
        const double ps = test_psi(R, r);
        if (ps == 0.0) return 0.0;
        return std::pow(std::abs(test_phi(n, l, R, r)), pp) * std::pow(ps, l - 2.0 * pp);
    });
    tf.A = std::pow(2.0, pp - 1.0) * std::pow(pp, -1.0 / p) * std::pow(p, (1.0 - pp) / p) * std::pow(tf.phi_norm, 1.0 / p) *
           std::pow(tf.psi_l_norm, 1.0 / pp);
    return tf;
}

double big_A(int n, double p, int l, double R, int panels) { return make_test_function(n, p, l, R, panels).A; }

double mu(double p, double A) {
    if (!(p > 1.0)) throw DomainError("mu needs p > 1");
    if (!(A > 0.0)) throw DomainError("mu needs A > 0");
    return std::min(1.0, 0.5 * (p - 1.0) * A);
}

RadiusResult radius_R(double eps, int n, double r, double p, double k, double c0, double C0, int l, double A_psi,
                      double psi_l_norm) {
    (void)l;
    if (!(k > n / r) || !(k < std::min<double>(n, 2.0 / (p - 1.0))))
        throw DomainError("radius needs n/r < k < min{n, 2/(p-1)}");
    if (!(eps > 0.0) || !(c0 > 0.0) || !(C0 > 0.0) || !(A_psi > 0.0) || !(psi_l_norm > 0.0))
        throw DomainError("radius needs positive eps, c0, C0, A and norm");
    const double S = sphere_measure(n);
    RadiusResult res;
    res.floor = std::pow(2.0, 1.0 / (n - k));
    res.data_branch = std::pow(C0 * S * std::pow(2.0, n - k) * eps / ((n - k) * std::pow(2.0, 1.0 / (p - 1.0)) * psi_l_norm), 1.0 / k);
    res.small_branch = std::pow(4.0 * (n - k) * A_psi / (c0 * S * eps), 1.0 / (2.0 / (p - 1.0) - k));
    res.R = res.floor;
    res.branch = 1;
    if (res.data_branch > res.R) {
        res.R = res.data_branch;
        res.branch = 2;
    }
    if (res.small_branch > res.R) {
        res.R = res.small_branch;
        res.branch = 3;
    }
    return res;
}

double weighted_average(const Field& u, const TestFunction& phi) {
    if (u.rep != Rep::space) throw StateError("weighted average needs a space-rep field");
    const auto& xm = u.grid.x_mag();
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (xm[i] >= 2.0 * phi.R) continue;
        sum += u.data[i].real() * std::pow(test_psi(phi.R, xm[i]), phi.l);
    }
    return sum * u.grid.cell_volume();
}

BlowupCertificate certify(const Field& u0, const Field& u1, double eps, const TestFunction& phi) {
    BlowupCertificate c;
    c.eps = eps;
    c.p = phi.p;
    c.R = phi.R;
    c.A = phi.A;
    c.psi_l_norm = phi.psi_l_norm;
    c.I0 = eps * weighted_average(u0, phi);
    c.I0_prime = eps * weighted_average(u1, phi);
    c.J0 = c.I0 - c.A;
    c.Jtilde0 = std::pow(2.0, -1.0 / (phi.p - 1.0)) * c.J0 / phi.psi_l_norm;
    c.lower_ok = c.J0 > 0.0;
    c.upper_ok = c.J0 < std::pow(2.0, 1.0 / (phi.p - 1.0)) * phi.psi_l_norm;
    c.derivative_ok = c.I0_prime > 0.0;
    c.condition_ok = c.lower_ok && c.upper_ok && c.derivative_ok;
    c.t_star = std::numeric_limits<double>::infinity();
    if (c.condition_ok) {
        c.A1 = c.I0_prime / c.J0;
        c.mu = mu(phi.p, c.A1);
        c.t_star = std::pow(c.Jtilde0, 1.0 - phi.p) / c.mu;
    }
    return c;
}

double odi_lower_bound(const BlowupCertificate& c, double t) {
    if (!c.condition_ok) throw DomainError("lower bound needs a certified condition");
    if (!(t >= 0.0)) throw DomainError("lower bound needs t >= 0");
    if (t >= c.t_star) throw PoleError("lower bound evaluated at or past its pole");
    const double base = 1.0 - c.mu * std::pow(c.Jtilde0, c.p - 1.0) * t;
    return c.J0 * std::pow(base, -2.0 / (c.p - 1.0));
}

void write_certificate(std::ostream& os, const BlowupCertificate& c) {
    auto kv = [&](const char* k, double v) { os << k << '=' << format_double(v) << '\n'; };
    auto kb = [&](const char* k, bool v) { os << k << '=' << (v ? "true" : "false") << '\n'; };
    kv("eps", c.eps);
    kv("p", c.p);
    kv("R", c.R);
    kv("I0", c.I0);
    kv("I0_prime", c.I0_prime);
    kv("A", c.A);
    kv("psi_l_norm", c.psi_l_norm);
    kv("J0", c.J0);
    kv("Jtilde0", c.Jtilde0);
    kv("A1", c.A1);
    kv("mu", c.mu);
    kv("t_star", c.t_star);
    kb("lower_ok", c.lower_ok);
    kb("upper_ok", c.upper_ok);
    kb("derivative_ok", c.derivative_ok);
    kb("condition_ok", c.condition_ok);
}

IPhiTrace track_I_phi(const IntegrationResult& run, const TestFunction& phi, const std::optional<BlowupCertificate>& cert) {
    IPhiTrace tr;
    tr.asserted = cert && cert->condition_ok;
    tr.min_ratio_I = tr.min_ratio_J = std::numeric_limits<double>::infinity();
    for (const auto& snap : run.snapshots) {
        const double I = weighted_average(snap.u, phi);
        tr.times.push_back(snap.t);
        tr.I.push_back(I);
        double b = kNaN;
        if (tr.asserted && snap.t < cert->t_star) {
            b = odi_lower_bound(*cert, snap.t);
            const double J = I - cert->A;
            tr.min_ratio_I = std::min(tr.min_ratio_I, I / b);
            tr.min_ratio_J = std::min(tr.min_ratio_J, J / b);
            if (I < 0.95 * b) tr.violations_I.push_back(snap.t);
            if (J < 0.95 * b) tr.violations_J.push_back(snap.t);
        }
        tr.bound.push_back(b);
    }
    return tr;
}

void write_iphi_csv(std::ostream& os, const IPhiTrace& tr) {
    CsvWriter w(os, {"t", "I_phi", "bound"});
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        w.cell(tr.times[i]).cell(tr.I[i]).cell(tr.bound[i]);
        w.end_row();
    }
}

double scenario_C0(const LifespanScenario& sc) {
    if (sc.C0 > 0.0) return sc.C0;
    return power_min_upper_ratio(sc.k, sc.n, sc.core) * sc.c0;
}

PowerDecay scenario_profile(const LifespanScenario& sc) { return PowerDecay{sc.k, sc.c0, scenario_C0(sc), sc.core}; }

SweepResult lifespan_sweep(const std::vector<double>& eps_list, const LifespanScenario& sc,
                           const IntegratorControls& controls, bool threshold_check, double slack, int threads) {
    if (eps_list.size() < 5) throw ConfigError("lifespan sweep needs at least 5 values of eps");
    for (double e : eps_list)
        if (!(e > 0.0)) throw ConfigError("lifespan sweep eps values must be positive");
    if (!(sc.c1 > 0.0)) throw ConfigError("lifespan scenario needs c1 > 0");
    SweepResult out;
    const double omega = 1.0 / (sc.p - 1.0) - sc.n / (2.0 * sc.r);
    const double upper = -1.0 / (1.0 / (sc.p - 1.0) - 0.5 * sc.k);
    out.band_lo = std::min(-1.0 / omega, upper) - slack;
    out.band_hi = std::max(-1.0 / omega, upper) + slack;
    out.points.resize(eps_list.size());
    for (std::size_t i = 0; i < eps_list.size(); ++i) out.points[i].eps = eps_list[i];
    if (!(omega > 0.0)) {
        for (auto& pt : out.points) pt.flagged = true;
        out.fit_note = "supercritical parameters: no blow-up expected, fit refused";
        return out;
    }

    const GridSpec grid = make_grid(sc.n, sc.half_width, sc.points);
    const PowerDecay prof = scenario_profile(sc);
    const TestFunction unit = make_test_function(sc.n, sc.p, sc.l, 1.0);
    std::vector<RadiusResult> radii;
    for (double e : eps_list) {
        radii.push_back(radius_R(e, sc.n, sc.r, sc.p, sc.k, sc.c0, prof.C0, sc.l, unit.A, unit.psi_l_norm));
        if (radii.back().R > grid.half_width() / 4.0)
            throw ConfigError("radius R(eps) = " + std::to_string(radii.back().R) + " exceeds half_width/4");
    }
    const Field u0 = sample(prof, grid);
    const Field u1 = (sc.c1 / sc.c0) * u0;
    const NonlinearitySpec spec{NonlinearityKind::signed_power, sc.p, 1.0, 1.0};
    IntegratorControls ctl = controls;
    ctl.keep_snapshots = false;
    ctl.snapshot_interval = ctl.horizon;

    parallel_for(eps_list.size(), threads, [&](std::size_t i) {
        LifespanPoint& pt = out.points[i];
        pt.R = radii[i].R;
        pt.branch = radii[i].branch;
        const TestFunction phi = make_test_function(sc.n, sc.p, sc.l, pt.R);
        pt.certified = certify(u0, u1, pt.eps, phi).condition_ok;
        const IntegrationResult run = integrate(u0, u1, pt.eps, spec, ctl, TraceParams{sc.r, 0.0});
        pt.status = run.status;
        pt.T = run.t_end;
        pt.flagged = run.status == RunStatus::completed;
        if (threshold_check && !pt.flagged) {
            IntegratorControls ctl10 = ctl;
            ctl10.blowup_factor_inf *= 10.0;
            ctl10.blowup_factor_l2 *= 10.0;
            const IntegrationResult run10 = integrate(u0, u1, pt.eps, spec, ctl10, TraceParams{sc.r, 0.0});
            pt.T_perturbed = run10.t_end;
        }
    });

    std::vector<double> le, lt;
    for (const auto& pt : out.points) {
        if (pt.branch == 3) out.eps2 = std::max(out.eps2, pt.eps);
        if (pt.flagged) continue;
        le.push_back(std::log(pt.eps));
        lt.push_back(std::log(pt.T));
        if (threshold_check && pt.T_perturbed > 0.0)
            out.max_threshold_shift = std::max(out.max_threshold_shift, std::abs(std::log(pt.T_perturbed) - std::log(pt.T)));
    }
    if (le.size() < 3) {
        out.fit_note = "fewer than 3 runs blew up within the horizon; fit refused";
        return out;
    }
    const double m = static_cast<double>(le.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < le.size(); ++i) {
        mx += le[i] / m;
        my += lt[i] / m;
    }
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < le.size(); ++i) {
        sxx += (le[i] - mx) * (le[i] - mx);
        sxy += (le[i] - mx) * (lt[i] - my);
    }
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    out.fit_valid = true;
    out.in_band = out.slope >= out.band_lo && out.slope <= out.band_hi;
    if (le.size() < eps_list.size()) out.fit_note = "some runs completed without blow-up and were excluded";
    return out;
}

BoundCheck blowup_bound_check(const LifespanScenario& sc, double eps, const IntegratorControls& controls) {
    if (!(eps > 0.0)) throw ConfigError("eps must be positive");
    const GridSpec grid = make_grid(sc.n, sc.half_width, sc.points);
    const PowerDecay prof = scenario_profile(sc);
    const TestFunction unit = make_test_function(sc.n, sc.p, sc.l, 1.0);
    BoundCheck out;
    const RadiusResult rad = radius_R(eps, sc.n, sc.r, sc.p, sc.k, sc.c0, prof.C0, sc.l, unit.A, unit.psi_l_norm);
    if (rad.R > grid.half_width() / 4.0) throw ConfigError("radius R(eps) exceeds half_width/4");
    out.R = rad.R;
    out.branch = rad.branch;
    const Field u0 = sample(prof, grid);
    const Field u1 = (sc.c1 / sc.c0) * u0;
    const TestFunction phi = make_test_function(sc.n, sc.p, sc.l, rad.R);
    out.cert = certify(u0, u1, eps, phi);
    const NonlinearitySpec spec{NonlinearityKind::signed_power, sc.p, 1.0, 1.0};
    IntegratorControls ctl = controls;
    ctl.keep_snapshots = true;
    out.run = integrate(u0, u1, eps, spec, ctl, TraceParams{sc.r, 0.0});
    out.trace = track_I_phi(out.run, phi, out.cert);
    const bool any = std::any_of(out.trace.bound.begin(), out.trace.bound.end(), [](double b) { return !std::isnan(b); });
    out.pass = out.cert.condition_ok && out.trace.asserted && any && out.trace.violations_I.empty();
    return out;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    CsvWriter w(os, {"eps", "R", "status", "T", "active_branch"});
    for (const auto& pt : sweep.points) {
        w.cell(pt.eps).cell(pt.R).cell(pt.flagged && pt.T == 0.0 ? std::string("skipped") : status_name(pt.status));
        w.cell(pt.T).cell(pt.branch);
        w.end_row();
    }
}

}  // namespace dwave
