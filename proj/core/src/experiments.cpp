#include "dwave/experiments.hpp"

#include "dwave/blowup.hpp"
#include "dwave/error.hpp"
#include "dwave/estimates.hpp"
#include "dwave/field_io.hpp"
#include "dwave/kernel.hpp"
#include "dwave/nonlinear.hpp"
#include "dwave/profiles.hpp"
#include "dwave/recurrence.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

namespace dwave {

namespace fs = std::filesystem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Summary {
public:
    template <class T>
    void add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        lines_.emplace_back(key, os.str());
    }
    void add(const std::string& key, double value) { lines_.emplace_back(key, format_double(value)); }
    void add(const std::string& key, bool value) { lines_.emplace_back(key, value ? "true" : "false"); }
    void check(const std::string& name, bool ok) {
        add("check." + name, ok);
        pass_ = pass_ && ok;
    }
    bool pass() const { return pass_; }
    void write(std::ostream& os) const {
        for (const auto& kv : lines_) os << kv.first << ": " << kv.second << '\n';
        os << "result: " << (pass_ ? "PASS" : "FAIL") << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
    bool pass_ = true;
};

struct Context {
    fs::path out;
    int threads = 1;

    std::ofstream open(const std::string& name) const {
        std::ofstream os(out / name);
        if (!os) throw std::runtime_error("cannot write " + (out / name).string());
        return os;
    }
};

using Job = std::function<void(const Context&, Summary&)>;

GridSpec read_grid(Config& c, int dim, double hw, int points) {
    return make_grid(c.get_int("grid.dim", dim), c.get_double("grid.half_width", hw), c.get_int("grid.points", points));
}

CoreKind read_core(Config& c, const std::string& key, const std::string& def) {
    return c.get_choice(key, def, {"zero", "mass_matched"}) == "zero" ? CoreKind::zero : CoreKind::mass_matched;
}

DataProfile read_profile(Config& c, int dim) {
    const std::string kind =
        c.get_choice("data.profile", "gaussian", {"gaussian", "power_decay", "bump", "regularized_power", "custom_table"});
    if (kind == "gaussian") {
        const double a = c.get_double("data.a", 1.0);
        if (!(a > 0.0)) throw ConfigError("data.a must be positive");
        return Gaussian{a};
    }
    if (kind == "power_decay") {
        PowerDecay p;
        p.k = c.get_double("data.k", 0.6);
        p.c0 = c.get_double("data.c0", 1.0);
        p.core = read_core(c, "data.core", "mass_matched");
        const double C0 = c.get_double("data.C0", 0.0);
        if (!(p.k > 0.0) || !(p.c0 > 0.0)) throw ConfigError("data.k and data.c0 must be positive");
        p.C0 = C0 > 0.0 ? C0 : power_min_upper_ratio(p.k, dim, p.core) * p.c0;
        return p;
    }
    if (kind == "bump") {
        const double R = c.get_double("data.R", 1.0);
        if (!(R > 0.0)) throw ConfigError("data.R must be positive");
        return Bump{R};
    }
    if (kind == "regularized_power") {
        RegularizedPower p{c.get_double("data.k", 0.5), c.get_double("data.a", 1.0)};
        regularized_power_weight(p.k, p.a, dim);
        return p;
    }
    CustomTable t{c.get_doubles("data.table_r"), c.get_doubles("data.table_value")};
    if (t.r.size() != t.value.size() || t.r.size() < 2) throw ConfigError("custom table needs matching lists of >= 2 entries");
    for (std::size_t i = 1; i < t.r.size(); ++i)
        if (!(t.r[i] > t.r[i - 1])) throw ConfigError("custom table radii must increase");
    return t;
}

IntegratorControls read_controls(Config& c, const IntegratorControls& def) {
    IntegratorControls k;
    k.dt_init = c.get_double("controls.dt_init", def.dt_init);
    k.dt_min = c.get_double("controls.dt_min", def.dt_min);
    k.safety = c.get_double("controls.safety", def.safety);
    k.blowup_factor_inf = c.get_double("controls.blowup_factor_inf", def.blowup_factor_inf);
    k.blowup_factor_l2 = c.get_double("controls.blowup_factor_l2", def.blowup_factor_l2);
    k.horizon = c.get_double("controls.horizon", def.horizon);
    k.snapshot_interval = c.get_double("controls.snapshot_interval", def.snapshot_interval);
    k.adaptive = c.get_bool("controls.adaptive", def.adaptive);
    k.dealias = c.get_bool("controls.dealias", def.dealias);
    k.scheme = c.get_choice("controls.scheme", def.scheme == DuhamelScheme::trapezoid ? "trapezoid" : "midpoint",
                            {"trapezoid", "midpoint"}) == "trapezoid"
                   ? DuhamelScheme::trapezoid
                   : DuhamelScheme::midpoint;
    if (!(k.dt_init > 0.0) || !(k.dt_min > 0.0) || !(k.dt_min < k.dt_init)) throw ConfigError("need 0 < dt_min < dt_init");
    if (!(k.safety > 0.0)) throw ConfigError("controls.safety must be positive");
    if (!(k.blowup_factor_inf > 1.0) || !(k.blowup_factor_l2 > 1.0)) throw ConfigError("blow-up factors must exceed 1");
    if (!(k.horizon > 0.0) || !(k.snapshot_interval > 0.0)) throw ConfigError("horizon and snapshot interval must be positive");
    return k;
}

NonlinearitySpec read_nonlinearity(Config& c) {
    NonlinearitySpec s;
    s.kind = c.get_choice("nonlinearity.kind", "signed_power", {"signed_power", "focusing_power"}) == "signed_power"
                 ? NonlinearityKind::signed_power
                 : NonlinearityKind::focusing_power;
    s.p = c.get_double("nonlinearity.p", 2.0);
    s.sign = c.get_double("nonlinearity.sign", 1.0);
    s.amplitude = c.get_double("nonlinearity.amplitude", 1.0);
    if (!(s.p > 1.0)) throw ConfigError("nonlinearity.p must exceed 1");
    return s;
}

LifespanScenario read_scenario(Config& c) {
    LifespanScenario sc;
    sc.n = c.get_int("scenario.n", sc.n);
    sc.r = c.get_double("scenario.r", sc.r);
    sc.p = c.get_double("scenario.p", sc.p);
    sc.k = c.get_double("scenario.k", sc.k);
    sc.c0 = c.get_double("scenario.c0", sc.c0);
    sc.c1 = c.get_double("scenario.c1", sc.c1);
    sc.C0 = c.get_double("scenario.C0", sc.C0);
    sc.l = c.get_int("scenario.l", sc.l);
    sc.core = read_core(c, "scenario.core", "mass_matched");
    sc.half_width = c.get_double("scenario.half_width", sc.half_width);
    sc.points = c.get_int("scenario.points", sc.points);
    make_grid(sc.n, sc.half_width, sc.points);
    if (!(sc.c0 > 0.0) || !(sc.c1 > 0.0)) throw ConfigError("scenario.c0 and scenario.c1 must be positive");
    if (!(sc.k > sc.n / sc.r) || !(sc.k < std::min<double>(sc.n, 2.0 / (sc.p - 1.0))))
        throw ConfigError("scenario.k must satisfy n/r < k < min(n, 2/(p-1))");
    const double pp = sc.p / (sc.p - 1.0);
    if (!(sc.l > 2.0 * pp)) throw ConfigError("scenario.l must exceed 2p'");
    return sc;
}

IntegratorControls scenario_controls() {
    IntegratorControls k;
    k.dt_init = 0.1;
    k.horizon = 2000.0;
    k.snapshot_interval = 1.0;
    return k;
}

double x_ratio(const NormTrace& trace) {
    if (trace.rows.empty() || !(trace.rows.front().x_total > 0.0)) return kInf;
    return trace.x_sup() / trace.rows.front().x_total;
}

// simulate and profile-error share the run setup.
struct RunSetup {
    GridSpec grid;
    DataProfile u0, u1;
    double u1_ratio = 0.0;
    double eps = 0.0;
    NonlinearitySpec spec;
    IntegratorControls controls;
    TraceParams trace;
    std::string expect_status;
    double x_ratio_max = kInf;
};

RunSetup read_run(Config& c, const IntegratorControls& controls_default) {
    RunSetup s;
    s.grid = read_grid(c, 1, 128.0, 4096);
    s.u0 = read_profile(c, s.grid.dim());
    s.u1_ratio = c.get_double("data.u1_ratio", 0.0);
    s.eps = c.get_double("eps", 0.01);
    if (!(s.eps > 0.0)) throw ConfigError("eps must be positive");
    s.spec = read_nonlinearity(c);
    s.controls = read_controls(c, controls_default);
    s.trace.r = c.get_double("trace.r", 2.0);
    s.trace.s = c.get_double("trace.s", 0.0);
    if (!(s.trace.r > 1.0 && s.trace.r <= 2.0) || !(s.trace.s >= 0.0)) throw ConfigError("need 1 < trace.r <= 2, trace.s >= 0");
    s.expect_status = c.get_choice("check.status", "any", {"any", "completed", "blowup"});
    s.x_ratio_max = c.get_double("check.x_ratio_max", kInf);
    return s;
}

IntegrationResult execute_run(const RunSetup& s, const Context& ctx, Summary& sum, Field& u0, Field& u1) {
    u0 = sample(s.u0, s.grid);
    u1 = s.u1_ratio * u0;
    IntegrationResult run = integrate(u0, u1, s.eps, s.spec, s.controls, s.trace);
    {
        auto os = ctx.open("trace.csv");
        write_trace_csv(os, run.trace);
    }
    {
        auto os = ctx.open("snapshots.csv");
        write_snapshots_csv(os, run.snapshots);
    }
    sum.add("status", status_name(run.status));
    sum.add("t_end", run.t_end);
    sum.add("steps", run.steps);
    sum.add("rejected_steps", run.rejected);
    const double ratio = x_ratio(run.trace);
    sum.add("x_sup_ratio", ratio);
    if (s.expect_status != "any") sum.check("status", status_name(run.status) == s.expect_status);
    if (std::isfinite(s.x_ratio_max)) sum.check("x_sup_ratio", ratio < s.x_ratio_max);
    return run;
}

Job plan_simulate(Config& c) {
    RunSetup s = read_run(c, IntegratorControls{});
    return [s](const Context& ctx, Summary& sum) {
        Field u0, u1;
        execute_run(s, ctx, sum, u0, u1);
    };
}

Job plan_profile_error(Config& c) {
    IntegratorControls def;
    def.horizon = 200.0;
    def.snapshot_interval = 5.0;
    RunSetup s = read_run(c, def);
    const double t_min = c.get_double("profile.t_min", 10.0);
    const double t_max = c.get_double("profile.t_max", s.controls.horizon);
    const double gap_min = c.get_double("check.gap_min", 0.3);
    const EstimateParams e = param_set(s.grid.dim(), s.trace.r, s.trace.s, s.spec.p);
    if (e.p_power < e.p_c) throw ConfigError("profile error needs p >= p_c");
    if (!(t_min >= 1.0) || !(t_max > t_min) || t_max > s.controls.horizon) throw ConfigError("bad profile window");
    if (t_max > s.grid.valid_time()) throw ConfigError("profile window exceeds the valid window of the grid");
    if (!s.controls.keep_snapshots) throw ConfigError("profile error needs snapshots");
    return [s, e, t_min, t_max, gap_min](const Context& ctx, Summary& sum) {
        Field u0, u1;
        const IntegrationResult run = execute_run(s, ctx, sum, u0, u1);
        if (run.status != RunStatus::completed) {
            sum.check("completed", false);
            return;
        }
        const ProfileErrorReport rep = asymptotic_profile_error(run, u0, u1, s.eps, e, t_min, t_max);
        auto os = ctx.open("profile_error.csv");
        CsvWriter w(os, {"norm", "fitted_slope", "theory_slope", "r2"});
        auto row = [&](const char* name, const DecayFit& f, double theory) {
            w.cell(std::string(name)).cell(f.slope).cell(theory).cell(f.r2);
            w.end_row();
        };
        row("hs", rep.hs, rep.theory_hs);
        row("l2", rep.l2, rep.theory_l2);
        row("lr", rep.lr, rep.theory_lr);
        row("solution_l2", rep.solution_l2, std::numeric_limits<double>::quiet_NaN());
        const double gap = rep.solution_l2.slope - rep.l2.slope;
        sum.add("profile_l2_slope", rep.l2.slope);
        sum.add("solution_l2_slope", rep.solution_l2.slope);
        sum.add("slope_gap", gap);
        sum.add("theory_applicable", rep.theory_applicable);
        sum.check("slope_gap", gap >= gap_min);
    };
}

Job plan_decay_fit(Config& c) {
    SuiteConfig cfg;
    cfg.grid = read_grid(c, 1, 128.0, 8192);
    const Propagator op = parse_decay_operator(c.get_string("decay.operator", "D"));
    const std::string cells = c.get_choice("decay.cells", "matrix", {"matrix", "single"});
    if (cells == "matrix") {
        cfg.cells = standard_matrix(op);
    } else {
        SuiteCell cell{op, c.get_double("decay.q", 1.0), c.get_double("decay.p", 2.0), c.get_double("decay.s1", 0.0),
                       c.get_double("decay.s2", 0.0)};
        if (!(cell.q >= 1.0) || !(cell.p >= cell.q)) throw ConfigError("need 1 <= decay.q <= decay.p");
        cfg.cells.push_back(cell);
    }
    const std::vector<double> def = default_time_grid(cfg.grid);
    const double t0 = c.get_double("decay.t_min", def.front());
    const double t1 = c.get_double("decay.t_max", def.back());
    const int count = c.get_int("decay.t_count", static_cast<int>(def.size()));
    if (!(t0 >= 1.0) || !(t1 > t0) || count < 8) throw ConfigError("decay window needs 1 <= t_min < t_max and t_count >= 8");
    if (t1 > cfg.grid.valid_time()) throw ConfigError("decay window exceeds the valid window of the grid");
    cfg.t_grid = log_spaced(t0, t1, count);
    cfg.tolerance = c.get_double("decay.tolerance", cfg.tolerance);
    cfg.tolerance_inf = c.get_double("decay.tolerance_inf", cfg.tolerance_inf);
    const double gap_max = c.get_double("check.extra_decay_max", kInf);
    return [cfg, gap_max](const Context& ctx, Summary& sum) {
        SuiteConfig run = cfg;
        run.threads = ctx.threads;
        const auto rows = verify_estimate_suite(run);
        {
            auto os = ctx.open("estimates.csv");
            write_suite_csv(os, rows);
        }
        int passed = 0;
        for (const auto& r : rows) passed += r.pass;
        sum.add("cells", rows.size());
        sum.add("cells_passed", passed);
        sum.check("all_cells", passed == static_cast<int>(rows.size()));
        if (!std::isfinite(gap_max)) return;
        SuiteConfig ref = run;
        for (auto& cell : ref.cells) cell.op = Propagator::D;
        const auto base = verify_estimate_suite(ref);
        auto os = ctx.open("extra_decay.csv");
        CsvWriter w(os, {"cell_id", "slope", "reference_slope", "gap"});
        bool ok = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const double gap = rows[i].fitted_slope - base[i].fitted_slope;
            ok = ok && gap <= gap_max;
            w.cell(rows[i].cell_id).cell(rows[i].fitted_slope).cell(base[i].fitted_slope).cell(gap);
            w.end_row();
        }
        sum.check("extra_decay", ok);
    };
}

Job plan_kernel_check(Config& c) {
    const GridSpec grid = read_grid(c, 1, 128.0, 1024);
    std::vector<KernelKind> kinds;
    for (const auto& k : c.get_strings("kernel.kinds", {"d", "m"})) kinds.push_back(parse_kernel_kind(k));
    const std::vector<double> s_values = c.get_doubles("kernel.s", {0.0, 1.0});
    const std::vector<double> t_values = c.get_doubles("kernel.t", {1.0, 4.0, 16.0, 64.0});
    const int j = c.get_int("kernel.j", -1);
    const double x_max = c.get_double("kernel.x_max", 0.5 * grid.half_width());
    if (kinds.empty() || s_values.empty() || t_values.empty()) throw ConfigError("kernel check needs kinds, s and t values");
    for (double s : s_values)
        if (!(s >= 0.0)) throw ConfigError("kernel.s must be non-negative");
    for (double t : t_values)
        if (!(t > 0.0)) throw ConfigError("kernel.t must be positive");
    if (!(x_max > 0.0) || x_max > grid.half_width()) throw ConfigError("kernel.x_max out of range");
    return [=](const Context& ctx, Summary& sum) {
        const auto xs = default_x_set(grid, x_max);
        auto os = ctx.open("kernel_bounds.csv");
        CsvWriter w(os, {"kind", "s", "j", "t", "scale_max_ratio", "origin_ratio"});
        for (KernelKind kind : kinds) {
            for (double s : s_values) {
                const BoundReport rep = check_pointwise_bound(kind, s, j, t_values, xs, grid);
                const std::string name = std::string(kind == KernelKind::d ? "d" : "m");
                for (std::size_t i = 0; i < rep.t_values.size(); ++i) {
                    w.cell(name).cell(s).cell(j).cell(rep.t_values[i]).cell(rep.scale_max_ratio[i]).cell(rep.origin_ratio[i]);
                    w.end_row();
                }
                const std::string id = name + "_s" + format_double(s);
                sum.add("spread." + id, rep.spread);
                sum.check("stable." + id, rep.finite && rep.stable);
            }
        }
    };
}

Job plan_recurrence_check(Config& c) {
    const int k_max = c.get_int("recurrence.k_max", 12);
    const int fd_k_max = c.get_int("recurrence.fd_k_max", 5);
    const int samples = c.get_int("recurrence.samples", 20);
    const int seed = c.get_int("recurrence.seed", 1);
    const double tol = c.get_double("recurrence.tolerance", 1e-6);
    if (k_max < 1 || k_max > 40) throw ConfigError("recurrence.k_max must lie in [1, 40]");
    if (fd_k_max < 0 || fd_k_max > 5) throw ConfigError("recurrence.fd_k_max must lie in [0, 5]");
    if (samples < 1 || seed < 0) throw ConfigError("recurrence.samples must be positive");
    return [=](const Context& ctx, Summary& sum) {
        fs::create_directories(ctx.out / "coefficients");
        bool diag = true;
        for (int k = 0; k <= k_max; ++k) {
            auto os = ctx.open("coefficients/C_" + std::to_string(k) + ".txt");
            write_table(os, derivk_constants(k));
            if (k >= 1) {
                auto od = ctx.open("coefficients/D_" + std::to_string(k) + ".txt");
                write_table(od, derivkg_constants(k));
                diag = diag && diagonal_identity(k);
            }
        }
        sum.check("diagonal_identity", diag);
        const auto pts = random_deriv_samples(samples, static_cast<unsigned>(seed));
        auto os = ctx.open("recurrence.csv");
        CsvWriter w(os, {"k", "residual_C", "residual_D"});
        double worst = 0.0;
        for (int k = 0; k <= fd_k_max; ++k) {
            const double rc = verify_deriv_expansion(CoeffKind::C, k, pts);
            const double rd = verify_deriv_expansion(CoeffKind::D, k, pts);
            worst = std::max({worst, rc, rd});
            w.cell(k).cell(rc).cell(rd);
            w.end_row();
        }
        sum.add("max_residual", worst);
        sum.check("finite_difference", worst < tol);
    };
}

Job plan_blowup_bound(Config& c) {
    const LifespanScenario sc = read_scenario(c);
    const double eps = c.get_double("eps", 0.05);
    const IntegratorControls ctl = read_controls(c, scenario_controls());
    if (!(eps > 0.0)) throw ConfigError("eps must be positive");
    return [=](const Context& ctx, Summary& sum) {
        const BoundCheck bc = blowup_bound_check(sc, eps, ctl);
        {
            auto os = ctx.open("certificate.txt");
            write_certificate(os, bc.cert);
        }
        {
            auto os = ctx.open("iphi.csv");
            write_iphi_csv(os, bc.trace);
        }
        {
            auto os = ctx.open("trace.csv");
            write_trace_csv(os, bc.run.trace);
        }
        sum.add("R", bc.R);
        sum.add("active_branch", bc.branch);
        sum.add("status", status_name(bc.run.status));
        sum.add("t_end", bc.run.t_end);
        sum.add("t_star", bc.cert.t_star);
        sum.add("min_ratio_I", bc.trace.min_ratio_I);
        sum.add("min_ratio_J", bc.trace.min_ratio_J);
        sum.add("violations_J", bc.trace.violations_J.size());
        sum.check("certified", bc.cert.condition_ok);
        sum.check("lower_bound", bc.pass);
    };
}

Job plan_lifespan_sweep(Config& c) {
    const LifespanScenario sc = read_scenario(c);
    const std::vector<double> eps = c.get_doubles("sweep.eps", {0.05, 0.035, 0.025, 0.018, 0.0125});
    const double slack = c.get_double("sweep.slack", 0.2);
    const bool threshold = c.get_bool("sweep.threshold_check", true);
    const double shift_max = c.get_double("check.threshold_shift_max", 0.05);
    const IntegratorControls ctl = read_controls(c, scenario_controls());
    if (eps.size() < 5) throw ConfigError("sweep.eps needs at least 5 values");
    for (double e : eps)
        if (!(e > 0.0)) throw ConfigError("sweep.eps values must be positive");
    if (!(slack >= 0.0)) throw ConfigError("sweep.slack must be non-negative");
    return [=](const Context& ctx, Summary& sum) {
        const SweepResult res = lifespan_sweep(eps, sc, ctl, threshold, slack, ctx.threads);
        {
            auto os = ctx.open("sweep.csv");
            write_sweep_csv(os, res);
        }
        sum.add("fit_valid", res.fit_valid);
        if (!res.fit_note.empty()) sum.add("fit_note", res.fit_note);
        sum.add("slope", res.slope);
        sum.add("intercept", res.intercept);
        sum.add("band_lo", res.band_lo);
        sum.add("band_hi", res.band_hi);
        sum.add("eps2", res.eps2);
        sum.check("slope_in_band", res.fit_valid && res.in_band);
        if (threshold) {
            sum.add("max_threshold_shift", res.max_threshold_shift);
            sum.check("threshold_shift", res.max_threshold_shift < shift_max);
        }
    };
}

}  // namespace

const std::vector<std::string>& experiment_kinds() {
    static const std::vector<std::string> kinds{"simulate",     "decay-fit",      "kernel-check", "recurrence-check",
                                                "blowup-bound", "lifespan-sweep", "profile-error"};
    return kinds;
}

int run_experiment(Config config, const RunOptions& options, std::ostream& log) {
    Job job;
    fs::path out;
    try {
        if (!config.has("experiment")) throw ConfigError("missing required key 'experiment'");
        const std::string kind = config.get_choice("experiment", "", experiment_kinds());
        const std::string dir = config.get_string("output.dir", "dwave_out");
        if (kind == "simulate") job = plan_simulate(config);
        else if (kind == "decay-fit") job = plan_decay_fit(config);
        else if (kind == "kernel-check") job = plan_kernel_check(config);
        else if (kind == "recurrence-check") job = plan_recurrence_check(config);
        else if (kind == "blowup-bound") job = plan_blowup_bound(config);
        else if (kind == "lifespan-sweep") job = plan_lifespan_sweep(config);
        else job = plan_profile_error(config);
        config.require_all_used();
        out = options.out_dir ? fs::path(*options.out_dir) : fs::path(dir);
        if (options.threads < 1) throw ConfigError("thread count must be positive");
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const DomainError& e) {
        log << "config error: " << e.what() << '\n';
        return exit_config;
    }

    Context ctx{out, options.threads};
    Summary sum;
    try {
        fs::create_directories(out);
        {
            auto os = ctx.open("manifest.txt");
            config.write_manifest(os);
        }
        job(ctx, sum);
    } catch (const std::exception& e) {
        log << "run failed: " << e.what() << '\n';
        sum.add("error", std::string(e.what()));
        sum.check("run", false);
    }
    try {
        auto os = ctx.open("summary.txt");
        sum.write(os);
    } catch (const std::exception& e) {
        log << "cannot write summary: " << e.what() << '\n';
        return exit_fail;
    }
    sum.write(log);
    return sum.pass() ? exit_pass : exit_fail;
}

int run_config_file(const std::string& path, const RunOptions& options, std::ostream& log) {
    try {
        return run_experiment(Config::load(path), options, log);
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return exit_config;
    }
}

}  // namespace dwave
