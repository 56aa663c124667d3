#include "dwave/estimates.hpp"

#include "dwave/error.hpp"
#include "dwave/field_io.hpp"
#include "dwave/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dwave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

std::string fmt_short(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

double p_power_upper(int n, double s) {
    if (2.0 * s >= n) return kInf;
    return 1.0 + std::min(n, 2) / (n - 2.0 * s);
}

EstimateParams param_set(int n, double r, double s, double p_power) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    if (!(r > 1.0 && r <= 2.0)) throw DomainError("r must lie in (1, 2]");
    if (!(s >= 0.0)) throw DomainError("s must be >= 0");
    if (!(p_power > 1.0)) throw DomainError("nonlinearity power must exceed 1");
    EstimateParams e;
    e.n = n;
    e.r = r;
    e.s = s;
    e.p_power = p_power;
    e.beta_lplq = (n - 1) * std::abs(0.5 - inv(e.p_lebesgue));
    e.beta_nonlinear = (n - 1) * (1.0 / r - 0.5);
    e.sigma1 = std::max(1.0, r / p_power);
    e.sigma2 = 2.0 * s >= n ? 2.0 : std::min(2.0, 2.0 * n / (p_power * (n - 2.0 * s)));
    e.eta = -0.5 + 0.5 * s + 0.5 * n * (p_power / r - 0.5);
    e.omega = 1.0 / (p_power - 1.0) - n / (2.0 * r);
    e.p_c = 1.0 + 2.0 * r / n;
    e.subcritical = p_power < e.p_c;

    const bool derivatives_ok = std::floor(s) <= std::floor(p_power);
    const bool p_range = p_power <= p_power_upper(n, s);
    const bool r_global = r >= 2.0 * (n - 1) / (n + 1.0);
    const bool r_weighted = r > (std::sqrt(double(n) * n + 16.0 * n) - n) / 4.0;
    e.admissible_global = derivatives_ok && p_range && r_global;
    e.admissible_critical = e.admissible_global && !e.subcritical;
    e.admissible_weighted = derivatives_ok && p_range && r_weighted && !e.subcritical;
    e.admissible_subcritical = e.admissible_global && e.subcritical;
    return e;
}

EstimateParams with_norms(EstimateParams params, double p_lebesgue, double q, double s1, double s2) {
    if (!(q >= 1.0) || !(p_lebesgue >= 1.0)) throw DomainError("Lebesgue exponents must be >= 1");
    params.p_lebesgue = p_lebesgue;
    params.q = q;
    params.s1 = s1;
    params.s2 = s2;
    params.beta_lplq = (params.n - 1) * std::abs(0.5 - inv(p_lebesgue));
    return params;
}

double theoretical_low_exponent(const EstimateParams& e) {
    if (e.q > e.p_lebesgue) throw DomainError("decay exponent needs q <= p");
    return 0.0 - 0.5 * e.n * (1.0 / e.q - inv(e.p_lebesgue)) - 0.5 * (e.s1 - e.s2);
}

double theoretical_diff_exponent(const EstimateParams& e) { return theoretical_low_exponent(e) - 1.0; }

double theoretical_dt_exponent(const EstimateParams& e) { return theoretical_low_exponent(e) - 1.0; }

rational low_exponent_exact(int n, rational inv_q, rational inv_p, rational ds) {
    if (inv_q < inv_p) throw DomainError("decay exponent needs q <= p");
    return -rational(n, 2) * (inv_q - inv_p) - ds / 2;
}

DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& values) {
    if (times.size() != values.size()) throw WindowError("fit needs matching sample lists");
    if (times.size() < 8) throw WindowError("fit needs at least 8 samples");
    std::vector<double> x(times.size()), y(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(values[i] > 1e-30) || !std::isfinite(values[i])) throw WindowError("norm underflow or non-finite value in fit window");
        x[i] = 0.5 * std::log1p(times[i] * times[i]);
        y[i] = std::log(values[i]);
    }
    const double m = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw WindowError("fit window has no spread in time");
    DecayFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    f.t_min = *std::min_element(times.begin(), times.end());
    f.t_max = *std::max_element(times.begin(), times.end());
    f.times = times;
    f.norms = values;
    return f;
}

std::vector<double> log_spaced(double t0, double t1, int count) {
    if (!(t0 > 0.0) || !(t1 > t0) || count < 2) throw WindowError("bad log-spaced range");
    std::vector<double> t(count);
    for (int i = 0; i < count; ++i) t[i] = t0 * std::pow(t1 / t0, static_cast<double>(i) / (count - 1));
    t.back() = t1;
    return t;
}

std::vector<double> default_time_grid(const GridSpec& grid) {
    return log_spaced(10.0, 0.8 * grid.valid_time(), 16);
}

Propagator parse_decay_operator(const std::string& name) {
    if (name == "nishihara_triple") return Propagator::nishihara;
    return parse_propagator(name);
}

DecayFit measure_decay(Propagator op, const DataProfile& profile, const EstimateParams& params,
                       const std::vector<double>& t_grid, const GridSpec& grid) {
    if (t_grid.size() < 8) throw WindowError("decay measurement needs >= 8 times");
    for (double t : t_grid)
        if (!(t > 0.0) || t > grid.valid_time() * (1.0 + 1e-12)) throw WindowError("decay time outside the valid window");
    if (params.n != grid.dim()) throw ConfigError("parameter dimension does not match the grid");
    const Field g = forward_transform(sample(profile, grid));
    std::vector<double> norms;
    norms.reserve(t_grid.size());
    for (double t : t_grid) {
        Field h = apply(op, g, t);
        if (params.s1 > 0.0) h = fractional_derivative(h, params.s1);
        norms.push_back(lp_norm(inverse_transform(h), params.p_lebesgue));
    }
    return fit_decay(t_grid, norms);
}

DataProfile decay_witness(int n, double q) {
    if (q == 1.0) return Gaussian{1.0};
    return RegularizedPower{n / q, 1.0};
}

std::vector<std::vector<int>> multi_indices(int length, int total) {
    std::vector<std::vector<int>> out;
    if (length <= 0) return out;
    std::vector<int> cur(length, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == length - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::optional<std::string> holder_violation(int n, double s, double p, double r, const HolderExponents& h) {
    const int fs = static_cast<int>(std::floor(s));
    const double frac = s - fs;
    const double tol = 1e-12;
    if (static_cast<int>(h.q.size()) != fs || static_cast<int>(h.k.size()) != fs) return "exponent count differs from [s]";
    long double sum = 1.0L / h.q0;
    for (double qj : h.q) sum += 1.0L / qj;
    if (std::abs(static_cast<double>(sum) - 0.5) > tol) return "reciprocals do not sum to 1/2";
    for (double qj : h.q)
        if (!(qj > 2.0) || !std::isfinite(qj)) return "some q_j outside (2, inf)";
    if (!(h.q0 >= r / (p - fs) * (1.0 - tol))) return "q0 below r/(p-[s])";
    if (!std::isfinite(h.q0)) return "q0 not finite";
    if (2.0 * s < n && h.q0 > 2.0 * n / ((p - fs) * (n - 2.0 * s)) * (1.0 + tol)) return "q0 above 2n/((p-[s])(n-2s))";
    if (h.k[0] + frac + n * (0.5 - 1.0 / h.q[0]) > s + tol) return "first Sobolev budget exceeded";
    for (int j = 1; j < fs; ++j)
        if (h.k[j] + n * (0.5 - 1.0 / h.q[j]) > s + tol) return "Sobolev budget exceeded for j=" + std::to_string(j + 1);
    return std::nullopt;
}

HolderExponents holder_exponents(int n, double s, double p, double r, const std::vector<int>& k) {
    if (!(s > 1.0)) throw DomainError("Hoelder exponents need s > 1");
    const int fs = static_cast<int>(std::floor(s));
    const double frac = s - fs;
    if (!(p > fs)) throw DomainError("Hoelder exponents need p > [s]");
    if (!(r > 1.0 && r <= 2.0)) throw DomainError("r must lie in (1, 2]");
    if (static_cast<int>(k.size()) != fs) throw DomainError("multi-index length must equal [s]");
    if (std::accumulate(k.begin(), k.end(), 0) != fs - 1 || *std::min_element(k.begin(), k.end()) < 0)
        throw DomainError("multi-index must be non-negative with |k| = [s]-1");

    std::vector<double> sj(fs);
    sj[0] = (s - frac - k[0]) / n;
    for (int j = 1; j < fs; ++j) sj[j] = (s - k[j]) / n;

    double inv_q0;
    if (n > 2.0 * s) {
        if (p > p_power_upper(n, s) * (1.0 + 1e-12)) throw ConstructionError("p above 1 + min{n,2}/(n-2s)");
        inv_q0 = (p - fs) * (n - 2.0 * s) / (2.0 * n);
    } else {
        double rhs = 0.5 + std::min(0.0, (2.0 * (s - frac - k[0]) - n) / (2.0 * n));
        for (int j = 1; j < fs; ++j) rhs += std::min(0.0, (2.0 * (s - k[j]) - n) / (2.0 * n));
        if (!(rhs > 0.0)) throw ConstructionError("no admissible q0: right-hand side not positive");
        inv_q0 = std::min((p - fs) / r, 0.5 * rhs);
        for (auto& v : sj) v = std::min(0.5, v);
    }
    const double a_total = 0.5 * fs - 0.5 + inv_q0;
    const double s_total = std::accumulate(sj.begin(), sj.end(), 0.0);
    if (!(a_total <= s_total * (1.0 + 1e-14))) throw ConstructionError("Sobolev budget infeasible: sum of a_j exceeds sum of s_j");
    const double theta = a_total / s_total;

    HolderExponents h;
    h.q0 = 1.0 / inv_q0;
    h.k = k;
    h.q.resize(fs);
    for (int j = 0; j < fs; ++j) h.q[j] = 1.0 / (0.5 - theta * sj[j]);
    if (auto bad = holder_violation(n, s, p, r, h)) throw ConstructionError("constructed exponents violate: " + *bad);
    return h;
}

std::vector<SuiteCell> standard_matrix(Propagator op) {
    std::vector<SuiteCell> cells;
    for (double q : {1.0, 1.5, 2.0})
        for (double p : {2.0, 4.0, kInf})
            for (double ds : {0.0, 1.0})
                if (q <= p) cells.push_back({op, q, p, ds, 0.0});
    return cells;
}

std::vector<SuiteRow> verify_estimate_suite(const SuiteConfig& config) {
    const int n = config.grid.dim();
    const std::vector<double> t_grid = config.t_grid.empty() ? default_time_grid(config.grid) : config.t_grid;
    std::vector<SuiteRow> rows(config.cells.size());
    parallel_for(config.cells.size(), config.threads, [&](std::size_t i) {
        const SuiteCell& c = config.cells[i];
        EstimateParams e = with_norms(param_set(n, 2.0, 0.0, 2.0), c.p, c.q, c.s1, c.s2);
        const bool diff = c.op == Propagator::diff_DG || c.op == Propagator::dtD || c.op == Propagator::nishihara;
        const double theory = diff ? theoretical_diff_exponent(e) : theoretical_low_exponent(e);
        const DecayFit fit = measure_decay(c.op, decay_witness(n, c.q), e, t_grid, config.grid);
        SuiteRow& row = rows[i];
        row.cell_id = "n" + std::to_string(n) + "_" + propagator_name(c.op) + "_q" + fmt_short(c.q) + "_p" + fmt_short(c.p) +
                      "_ds" + fmt_short(c.s1 - c.s2);
        row.n = n;
        row.p = c.p;
        row.q = c.q;
        row.s1 = c.s1;
        row.s2 = c.s2;
        row.theory_slope = theory;
        row.fitted_slope = fit.slope;
        row.r2 = fit.r2;
        const double tol = std::isinf(c.p) ? std::max(config.tolerance, config.tolerance_inf) : config.tolerance;
        // The triple difference is only bounded from above.
        row.pass = c.op == Propagator::nishihara ? fit.slope <= theory + tol : std::abs(fit.slope - theory) <= tol;
    });
    return rows;
}

void write_suite_csv(std::ostream& os, const std::vector<SuiteRow>& rows) {
    CsvWriter w(os, {"cell_id", "n", "p", "q", "s1", "s2", "theory_slope", "fitted_slope", "r2", "pass"});
    for (const auto& r : rows) {
        w.cell(r.cell_id).cell(r.n).cell(r.p).cell(r.q).cell(r.s1).cell(r.s2).cell(r.theory_slope).cell(r.fitted_slope).cell(r.r2);
        w.cell(std::string(r.pass ? "true" : "false"));
        w.end_row();
    }
}

}  // namespace dwave
