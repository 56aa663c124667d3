#include "dwave/error.hpp"
#include "dwave/nonlinear.hpp"

#include <algorithm>
#include <cmath>

namespace dwave {

namespace {

double shared_min(const EstimateParams& e) {
    const double n = e.n;
    return std::min({1.0, n / (2.0 * e.r) * (e.p_power - 1.0) - 1.0, 0.5 * n * (1.0 / e.sigma1 - 1.0 / e.r)});
}

}  // namespace

double profile_rate_l2(const EstimateParams& e) { return -0.5 * e.n * (1.0 / e.r - 0.5) - shared_min(e); }

double profile_rate_hs(const EstimateParams& e) { return profile_rate_l2(e) - 0.5 * e.s; }

double profile_rate_lr(const EstimateParams& e) {
    const double n = e.n;
    const double q = 2.0 * e.s >= n ? e.r : std::min(e.r, 2.0 * n / (e.p_power * (n - 2.0 * e.s)));
    return -std::min(shared_min(e), 0.5 * n * (e.p_power / e.r - 1.0 / q));
}

ProfileErrorReport asymptotic_profile_error(const IntegrationResult& run, const Field& u0, const Field& u1, double eps,
                                            const EstimateParams& params, double t_min, double t_max) {
    if (run.status != RunStatus::completed) throw StateError("profile error needs a completed run");
    if (params.p_power < params.p_c) throw DomainError("profile error needs p >= p_c");
    if (!(t_min >= 1.0) || !(t_max > t_min)) throw WindowError("profile window must satisfy 1 <= t_min < t_max");
    const GridSpec& g = u0.grid;
    if (t_max > g.valid_time() * (1.0 + 1e-12)) throw WindowError("profile window beyond the valid window");

    const Field data_hat = forward_transform(u0 + u1);
    std::vector<double> ts, e_hs, e_l2, e_lr, sol;
    for (const auto& snap : run.snapshots) {
        if (snap.t < t_min - 1e-12 || snap.t > t_max + 1e-12) continue;
        Field w = forward_transform(snap.u);
        const auto& xm = g.xi_mag();
        for (std::size_t i = 0; i < w.size(); ++i) w.data[i] -= eps * std::exp(-snap.t * xm[i] * xm[i]) * data_hat.data[i];
        ts.push_back(snap.t);
        e_l2.push_back(l2_norm_spectral(w));
        e_hs.push_back(params.s == 0.0 ? e_l2.back() : l2_norm_spectral(fractional_derivative(w, params.s)));
        e_lr.push_back(lp_norm(inverse_transform(w), params.r));
        sol.push_back(lp_norm(snap.u, 2.0));
    }
    ProfileErrorReport rep;
    rep.hs = fit_decay(ts, e_hs);
    rep.l2 = fit_decay(ts, e_l2);
    rep.lr = fit_decay(ts, e_lr);
    rep.solution_l2 = fit_decay(ts, sol);
    rep.theory_hs = profile_rate_hs(params);
    rep.theory_l2 = profile_rate_l2(params);
    rep.theory_lr = profile_rate_lr(params);
    rep.theory_applicable = params.p_power > params.p_c;
    return rep;
}

}  // namespace dwave
