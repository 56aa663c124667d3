#include "dwave/error.hpp"
#include "dwave/nonlinear.hpp"
#include "dwave/profiles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace dwave;

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

Field sine(const GridSpec& g, double c) {
    Field f = Field::zeros(g, Rep::space);
    for (int i = 0; i < g.points(); ++i) f.data[i] = c * std::sin(g.coordinate(i));
    return f;
}

IntegratorControls fixed_step(double dt, double T) {
    IntegratorControls c;
    c.dt_init = dt;
    c.dt_min = 1e-3 * dt;
    c.adaptive = false;
    c.horizon = T;
    c.snapshot_interval = T;
    return c;
}

// error at t = 1 of the exponential integrator for u = e^{-t} sin x
double manufactured_error(double dt, DuhamelScheme scheme) {
    const GridSpec g = make_grid(1, kPi, 64);
    const Field s = sine(g, 1.0);
    Source forcing = [&](const Field&, double t) { return std::exp(-t) * s; };
    IntegratorControls c = fixed_step(dt, 1.0);
    c.scheme = scheme;
    const IntegrationResult r = integrate_source(s, -1.0 * s, 1.0, forcing, c, {}, std::nullopt);
    return max_abs_diff(inverse_transform(r.final_state.u), std::exp(-1.0) * s);
}

}  // namespace

TEST_CASE("nonlinearity evaluation") {
    const GridSpec g = make_grid(1, 8.0, 64);
    const NonlinearitySpec sq{NonlinearityKind::signed_power, 2.0, 1.0, 1.0};
    CHECK(max_abs(nonlinearity_eval(Field::zeros(g, Rep::space), sq)) == 0.0);
    Field c = Field::zeros(g, Rep::space);
    for (auto& v : c.data) v = -1.5;
    const Field cube = nonlinearity_eval(c, {NonlinearityKind::focusing_power, 3.0, 1.0, 1.0});
    for (const auto& v : cube.data) CHECK(v.real() == doctest::Approx(-3.375));
    const Field sp = nonlinearity_eval(c, {NonlinearityKind::signed_power, 3.0, -1.0, 2.0});
    for (const auto& v : sp.data) CHECK(v.real() == doctest::Approx(-6.75));
    CHECK_THROWS_AS(nonlinearity_eval(forward_transform(c), sq), StateError);
}

TEST_CASE("nonlinearity difference bound") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uu(-3.0, 3.0);
    const GridSpec g = make_grid(1, 8.0, 64);
    for (double p : {1.5, 2.0, 3.0, 5.0}) {
        for (NonlinearityKind kind : {NonlinearityKind::signed_power, NonlinearityKind::focusing_power}) {
            Field u = Field::zeros(g, Rep::space), v = u;
            for (std::size_t i = 0; i < u.size(); ++i) {
                u.data[i] = uu(rng);
                v.data[i] = uu(rng);
            }
            const NonlinearitySpec spec{kind, p, 1.0, 1.0};
            const Field nu = nonlinearity_eval(u, spec), nv = nonlinearity_eval(v, spec);
            for (std::size_t i = 0; i < u.size(); ++i) {
                const double a = u.data[i].real(), b = v.data[i].real();
                const double bound = p * std::abs(a - b) * std::pow(std::abs(a) + std::abs(b), p - 1.0);
                CHECK(std::abs(nu.data[i].real() - nv.data[i].real()) <= bound * (1.0 + 1e-12) + 1e-15);
            }
        }
    }
}

TEST_CASE("Duhamel step reduces to the linear flow without a source") {
    const GridSpec g = make_grid(1, 32.0, 512);
    PairState s{forward_transform(sample(Gaussian{0.5}, g)), forward_transform(sample(Gaussian{1.0}, g)), 0.0};
    const NonlinearitySpec off{NonlinearityKind::signed_power, 3.0, 1.0, 0.0};
    for (DuhamelScheme scheme : {DuhamelScheme::trapezoid, DuhamelScheme::midpoint}) {
        const PairState a = duhamel_step(s, 0.3, off, scheme);
        const PairState b = linear_flow(s, 0.3);
        CHECK(max_abs_diff(a.u, b.u) < 1e-12);
        CHECK(max_abs_diff(a.v, b.v) < 1e-12);
    }
    const PairState zero{Field::zeros(g, Rep::frequency), Field::zeros(g, Rep::frequency), 0.0};
    const PairState z = duhamel_step(zero, 0.1, {NonlinearityKind::signed_power, 2.0, 1.0, 1.0});
    CHECK(max_abs(z.u) == 0.0);
    CHECK(max_abs(z.v) == 0.0);
    CHECK_THROWS_AS(duhamel_step(s, 0.0, off), DomainError);
}

TEST_CASE("manufactured solution: second order in dt") {
    for (DuhamelScheme scheme : {DuhamelScheme::trapezoid, DuhamelScheme::midpoint}) {
        const double e1 = manufactured_error(0.1, scheme);
        const double e2 = manufactured_error(0.05, scheme);
        const double e3 = manufactured_error(0.025, scheme);
        CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
        CHECK(std::log2(e2 / e3) == doctest::Approx(2.0).epsilon(0.1));
    }
}

TEST_CASE("step refinement on a nonlinear problem") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field u0 = sample(Gaussian{0.5}, g);
    const NonlinearitySpec spec{NonlinearityKind::focusing_power, 3.0, 1.0, 1.0};
    auto final_u = [&](double dt) {
        return inverse_transform(integrate(u0, u0, 0.5, spec, fixed_step(dt, 2.0)).final_state.u);
    };
    const Field a = final_u(0.04), b = final_u(0.02), c = final_u(0.01);
    const double r = max_abs_diff(a, b) / max_abs_diff(b, c);
    CHECK(r == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("zero amplitude run matches chained linear flows") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field u0 = sample(Gaussian{0.5}, g), u1 = sample(Gaussian{2.0}, g);
    const NonlinearitySpec off{NonlinearityKind::signed_power, 2.0, 1.0, 0.0};
    IntegratorControls c = fixed_step(0.05, 5.0);
    const IntegrationResult r = integrate(u0, u1, 1.0, off, c);
    CHECK(r.steps == 100);
    PairState s{forward_transform(u0), forward_transform(u1), 0.0};
    for (int i = 0; i < 100; ++i) s = linear_flow(s, 0.05);
    CHECK(max_abs_diff(r.final_state.u, s.u) < 1e-10 * max_abs(s.u));
}

TEST_CASE("eps = 0 gives the zero solution") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field u0 = sample(Gaussian{1.0}, g);
    IntegratorControls c;
    c.horizon = 5.0;
    const IntegrationResult r = integrate(u0, u0, 0.0, {NonlinearityKind::signed_power, 2.0, 1.0, 1.0}, c);
    CHECK(r.status == RunStatus::completed);
    CHECK(r.t_end == doctest::Approx(5.0));
    CHECK(max_abs(r.final_state.u) == 0.0);
}

TEST_CASE("large focusing data blows up") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field u0 = sample(Gaussian{1.0}, g);
    IntegratorControls c;
    c.horizon = 50.0;
    const IntegrationResult r = integrate(u0, u0, 5.0, {NonlinearityKind::focusing_power, 3.0, 1.0, 1.0}, c);
    CHECK(r.status == RunStatus::blowup);
    CHECK(r.t_end < 50.0);
    CHECK(r.t_end > 0.0);
}

TEST_CASE("small supercritical data: global run with linear-rate decay") {
    const GridSpec g = make_grid(1, 128.0, 4096);
    const Field u0 = sample(Gaussian{1.0}, g);
    IntegratorControls c;
    c.horizon = 200.0;
    c.snapshot_interval = 5.0;
    const TraceParams tp{1.5, 0.0};
    const IntegrationResult r = integrate(u0, 0.0 * u0, 0.01, {NonlinearityKind::signed_power, 5.0, 1.0, 1.0}, c, tp);
    CHECK(r.status == RunStatus::completed);
    CHECK(r.t_end == doctest::Approx(200.0));
    REQUIRE(r.snapshots.size() == 41u);
    for (std::size_t i = 0; i < r.snapshots.size(); ++i) CHECK(r.snapshots[i].t == doctest::Approx(5.0 * i));
    double at10 = 0.0;
    double prev_sup = 0.0;
    for (const auto& row : r.trace.rows) {
        CHECK(row.x_sup >= prev_sup);
        prev_sup = row.x_sup;
        if (row.t == 10.0) at10 = row.x_l2;
    }
    REQUIRE(at10 > 0.0);
    for (const auto& row : r.trace.rows)
        if (row.t >= 10.0) {
            CHECK(row.x_l2 <= 2.0 * at10);
            CHECK(row.x_l2 >= 0.5 * at10);
        }
    CHECK(r.trace.x_sup() / r.trace.rows.front().x_total < 3.0);

    std::ostringstream os;
    write_trace_csv(os, r.trace);
    CHECK(os.str().rfind("t,x_hs,x_l2,x_lr,x_total,x_sup,y_hs,y_gamma,y_sup,linf,l2\n", 0) == 0);
    std::ostringstream snaps;
    write_snapshots_csv(snaps, {r.snapshots.front()});
    CHECK(snaps.str().rfind("t,x,u\n", 0) == 0);
}

TEST_CASE("profile error rates and guards") {
    const EstimateParams e = param_set(1, 2.0, 0.0, 6.0);
    CHECK(profile_rate_l2(e) == doctest::Approx(-0.25));
    CHECK(profile_rate_hs(e) == doctest::Approx(-0.25));
    const EstimateParams f = param_set(1, 2.0, 1.0, 6.0);
    CHECK(profile_rate_hs(f) == doctest::Approx(profile_rate_l2(f) - 0.5));
    CHECK(profile_rate_lr(e) <= 0.0);
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field u0 = sample(Gaussian{1.0}, g);
    IntegrationResult fake;
    fake.status = RunStatus::blowup;
    CHECK_THROWS_AS(asymptotic_profile_error(fake, u0, u0, 0.1, e, 10.0, 50.0), StateError);
    fake.status = RunStatus::completed;
    CHECK_THROWS_AS(asymptotic_profile_error(fake, u0, u0, 0.1, param_set(1, 2.0, 0.0, 3.0), 10.0, 50.0), DomainError);
    CHECK_THROWS_AS(asymptotic_profile_error(fake, u0, u0, 0.1, e, 10.0, 500.0), WindowError);
}

TEST_CASE("profile convergence for p = 6") {
    const GridSpec g = make_grid(1, 128.0, 4096);
    const Field u0 = sample(Gaussian{1.0}, g);
    IntegratorControls c;
    c.horizon = 200.0;
    c.snapshot_interval = 5.0;
    const NonlinearitySpec spec{NonlinearityKind::signed_power, 6.0, 1.0, 1.0};
    const IntegrationResult r = integrate(u0, 0.0 * u0, 0.01, spec, c);
    REQUIRE(r.status == RunStatus::completed);
    const EstimateParams e = param_set(1, 2.0, 0.0, 6.0);
    const ProfileErrorReport rep = asymptotic_profile_error(r, u0, 0.0 * u0, 0.01, e, 10.0, 200.0);
    CHECK(rep.theory_applicable);
    CHECK(rep.l2.slope <= rep.theory_l2 + 0.15);
    CHECK(rep.solution_l2.slope - rep.l2.slope >= 0.3);
}
