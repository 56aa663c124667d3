#include "dwave/error.hpp"
#include "dwave/estimates.hpp"
#include "dwave/profiles.hpp"
#include "dwave/propagators.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dwave;

namespace {

double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

Field smooth(const GridSpec& g, double a, double shift) {
    Field f = Field::zeros(g, Rep::space);
    for (int i = 0; i < g.points(); ++i) {
        const double x = g.coordinate(i);
        f.data[i] = std::exp(-a * (x - shift) * (x - shift));
    }
    return forward_transform(f);
}

}  // namespace

TEST_CASE("propagator names") {
    for (Propagator op : {Propagator::D, Propagator::dtD, Propagator::G, Propagator::W, Propagator::D_low,
                          Propagator::D_high, Propagator::diff_DG, Propagator::nishihara})
        CHECK(parse_propagator(propagator_name(op)) == op);
    CHECK_THROWS_AS(parse_propagator("bogus"), ConfigError);
}

TEST_CASE("trivial propagator values") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field f = smooth(g, 0.5, 0.0);
    CHECK(max_abs(apply_D(f, 0.0)) == 0.0);
    CHECK(max_abs_diff(apply_dtD(f, 0.0), f) < 1e-15);
    CHECK(max_abs_diff(apply_diff_DG(f, 0.0), -1.0 * f) < 1e-15);
    CHECK(max_abs(apply_diff_DG(Field::zeros(g, Rep::frequency), 3.0)) == 0.0);
    CHECK_THROWS_AS(apply_D(inverse_transform(f), 1.0), StateError);
    CHECK_THROWS_AS(apply_D(f, -1.0), DomainError);
    CHECK_NOTHROW(apply_W(f, -1.0));
}

TEST_CASE("heat semigroup on a Gaussian matches the closed form") {
    const GridSpec g = make_grid(1, 64.0, 1024);
    const Field f = smooth(g, 0.25, 0.0);
    auto line = [](double x, double t) { return std::pow(1.0 + t, -0.5) * std::exp(-x * x / (4.0 * (1.0 + t))); };
    for (double t : {1.0, 10.0, 50.0, 100.0, 256.0}) {
        const Field u = inverse_transform(apply_G(f, t));
        double err = 0.0, err_torus = 0.0;
        for (int i = 0; i < g.points(); ++i) {
            const double x = g.coordinate(i);
            double images = 0.0;
            for (int k = -4; k <= 4; ++k) images += line(x + 128.0 * k, t);
            err = std::max(err, std::abs(u.data[i] - line(x, t)));
            err_torus = std::max(err_torus, std::abs(u.data[i] - images));
        }
        CAPTURE(t);
        CHECK(err_torus < 1e-12);
        if (t <= 50.0) CHECK(err < 1e-8);
    }
}

TEST_CASE("low and high parts sum to D; high part kills band-limited data") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field f = smooth(g, 0.8, 1.0);
    for (double t : {0.3, 4.0, 50.0}) {
        const Field sum = apply_D_low(f, t) + apply_D_high(f, t);
        CHECK(max_abs_diff(sum, apply_D(f, t)) <= 1e-12 * max_abs(apply_D(f, t)));
    }
    Field band = f;
    const auto& xm = g.xi_mag();
    for (std::size_t i = 0; i < band.size(); ++i)
        if (xm[i] > 1.0) band.data[i] = 0.0;
    CHECK(max_abs(apply_D_high(band, 2.0)) == 0.0);
}

TEST_CASE("high-frequency part decays like e^{-t/2}") {
    const GridSpec g = make_grid(1, 32.0, 512);
    const Field f = smooth(g, 2.0, 0.0);
    std::vector<double> ts, logs;
    for (double t = 5.0; t <= 60.0; t += 5.0) {
        ts.push_back(t);
        logs.push_back(std::log(l2_norm_spectral(apply_D_high(f, t))));
    }
    double mt = 0.0, my = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        mt += ts[i] / ts.size();
        my += logs[i] / ts.size();
    }
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        sxx += (ts[i] - mt) * (ts[i] - mt);
        sxy += (ts[i] - mt) * (logs[i] - my);
    }
    CHECK(std::abs(sxy / sxx + 0.5) < 0.1);
}

TEST_CASE("pair flow: identity, semigroup, zero mode, consistency") {
    const GridSpec g = make_grid(1, 32.0, 512);
    PairState s{smooth(g, 0.5, 2.0), smooth(g, 1.0, -1.0), 0.0};
    const PairState id = linear_flow(s, 0.0);
    CHECK(max_abs_diff(id.u, s.u) < 1e-15);
    CHECK(max_abs_diff(id.v, s.v) < 1e-15);
    CHECK_THROWS_AS(linear_flow(s, -0.1), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ud(0.0, 20.0);
    for (int k = 0; k < 20; ++k) {
        const double a = ud(rng), b = ud(rng);
        const PairState two = linear_flow(linear_flow(s, a), b);
        const PairState one = linear_flow(s, a + b);
        const double scale = std::max(max_abs(one.u), max_abs(one.v));
        CHECK(max_abs_diff(two.u, one.u) < 1e-10 * scale);
        CHECK(max_abs_diff(two.v, one.v) < 1e-10 * scale);
        CHECK(one.time == doctest::Approx(a + b));
    }

    for (double t : {0.5, 3.0, 25.0}) {
        const PairState f = linear_flow(s, t);
        const complex mean = s.u.data[0] + s.v.data[0] * (1.0 - std::exp(-t));
        CHECK(std::abs(f.u.data[0] - mean) < 1e-10 * std::abs(mean));
        const Field expect = apply_dtD(s.u, t) + apply_D(s.u, t) + apply_D(s.v, t);
        CHECK(max_abs_diff(f.u, expect) < 1e-12 * max_abs(expect));
    }
}

TEST_CASE("energy is non-increasing along the flow") {
    const GridSpec g = make_grid(2, 16.0, 128);
    PairState s{forward_transform(sample(Gaussian{0.5}, g)), forward_transform(sample(Gaussian{2.0}, g)), 0.0};
    double prev = energy(s);
    for (int k = 0; k < 40; ++k) {
        s = linear_flow(s, 0.25);
        const double e = energy(s);
        CHECK(e <= prev * (1.0 + 1e-12));
        prev = e;
    }
}

TEST_CASE("decay of D matches the heat rate at large t") {
    const GridSpec g = make_grid(1, 128.0, 4096);
    const EstimateParams e = with_norms(param_set(1, 2.0, 0.0, 2.0), 2.0, 1.0, 0.0, 0.0);
    const DecayFit gf = measure_decay(Propagator::G, Gaussian{1.0}, e, log_spaced(10.0, 200.0, 12), g);
    const DecayFit df = measure_decay(Propagator::D, Gaussian{1.0}, e, log_spaced(10.0, 200.0, 12), g);
    CHECK(std::abs(gf.slope + 0.25) < 0.05);
    CHECK(std::abs(df.slope + 0.25) < 0.1);
}
