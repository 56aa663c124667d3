#include "dwave/error.hpp"
#include "dwave/estimates.hpp"
#include "dwave/kernel.hpp"
#include "dwave/symbols.hpp"

#include <doctest.h>

#include <cmath>

using namespace dwave;

namespace {

double sup_slope(KernelKind kind, const GridSpec& g) {
    std::vector<double> ts = log_spaced(16.0, 256.0, 10), sups;
    for (double t : ts) sups.push_back(lp_norm(kernel(kind, t, 0.0, g), INFINITY));
    return fit_decay(ts, sups).slope;
}

}  // namespace

TEST_CASE("refined kernel grid keeps the spacing") {
    const GridSpec g = make_grid(1, 128.0, 1024);
    const GridSpec f = refined_kernel_grid(g);
    CHECK(f.dx() == doctest::Approx(g.dx()));
    CHECK(f.half_width() == doctest::Approx(4.0 * g.half_width()));
    CHECK(parse_kernel_kind("m") == KernelKind::m);
    CHECK_THROWS_AS(parse_kernel_kind("q"), ConfigError);
}

TEST_CASE("kernels are real and even") {
    const GridSpec g = make_grid(1, 64.0, 512);
    for (KernelKind kind : {KernelKind::d, KernelKind::m}) {
        const Field k = kernel(kind, 3.0, 0.5, g);
        const int n = g.points(), c = n / 2;
        for (int i = 1; i < c; ++i) CHECK(std::abs(k.data[c + i] - k.data[c - i]) < 1e-14);
        for (const auto& v : k.data) CHECK(std::abs(v.imag()) < 1e-14);
    }
}

TEST_CASE("kernel m at t = 0 is minus the cutoff transform") {
    const GridSpec g = make_grid(1, 64.0, 512);
    Field c = Field::zeros(g, Rep::frequency);
    for (std::size_t i = 0; i < c.size(); ++i) c.data[i] = -symbols::cutoff_below(1.0, g.xi_mag()[i]);
    const Field expect = inverse_transform(c);
    const Field m0 = kernel(KernelKind::m, 0.0, 0.0, g);
    for (std::size_t i = 0; i < m0.size(); ++i) CHECK(std::abs(m0.data[i] - expect.data[i]) < 1e-14);
}

TEST_CASE("sup-norm decay of the kernels") {
    const GridSpec g = make_grid(1, 256.0, 2048);
    CHECK(std::abs(sup_slope(KernelKind::d, g) + 0.5) < 0.1);
    CHECK(std::abs(sup_slope(KernelKind::m, g) + 1.5) < 0.1);
}

TEST_CASE("L1 norm of kernel d stays bounded in t") {
    const GridSpec g = make_grid(1, 256.0, 2048);
    double lo = INFINITY, hi = 0.0;
    for (double t : {1.0, 4.0, 16.0, 64.0, 256.0}) {
        const double l1 = lp_norm(kernel(KernelKind::d, t, 0.0, g), 1.0);
        lo = std::min(lo, l1);
        hi = std::max(hi, l1);
    }
    CHECK(hi < 3.0);
    CHECK(hi / lo < 2.0);
}

TEST_CASE("envelopes") {
    CHECK(kernel_envelope(KernelKind::d, 1, 0.0, -1, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK(kernel_envelope(KernelKind::d, 1, 1.0, -1, 3.0, 0.0) == doctest::Approx(std::pow(10.0, -0.5)));
    CHECK(kernel_envelope(KernelKind::d, 1, 0.0, -1, 0.0, 4.0) == doctest::Approx(0.25));
    CHECK(kernel_envelope(KernelKind::m, 2, 0.0, -1, 0.0, 2.0) == doctest::Approx(std::pow(0.5, 4.0)));
    CHECK(kernel_envelope(KernelKind::d, 1, 0.0, 2, 3.0, 100.0) == doctest::Approx(std::pow(10.0, 0.25) / 1e4));
}

TEST_CASE("pointwise bound reports") {
    const GridSpec g = make_grid(1, 128.0, 1024);
    const std::vector<double> ts{1.0, 4.0, 16.0, 64.0};
    const auto xs = default_x_set(g, 0.5 * g.half_width());
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == doctest::Approx(64.0));
    const BoundReport d = check_pointwise_bound(KernelKind::d, 0.0, -1, ts, xs, g);
    CHECK(d.finite);
    CHECK(d.stable);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Field k = kernel(KernelKind::d, ts[i], 0.0, refined_kernel_grid(g));
        const double sup = lp_norm(k, INFINITY);
        const double env = std::pow(1.0 + ts[i] * ts[i], -0.25);
        CHECK(d.origin_ratio[i] == doctest::Approx(sup / env).epsilon(1e-10));
    }
    const BoundReport m = check_pointwise_bound(KernelKind::m, 0.0, -1, ts, xs, g);
    CHECK(m.finite);
    CHECK(std::isfinite(m.max_ratio));
    CHECK_THROWS_AS(check_pointwise_bound(KernelKind::d, 0.0, -1, {}, xs, g), ConfigError);
    CHECK_THROWS_AS(check_pointwise_bound(KernelKind::d, 0.0, -1, ts, {500.0}, g), WindowError);
}
