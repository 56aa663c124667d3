#include "dwave/error.hpp"
#include "dwave/estimates.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace dwave;

namespace {

// Re-derives every clause of the exponent system without the library checker.
bool exponents_ok(int n, double s, double p, double r, const HolderExponents& h) {
    const int fs = static_cast<int>(s);
    if (static_cast<int>(h.q.size()) != fs) return false;
    double recip = 1.0 / h.q0;
    for (double q : h.q) {
        if (!(q > 2.0 && std::isfinite(q))) return false;
        recip += 1.0 / q;
    }
    if (std::abs(recip - 0.5) > 1e-12) return false;
    if (h.q0 < r / (p - fs) - 1e-9) return false;
    if (n > 2.0 * s && h.q0 > 2.0 * n / ((p - fs) * (n - 2.0 * s)) + 1e-9) return false;
    for (int j = 0; j < fs; ++j) {
        const double lhs = h.k[j] + (j == 0 ? s - fs : 0.0) + n * (0.5 - 1.0 / h.q[j]);
        if (lhs > s + 1e-12) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("param_set arithmetic") {
    const EstimateParams a = param_set(2, 2.0, 1.0, 3.0);
    CHECK(a.beta_nonlinear == 0.0);
    CHECK(a.p_c == doctest::Approx(3.0));
    CHECK(a.sigma1 == 1.0);
    CHECK(a.sigma2 == 2.0);
    CHECK(a.omega == doctest::Approx(0.0));
    CHECK(a.eta == doctest::Approx(-0.5 + 0.5 + 1.0 * (1.5 - 0.5)));

    const EstimateParams b = param_set(1, 2.0, 0.0, 2.0);
    CHECK(b.omega == doctest::Approx(0.75));
    CHECK(b.subcritical);
    CHECK(b.admissible_subcritical);
    CHECK_FALSE(b.admissible_critical);

    CHECK(param_set(3, 1.2, 1.0, 2.0).admissible_global);
    CHECK_FALSE(param_set(5, 1.2, 1.0, 2.0).admissible_global);  // r < 2(n-1)/(n+1) = 4/3
    CHECK(param_set(1, 1.5, 0.0, 3.0).sigma1 == 1.0);
    CHECK(param_set(1, 1.5, 0.0, 1.2).sigma1 == doctest::Approx(1.25));

    CHECK_THROWS_AS(param_set(1, 2.5, 0.0, 2.0), DomainError);
    CHECK_THROWS_AS(param_set(1, 2.0, -1.0, 2.0), DomainError);
    CHECK_THROWS_AS(param_set(1, 2.0, 0.0, 1.0), DomainError);
}

TEST_CASE("param_set properties") {
    for (int n = 1; n <= 3; ++n) {
        for (double s : {0.0, 0.3, 1.0, 2.0}) {
            double prev_omega = INFINITY;
            for (double p = 1.05; p < 6.0; p += 0.05) {
                const EstimateParams e = param_set(n, 1.8, s, p);
                CHECK(e.omega < prev_omega);
                prev_omega = e.omega;
                CHECK((e.omega > 0.0) == (p < e.p_c));
                if (p <= p_power_upper(n, s)) CHECK(e.sigma1 <= e.sigma2 + 1e-12);
            }
        }
        double prev_pc = 0.0;
        for (double r = 1.05; r <= 2.0; r += 0.05) {
            const double pc = param_set(n, r, 0.0, 2.0).p_c;
            CHECK(pc > prev_pc);
            prev_pc = pc;
        }
    }
}

TEST_CASE("theoretical exponents") {
    auto with = [](int n, double q, double p, double s1, double s2) {
        return with_norms(param_set(n, 2.0, 0.0, 2.0), p, q, s1, s2);
    };
    CHECK(theoretical_low_exponent(with(1, 1.0, 2.0, 0.0, 0.0)) == doctest::Approx(-0.25));
    CHECK(theoretical_low_exponent(with(3, 1.0, 2.0, 1.0, 0.0)) == doctest::Approx(-1.25));
    CHECK(theoretical_diff_exponent(with(2, 1.0, 2.0, 0.0, 0.0)) == doctest::Approx(-1.5));
    CHECK(theoretical_dt_exponent(with(1, 1.0, INFINITY, 0.0, 0.0)) == doctest::Approx(-1.5));
    CHECK(theoretical_low_exponent(with(2, 2.0, 2.0, 0.0, 0.0)) == 0.0);
    CHECK_THROWS_AS(theoretical_low_exponent(with(1, 4.0, 2.0, 0.0, 0.0)), DomainError);
    CHECK(low_exponent_exact(1, rational(1), rational(1, 2), rational(0)) == rational(-1, 4));
    CHECK(low_exponent_exact(3, rational(1), rational(1, 2), rational(1)) == rational(-5, 4));
    CHECK(low_exponent_exact(3, rational(2, 3), rational(0), rational(0)) == rational(-1));
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= 4; ++a)
            for (int b = 0; b <= a; ++b) {
                const rational iq(a, 4), ip(b, 4);
                const double exact = boost::rational_cast<double>(low_exponent_exact(n, iq, ip, rational(1, 2)));
                const double p = b == 0 ? INFINITY : 4.0 / b;
                CHECK(theoretical_low_exponent(with(n, 4.0 / a, p, 0.5, 0.0)) == doctest::Approx(exact).epsilon(1e-15));
            }
}

TEST_CASE("decay regression") {
    std::vector<double> t = log_spaced(10.0, 1000.0, 12), y;
    CHECK(t.front() == 10.0);
    CHECK(t.back() == 1000.0);
    for (double s : t) y.push_back(3.0 * std::pow(1.0 + s * s, -0.35));
    const DecayFit f = fit_decay(t, y);
    CHECK(f.slope == doctest::Approx(-0.7).epsilon(1e-12));
    CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.r2 == doctest::Approx(1.0));
    CHECK_THROWS_AS(fit_decay({1, 2, 3}, {1, 2, 3}), WindowError);
    y[3] = 1e-40;
    CHECK_THROWS_AS(fit_decay(t, y), WindowError);
    const GridSpec g = make_grid(1, 64.0, 1024);
    const auto d = default_time_grid(g);
    CHECK(d.size() == 16u);
    CHECK(d.front() == 10.0);
    CHECK(d.back() == doctest::Approx(0.8 * g.valid_time()));
}

TEST_CASE("measure_decay guards") {
    const GridSpec g = make_grid(1, 64.0, 1024);
    const EstimateParams e = with_norms(param_set(1, 2.0, 0.0, 2.0), 2.0, 1.0, 0.0, 0.0);
    CHECK_THROWS_AS(measure_decay(Propagator::D, Gaussian{1.0}, e, log_spaced(10.0, 1000.0, 10), g), WindowError);
    CHECK_THROWS_AS(measure_decay(Propagator::D, Gaussian{1.0}, e, log_spaced(10.0, 100.0, 5), g), WindowError);
    CHECK(parse_decay_operator("nishihara_triple") == Propagator::nishihara);
    CHECK(std::holds_alternative<Gaussian>(decay_witness(2, 1.0)));
    CHECK(std::get<RegularizedPower>(decay_witness(2, 1.5)).k == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("heat decay is exact on Gaussian data") {
    const GridSpec g = make_grid(1, 128.0, 4096);
    const EstimateParams e = with_norms(param_set(1, 2.0, 0.0, 2.0), 2.0, 1.0, 0.0, 0.0);
    const DecayFit f = measure_decay(Propagator::G, Gaussian{1.0}, e, log_spaced(10.0, 200.0, 16), g);
    CHECK(std::abs(f.slope + 0.25) < 0.05);
}

TEST_CASE("suite: identity cell does not grow; table layout") {
    SuiteConfig cfg;
    cfg.grid = make_grid(1, 64.0, 2048);
    cfg.cells = {{Propagator::D, 2.0, 2.0, 0.0, 0.0}, {Propagator::diff_DG, 1.0, 2.0, 0.0, 0.0}};
    cfg.t_grid = log_spaced(10.0, 200.0, 12);
    const auto rows = verify_estimate_suite(cfg);
    REQUIRE(rows.size() == 2u);
    CHECK(rows[0].cell_id == "n1_D_q2_p2_ds0");
    CHECK(rows[0].fitted_slope <= 0.05);
    CHECK(rows[1].theory_slope == doctest::Approx(-1.25));
    CHECK(rows[1].pass);
    std::ostringstream os;
    write_suite_csv(os, rows);
    CHECK(os.str().rfind("cell_id,n,p,q,s1,s2,theory_slope,fitted_slope,r2,pass\n", 0) == 0);
    CHECK(standard_matrix(Propagator::D).size() == 18u);
}

TEST_CASE("Hoelder exponents: worked case") {
    const HolderExponents h = holder_exponents(4, 1.5, 3.0, 2.0, {0});
    CHECK(h.q0 == doctest::Approx(4.0));
    REQUIRE(h.q.size() == 1u);
    CHECK(h.q[0] == doctest::Approx(4.0));
    CHECK(0.0 + 0.5 + 4.0 * (0.5 - 1.0 / h.q[0]) <= 1.5 + 1e-12);
    CHECK(1.0 / h.q[0] == doctest::Approx(0.5 - 1.0 / h.q0));
}

TEST_CASE("Hoelder exponents: both branches pass the independent checker") {
    int built = 0, low = 0, high = 0;
    for (int n = 1; n <= 5; ++n)
        for (double s : {1.25, 1.5, 2.0, 2.5, 3.25})
            for (double p : {2.5, 3.0, 3.5, 4.5, 6.0})
                for (double r : {1.5, 2.0}) {
                    const int fs = static_cast<int>(s);
                    if (!(p > fs)) continue;
                    if (n > 2.0 * s && p > p_power_upper(n, s)) continue;
                    for (const auto& k : multi_indices(fs, fs - 1)) {
                        HolderExponents h;
                        try {
                            h = holder_exponents(n, s, p, r, k);
                        } catch (const ConstructionError&) {
                            continue;
                        }
                        CHECK(exponents_ok(n, s, p, r, h));
                        CHECK_FALSE(holder_violation(n, s, p, r, h).has_value());
                        ++built;
                        (n > 2.0 * s ? high : low)++;
                    }
                }
    CHECK(built >= 50);
    CHECK(high > 0);
    CHECK(low > 0);
}

TEST_CASE("Hoelder exponents: failures") {
    CHECK_THROWS_AS(holder_exponents(3, 0.5, 3.0, 2.0, {}), DomainError);
    CHECK_THROWS_AS(holder_exponents(3, 2.5, 2.0, 2.0, {1, 0}), DomainError);
    CHECK_THROWS_AS(holder_exponents(3, 1.5, 3.0, 2.0, {1}), DomainError);
    HolderExponents h = holder_exponents(4, 1.5, 3.0, 2.0, {0});
    h.q[0] = 3.0;
    CHECK(holder_violation(4, 1.5, 3.0, 2.0, h).has_value());
    CHECK(multi_indices(3, 2).size() == 6u);
    CHECK(multi_indices(1, 0).size() == 1u);
}
