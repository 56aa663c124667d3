#include "dwave/profiles.hpp"

#include "dwave/error.hpp"
#include "dwave/symbols.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace dwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class F>
double integrate(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

double blend(double r) { return symbols::chi(2.0 * r); }

double power_value(const PowerDecay& p, double r, int dim) {
    const double w = blend(r);
    const double core = p.core == CoreKind::mass_matched ? power_core_level(p.k, dim) : 0.0;
    const double tail = w < 1.0 ? (1.0 - w) * std::pow(r, -p.k) : 0.0;
    return p.c0 * (tail + core * w);
}

double table_value(const CustomTable& t, double r) {
    if (t.r.empty() || r > t.r.back()) return 0.0;
    if (r <= t.r.front()) return t.value.front();
    const auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
    const std::size_t j = static_cast<std::size_t>(it - t.r.begin());
    const double s = (r - t.r[j - 1]) / (t.r[j] - t.r[j - 1]);
    return (1.0 - s) * t.value[j - 1] + s * t.value[j];
}

void validate(const DataProfile& profile, int dim) {
    if (const auto* g = std::get_if<Gaussian>(&profile)) {
        if (!(g->a > 0.0)) throw ConfigError("gaussian needs a > 0");
    } else if (const auto* p = std::get_if<PowerDecay>(&profile)) {
        if (!(p->k > 0.0) || !(p->c0 > 0.0)) throw ConfigError("power_decay needs k > 0 and c0 > 0");
        const double need = power_min_upper_ratio(p->k, dim, p->core) * p->c0;
        if (p->C0 < need * (1.0 - 1e-12))
            throw ConfigError("power_decay upper constant C0 below the admissible minimum " + std::to_string(need));
    } else if (const auto* b = std::get_if<Bump>(&profile)) {
        if (!(b->R > 0.0)) throw ConfigError("bump needs R > 0");
    } else if (const auto* q = std::get_if<RegularizedPower>(&profile)) {
        if (!(q->a > 0.0) || !(q->k > std::max(0.0, dim - 2.0)) || !(q->k < dim))
            throw ConfigError("regularized_power needs a > 0 and max(0, n-2) < k < n");
    } else if (const auto* t = std::get_if<CustomTable>(&profile)) {
        if (t->r.size() != t->value.size() || t->r.size() < 2) throw ConfigError("custom_table needs matching r/value lists");
        if (!std::is_sorted(t->r.begin(), t->r.end())) throw ConfigError("custom_table radii must be sorted");
    }
}

}  // namespace

double sphere_measure(int dim) {
    switch (dim) {
        case 1: return 2.0;
        case 2: return 2.0 * kPi;
        case 3: return 4.0 * kPi;
    }
    return 2.0 * std::pow(kPi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double power_core_level(double k, int dim) {
    if (!(k < dim)) throw ConfigError("mass-matched core needs k < n");
    const double n = dim;
    // numerator: int_0^1 chi(2r) r^{n-1-k} dr, denominator: same without r^{-k}
    const double num = std::pow(0.5, n - k) / (n - k) +
                       integrate([&](double r) { return blend(r) * std::pow(r, n - 1.0 - k); }, 0.5, 1.0);
    const double den = std::pow(0.5, n) / n + integrate([&](double r) { return blend(r) * std::pow(r, n - 1.0); }, 0.5, 1.0);
    return num / den;
}

double power_min_upper_ratio(double k, int dim, CoreKind core) {
    PowerDecay p{k, 1.0, 0.0, core};
    double best = std::pow(2.0, k);  // r >= 1: r^{-k}(1+r)^k is decreasing
    const int samples = 8000;
    for (int i = 0; i <= samples; ++i) {
        const double r = static_cast<double>(i) / samples;
        best = std::max(best, power_value(p, r, dim) * std::pow(1.0 + r, k));
    }
    return best;
}

double regularized_power_weight(double k, double a, int dim) {
    return -std::pow(a, dim - k) * std::tgamma(0.5 * (k - dim)) / std::tgamma(0.5 * k);
}

double profile_value(const DataProfile& profile, double r, int dim) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return std::exp(-p.a * r * r);
            } else if constexpr (std::is_same_v<T, PowerDecay>) {
                return power_value(p, r, dim);
            } else if constexpr (std::is_same_v<T, Bump>) {
                return symbols::chi(r / p.R);
            } else if constexpr (std::is_same_v<T, RegularizedPower>) {
                const double b = regularized_power_weight(p.k, p.a, dim);
                return std::pow(r * r + p.a * p.a, -0.5 * p.k) + b * std::exp(-r * r);
            } else {
                return table_value(p, r);
            }
        },
        profile);
}

Field sample(const DataProfile& profile, const GridSpec& grid) {
    validate(profile, grid.dim());
    Field f = Field::zeros(grid, Rep::space);
    const auto& xm = grid.x_mag();
    if (const auto* p = std::get_if<PowerDecay>(&profile)) {
        // Hoist the core level out of the per-node loop.
        const double core = p->core == CoreKind::mass_matched ? power_core_level(p->k, grid.dim()) : 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r = xm[i];
            const double w = blend(r);
            const double tail = w < 1.0 ? (1.0 - w) * std::pow(r, -p->k) : 0.0;
            f.data[i] = p->c0 * (tail + core * w);
        }
        return f;
    }
    for (std::size_t i = 0; i < f.size(); ++i) f.data[i] = profile_value(profile, xm[i], grid.dim());
    return f;
}

std::string profile_name(const DataProfile& profile) {
    static const char* names[] = {"gaussian", "power_decay", "bump", "regularized_power", "custom_table"};
    return names[profile.index()];
}

}  // namespace dwave
