#include "dwave/symbols.hpp"

#include "dwave/error.hpp"

#include <cmath>
#include <limits>

namespace dwave::symbols {

namespace {

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("symbol time must be finite and >= 0");
}

// (1/2 - xi)(1/2 + xi) without cancellation near |xi| = 1/2.
double z_of(double xi) { return (0.5 - xi) * (0.5 + xi); }

bool use_series(double t, double xi, const BranchPolicy& policy) {
    const double z = z_of(xi);
    return std::abs(xi - 0.5) < policy.series_radius && t * t * std::abs(z) <= policy.series_arg_max;
}

}  // namespace

double symbol_m_series(double t, double z, int terms) {
    // sum_k t^{2k+1} z^k / (2k+1)!
    double term = t;
    double sum = term;
    const double w = t * t * z;
    for (int k = 1; k < terms; ++k) {
        term *= w / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
    }
    return sum;
}

double symbol_mdot_series(double t, double z, int terms) {
    double term = 1.0;
    double sum = term;
    const double w = t * t * z;
    for (int k = 1; k < terms; ++k) {
        term *= w / ((2.0 * k - 1.0) * (2.0 * k));
        sum += term;
    }
    return sum;
}

double symbol_m_direct(double t, double z) {
    if (z > 0.0) {
        const double a = std::sqrt(z);
        return std::sinh(t * a) / a;
    }
    if (z < 0.0) {
        const double b = std::sqrt(-z);
        return std::sin(t * b) / b;
    }
    return t;
}

double symbol_m(double t, double z) {
    require_time(t);
    if (t * t * std::abs(z) <= 1.0) return symbol_m_series(t, z, 16);
    return symbol_m_direct(t, z);
}

DampedValue damped_pair(double t, double xi, const BranchPolicy& policy) {
    require_time(t);
    xi = std::abs(xi);
    if (!std::isfinite(xi)) throw DomainError("symbol frequency must be finite");
    if (use_series(t, xi, policy)) {
        const double z = z_of(xi);
        const double e = std::exp(-0.5 * t);
        const double m = symbol_m_series(t, z, policy.series_terms);
        const double md = symbol_mdot_series(t, z, policy.series_terms);
        return {e * m, e * (md - 0.5 * m)};
    }
    if (xi < 0.5) {
        // e^{-t/2} sinh(ta)/a = e^{-t xi^2/(1/2+a)} (1 - e^{-2ta}) / (2a)
        const double a = std::sqrt(z_of(xi));
        const double lead = std::exp(-t * xi * xi / (0.5 + a));
        const double minus = -std::expm1(-2.0 * t * a);
        const double value = lead * minus / (2.0 * a);
        const double cosh_part = 0.5 * lead * (2.0 - minus);  // e^{-t/2} cosh(ta)
        return {value, cosh_part - 0.5 * value};
    }
    if (xi == 0.5) {
        const double e = std::exp(-0.5 * t);
        return {e * t, e * (1.0 - 0.5 * t)};
    }
    const double b = std::sqrt((xi - 0.5) * (xi + 0.5));
    const double e = std::exp(-0.5 * t);
    const double s = std::sin(t * b);
    const double value = e * s / b;
    return {value, e * std::cos(t * b) - 0.5 * value};
}

double damped(double t, double xi, const BranchPolicy& policy) { return damped_pair(t, xi, policy).value; }

double damped_dt(double t, double xi, const BranchPolicy& policy) { return damped_pair(t, xi, policy).dt; }

double damped_dtt(double t, double xi, const BranchPolicy& policy) {
    const DampedValue d = damped_pair(t, xi, policy);
    return -d.dt - xi * xi * d.value;
}

double heat(double t, double xi) {
    require_time(t);
    return std::exp(-t * xi * xi);
}

double wave(double t, double xi) {
    if (!std::isfinite(t)) throw DomainError("wave symbol time must be finite");
    xi = std::abs(xi);
    if (xi * std::abs(t) < 1e-4) {
        const double w = t * t * xi * xi;
        return t * (1.0 - w / 6.0 + w * w / 120.0);
    }
    return std::sin(t * xi) / xi;
}

namespace {

// chi = 1/(1 + e^g) on 1 < r < 2 with g = 1/(2-r) - 1/(r-1).
double exponent_g(double r) { return 1.0 / (2.0 - r) - 1.0 / (r - 1.0); }

double logistic(double g) {
    if (g > 0.0) {
        const double e = std::exp(-g);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(g));
}

}  // namespace

double chi(double r) {
    r = std::abs(r);
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    return logistic(exponent_g(r));
}

double chi_d1(double r) {
    if (r <= 1.0 || r >= 2.0) return 0.0;
    const double a = 2.0 - r;
    const double b = r - 1.0;
    const double c = logistic(exponent_g(r));
    const double gp = 1.0 / (a * a) + 1.0 / (b * b);
    if (!std::isfinite(gp)) return 0.0;
    return -c * (1.0 - c) * gp;
}

double chi_d2(double r) {
    if (r <= 1.0 || r >= 2.0) return 0.0;
    const double a = 2.0 - r;
    const double b = r - 1.0;
    const double c = logistic(exponent_g(r));
    const double gp = 1.0 / (a * a) + 1.0 / (b * b);
    const double gpp = 2.0 / (a * a * a) - 2.0 / (b * b * b);
    if (!std::isfinite(gp) || !std::isfinite(gpp)) return 0.0;
    const double d1 = -c * (1.0 - c) * gp;
    return -d1 * (1.0 - 2.0 * c) * gp - c * (1.0 - c) * gpp;
}

double cutoff_below(double a, double r) {
    if (!(a > 0.0)) throw DomainError("cutoff scale must be positive");
    return chi(r / a);
}

double cutoff_above(double a, double r) { return 1.0 - cutoff_below(a, r); }

double cutoff_band(double a, double b, double r) {
    if (!(b > a)) throw DomainError("band cutoff needs b > a");
    return cutoff_below(b, r) - cutoff_below(a, r);
}

double cutoff(double a, CutoffKind kind, double r, double b) {
    switch (kind) {
        case CutoffKind::below: return cutoff_below(a, r);
        case CutoffKind::above: return cutoff_above(a, r);
        case CutoffKind::band: return cutoff_band(a, b, r);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace dwave::symbols
