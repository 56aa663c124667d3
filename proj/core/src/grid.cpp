#include "dwave/grid.hpp"

#include "dwave/error.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace dwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

// FFTW planning is not thread safe; execution with new-array calls is.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_tuple(dim, n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::size_t total = 1;
        int dims[3];
        for (int d = 0; d < dim; ++d) {
            dims[d] = n;
            total *= static_cast<std::size_t>(n);
        }
        fftw_complex* buf = fftw_alloc_complex(total);
        fftw_plan plan = fftw_plan_dft(dim, dims, buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans_.emplace(key, plan);
        return plan;
    }

    ~PlanCache() {
        for (auto& kv : plans_) fftw_destroy_plan(kv.second);
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(Field& f, int sign) {
    fftw_plan plan = PlanCache::instance().get(f.grid.dim(), f.grid.points(), sign);
    auto* p = reinterpret_cast<fftw_complex*>(f.data.data());
    fftw_execute_dft(plan, p, p);
}

// (-1)^{j_1 + ... + j_n}: the phase from placing the origin at the grid centre.
void apply_centre_phase(Field& f, double scale) {
    const GridSpec& g = f.grid;
    const int n = g.points();
    const std::size_t total = g.size();
    if (g.dim() == 1) {
        for (int j = 0; j < n; ++j) f.data[j] *= (j & 1) ? -scale : scale;
        return;
    }
    int idx[3];
    for (std::size_t k = 0; k < total; ++k) {
        g.unpack(k, idx);
        int parity = 0;
        for (int d = 0; d < g.dim(); ++d) parity += idx[d];
        f.data[k] *= (parity & 1) ? -scale : scale;
    }
}

void require_same_grid(const Field& a, const Field& b) {
    if (!(a.grid == b.grid) || a.rep != b.rep) throw StateError("field arithmetic needs matching grid and rep");
}

}  // namespace

double GridSpec::cell_volume() const { return std::pow(dx(), dim_); }

double GridSpec::dual_cell_volume() const { return std::pow(dxi(), dim_); }

void GridSpec::unpack(std::size_t flat, int idx[3]) const {
    const std::size_t n = static_cast<std::size_t>(points_);
    for (int d = dim_ - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(flat % n);
        flat /= n;
    }
}

GridSpec make_grid(int dim, double half_width, int points) {
    if (dim < 1 || dim > 3) throw ConfigError("grid dimension must be 1, 2 or 3");
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw ConfigError("grid half_width must be positive");
    if (points < 64 || (points & (points - 1)) != 0) throw ConfigError("grid points must be a power of two >= 64");
    GridSpec g;
    g.dim_ = dim;
    g.half_width_ = half_width;
    g.points_ = points;
    std::size_t total = 1;
    for (int d = 0; d < dim; ++d) total *= static_cast<std::size_t>(points);
    g.size_ = total;
    if (g.nyquist() < 8.0) throw ConfigError("grid Nyquist frequency " + std::to_string(g.nyquist()) + " is below 8");

    std::vector<double> k1(points), x1(points);
    for (int j = 0; j < points; ++j) {
        k1[j] = g.wavenumber(j);
        x1[j] = g.coordinate(j);
    }
    auto xi = std::make_shared<std::vector<double>>(total);
    auto xs = std::make_shared<std::vector<double>>(total);
    int idx[3] = {0, 0, 0};
    for (std::size_t k = 0; k < total; ++k) {
        g.unpack(k, idx);
        double s2 = 0.0, r2 = 0.0;
        for (int d = 0; d < dim; ++d) {
            s2 += k1[idx[d]] * k1[idx[d]];
            r2 += x1[idx[d]] * x1[idx[d]];
        }
        (*xi)[k] = std::sqrt(s2);
        (*xs)[k] = std::sqrt(r2);
    }
    g.xi_mag_ = std::move(xi);
    g.x_mag_ = std::move(xs);
    return g;
}

Field Field::zeros(const GridSpec& g, Rep rep) {
    Field f;
    f.grid = g;
    f.rep = rep;
    f.data.assign(g.size(), complex(0.0, 0.0));
    return f;
}

Field forward_transform(const Field& f) {
    if (f.rep != Rep::space) throw StateError("forward_transform needs a space-rep field");
    Field g = f;
    execute(g, FFTW_FORWARD);
    const int n = g.grid.dim();
    apply_centre_phase(g, std::pow(2.0 * kPi, -0.5 * n) * g.grid.cell_volume());
    g.rep = Rep::frequency;
    return g;
}

Field inverse_transform(const Field& f) {
    if (f.rep != Rep::frequency) throw StateError("inverse_transform needs a frequency-rep field");
    Field g = f;
    const int n = g.grid.dim();
    apply_centre_phase(g, std::pow(2.0 * kPi, -0.5 * n) * g.grid.dual_cell_volume());
    execute(g, FFTW_BACKWARD);
    g.rep = Rep::space;
    return g;
}

Field to_rep(const Field& f, Rep rep) {
    if (f.rep == rep) return f;
    return rep == Rep::frequency ? forward_transform(f) : inverse_transform(f);
}

double max_abs(const Field& f) {
    double m = 0.0;
    for (const auto& z : f.data) m = std::max(m, std::abs(z));
    return m;
}

double lp_norm(const Field& f, double p) {
    if (f.rep != Rep::space) throw StateError("lp_norm needs a space-rep field");
    if (!(p >= 1.0)) throw DomainError("lp_norm needs p >= 1");
    const double m = max_abs(f);
    if (std::isinf(p)) return m;
    if (m == 0.0 || !std::isfinite(m)) return m;
    double sum = 0.0;
    if (p == 2.0) {
        for (const auto& z : f.data) sum += std::norm(z / m);
    } else {
        for (const auto& z : f.data) sum += std::pow(std::abs(z) / m, p);
    }
    return m * std::pow(sum * f.grid.cell_volume(), 1.0 / p);
}

double l2_norm_spectral(const Field& f) {
    if (f.rep != Rep::frequency) throw StateError("l2_norm_spectral needs a frequency-rep field");
    double sum = 0.0;
    for (const auto& z : f.data) sum += std::norm(z);
    return std::sqrt(sum * f.grid.dual_cell_volume());
}

Field fractional_derivative(const Field& f, double s) {
    if (s < 0.0) throw DomainError("fractional_derivative needs s >= 0");
    return apply_radial(f, [s](double k) { return k == 0.0 ? 0.0 : std::pow(k, s); });
}

Field bessel_potential(const Field& f, double s) {
    return apply_radial(f, [s](double k) { return std::pow(1.0 + k * k, 0.5 * s); });
}

void dealias_two_thirds(Field& f) {
    if (f.rep != Rep::frequency) throw StateError("dealiasing needs a frequency-rep field");
    const GridSpec& g = f.grid;
    const int n = g.points();
    const double cut = (2.0 / 3.0) * g.nyquist();
    std::vector<char> keep(n);
    for (int j = 0; j < n; ++j) keep[j] = std::abs(g.wavenumber(j)) <= cut;
    int idx[3];
    for (std::size_t k = 0; k < f.data.size(); ++k) {
        g.unpack(k, idx);
        for (int d = 0; d < g.dim(); ++d) {
            if (!keep[idx[d]]) {
                f.data[k] = 0.0;
                break;
            }
        }
    }
}

Field operator+(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

Field operator-(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
    return c;
}

Field operator*(double s, const Field& a) {
    Field c = a;
    for (auto& z : c.data) z *= s;
    return c;
}

void axpy(double c, const Field& x, Field& y) {
    require_same_grid(x, y);
    for (std::size_t i = 0; i < y.data.size(); ++i) y.data[i] += c * x.data[i];
}

}  // namespace dwave
