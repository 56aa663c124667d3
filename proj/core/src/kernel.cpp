#include "dwave/kernel.hpp"

#include "dwave/error.hpp"
#include "dwave/symbols.hpp"

#include <algorithm>
#include <cmath>

namespace dwave {

KernelKind parse_kernel_kind(const std::string& name) {
    if (name == "d") return KernelKind::d;
    if (name == "m") return KernelKind::m;
    throw ConfigError("unknown kernel kind '" + name + "'");
}

GridSpec refined_kernel_grid(const GridSpec& grid, int factor) {
    if (factor < 1) throw ConfigError("kernel refinement factor must be >= 1");
    return make_grid(grid.dim(), grid.half_width() * factor, grid.points() * factor);
}

Field kernel(KernelKind kind, double t, double s, const GridSpec& grid) {
    if (!(t >= 0.0)) throw DomainError("kernel time must be >= 0");
    if (!(s >= 0.0)) throw DomainError("kernel order s must be >= 0");
    Field f = Field::zeros(grid, Rep::frequency);
    const auto& xm = grid.xi_mag();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double k = xm[i];
        const double c = symbols::cutoff_below(1.0, k);
        if (c == 0.0) continue;
        double v = symbols::damped(t, k);
        if (kind == KernelKind::m) v -= symbols::heat(t, k);
        const double w = s == 0.0 ? 1.0 : (k == 0.0 ? 0.0 : std::pow(k, s));
        f.data[i] = c * w * v;
    }
    return inverse_transform(f);
}

double kernel_envelope(KernelKind kind, int dim, double s, int j, double t, double r) {
    const double bracket = std::sqrt(1.0 + t * t);
    if (j >= 0) {
        const double m = r == 0.0 ? 1.0 : std::min(std::sqrt(bracket) / r, 1.0);
        return std::pow(bracket, -0.5 * dim) * std::pow(m, j);
    }
    const double e = s + dim + (kind == KernelKind::m ? 2.0 : 0.0);
    const double m = r == 0.0 ? 1.0 / std::sqrt(bracket) : std::min(1.0 / r, 1.0 / std::sqrt(bracket));
    return std::pow(m, e);
}

std::vector<double> default_x_set(const GridSpec& grid, double x_max) {
    std::vector<double> xs;
    for (int i = 0; i * grid.dx() <= x_max * (1.0 + 1e-12); ++i) xs.push_back(i * grid.dx());
    return xs;
}

BoundReport check_pointwise_bound(KernelKind kind, double s, int j, const std::vector<double>& t_set,
                                  const std::vector<double>& x_set, const GridSpec& grid) {
    if (t_set.empty() || x_set.empty()) throw ConfigError("pointwise bound check needs non-empty sample sets");
    for (double t : t_set)
        if (!(t >= 0.0) || t > grid.valid_time()) throw WindowError("kernel sample time outside the valid window");
    for (double x : x_set)
        if (!(x >= 0.0) || x > grid.half_width()) throw WindowError("kernel sample point outside the grid");

    const GridSpec fine = refined_kernel_grid(grid);
    const int n = fine.dim();
    const int centre = fine.points() / 2;
    // flat index of the node at offset i along the first axis, others at the origin
    auto node = [&](int i) {
        std::size_t flat = 0;
        for (int d = 0; d < n; ++d) flat = flat * fine.points() + (d == 0 ? centre + i : centre);
        return flat;
    };

    BoundReport rep;
    rep.kind = kind;
    rep.s = s;
    rep.j = j;
    rep.t_values = t_set;
    rep.x_values = x_set;
    rep.finite = true;
    for (double t : t_set) {
        const Field k = kernel(kind, t, s, fine);
        double best = 0.0;
        double origin = 0.0;
        for (double x : x_set) {
            const int i = static_cast<int>(std::lround(x / fine.dx()));
            const double r = i * fine.dx();
            const double ratio = std::abs(k.data[node(i)]) / kernel_envelope(kind, n, s, j, t, r);
            if (!std::isfinite(ratio)) rep.finite = false;
            best = std::max(best, ratio);
            if (i == 0) origin = ratio;
        }
        rep.scale_max_ratio.push_back(best);
        rep.origin_ratio.push_back(origin);
    }
    const auto [lo, hi] = std::minmax_element(rep.scale_max_ratio.begin(), rep.scale_max_ratio.end());
    rep.max_ratio = *hi;
    rep.spread = *lo > 0.0 ? *hi / *lo : INFINITY;
    rep.finite = rep.finite && std::isfinite(rep.max_ratio) && *lo > 0.0;
    rep.stable = rep.finite && rep.spread < 2.0;
    return rep;
}

}  // namespace dwave
