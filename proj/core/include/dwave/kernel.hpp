#pragma once

// Real-space low-frequency kernels and sampled checks of their pointwise
// envelopes.

#include "dwave/grid.hpp"

#include <string>
#include <vector>

namespace dwave {

enum class KernelKind { d, m };

KernelKind parse_kernel_kind(const std::string& name);

// Same spacing as `grid`, factor times the extent.
GridSpec refined_kernel_grid(const GridSpec& grid, int factor = 4);

// d: F^{-1}[chi_{<1} |xi|^s D(t)];  m: d minus F^{-1}[chi_{<1} |xi|^s e^{-t|xi|^2}].
// Returns a space-rep field on `grid`.
Field kernel(KernelKind kind, double t, double s, const GridSpec& grid);
inline Field kernel_d(double t, double s, const GridSpec& grid) { return kernel(KernelKind::d, t, s, grid); }
inline Field kernel_m(double t, double s, const GridSpec& grid) { return kernel(KernelKind::m, t, s, grid); }

// j < 0:  min(|x|^{-1}, <t>^{-1/2})^{e}, e = s + n (d) or s + n + 2 (m).
// j >= 0: <t>^{-n/2} min(<t>^{1/2} |x|^{-1}, 1)^j.
double kernel_envelope(KernelKind kind, int dim, double s, int j, double t, double r);

struct BoundReport {
    KernelKind kind = KernelKind::d;
    double s = 0.0;
    int j = -1;
    std::vector<double> t_values;
    std::vector<double> x_values;
    std::vector<double> scale_max_ratio;  // max over x for each t
    std::vector<double> origin_ratio;     // ratio at x = 0 for each t
    double max_ratio = 0.0;
    double spread = 0.0;  // max/min of scale_max_ratio
    bool finite = false;
    bool stable = false;  // spread < 2
};

// Samples the kernel along the positive first axis at the grid nodes
// nearest to each |x| in x_set. The kernel is built on refined_kernel_grid(grid).
BoundReport check_pointwise_bound(KernelKind kind, double s, int j, const std::vector<double>& t_set,
                                  const std::vector<double>& x_set, const GridSpec& grid);

// Grid nodes 0, dx, 2dx, ... up to x_max.
std::vector<double> default_x_set(const GridSpec& grid, double x_max);

}  // namespace dwave
