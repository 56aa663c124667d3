#include "dwave/recurrence.hpp"

#include "dwave/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <ostream>
#include <sstream>

namespace dwave {

namespace {

using wide = boost::multiprecision::cpp_bin_float_50;

using Grid2 = std::vector<std::vector<bigint>>;  // [l][m], l, m in [0, k]

bigint get(const Grid2& g, int l, int m) {
    if (l < 0 || m < 0 || l >= static_cast<int>(g.size()) || m >= static_cast<int>(g[l].size())) return 0;
    return g[l][m];
}

Grid2 empty_grid(int k) { return Grid2(k + 1, std::vector<bigint>(k + 2, 0)); }

CoeffTable pack(CoeffKind kind, int k, const Grid2& g) {
    CoeffTable t;
    t.kind = kind;
    t.k = k;
    const int lmin = k - k / 2;
    const int mmin = kind == CoeffKind::C ? 0 : 1;
    for (int l = 0; l <= k; ++l) {
        for (int m = 0; m < static_cast<int>(g[l].size()); ++m) {
            const bool inside = l >= lmin && m >= mmin && m <= l;
            if (inside) {
                t.entries[{l, m}] = g[l][m];
            } else if (g[l][m] != 0) {
                throw ConstructionError("coefficient table support escaped at k=" + std::to_string(k));
            }
        }
    }
    return t;
}

}  // namespace

bigint CoeffTable::at(int l, int m) const {
    auto it = entries.find({l, m});
    return it == entries.end() ? bigint(0) : it->second;
}

CoeffTable derivk_constants(int k) {
    if (k < 0) throw DomainError("derivative order must be >= 0");
    Grid2 cur = empty_grid(0);
    cur[0][0] = 1;
    for (int j = 0; j < k; ++j) {
        Grid2 next = empty_grid(j + 1);
        for (int l = 0; l <= j + 1; ++l)
            for (int m = 0; m <= j + 2; ++m)
                next[l][m] = -get(cur, l - 1, m - 1) + (2 * l - j) * get(cur, l, m) + (2 * l - m - 1) * get(cur, l - 1, m);
        cur = std::move(next);
    }
    return pack(CoeffKind::C, k, cur);
}

CoeffTable derivkg_constants(int k) {
    if (k < 1) throw DomainError("heat derivative tables start at k = 1");
    Grid2 cur = empty_grid(1);
    cur[1][1] = -2;
    for (int j = 1; j < k; ++j) {
        Grid2 next = empty_grid(j + 1);
        for (int l = 0; l <= j + 1; ++l)
            for (int m = 0; m <= j + 2; ++m) next[l][m] = -2 * get(cur, l - 1, m - 1) + (2 * l - j) * get(cur, l, m);
        cur = std::move(next);
    }
    return pack(CoeffKind::D, k, cur);
}

void write_table(std::ostream& os, const CoeffTable& t) {
    for (const auto& [lm, v] : t.entries) os << t.k << ' ' << lm.first << ' ' << lm.second << ' ' << v << '\n';
}

CoeffTable read_table(std::istream& is, CoeffKind kind) {
    CoeffTable t;
    t.kind = kind;
    t.k = -1;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int k, l, m;
        std::string value;
        if (!(ls >> k >> l >> m >> value)) throw ConfigError("malformed coefficient line: " + line);
        if (t.k >= 0 && k != t.k) throw ConfigError("mixed k in coefficient table");
        t.k = k;
        t.entries[{l, m}] = bigint(value);
    }
    if (t.k < 0) throw ConfigError("empty coefficient table");
    return t;
}

double expansion_value(const CoeffTable& table, double t, const std::array<double, 3>& xi, int dim) {
    double xi2 = 0.0;
    for (int d = 0; d < dim; ++d) xi2 += xi[d] * xi[d];
    const int k = table.k;
    double sum = 0.0;
    if (table.kind == CoeffKind::C) {
        const double w = 0.25 - xi2;
        if (!(w > 0.0)) throw DomainError("C expansion needs |xi| < 1/2");
        for (const auto& [lm, c] : table.entries) {
            if (c == 0) continue;
            const auto [l, m] = lm;
            sum += c.convert_to<double>() * std::pow(t, m) * std::pow(xi[0], 2 * l - k) * std::pow(w, -l + 0.5 * (m - 1));
        }
        return std::exp(t * std::sqrt(w)) * sum;
    }
    for (const auto& [lm, c] : table.entries) {
        if (c == 0) continue;
        const auto [l, m] = lm;
        sum += c.convert_to<double>() * std::pow(t, m) * std::pow(xi[0], 2 * l - k);
    }
    return std::exp(-t * xi2) * sum;
}

double reference_derivative(CoeffKind kind, int k, const DerivSample& s) {
    double rest = 0.0;
    for (int d = 1; d < s.dim; ++d) rest += s.xi[d] * s.xi[d];
    const double mod = std::sqrt(rest + s.xi[0] * s.xi[0]);
    if (mod > 0.25) throw DomainError("derivative samples need |xi| <= 1/4");
    const wide t = s.t;
    const wide r2 = rest;
    auto f = [&](const wide& x1) -> wide {
        const wide q = x1 * x1 + r2;
        if (kind == CoeffKind::C) {
            const wide w = wide(0.25) - q;
            const wide sw = sqrt(w);
            return exp(t * sw) / sw;
        }
        return exp(-t * q);
    };
    const wide x0 = s.xi[0];
    if (k == 0) return static_cast<double>(f(x0));
    // central k-th difference, second order in h; binomial weights at half-integer offsets for odd k
    auto central = [&](const wide& h) {
        wide sum = 0;
        wide binom = 1;
        for (int j = 0; j <= k; ++j) {
            const wide x = x0 + (wide(k) / 2 - j) * h;
            sum += ((j & 1) ? -binom : binom) * f(x);
            binom = binom * (k - j) / (j + 1);
        }
        return sum / pow(h, k);
    };
    const wide h0 = wide(1e-3) * (wide(0.5) - mod);
    const int levels = 4;
    std::vector<wide> col(levels);
    for (int i = 0; i < levels; ++i) col[i] = central(h0 / pow(wide(2), i));
    for (int lev = 1; lev < levels; ++lev) {
        const wide factor = pow(wide(4), lev);
        for (int i = levels - 1; i >= lev; --i) col[i] = (factor * col[i] - col[i - 1]) / (factor - 1);
    }
    return static_cast<double>(col[levels - 1]);
}

double verify_deriv_expansion(CoeffKind kind, int k, const std::vector<DerivSample>& samples) {
    if (k > 5) throw DomainError("finite-difference verification is limited to k <= 5");
    if (kind == CoeffKind::D && k == 0) return 0.0;
    const CoeffTable table = kind == CoeffKind::C ? derivk_constants(k) : derivkg_constants(k);
    double worst = 0.0;
    for (const auto& s : samples) {
        const double closed = expansion_value(table, s.t, s.xi, s.dim);
        const double ref = reference_derivative(kind, k, s);
        const double base = std::abs(reference_derivative(kind, 0, s));
        const double scale = std::max({std::abs(closed), std::abs(ref), base});
        worst = std::max(worst, std::abs(closed - ref) / scale);
    }
    return worst;
}

bool diagonal_identity(int k) {
    const CoeffTable c = derivk_constants(k);
    const CoeffTable d = derivkg_constants(k);
    for (int l = c.l_min(); l <= k; ++l) {
        bigint pow2 = 1;
        pow2 <<= l;
        if (d.at(l, l) != pow2 * c.at(l, l)) return false;
    }
    return true;
}

std::vector<DerivSample> random_deriv_samples(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ut(0.5, 4.0), ur(0.0, 0.24), ua(-1.0, 1.0);
    std::vector<DerivSample> out;
    for (int i = 0; i < count; ++i) {
        DerivSample s;
        s.dim = 1 + i % 3;
        s.t = ut(rng);
        const double rad = ur(rng);
        std::array<double, 3> dir{0.0, 0.0, 0.0};
        double norm = 0.0;
        while (norm < 1e-3) {
            norm = 0.0;
            for (int d = 0; d < s.dim; ++d) {
                dir[d] = ua(rng);
                norm += dir[d] * dir[d];
            }
            norm = std::sqrt(norm);
        }
        for (int d = 0; d < s.dim; ++d) s.xi[d] = rad * dir[d] / norm;
        out.push_back(s);
    }
    return out;
}

}  // namespace dwave
