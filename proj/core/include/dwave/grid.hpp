#pragma once

// Uniform periodic grids on [-L, L)^n, complex fields in space or
// frequency representation, and FFT-based transforms with the unitary
// (2 pi)^{-n/2} convention.

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <new>
#include <vector>

namespace dwave {

using complex = std::complex<double>;

// Allocator returning SIMD-aligned storage suitable for the FFT backend.
template <class T>
struct AlignedAllocator {
    using value_type = T;
    AlignedAllocator() = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U>&) noexcept {}
    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(64, ((n * sizeof(T) + 63) / 64) * 64);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) noexcept { std::free(p); }
    template <class U>
    bool operator==(const AlignedAllocator<U>&) const noexcept { return true; }
};

using cvec = std::vector<complex, AlignedAllocator<complex>>;

enum class Rep { space, frequency };

class GridSpec {
public:
    GridSpec() = default;

    int dim() const { return dim_; }
    double half_width() const { return half_width_; }
    int points() const { return points_; }
    std::size_t size() const { return size_; }
    double dx() const { return 2.0 * half_width_ / points_; }
    double dxi() const { return 3.14159265358979323846 / half_width_; }
    double nyquist() const { return 0.5 * points_ * dxi(); }
    double cell_volume() const;
    double dual_cell_volume() const;
    // Largest t for which the linear evolution stays resolved: (L/4)^2.
    double valid_time() const { return 0.0625 * half_width_ * half_width_; }

    // Signed wavenumber of 1D index j in FFT order.
    double wavenumber(int j) const { return (j < points_ / 2 ? j : j - points_) * dxi(); }
    double coordinate(int i) const { return -half_width_ + i * dx(); }

    const std::vector<double>& xi_mag() const { return *xi_mag_; }
    const std::vector<double>& x_mag() const { return *x_mag_; }
    // Per-axis FFT-order indices are unpacked from a flat index, last axis fastest.
    void unpack(std::size_t flat, int idx[3]) const;

    bool operator==(const GridSpec& o) const {
        return dim_ == o.dim_ && points_ == o.points_ && half_width_ == o.half_width_;
    }

private:
    friend GridSpec make_grid(int, double, int);
    int dim_ = 0;
    double half_width_ = 0.0;
    int points_ = 0;
    std::size_t size_ = 0;
    std::shared_ptr<const std::vector<double>> xi_mag_;
    std::shared_ptr<const std::vector<double>> x_mag_;
};

// dim in {1,2,3}; points a power of two >= 64; Nyquist frequency >= 8.
GridSpec make_grid(int dim, double half_width, int points);

struct Field {
    GridSpec grid;
    Rep rep = Rep::space;
    cvec data;

    static Field zeros(const GridSpec& g, Rep rep);
    std::size_t size() const { return data.size(); }
};

Field forward_transform(const Field& f);
Field inverse_transform(const Field& f);
Field to_rep(const Field& f, Rep rep);

// L^p norm with quadrature weight dx^n; p may be +infinity. Space rep only.
double lp_norm(const Field& f, double p);
// L^2 norm evaluated from the frequency side (Parseval).
double l2_norm_spectral(const Field& f);
double max_abs(const Field& f);

// Multiply by m(|xi|) in frequency space; returns the input representation.
template <class F>
Field apply_radial(const Field& f, F&& m);

// |xi|^s, zero mode set to 0.
Field fractional_derivative(const Field& f, double s);
// (1 + |xi|^2)^{s/2}.
Field bessel_potential(const Field& f, double s);

// Zero every mode with |xi_i| > (2/3) Nyquist on some axis.
void dealias_two_thirds(Field& f);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& a);
void axpy(double c, const Field& x, Field& y);

template <class F>
Field apply_radial(const Field& f, F&& m) {
    Field g = to_rep(f, Rep::frequency);
    const auto& xm = g.grid.xi_mag();
    for (std::size_t i = 0; i < g.data.size(); ++i) g.data[i] *= m(xm[i]);
    return f.rep == Rep::space ? inverse_transform(g) : g;
}

}  // namespace dwave
