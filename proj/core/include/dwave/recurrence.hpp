#pragma once

// Exact integer coefficient tables for the k-th first-axis derivatives of
//   C:  e^{t sqrt(w)} / sqrt(w),  w = 1/4 - |xi|^2
//   D:  e^{-t |xi|^2}
// in the form  (prefactor) * sum_{l,m} coeff * t^m xi_1^{2l-k} (C: w^{-l+(m-1)/2}).

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dwave {

using bigint = boost::multiprecision::cpp_int;

enum class CoeffKind { C, D };

struct CoeffTable {
    CoeffKind kind = CoeffKind::C;
    int k = 0;
    std::map<std::pair<int, int>, bigint> entries;  // (l, m) -> value, full support

    bigint at(int l, int m) const;
    int l_min() const { return k - k / 2; }
    bool operator==(const CoeffTable& o) const { return kind == o.kind && k == o.k && entries == o.entries; }
};

CoeffTable derivk_constants(int k);   // C tables, k >= 0
CoeffTable derivkg_constants(int k);  // D tables, k >= 1

// One line per entry: "k l m value".
void write_table(std::ostream& os, const CoeffTable& t);
CoeffTable read_table(std::istream& is, CoeffKind kind);

// Closed-form value of the expansion at (t, xi).
double expansion_value(const CoeffTable& table, double t, const std::array<double, 3>& xi, int dim);

struct DerivSample {
    double t = 1.0;
    std::array<double, 3> xi{0.0, 0.0, 0.0};
    int dim = 1;
};

// Largest relative difference between the closed form and Richardson-extrapolated
// central differences of the target, evaluated in 50-digit arithmetic.
double verify_deriv_expansion(CoeffKind kind, int k, const std::vector<DerivSample>& samples);

// D_{l,l} = 2^l C_{l,l} on every diagonal entry of the order-k tables (k >= 1).
bool diagonal_identity(int k);

// Reproducible samples with t in [0.5, 4], |xi| < 0.24 and dim cycling 1, 2, 3.
std::vector<DerivSample> random_deriv_samples(int count, unsigned seed);

// Reference k-th xi_1 derivative of the target function, by finite differences.
double reference_derivative(CoeffKind kind, int k, const DerivSample& sample);

}  // namespace dwave
