#pragma once

#include "dwave/grid.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dwave {

// Binary layout, all little-endian:
//   int32 dim, int32 points, float64 half_width, int32 rep (0 space, 1 frequency)
//   then size() complex values as interleaved float64 (re, im).
void write_field(std::ostream& os, const Field& f);
Field read_field(std::istream& is);
void save_field(const std::string& path, const Field& f);
Field load_field(const std::string& path);

// Shortest round-trip decimal text for a double ("%.17g").
std::string format_double(double v);

// Minimal CSV writer with a fixed header.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);
    CsvWriter& cell(const std::string& s);
    CsvWriter& cell(double v);
    CsvWriter& cell(long long v);
    CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
    void end_row();

private:
    std::ostream& os_;
    std::size_t columns_;
    std::size_t current_ = 0;
};

}  // namespace dwave
