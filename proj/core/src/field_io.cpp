#include "dwave/field_io.hpp"

#include "dwave/error.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace dwave {

namespace {

static_assert(std::endian::native == std::endian::little, "field files assume a little-endian host");

template <class T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw ConfigError("truncated field file");
    return v;
}

}  // namespace

void write_field(std::ostream& os, const Field& f) {
    put<std::int32_t>(os, f.grid.dim());
    put<std::int32_t>(os, f.grid.points());
    put<double>(os, f.grid.half_width());
    put<std::int32_t>(os, f.rep == Rep::space ? 0 : 1);
    os.write(reinterpret_cast<const char*>(f.data.data()),
             static_cast<std::streamsize>(f.data.size() * sizeof(complex)));
}

Field read_field(std::istream& is) {
    const int dim = get<std::int32_t>(is);
    const int points = get<std::int32_t>(is);
    const double hw = get<double>(is);
    const int rep = get<std::int32_t>(is);
    if (rep != 0 && rep != 1) throw ConfigError("bad field rep tag");
    Field f = Field::zeros(make_grid(dim, hw, points), rep == 0 ? Rep::space : Rep::frequency);
    is.read(reinterpret_cast<char*>(f.data.data()), static_cast<std::streamsize>(f.data.size() * sizeof(complex)));
    if (!is) throw ConfigError("truncated field payload");
    return f;
}

void save_field(const std::string& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + path);
    write_field(os, f);
}

Field load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open " + path);
    return read_field(is);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os), columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
    os_ << '\n';
}

CsvWriter& CsvWriter::cell(const std::string& s) {
    os_ << (current_ ? "," : "") << s;
    ++current_;
    return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(format_double(v)); }

CsvWriter& CsvWriter::cell(long long v) { return cell(std::to_string(v)); }

void CsvWriter::end_row() {
    if (current_ != columns_) throw std::logic_error("csv row has wrong number of cells");
    os_ << '\n';
    current_ = 0;
}

}  // namespace dwave
