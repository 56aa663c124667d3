#pragma once

// Flat key=value configuration with section prefixes (grid.dim=1).
// Every lookup records the resolved value, defaults included, so the
// manifest echoes the complete configuration.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dwave {

class Config {
public:
    static Config parse(std::istream& is);
    static Config load(const std::string& path);
    static Config from_map(std::map<std::string, std::string> values);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& def);
    double get_double(const std::string& key);
    double get_double(const std::string& key, double def);
    int get_int(const std::string& key);
    int get_int(const std::string& key, int def);
    bool get_bool(const std::string& key, bool def);
    std::vector<double> get_doubles(const std::string& key);
    std::vector<double> get_doubles(const std::string& key, const std::vector<double>& def);
    std::vector<std::string> get_strings(const std::string& key, const std::vector<std::string>& def);
    // Restricts a string value to a fixed set.
    std::string get_choice(const std::string& key, const std::string& def, const std::vector<std::string>& choices);

    // Keys present in the file that no lookup touched.
    std::vector<std::string> unused_keys() const;
    void require_all_used() const;

    const std::map<std::string, std::string>& resolved() const { return resolved_; }
    void write_manifest(std::ostream& os) const;

private:
    std::optional<std::string> raw(const std::string& key);
    void record(const std::string& key, const std::string& value) { resolved_[key] = value; }

    std::map<std::string, std::string> values_;
    std::map<std::string, std::string> resolved_;
    std::set<std::string> used_;
};

double parse_real(const std::string& text, const std::string& key);

}  // namespace dwave
