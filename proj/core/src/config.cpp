#include "dwave/config.hpp"

#include "dwave/error.hpp"
#include "dwave/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dwave {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
    return s;
}

std::string real_text(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_double(v);
}

}  // namespace

double parse_real(const std::string& text, const std::string& key) {
    const std::string t = trim(text);
    if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': '" + text + "' is not a number");
    }
    if (pos != t.size()) throw ConfigError("key '" + key + "': trailing characters in '" + text + "'");
    return v;
}

Config Config::parse(std::istream& is) {
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (c.values_.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        c.values_[key] = value;
    }
    return c;
}

Config Config::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config '" + path + "'");
    return parse(is);
}

Config Config::from_map(std::map<std::string, std::string> values) {
    Config c;
    c.values_ = std::move(values);
    return c;
}

std::optional<std::string> Config::raw(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
}

std::string Config::get_string(const std::string& key) {
    auto v = raw(key);
    if (!v) throw ConfigError("missing required key '" + key + "'");
    record(key, *v);
    return *v;
}

std::string Config::get_string(const std::string& key, const std::string& def) {
    const std::string v = raw(key).value_or(def);
    record(key, v);
    return v;
}

double Config::get_double(const std::string& key) {
    const double v = parse_real(get_string(key), key);
    record(key, real_text(v));
    return v;
}

double Config::get_double(const std::string& key, double def) {
    auto v = raw(key);
    const double d = v ? parse_real(*v, key) : def;
    record(key, real_text(d));
    return d;
}

int Config::get_int(const std::string& key) {
    const double v = get_double(key);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("key '" + key + "' must be an integer");
    record(key, std::to_string(static_cast<int>(v)));
    return static_cast<int>(v);
}

int Config::get_int(const std::string& key, int def) {
    if (!has(key)) {
        record(key, std::to_string(def));
        return def;
    }
    return get_int(key);
}

bool Config::get_bool(const std::string& key, bool def) {
    auto v = raw(key);
    bool b = def;
    if (v) {
        if (*v == "true" || *v == "1" || *v == "yes") b = true;
        else if (*v == "false" || *v == "0" || *v == "no") b = false;
        else throw ConfigError("key '" + key + "' must be true or false");
    }
    record(key, b ? "true" : "false");
    return b;
}

std::vector<double> Config::get_doubles(const std::string& key) {
    if (!has(key)) throw ConfigError("missing required key '" + key + "'");
    return get_doubles(key, {});
}

std::vector<double> Config::get_doubles(const std::string& key, const std::vector<double>& def) {
    auto v = raw(key);
    std::vector<double> out = def;
    if (v) {
        out.clear();
        for (const auto& item : split_list(*v)) out.push_back(parse_real(item, key));
    }
    std::vector<std::string> text;
    for (double d : out) text.push_back(real_text(d));
    record(key, join(text));
    return out;
}

std::vector<std::string> Config::get_strings(const std::string& key, const std::vector<std::string>& def) {
    auto v = raw(key);
    std::vector<std::string> out = v ? split_list(*v) : def;
    record(key, join(out));
    return out;
}

std::string Config::get_choice(const std::string& key, const std::string& def, const std::vector<std::string>& choices) {
    const std::string v = get_string(key, def);
    if (std::find(choices.begin(), choices.end(), v) == choices.end())
        throw ConfigError("key '" + key + "': '" + v + "' is not one of " + join(choices));
    return v;
}

std::vector<std::string> Config::unused_keys() const {
    std::vector<std::string> out;
    for (const auto& kv : values_)
        if (!used_.count(kv.first)) out.push_back(kv.first);
    return out;
}

void Config::require_all_used() const {
    const auto extra = unused_keys();
    if (!extra.empty()) throw ConfigError("unknown config keys: " + join(extra));
}

void Config::write_manifest(std::ostream& os) const {
    for (const auto& kv : resolved_) os << kv.first << '=' << kv.second << '\n';
}

}  // namespace dwave
