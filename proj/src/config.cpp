#include "forge/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace forge {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Removes a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

std::string unquote(const std::string& v, const std::string& where) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw ConfigError(where + ": expected a quoted string");
    std::string out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] == '\\' && i + 2 < v.size()) {
            char n = v[++i];
            out.push_back(n == 'n' ? '\n' : n == 't' ? '\t' : n);
        } else {
            out.push_back(v[i]);
        }
    }
    return out;
}

FlatToml::Value parse_value(const std::string& v, const std::string& where) {
    if (v.empty()) throw ConfigError(where + ": missing value");
    if (v.front() == '"') return unquote(v, where);
    if (v == "true") return true;
    if (v == "false") return false;
    if (v.front() == '[') {
        if (v.back() != ']') throw ConfigError(where + ": unterminated array");
        std::vector<std::string> items;
        std::string body = trim(v.substr(1, v.size() - 2));
        std::string cur;
        bool quoted = false;
        for (char c : body) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) {
                if (!trim(cur).empty()) items.push_back(unquote(trim(cur), where));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!trim(cur).empty()) items.push_back(unquote(trim(cur), where));
        return items;
    }
    std::string digits;
    for (char c : v)
        if (c != '_') digits.push_back(c);
    try {
        std::size_t used = 0;
        if (digits.find_first_of(".eE") == std::string::npos) {
            auto n = std::stoll(digits, &used);
            if (used == digits.size()) return static_cast<std::int64_t>(n);
        } else {
            auto d = std::stod(digits, &used);
            if (used == digits.size()) return d;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError(where + ": cannot parse value '" + v + "'");
}

}  // namespace

FlatToml FlatToml::parse(const std::string& text, const std::string& origin) {
    FlatToml out;
    std::istringstream in(text);
    std::string line, section;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto where = origin + ":" + std::to_string(n);
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        auto key = trim(line.substr(0, eq));
        if (key.size() >= 2 && key.front() == '"') key = unquote(key, where);
        if (key.empty()) throw ConfigError(where + ": empty key");
        auto full = section.empty() ? key : section + "." + key;
        if (out.values_.count(full)) throw ConfigError(where + ": duplicate key " + full);
        out.values_[full] = parse_value(trim(line.substr(eq + 1)), where);
    }
    return out;
}

FlatToml FlatToml::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::optional<std::string> FlatToml::get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (auto* s = std::get_if<std::string>(&it->second)) return *s;
    throw ConfigError(key + ": expected a string");
}

std::optional<std::int64_t> FlatToml::get_int(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
    throw ConfigError(key + ": expected an integer");
}

std::optional<double> FlatToml::get_number(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
    if (auto* d = std::get_if<double>(&it->second)) return *d;
    throw ConfigError(key + ": expected a number");
}

std::optional<bool> FlatToml::get_bool(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (auto* b = std::get_if<bool>(&it->second)) return *b;
    throw ConfigError(key + ": expected true or false");
}

std::optional<std::vector<std::string>> FlatToml::get_strings(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (auto* v = std::get_if<std::vector<std::string>>(&it->second)) return *v;
    if (auto* s = std::get_if<std::string>(&it->second)) return std::vector<std::string>{*s};
    throw ConfigError(key + ": expected an array of strings");
}

}  // namespace forge
