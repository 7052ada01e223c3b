#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace forge {

// Subset of TOML: [section] headers, key = value with strings, integers,
// floats, booleans and flat arrays of strings; '#' comments.
class FlatToml {
public:
    using Value = std::variant<std::string, std::int64_t, double, bool, std::vector<std::string>>;

    static FlatToml parse(const std::string& text, const std::string& origin = "<string>");
    static FlatToml load(const std::string& path);

    // Keys are "section.key", or "key" at top level.
    const std::map<std::string, Value>& values() const { return values_; }
    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::optional<std::string> get_string(const std::string& key) const;
    std::optional<std::int64_t> get_int(const std::string& key) const;
    std::optional<double> get_number(const std::string& key) const;
    std::optional<bool> get_bool(const std::string& key) const;
    std::optional<std::vector<std::string>> get_strings(const std::string& key) const;

private:
    std::map<std::string, Value> values_;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace forge
