#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace diffwalk {

// Flat `key = value` configuration, one pair per line, '#' starts a comment.
class Config {
public:
    Config() = default;
    static Config parse(const std::string& text);
    static Config load(const std::filesystem::path& file);

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    // comma-separated list of numbers
    std::vector<double> get_doubles(const std::string& key) const;

    void set(const std::string& key, const std::string& value);

    // every key=value pair with defaults expanded, deterministic order
    std::string resolved_text() const;

private:
    std::map<std::string, std::string> entries_;

    const std::string& raw(const std::string& key) const;
};

// Error carrying the offending config field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& message)
        : std::runtime_error("config field '" + field + "': " + message), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace diffwalk
