#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sustar {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    std::optional<double> target;
    std::optional<double> tolerance;
    std::string witness; // empty -> rendered as null
};

struct Report {
    std::string version = kVersion;
    std::vector<std::pair<std::string, std::string>> config; // pre-rendered values, in order
    std::vector<CheckRecord> records;
    double elapsed_ms = 0.0;

    bool overall_pass() const;
};

// 17-significant-digit rendering shared by both emitters
std::string render_double(double v);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

} // namespace sustar
