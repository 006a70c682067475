#include "sustar/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace sustar {

bool Report::overall_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::string render_double(double v) {
    if (std::isnan(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

// config values arrive pre-rendered; quote only non-numeric ones
bool looks_numeric(const std::string& v) {
    if (v.empty()) return false;
    char* end = nullptr;
    std::strtod(v.c_str(), &end);
    return end == v.c_str() + v.size();
}

} // namespace

std::string to_json(const Report& report) {
    std::ostringstream os;
    os << "{\"version\":\"" << json_escape(report.version) << "\",\"config\":{";
    bool first = true;
    for (const auto& [key, value] : report.config) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(key) << "\":";
        if (looks_numeric(value))
            os << value;
        else
            os << "\"" << json_escape(value) << "\"";
    }
    os << "},\"records\":[";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const CheckRecord& r = report.records[i];
        if (i > 0) os << ",";
        os << "{\"name\":\"" << json_escape(r.name) << "\",";
        os << "\"status\":\"" << (r.pass ? "pass" : "fail") << "\",";
        os << "\"observed\":" << render_double(r.observed) << ",";
        os << "\"target\":" << (r.target ? render_double(*r.target) : "null") << ",";
        os << "\"tolerance\":" << (r.tolerance ? render_double(*r.tolerance) : "null") << ",";
        os << "\"witness\":";
        if (r.witness.empty())
            os << "null";
        else
            os << "\"" << json_escape(r.witness) << "\"";
        os << "}";
    }
    os << "],\"elapsed_ms\":" << render_double(report.elapsed_ms) << "}";
    return os.str();
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "name,status,observed,target,tolerance\n";
    for (const CheckRecord& r : report.records) {
        os << r.name << "," << (r.pass ? "pass" : "fail") << "," << render_double(r.observed)
           << "," << (r.target ? render_double(*r.target) : "") << ","
           << (r.tolerance ? render_double(*r.tolerance) : "") << "\n";
    }
    return os.str();
}

} // namespace sustar
