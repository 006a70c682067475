#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sustar/report.hpp"

namespace sustar {

enum class Command { VerifyIdentities, VerifyBounds, Certify, Search, Eval, FullReport };

struct RunConfig {
    Command command = Command::FullReport;
    std::uint64_t seed = 7;
    long samples = 0; // 0 -> per-suite default
    int order = 16;
    double epsilon = 1e-6;
    std::optional<std::string> objective;  // gamma | R | S | chain-h22 | chain-log | chain-inv
    std::optional<std::string> functional; // H21 | H22 | H31 | LOG_H21 | INV_H22
    std::optional<std::string> schur;      // "z1,z2,z3,z4", complex as re+imi
    std::optional<std::string> atoms;      // "theta:weight,..."
    std::string format = "json";
    std::optional<std::string> output_path;

    void validate() const; // throws std::invalid_argument
};

std::vector<CheckRecord> run_verify_identities(const RunConfig& cfg);
std::vector<CheckRecord> run_verify_bounds(const RunConfig& cfg);
std::vector<CheckRecord> run_certify(const RunConfig& cfg);
std::vector<CheckRecord> run_search(const RunConfig& cfg);
std::vector<CheckRecord> run_eval(const RunConfig& cfg);

// Executes cfg.command and assembles the report (config echo included).
Report run(const RunConfig& cfg);

std::complex<double> parse_complex(const std::string& text); // "a", "bi", "a+bi", "a-bi"

} // namespace sustar
