#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sustar/report.hpp"
#include "sustar/suites.hpp"

namespace {

using sustar::Command;
using sustar::RunConfig;

struct Flags {
    std::string config_path;
    std::uint64_t seed = 0;
    long samples = 0;
    int order = 0;
    double epsilon = 0.0;
    std::string objective, functional, schur, atoms, format, out;
};

void register_common(CLI::App* sub, Flags& flags) {
    sub->add_option("--config", flags.config_path, "JSON config file; flags override it");
    sub->add_option("--seed", flags.seed, "RNG seed");
    sub->add_option("--samples", flags.samples, "sample count (search: number of starts)");
    sub->add_option("--order", flags.order, "series order (6..64)");
    sub->add_option("--epsilon", flags.epsilon, "certification gap target");
    sub->add_option("--objective", flags.objective,
                    "certify objective: gamma|R|S|chain-h22|chain-log|chain-inv");
    sub->add_option("--functional", flags.functional, "H21|H22|H31|LOG_H21|INV_H22");
    sub->add_option("--schur", flags.schur, "z1,z2,z3,z4 with complex entries as re+imi");
    sub->add_option("--atoms", flags.atoms, "Herglotz atoms theta:weight,...");
    sub->add_option("--format", flags.format, "json|csv");
    sub->add_option("--out", flags.out, "output path (default stdout)");
}

void apply_config_file(const std::string& path, RunConfig& cfg, std::optional<Command>& command) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("command")) {
        const std::string name = j["command"].get<std::string>();
        if (name == "verify-identities") command = Command::VerifyIdentities;
        else if (name == "verify-bounds") command = Command::VerifyBounds;
        else if (name == "certify") command = Command::Certify;
        else if (name == "search") command = Command::Search;
        else if (name == "eval") command = Command::Eval;
        else if (name == "report") command = Command::FullReport;
        else throw std::invalid_argument("unknown command in config: " + name);
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) {
        cfg.samples = j["samples"].get<long>();
        if (cfg.samples < 1) throw std::invalid_argument("config samples must be >= 1");
    }
    if (j.contains("order")) cfg.order = j["order"].get<int>();
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
    if (j.contains("objective")) cfg.objective = j["objective"].get<std::string>();
    if (j.contains("functional")) cfg.functional = j["functional"].get<std::string>();
    if (j.contains("schur")) cfg.schur = j["schur"].get<std::string>();
    if (j.contains("atoms")) cfg.atoms = j["atoms"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("output_path")) cfg.output_path = j["output_path"].get<std::string>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp-bound verification toolkit for the starlike class S_u*"};
    app.require_subcommand(0, 1);

    Flags flags;
    std::vector<std::pair<CLI::App*, Command>> subs = {
        {app.add_subcommand("verify-identities", "coefficient-identity and round-trip suites"),
         Command::VerifyIdentities},
        {app.add_subcommand("verify-bounds", "sampled bound membership for the five functionals"),
         Command::VerifyBounds},
        {app.add_subcommand("certify", "certified box maxima (Gamma, scalar chains, R/S points)"),
         Command::Certify},
        {app.add_subcommand("search", "multi-start sharpness search for one functional"),
         Command::Search},
        {app.add_subcommand("eval", "evaluate all functionals at a Schur point or measure"),
         Command::Eval},
        {app.add_subcommand("report", "run every suite and emit one combined report"),
         Command::FullReport},
    };
    for (auto& [sub, cmd] : subs) register_common(sub, flags);
    register_common(&app, flags); // allow flags before/without a subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg;
        std::optional<Command> command;

        if (!flags.config_path.empty()) apply_config_file(flags.config_path, cfg, command);

        CLI::App* active = nullptr;
        for (auto& [sub, cmd] : subs) {
            if (sub->parsed()) {
                active = sub;
                command = cmd;
            }
        }
        if (!command) {
            std::cerr << "error: no command given (subcommand or config file \"command\")\n";
            return 2;
        }
        cfg.command = *command;

        auto passed = [&](const char* name) {
            return (active && active->count(name) > 0) || app.count(name) > 0;
        };
        if (passed("--seed")) cfg.seed = flags.seed;
        if (passed("--samples")) {
            if (flags.samples < 1) throw std::invalid_argument("--samples must be >= 1");
            cfg.samples = flags.samples;
        }
        if (passed("--order")) cfg.order = flags.order;
        if (passed("--epsilon")) cfg.epsilon = flags.epsilon;
        if (passed("--objective")) cfg.objective = flags.objective;
        if (passed("--functional")) cfg.functional = flags.functional;
        if (passed("--schur")) cfg.schur = flags.schur;
        if (passed("--atoms")) cfg.atoms = flags.atoms;
        if (passed("--format")) cfg.format = flags.format;
        if (passed("--out")) cfg.output_path = flags.out;

        const sustar::Report report = sustar::run(cfg);
        const std::string payload =
            cfg.format == "csv" ? sustar::to_csv(report) : sustar::to_json(report);

        if (cfg.output_path) {
            std::ofstream out(*cfg.output_path);
            if (!out) {
                std::cerr << "error: cannot write " << *cfg.output_path << "\n";
                return 2;
            }
            out << payload;
            if (cfg.format == "json") out << "\n";
        } else {
            std::cout << payload;
            if (cfg.format == "json") std::cout << "\n";
        }
        return report.overall_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
