// Command-line runner: one subcommand per scenario plus `check`.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nonstatic/checks.hpp"
#include "nonstatic/error.hpp"
#include "nonstatic/scenario.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitComputation = 3;
constexpr int kExitChecks = 4;

struct NumberFlag {
    const char* flag;
    const char* section;
    const char* key;
    const char* help;
    std::optional<double> value;
};

struct IntFlag {
    const char* flag;
    const char* section;
    const char* key;
    const char* help;
    std::optional<int> value;
};

struct ScenarioFlags {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::string> c3_sign;
    unsigned threads = 1;
    std::vector<NumberFlag> numbers{
        {"--omega", "mode", "omega", "angular frequency", {}},
        {"--c1", "mode", "c1", "coefficient c1", {}},
        {"--c2", "mode", "c2", "coefficient c2", {}},
        {"--c3", "mode", "c3", "coefficient c3 (resolved from c1, c2 when absent)", {}},
        {"--t0", "mode", "t0", "reference time", {}},
        {"--phi", "mode", "phi", "initial phase in [-pi/2, pi/2)", {}},
        {"--omega-ii", "mode", "omega_ii", "second frequency (interference)", {}},
        {"--hbar", "consts", "hbar", "reduced Planck constant", {}},
        {"--epsilon", "consts", "epsilon", "permittivity", {}},
        {"--theta", "field", "theta", "coherent-state phase", {}},
        {"--alpha0", "field", "alpha0", "coherent-state amplitude", {}},
        {"--k", "field", "k", "wave number", {}},
        {"--volume", "field", "volume", "quantization volume", {}},
        {"--t-min", "grid", "t_min", "first time sample", {}},
        {"--t-max", "grid", "t_max", "last time sample", {}},
        {"--x-min", "grid", "x_min", "first x sample", {}},
        {"--x-max", "grid", "x_max", "last x sample", {}},
        {"--q-min", "grid", "q_min", "first q sample", {}},
        {"--q-max", "grid", "q_max", "last q sample", {}},
    };
    std::vector<IntFlag> integers{
        {"--n", "fock", "n", "Fock index n", {}},
        {"--m", "fock", "m", "second Fock index (superposition)", {}},
        {"--t-steps", "grid", "t_steps", "number of time samples", {}},
        {"--x-steps", "grid", "x_steps", "number of x samples", {}},
        {"--q-steps", "grid", "q_steps", "number of q samples", {}},
    };
};

void add_flags(CLI::App& cmd, ScenarioFlags& flags) {
    cmd.add_option("--config", flags.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    cmd.add_option("--out", flags.out, "output path prefix");
    cmd.add_option("--threads", flags.threads, "worker threads (speed only)")->check(CLI::PositiveNumber);
    cmd.add_option("--c3-sign", flags.c3_sign, "branch of c3 when resolved: + or -");
    for (auto& f : flags.numbers) cmd.add_option(f.flag, f.value, f.help);
    for (auto& f : flags.integers) cmd.add_option(f.flag, f.value, f.help);
}

json load_document(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw nonstatic::Error(nonstatic::ErrorCode::MalformedDocument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        json doc = json::parse(ss.str());
        if (!doc.is_object()) throw nonstatic::Error(nonstatic::ErrorCode::MalformedDocument, "top level must be an object");
        return doc;
    } catch (const json::parse_error& e) {
        throw nonstatic::Error(nonstatic::ErrorCode::MalformedDocument, path + ": " + e.what());
    }
}

json& section(json& doc, const char* name) {
    json& s = doc[name];
    if (s.is_null()) s = json::object();
    if (!s.is_object()) throw nonstatic::Error(nonstatic::ErrorCode::MalformedDocument, std::string(name) + " must be an object");
    return s;
}

nonstatic::ScenarioConfig merged_config(nonstatic::Scenario scenario, const ScenarioFlags& flags) {
    json doc = load_document(flags.config_path);
    doc["scenario"] = std::string(nonstatic::to_string(scenario));
    for (const auto& f : flags.numbers)
        if (f.value) section(doc, f.section)[f.key] = *f.value;
    for (const auto& f : flags.integers)
        if (f.value) section(doc, f.section)[f.key] = *f.value;
    if (flags.c3_sign) section(doc, "mode")["c3_sign"] = *flags.c3_sign;
    if (flags.out) doc["output"] = *flags.out;
    return nonstatic::parse_config(doc.dump());
}

int run(nonstatic::Scenario scenario, const ScenarioFlags& flags) {
    const nonstatic::ScenarioConfig cfg = merged_config(scenario, flags);
    const nonstatic::Manifest man = nonstatic::run_scenario(cfg, nonstatic::RunOptions{flags.threads});
    for (const auto& d : man.datasets) std::cout << d.path << "  " << d.rows << " rows\n";
    std::cout << man.path << "\n";
    std::cout << "D_F = " << nonstatic::format_number(man.measure_DF) << "\n";
    for (const auto& [key, value] : man.summary) std::cout << key << " = " << nonstatic::format_number(value) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phases, wave functions and fields of nonstatic light waves"};
    app.require_subcommand(1);

    const nonstatic::Scenario scenarios[] = {
        nonstatic::Scenario::PhaseEvolution, nonstatic::Scenario::DensityMap,
        nonstatic::Scenario::GeometricPhase, nonstatic::Scenario::FieldTrace,
        nonstatic::Scenario::FieldMap,       nonstatic::Scenario::Superposition,
        nonstatic::Scenario::Interference,
    };
    std::vector<ScenarioFlags> flags(std::size(scenarios));
    std::vector<CLI::App*> commands;
    for (std::size_t i = 0; i < std::size(scenarios); ++i) {
        const std::string name(nonstatic::to_string(scenarios[i]));
        auto* cmd = app.add_subcommand(name, "write the dataset for " + std::string(nonstatic::figure_of(scenarios[i])));
        add_flags(*cmd, flags[i]);
        commands.push_back(cmd);
    }

    std::string level = "fast";
    auto* check = app.add_subcommand("check", "run the invariant and acceptance suite");
    check->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (check->parsed()) {
            const auto report = nonstatic::checks::run_checks(level == "full" ? nonstatic::checks::Level::Full
                                                                              : nonstatic::checks::Level::Fast);
            std::cout << nonstatic::checks::format_report(report);
            return report.all_passed() ? 0 : kExitChecks;
        }
        for (std::size_t i = 0; i < commands.size(); ++i)
            if (commands[i]->parsed()) return run(scenarios[i], flags[i]);
    } catch (const nonstatic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_config_error() || e.code() == nonstatic::ErrorCode::MalformedDocument ? kExitConfig
                                                                                           : kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitConfig;
}
