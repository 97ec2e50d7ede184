#pragma once

// Figure-reproduction scenarios: configuration document, validation and the
// runner that writes CSV datasets plus a JSON manifest.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonstatic/fields.hpp"
#include "nonstatic/phases.hpp"
#include "nonstatic/timebase.hpp"
#include "nonstatic/wavefunctions.hpp"

namespace nonstatic {

enum class Scenario {
    PhaseEvolution,
    DensityMap,
    GeometricPhase,
    FieldTrace,
    FieldMap,
    Superposition,
    Interference,
    Check,
};

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> scenario_from_string(std::string_view name) noexcept;

/// Figure panel(s) a scenario reproduces, for the manifest and --help.
std::string_view figure_of(Scenario s) noexcept;

struct Grid {
    double t_min = 0.0;
    double t_max = 10.0;
    int t_steps = 201;
    double x_min = 0.0;
    double x_max = 6.283185307179586;
    int x_steps = 65;
    double q_min = -6.0;
    double q_max = 6.0;
    int q_steps = 121;
};

struct FockConfig {
    int n = 0;
    std::optional<int> m;
    std::optional<complex> beta_n;
    std::optional<complex> beta_m;
    double gamma_d0 = 0.0;  // offsets of state n
    double gamma_g0 = 0.0;
    double gamma_d0_m = 0.0;  // offsets of state m
    double gamma_g0_m = 0.0;

    PhaseState state_n() const;
    PhaseState state_m() const;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::PhaseEvolution;
    ModeParams mode;  // c3 resolved and validated
    C3Branch c3_branch = C3Branch::Positive;
    bool c3_explicit = false;
    std::optional<double> omega_ii;  // second frequency, interference only
    QuantumConstants consts;
    FockConfig fock;
    FieldParams field;
    Grid grid;
    std::string output;

    /// mode with omega replaced by omega_ii.
    ModeParams second_mode() const;
};

/// Parses a JSON configuration document, applies defaults and validates.
/// Throws MalformedDocument, MissingField or InvariantViolation; the message
/// names the offending field path.
ScenarioConfig parse_config(std::string_view text);

/// Canonical JSON echo of a parsed config (all defaults spelled out).
std::string config_to_json(const ScenarioConfig& config);

struct DatasetInfo {
    std::string path;
    std::vector<std::string> columns;
    std::size_t rows = 0;
};

struct Manifest {
    std::string path;
    std::vector<DatasetInfo> datasets;
    double measure_DF = 0.0;
    std::vector<double> node_times;
    std::map<std::string, double> summary;
    std::string text;  // the manifest document as written
};

struct RunOptions {
    unsigned threads = 1;  // affects speed only
};

/// Column names of the dataset a scenario writes.
std::vector<std::string> dataset_columns(Scenario s);

/// Runs the scenario and writes `<output>.csv` and `<output>.manifest.json`,
/// creating parent directories. Throws OutputUnwritable on I/O failure.
Manifest run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

/// %.17g-style rendering used for every number in the datasets.
std::string format_number(double v);

}  // namespace nonstatic
