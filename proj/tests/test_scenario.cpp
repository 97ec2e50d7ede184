#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nonstatic/error.hpp"
#include "nonstatic/scenario.hpp"

using namespace nonstatic;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error for " << text);
    return ErrorCode::InvalidArgument;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::vector<std::vector<double>> read_csv(const std::string& path, std::string& header) {
    std::ifstream in(path);
    std::getline(in, header);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("scenario names round-trip") {
    for (auto s : {Scenario::PhaseEvolution, Scenario::DensityMap, Scenario::GeometricPhase, Scenario::FieldTrace,
                   Scenario::FieldMap, Scenario::Superposition, Scenario::Interference, Scenario::Check}) {
        CHECK(scenario_from_string(to_string(s)) == s);
        CHECK_FALSE(figure_of(s).empty());
    }
    CHECK_FALSE(scenario_from_string("nope"));
}

TEST_CASE("parse_config defaults") {
    const ScenarioConfig cfg = parse_config(R"({"scenario": "phase-evolution", "mode": {}})");
    CHECK(cfg.mode == ModeParams{});
    CHECK(cfg.consts.hbar == 1.0);
    CHECK(cfg.consts.epsilon == 1.0);
    CHECK(cfg.field.theta == 0.0);
    CHECK(cfg.field.k == 1.0);
    CHECK(cfg.field.volume == 1.0);
    CHECK(cfg.field.alpha0 == 1.0);
    CHECK(cfg.output == "out/phase-evolution");
}

TEST_CASE("parse_config resolves c3") {
    const auto cfg = parse_config(R"({"scenario": "field-map", "mode": {"c1": 10000, "c2": 10000, "c3_sign": "+"}})");
    CHECK(cfg.mode.c3 == doctest::Approx(std::sqrt(1e8 - 1)).epsilon(1e-15));
    const auto neg = parse_config(R"({"scenario": "field-map", "mode": {"c1": 1.5, "c2": 1.5, "c3_sign": "-"}})");
    CHECK(neg.mode.c3 == doctest::Approx(-std::sqrt(1.25)));
    const auto given = parse_config(R"({"scenario": "field-map", "mode": {"c1": 1, "c2": 1, "c3": 0}})");
    CHECK(given.c3_explicit);
}

TEST_CASE("parse_config errors") {
    CHECK(code_of(R"({"scenario": "phase-evolution", "mode": {"c1": 1, "c2": 0.5}})") == ErrorCode::InvariantViolation);
    CHECK(code_of("{not json") == ErrorCode::MalformedDocument);
    CHECK(code_of(R"({"mode": {}})") == ErrorCode::MissingField);
    CHECK(code_of(R"({"scenario": "bogus"})") == ErrorCode::InvariantViolation);
    CHECK(code_of(R"({"scenario": "phase-evolution", "mode": {"c4": 1}})") == ErrorCode::MalformedDocument);
    CHECK(code_of(R"({"scenario": "phase-evolution", "mode": {"c1": "x"}})") == ErrorCode::MalformedDocument);
    CHECK(code_of(R"({"scenario": "phase-evolution", "grid": {"t_steps": 1}})") == ErrorCode::InvariantViolation);
    CHECK(code_of(R"({"scenario": "phase-evolution", "mode": {"t0": 1}, "grid": {"t_min": 0}})") == ErrorCode::InvariantViolation);
    CHECK(code_of(R"({"scenario": "superposition", "fock": {"n": 5}})") == ErrorCode::MissingField);
    CHECK(code_of(R"({"scenario": "superposition", "fock": {"n": 5, "m": 8, "beta_n": 1, "beta_m": 1}})") == ErrorCode::InvariantViolation);
    CHECK(code_of(R"({"scenario": "interference"})") == ErrorCode::MissingField);
    CHECK(code_of(R"({"scenario": "interference", "mode": {"omega_ii": 1}})") == ErrorCode::InvariantViolation);
}

TEST_CASE("invariant messages name the field path") {
    try {
        parse_config(R"({"scenario": "phase-evolution", "grid": {"x_steps": 0}})");
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("grid.x_steps") != std::string::npos);
        CHECK(e.is_config_error());
    }
}

TEST_CASE("complex weights accept three spellings") {
    const auto cfg = parse_config(R"({"scenario": "superposition",
        "fock": {"n": 5, "m": 8, "beta_n": 0.70710678118654757, "beta_m": {"re": 0.5, "im": 0.5}}})");
    CHECK(cfg.fock.beta_m->imag() == 0.5);
    const auto arr = parse_config(R"({"scenario": "superposition",
        "fock": {"n": 5, "m": 8, "beta_n": [0.70710678118654757, 0], "beta_m": [0.5, 0.5]}})");
    CHECK(arr.fock.beta_n->real() == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("config echo parses back to the same config") {
    const auto cfg = parse_config(R"({"scenario": "interference", "mode": {"c1": 1.5, "c2": 1.0, "omega_ii": 1.5, "phi": 0.3},
        "consts": {"hbar": 0.5}, "field": {"theta": 0.25}, "grid": {"t_max": 20, "x_steps": 9}, "output": "a/b"})");
    const auto again = parse_config(config_to_json(cfg));
    CHECK(again.mode == cfg.mode);
    CHECK(again.omega_ii == cfg.omega_ii);
    CHECK(again.consts.hbar == 0.5);
    CHECK(again.field.theta == 0.25);
    CHECK(again.grid.t_max == 20.0);
    CHECK(again.grid.x_steps == 9);
    CHECK(again.output == "a/b");
    CHECK(config_to_json(again) == config_to_json(cfg));
}

TEST_CASE("dataset column sets") {
    using V = std::vector<std::string>;
    CHECK(dataset_columns(Scenario::PhaseEvolution) == V{"t", "gamma_total", "gamma_dynamical", "gamma_geometric", "gamma_geometric_rate"});
    CHECK(dataset_columns(Scenario::DensityMap) == V{"t", "q", "density"});
    CHECK(dataset_columns(Scenario::FieldTrace) == V{"t", "x", "phase", "phase_factor", "amplitude", "A", "E", "B"});
    CHECK(dataset_columns(Scenario::FieldMap) == V{"t", "x", "A", "E", "B"});
    CHECK(dataset_columns(Scenario::Superposition) == V{"t", "q", "total_density", "cross_term"});
    CHECK(dataset_columns(Scenario::Interference) == V{"t", "x", "E_total"});
}

TEST_CASE("format_number keeps 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_number(kPi)) == kPi);
    CHECK(format_number(0.0) == "0");
}

TEST_CASE("static phase-evolution emits the linear phase") {
    TempDir dir("nonstatic-test-phase");
    auto cfg = parse_config(R"({"scenario": "phase-evolution", "fock": {"n": 2}, "grid": {"t_steps": 51}})");
    cfg.output = (dir.path / "static").string();
    const Manifest man = run_scenario(cfg);
    std::string header;
    const auto rows = read_csv(cfg.output + ".csv", header);
    CHECK(header == "t,gamma_total,gamma_dynamical,gamma_geometric,gamma_geometric_rate");
    REQUIRE(rows.size() == 51);
    CHECK(man.datasets.at(0).rows == 51);
    for (const auto& r : rows) CHECK(std::abs(r[1] + 2.5 * r[0]) <= 1e-12);
    CHECK(man.measure_DF == 0.0);
    CHECK(man.node_times.empty());
}

TEST_CASE("extreme phase-evolution manifest reports the per-period drop") {
    TempDir dir("nonstatic-test-extreme");
    auto cfg = parse_config(R"({"scenario": "phase-evolution", "mode": {"c1": 10000, "c2": 10000}, "fock": {"n": 7}})");
    cfg.output = (dir.path / "fig1").string();
    const Manifest man = run_scenario(cfg);
    CHECK(std::abs(man.summary.at("per_period_phase_drop") - 7.5 * kPi) <= 1e-6);
    CHECK(man.summary.at("step_fraction_within_window") >= 0.9);
    CHECK(man.measure_DF == doctest::Approx(7071.07).epsilon(1e-6));
    REQUIRE_FALSE(man.node_times.empty());

    const auto doc = read_json(cfg.output + ".manifest.json");
    CHECK(doc.at("measure_DF").get<double>() == measure_DF(doc["config"]["mode"]["c1"].get<double>(),
                                                           doc["config"]["mode"]["c2"].get<double>()));
    CHECK(doc.at("node_times").size() == man.node_times.size());
    CHECK(doc.at("summary").contains("per_period_phase_drop"));
}

TEST_CASE("static interference manifest reports the beat period") {
    TempDir dir("nonstatic-test-beat");
    auto cfg = parse_config(R"({"scenario": "interference", "mode": {"omega_ii": 1.5},
        "grid": {"t_max": 125.66370614359172, "t_steps": 401, "x_min": 0, "x_max": 2, "x_steps": 5}})");
    cfg.output = (dir.path / "fig9").string();
    const Manifest man = run_scenario(cfg);
    CHECK(man.summary.at("expected_beat_period") == doctest::Approx(4 * kPi));
    CHECK(std::abs(man.summary.at("beat_period[0]") / (4 * kPi) - 1.0) <= 0.02);
    CHECK(man.datasets.at(0).rows == 401 * 5);
}

TEST_CASE("every scenario writes the declared header and row count") {
    TempDir dir("nonstatic-test-all");
    const std::pair<const char*, std::size_t> cases[] = {
        {R"({"scenario": "density-map", "fock": {"n": 3}, "grid": {"t_steps": 5, "q_steps": 7}})", 35},
        {R"({"scenario": "geometric-phase", "mode": {"c1": 1.5, "c2": 1}, "grid": {"t_steps": 9}})", 9},
        {R"({"scenario": "field-trace", "mode": {"c1": 1.5, "c2": 1}, "grid": {"t_steps": 6, "x_steps": 3}})", 18},
        {R"({"scenario": "field-map", "mode": {"c1": 1.5, "c2": 1}, "grid": {"t_steps": 6, "x_steps": 4}})", 24},
        {R"({"scenario": "superposition", "fock": {"n": 5, "m": 8, "beta_n": [0.70710678118654757, 0], "beta_m": [0.5, 0.5]},
             "grid": {"t_steps": 3, "q_steps": 11}})", 33},
    };
    for (const auto& [text, expected] : cases) {
        auto cfg = parse_config(text);
        cfg.output = (dir.path / std::string(to_string(cfg.scenario))).string();
        const Manifest man = run_scenario(cfg);
        std::string header;
        const auto rows = read_csv(cfg.output + ".csv", header);
        std::string joined;
        for (const auto& c : dataset_columns(cfg.scenario)) joined += (joined.empty() ? "" : ",") + c;
        CHECK(header == joined);
        CHECK(rows.size() == expected);
        CHECK(man.datasets.at(0).rows == expected);
        for (const auto& r : rows) CHECK(r.size() == dataset_columns(cfg.scenario).size());
    }
}

TEST_CASE("thread count does not change output bytes") {
    TempDir dir("nonstatic-test-threads");
    auto cfg = parse_config(R"({"scenario": "field-map", "mode": {"c1": 100, "c2": 100}, "grid": {"t_steps": 37, "x_steps": 11}})");
    cfg.output = (dir.path / "map").string();
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    run_scenario(cfg, RunOptions{1});
    const std::string a = slurp(cfg.output + ".csv"), am = slurp(cfg.output + ".manifest.json");
    run_scenario(cfg, RunOptions{7});
    CHECK(a == slurp(cfg.output + ".csv"));
    CHECK(am == slurp(cfg.output + ".manifest.json"));
}

TEST_CASE("unwritable output is reported") {
    TempDir dir("nonstatic-test-unwritable");
    std::ofstream(dir.path / "file") << "x";
    auto cfg = parse_config(R"({"scenario": "geometric-phase", "grid": {"t_steps": 3}})");
    cfg.output = (dir.path / "file" / "sub").string();
    try {
        run_scenario(cfg);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutputUnwritable);
    }
}

TEST_CASE("check scenario is not a dataset run") {
    auto cfg = parse_config(R"({"scenario": "check"})");
    CHECK_THROWS_AS(run_scenario(cfg), Error);
}
