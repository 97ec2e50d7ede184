#include "nonstatic/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <thread>

#include "nonstatic/analysis.hpp"
#include "nonstatic/error.hpp"
#include "nonstatic/quadrature.hpp"

namespace nonstatic {

using json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct ScenarioName {
    Scenario id;
    std::string_view name;
    std::string_view figure;
};

constexpr ScenarioName kScenarios[] = {
    {Scenario::PhaseEvolution, "phase-evolution", "Fig. 1, Fig. 2(b)"},
    {Scenario::DensityMap, "density-map", "Fig. 2(a)"},
    {Scenario::GeometricPhase, "geometric-phase", "Fig. 2(c,d)"},
    {Scenario::FieldTrace, "field-trace", "Figs. 3, 5, 6"},
    {Scenario::FieldMap, "field-map", "Figs. 4, 7"},
    {Scenario::Superposition, "superposition", "Fig. 8"},
    {Scenario::Interference, "interference", "Fig. 9"},
    {Scenario::Check, "check", "invariant and acceptance suite"},
};

// ---------------------------------------------------------------------------
// config reading

class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object())
            throw Error(ErrorCode::MalformedDocument, path_ + " must be an object");
    }

    ~Section() = default;

    void reject_unknown() const {
        for (const auto& [key, value] : node_.items())
            if (!seen_.count(key))
                throw Error(ErrorCode::MalformedDocument, "unknown field " + child(key));
    }

    bool has(const std::string& key) {
        seen_.insert(key);
        return node_.contains(key) && !node_.at(key).is_null();
    }

    double number(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return require_number(key);
    }

    std::optional<double> optional_number(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return require_number(key);
    }

    int integer(const std::string& key, int fallback) {
        if (!has(key)) return fallback;
        return require_integer(key);
    }

    std::optional<int> optional_integer(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return require_integer(key);
    }

    std::optional<std::string> optional_string(const std::string& key) {
        if (!has(key)) return std::nullopt;
        const json& v = node_.at(key);
        if (!v.is_string()) throw Error(ErrorCode::MalformedDocument, child(key) + " must be a string");
        return v.get<std::string>();
    }

    std::optional<complex> optional_complex(const std::string& key) {
        if (!has(key)) return std::nullopt;
        const json& v = node_.at(key);
        if (v.is_number()) return complex{v.get<double>(), 0.0};
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return complex{v[0].get<double>(), v[1].get<double>()};
        if (v.is_object() && v.contains("re") && v.contains("im") && v.size() == 2 &&
            v["re"].is_number() && v["im"].is_number())
            return complex{v["re"].get<double>(), v["im"].get<double>()};
        throw Error(ErrorCode::MalformedDocument,
                    child(key) + " must be a number, [re, im] or {\"re\", \"im\"}");
    }

    std::optional<Section> section(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return Section(node_.at(key), child(key));
    }

    std::string child(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

private:
    double require_number(const std::string& key) const {
        const json& v = node_.at(key);
        if (!v.is_number()) throw Error(ErrorCode::MalformedDocument, child(key) + " must be a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw Error(ErrorCode::InvariantViolation, child(key) + " must be finite");
        return d;
    }

    int require_integer(const std::string& key) const {
        const json& v = node_.at(key);
        if (!v.is_number_integer())
            throw Error(ErrorCode::MalformedDocument, child(key) + " must be an integer");
        const auto i = v.get<long long>();
        if (i < -1'000'000'000LL || i > 1'000'000'000LL)
            throw Error(ErrorCode::InvariantViolation, child(key) + " out of range");
        return static_cast<int>(i);
    }

    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

[[noreturn]] void invariant(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::InvariantViolation, path + ": " + what);
}

// Re-throws a library validation error as a config error naming the section.
template <class Fn>
auto validated(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.is_config_error()) throw;
        invariant(path, e.what());
    }
}

json complex_json(complex c) { return json::array({c.real(), c.imag()}); }

// ---------------------------------------------------------------------------
// output

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(count, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::ofstream open_output(const std::string& path) {
    std::error_code ec;
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    if (ec) throw Error(ErrorCode::OutputUnwritable, path + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::OutputUnwritable, path);
    return out;
}

// Tabular dataset: outer loop over `outer` values, one block of rows per
// outer value produced by `block`. Blocks are independent so they are
// computed in parallel and written in order.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::string> blocks;
    std::size_t rows = 0;
};

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out.push_back(',');
        out += format_number(v);
        first = false;
    }
    out.push_back('\n');
}

DatasetInfo write_table(const std::string& path, const Table& table) {
    auto out = open_output(path);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& b : table.blocks) out << b;
    out.flush();
    if (!out) throw Error(ErrorCode::OutputUnwritable, path);
    return DatasetInfo{path, table.columns, table.rows};
}

struct Context {
    const ScenarioConfig& cfg;
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> q;
    unsigned threads;
};

Table make_table(Scenario s, std::size_t blocks, std::size_t rows_per_block) {
    Table tab;
    tab.columns = dataset_columns(s);
    tab.blocks.resize(blocks);
    tab.rows = blocks * rows_per_block;
    return tab;
}

// ---------------------------------------------------------------------------
// scenarios

void phase_table(const Context& ctx, Table& tab) {
    const auto& m = ctx.cfg.mode;
    const PhaseState st = ctx.cfg.fock.state_n();
    parallel_for(ctx.t.size(), ctx.threads, [&](std::size_t i) {
        const double t = ctx.t[i];
        append_row(tab.blocks[i], {t, total_phase(m, st, t), dynamical_phase(m, st, t),
                                   geometric_phase(m, st, t), geometric_phase_rate(m, st, t)});
    });
}

void phase_summary(const Context& ctx, Manifest& man) {
    const auto& m = ctx.cfg.mode;
    const PhaseState st = ctx.cfg.fock.state_n();
    const double period = half_period(m);
    man.summary["per_period_phase_drop"] =
        total_phase(m, st, m.t0) - total_phase(m, st, m.t0 + period);
    man.summary["expected_phase_drop"] = (st.n + 0.5) * kPi;
    man.summary["per_period_geometric_gain"] =
        geometric_phase(m, st, m.t0 + period) - geometric_phase(m, st, m.t0);
    const auto nodes = node_times(m, m.t0, m.t0 + 2.0 * period);
    const double window = 0.02 * period;
    for (double tn : nodes) {
        if (tn - window < m.t0) continue;
        man.summary["step_fraction_within_window"] =
            (eval_theta(m, tn + window) - eval_theta(m, tn - window)) / kPi;
        break;
    }
}

void geometric_summary(const Context& ctx, Manifest& man) {
    const auto& m = ctx.cfg.mode;
    const PhaseState st = ctx.cfg.fock.state_n();
    std::vector<double> rate(ctx.t.size());
    for (std::size_t i = 0; i < ctx.t.size(); ++i) rate[i] = geometric_phase_rate(m, st, ctx.t[i]);
    const std::size_t lo = analysis::argmin(rate);
    const std::size_t hi = analysis::argmax(rate);
    man.summary["rate_min"] = rate[lo];
    man.summary["rate_min_time"] = ctx.t[lo];
    man.summary["rate_max"] = rate[hi];
    man.summary["rate_analytic_floor"] = 0.5 * (st.n + 0.5) * m.omega * ((m.c1 + m.c2) - 2.0 / f_min(m));
}

void density_table(const Context& ctx, Table& tab) {
    const auto& cfg = ctx.cfg;
    const PhaseState st = cfg.fock.state_n();
    parallel_for(ctx.t.size(), ctx.threads, [&](std::size_t i) {
        const double t = ctx.t[i];
        for (double q : ctx.q)
            append_row(tab.blocks[i],
                       {t, q, std::norm(wavefunction(st.n, q, cfg.mode, cfg.consts, st, t))});
    });
}

void density_summary(const Context& ctx, Manifest& man) {
    const auto& cfg = ctx.cfg;
    const double scale = cfg.consts.hbar / (2.0 * cfg.consts.epsilon * cfg.mode.omega);
    // q-variance of |phi_0|^2 is hbar f / (2 eps omega)
    man.summary["ground_width_min"] = std::sqrt(scale * f_min(cfg.mode));
    man.summary["ground_width_max"] = std::sqrt(scale * f_max(cfg.mode));
    man.summary["f_min"] = f_min(cfg.mode);
    man.summary["f_max"] = f_max(cfg.mode);
}

void field_trace_table(const Context& ctx, Table& tab) {
    const auto& cfg = ctx.cfg;
    parallel_for(ctx.t.size(), ctx.threads, [&](std::size_t i) {
        const double t = ctx.t[i];
        for (double x : ctx.x) {
            const FieldSample s = field_sample(x, t, cfg.mode, cfg.consts, cfg.field);
            const double phase = electric_phase(x, t, cfg.mode, cfg.field);
            append_row(tab.blocks[i], {t, x, phase, std::cos(phase), s.ampE, s.a, s.e, s.b});
        }
    });
}

void field_trace_summary(const Context& ctx, Manifest& man) {
    const auto& cfg = ctx.cfg;
    std::vector<double> amp_e(ctx.t.size()), amp_b(ctx.t.size());
    for (std::size_t i = 0; i < ctx.t.size(); ++i) {
        const FieldSample s = field_sample(0.0, ctx.t[i], cfg.mode, cfg.consts, cfg.field);
        amp_e[i] = s.ampE;
        amp_b[i] = std::abs(s.ampB);
    }
    man.summary["amplitude_E_max"] = amp_e[analysis::argmax(amp_e)];
    man.summary["amplitude_E_argmax_time"] = ctx.t[analysis::argmax(amp_e)];
    man.summary["amplitude_B_abs_min"] = amp_b[analysis::argmin(amp_b)];
    man.summary["amplitude_B_abs_argmin_time"] = ctx.t[analysis::argmin(amp_b)];
    // phase-factor rectangularity over one period of f, per probe position
    const auto period_t = analysis::periodic_grid(cfg.mode.t0, cfg.mode.t0 + half_period(cfg.mode), 2000);
    for (std::size_t j = 0; j < ctx.x.size(); ++j) {
        std::vector<double> factor(period_t.size());
        for (std::size_t i = 0; i < period_t.size(); ++i)
            factor[i] = std::cos(electric_phase(ctx.x[j], period_t[i], cfg.mode, cfg.field));
        man.summary["phase_factor_plateau_fraction[" + std::to_string(j) + "]"] =
            analysis::plateau_fraction(factor, 0.05);
    }
}

void field_map_table(const Context& ctx, Table& tab) {
    const auto& cfg = ctx.cfg;
    parallel_for(ctx.t.size(), ctx.threads, [&](std::size_t i) {
        const double t = ctx.t[i];
        for (double x : ctx.x) {
            const FieldSample s = field_sample(x, t, cfg.mode, cfg.consts, cfg.field);
            append_row(tab.blocks[i], {t, x, s.a, s.e, s.b});
        }
    });
}

void field_map_summary(const Context& ctx, Manifest& man) {
    const auto& cfg = ctx.cfg;
    // E is sinusoidal in t with period 2 pi / omega at every x
    const auto period_t =
        analysis::periodic_grid(cfg.mode.t0, cfg.mode.t0 + 2.0 * half_period(cfg.mode), 1024);
    std::vector<double> rms_x(ctx.x.size());
    for (std::size_t j = 0; j < ctx.x.size(); ++j) {
        std::vector<double> e(period_t.size());
        for (std::size_t i = 0; i < period_t.size(); ++i)
            e[i] = electric_field(ctx.x[j], period_t[i], cfg.mode, cfg.consts, cfg.field);
        rms_x[j] = analysis::rms(e);
        man.summary["rms_E[" + std::to_string(j) + "]"] = rms_x[j];
    }
    const double lo = *std::min_element(rms_x.begin(), rms_x.end());
    const double hi = *std::max_element(rms_x.begin(), rms_x.end());
    man.summary["standing_wave_contrast"] = hi > 0.0 ? lo / hi : 0.0;

    std::vector<double> map;
    map.reserve(ctx.t.size() * ctx.x.size());
    for (double t : ctx.t)
        for (double x : ctx.x) map.push_back(electric_field(x, t, cfg.mode, cfg.consts, cfg.field));
    const double dx = ctx.x[1] - ctx.x[0];
    const double dt = ctx.t[1] - ctx.t[0];
    const auto half_wave = static_cast<std::size_t>(std::floor(kPi / (cfg.field.k * dx)));
    if (auto v = analysis::ridge_velocity(map, ctx.x.size(), dx, dt, std::max<std::size_t>(1, half_wave)))
        man.summary["ridge_velocity"] = *v;
}

void superposition_table(const Context& ctx, Table& tab) {
    const auto& cfg = ctx.cfg;
    const SuperpositionSpec spec{cfg.fock.n, *cfg.fock.m, *cfg.fock.beta_n, *cfg.fock.beta_m};
    const PhaseState sn = cfg.fock.state_n();
    const PhaseState sm = cfg.fock.state_m();
    parallel_for(ctx.t.size(), ctx.threads, [&](std::size_t i) {
        const double t = ctx.t[i];
        for (double q : ctx.q) {
            const auto d = superposition_density(spec, q, cfg.mode, cfg.consts, sn, sm, t);
            append_row(tab.blocks[i], {t, q, d.total, d.cross});
        }
    });
}

void superposition_summary(const Context& ctx, Manifest& man) {
    const auto& cfg = ctx.cfg;
    const SuperpositionSpec spec{cfg.fock.n, *cfg.fock.m, *cfg.fock.beta_n, *cfg.fock.beta_m};
    const PhaseState sn = cfg.fock.state_n();
    const PhaseState sm = cfg.fock.state_m();
    const int top = std::max(spec.n, spec.m);
    quad::Options opt;
    opt.abs_tol = 1e-11;
    opt.initial_panels = 128;
    for (const auto& [label, t] : {std::pair{"t_min", ctx.t.front()}, std::pair{"t_max", ctx.t.back()}}) {
        const double half = quadrature_half_width(top, width_params(cfg.mode, cfg.consts, t).zeta);
        const double total = quad::integrate([&](double q) {
            return superposition_density(spec, q, cfg.mode, cfg.consts, sn, sm, t).total;
        }, -half, half, opt).value;
        const double cross = quad::integrate([&](double q) {
            return superposition_density(spec, q, cfg.mode, cfg.consts, sn, sm, t).cross;
        }, -half, half, opt).value;
        man.summary[std::string("total_integral_") + label] = total;
        man.summary[std::string("cross_integral_") + label] = cross;
    }
}

void interference_table(const Context& ctx, Table& tab) {
    const auto& cfg = ctx.cfg;
    const ModeParams two = cfg.second_mode();
    parallel_for(ctx.t.size(), ctx.threads, [&](std::size_t i) {
        const double t = ctx.t[i];
        for (double x : ctx.x)
            append_row(tab.blocks[i], {t, x, interference_field(x, t, cfg.mode, two, cfg.consts, cfg.field)});
    });
}

void interference_summary(const Context& ctx, Manifest& man) {
    const auto& cfg = ctx.cfg;
    const ModeParams two = cfg.second_mode();
    man.summary["expected_beat_period"] = 2.0 * kPi / std::abs(cfg.mode.omega - two.omega);
    const double dt = 2.0 * kPi / std::max(cfg.mode.omega, two.omega) / 64.0;
    const auto steps = static_cast<std::size_t>(std::ceil((ctx.t.back() - ctx.t.front()) / dt)) + 1;
    for (std::size_t j = 0; j < ctx.x.size(); ++j) {
        std::vector<double> coarse(ctx.t.size());
        for (std::size_t i = 0; i < ctx.t.size(); ++i)
            coarse[i] = interference_field(ctx.x[j], ctx.t[i], cfg.mode, two, cfg.consts, cfg.field);
        const std::string idx = "[" + std::to_string(j) + "]";
        man.summary["rms_E_total" + idx] = analysis::rms(coarse);
        std::vector<double> dense(steps);
        for (std::size_t i = 0; i < steps; ++i)
            dense[i] = interference_field(ctx.x[j], ctx.t.front() + static_cast<double>(i) * dt,
                                          cfg.mode, two, cfg.consts, cfg.field);
        if (auto beat = analysis::beat_period(dense, ctx.t.front(), dt))
            man.summary["beat_period" + idx] = beat->period;
    }
}

json manifest_json(const ScenarioConfig& cfg, const Manifest& man) {
    json doc;
    doc["scenario"] = std::string(to_string(cfg.scenario));
    doc["figure"] = std::string(figure_of(cfg.scenario));
    doc["config"] = json::parse(config_to_json(cfg));
    doc["measure_DF"] = man.measure_DF;
    doc["node_times"] = man.node_times;
    json sets = json::array();
    for (const auto& d : man.datasets)
        sets.push_back({{"path", d.path}, {"columns", d.columns}, {"rows", d.rows}});
    doc["datasets"] = sets;
    json summary = json::object();
    for (const auto& [k, v] : man.summary) summary[k] = v;
    doc["summary"] = summary;
    return doc;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Scenario s) noexcept {
    for (const auto& e : kScenarios)
        if (e.id == s) return e.name;
    return "unknown";
}

std::optional<Scenario> scenario_from_string(std::string_view name) noexcept {
    for (const auto& e : kScenarios)
        if (e.name == name) return e.id;
    return std::nullopt;
}

std::string_view figure_of(Scenario s) noexcept {
    for (const auto& e : kScenarios)
        if (e.id == s) return e.figure;
    return "";
}

PhaseState FockConfig::state_n() const {
    return PhaseState{n, gamma_d0 + gamma_g0, gamma_d0, gamma_g0};
}

PhaseState FockConfig::state_m() const {
    return PhaseState{m.value_or(0), gamma_d0_m + gamma_g0_m, gamma_d0_m, gamma_g0_m};
}

ModeParams ScenarioConfig::second_mode() const {
    ModeParams two = mode;
    two.omega = omega_ii.value_or(mode.omega);
    return two;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::vector<std::string> dataset_columns(Scenario s) {
    switch (s) {
        case Scenario::PhaseEvolution:
        case Scenario::GeometricPhase:
            return {"t", "gamma_total", "gamma_dynamical", "gamma_geometric", "gamma_geometric_rate"};
        case Scenario::DensityMap: return {"t", "q", "density"};
        case Scenario::FieldTrace: return {"t", "x", "phase", "phase_factor", "amplitude", "A", "E", "B"};
        case Scenario::FieldMap: return {"t", "x", "A", "E", "B"};
        case Scenario::Superposition: return {"t", "q", "total_density", "cross_term"};
        case Scenario::Interference: return {"t", "x", "E_total"};
        case Scenario::Check: return {};
    }
    return {};
}

ScenarioConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, e.what());
    }
    Section root(doc, "");
    ScenarioConfig cfg;

    const auto name = root.optional_string("scenario");
    if (!name) throw Error(ErrorCode::MissingField, "scenario");
    const auto scenario = scenario_from_string(*name);
    if (!scenario) throw Error(ErrorCode::InvariantViolation, "scenario: unknown value '" + *name + "'");
    cfg.scenario = *scenario;

    {
        auto sec = root.section("mode");
        json empty = json::object();
        Section fallback(empty, "mode");
        Section& s = sec ? *sec : fallback;
        ModeParams& m = cfg.mode;
        m.omega = s.number("omega", 1.0);
        m.c1 = s.number("c1", 1.0);
        m.c2 = s.number("c2", 1.0);
        m.t0 = s.number("t0", 0.0);
        m.phi = s.number("phi", 0.0);
        if (auto sign = s.optional_string("c3_sign")) {
            if (*sign == "+") cfg.c3_branch = C3Branch::Positive;
            else if (*sign == "-") cfg.c3_branch = C3Branch::Negative;
            else invariant("mode.c3_sign", "must be \"+\" or \"-\"");
        }
        if (auto c3 = s.optional_number("c3")) {
            m.c3 = *c3;
            cfg.c3_explicit = true;
        } else {
            m.c3 = validated("mode", [&] { return resolve_c3(m.c1, m.c2, cfg.c3_branch); });
        }
        cfg.omega_ii = s.optional_number("omega_ii");
        s.reject_unknown();
        validated("mode", [&] { return validate(m); });
        if (cfg.omega_ii && !(*cfg.omega_ii > 0.0)) invariant("mode.omega_ii", "must be > 0");
    }

    if (auto s = root.section("consts")) {
        cfg.consts.hbar = s->number("hbar", 1.0);
        cfg.consts.epsilon = s->number("epsilon", 1.0);
        s->reject_unknown();
    }
    validated("consts", [&] { return validate(cfg.consts); });

    if (auto s = root.section("fock")) {
        cfg.fock.n = s->integer("n", 0);
        cfg.fock.m = s->optional_integer("m");
        cfg.fock.beta_n = s->optional_complex("beta_n");
        cfg.fock.beta_m = s->optional_complex("beta_m");
        cfg.fock.gamma_d0 = s->number("gamma_d0", 0.0);
        cfg.fock.gamma_g0 = s->number("gamma_g0", 0.0);
        cfg.fock.gamma_d0_m = s->number("gamma_d0_m", 0.0);
        cfg.fock.gamma_g0_m = s->number("gamma_g0_m", 0.0);
        s->reject_unknown();
    }
    if (cfg.fock.n < 0) invariant("fock.n", "must be >= 0");
    if (cfg.fock.n > kMaxFockIndex) invariant("fock.n", "must be <= " + std::to_string(kMaxFockIndex));

    if (auto s = root.section("field")) {
        cfg.field.theta = s->number("theta", 0.0);
        cfg.field.alpha0 = s->number("alpha0", 1.0);
        cfg.field.k = s->number("k", 1.0);
        cfg.field.volume = s->number("volume", 1.0);
        s->reject_unknown();
    }
    validated("field", [&] { return validate(cfg.field); });

    cfg.grid.t_min = cfg.mode.t0;
    cfg.grid.t_max = cfg.mode.t0 + 10.0;
    if (auto s = root.section("grid")) {
        Grid& g = cfg.grid;
        g.t_min = s->number("t_min", cfg.mode.t0);
        g.t_max = s->number("t_max", g.t_min + 10.0);
        g.t_steps = s->integer("t_steps", g.t_steps);
        g.x_min = s->number("x_min", g.x_min);
        g.x_max = s->number("x_max", g.x_max);
        g.x_steps = s->integer("x_steps", g.x_steps);
        g.q_min = s->number("q_min", g.q_min);
        g.q_max = s->number("q_max", g.q_max);
        g.q_steps = s->integer("q_steps", g.q_steps);
        s->reject_unknown();
    }
    const Grid& g = cfg.grid;
    if (g.t_steps < 2) invariant("grid.t_steps", "must be >= 2");
    if (g.x_steps < 2) invariant("grid.x_steps", "must be >= 2");
    if (g.q_steps < 2) invariant("grid.q_steps", "must be >= 2");
    if (g.t_min < cfg.mode.t0) invariant("grid.t_min", "must be >= mode.t0");
    if (!(g.t_max > g.t_min)) invariant("grid.t_max", "must exceed grid.t_min");
    if (!(g.x_max > g.x_min)) invariant("grid.x_max", "must exceed grid.x_min");
    if (!(g.q_max > g.q_min)) invariant("grid.q_max", "must exceed grid.q_min");

    cfg.output = root.optional_string("output").value_or("out/" + std::string(to_string(cfg.scenario)));
    if (cfg.output.empty()) invariant("output", "must not be empty");
    root.reject_unknown();

    if (cfg.scenario == Scenario::Superposition) {
        if (!cfg.fock.m) throw Error(ErrorCode::MissingField, "fock.m");
        if (!cfg.fock.beta_n) throw Error(ErrorCode::MissingField, "fock.beta_n");
        if (!cfg.fock.beta_m) throw Error(ErrorCode::MissingField, "fock.beta_m");
        validated("fock", [&] {
            return validate(SuperpositionSpec{cfg.fock.n, *cfg.fock.m, *cfg.fock.beta_n, *cfg.fock.beta_m});
        });
    }
    if (cfg.scenario == Scenario::Interference) {
        if (!cfg.omega_ii) throw Error(ErrorCode::MissingField, "mode.omega_ii");
        if (*cfg.omega_ii == cfg.mode.omega) invariant("mode.omega_ii", "must differ from mode.omega");
    }
    return cfg;
}

std::string config_to_json(const ScenarioConfig& cfg) {
    json doc;
    doc["scenario"] = std::string(to_string(cfg.scenario));
    json mode = {{"omega", cfg.mode.omega}, {"c1", cfg.mode.c1},   {"c2", cfg.mode.c2},
                 {"c3", cfg.mode.c3},       {"t0", cfg.mode.t0},   {"phi", cfg.mode.phi},
                 {"c3_sign", cfg.c3_branch == C3Branch::Positive ? "+" : "-"}};
    if (cfg.omega_ii) mode["omega_ii"] = *cfg.omega_ii;
    doc["mode"] = mode;
    doc["consts"] = {{"hbar", cfg.consts.hbar}, {"epsilon", cfg.consts.epsilon}};
    json fock = {{"n", cfg.fock.n},
                 {"gamma_d0", cfg.fock.gamma_d0},
                 {"gamma_g0", cfg.fock.gamma_g0},
                 {"gamma_d0_m", cfg.fock.gamma_d0_m},
                 {"gamma_g0_m", cfg.fock.gamma_g0_m}};
    if (cfg.fock.m) fock["m"] = *cfg.fock.m;
    if (cfg.fock.beta_n) fock["beta_n"] = complex_json(*cfg.fock.beta_n);
    if (cfg.fock.beta_m) fock["beta_m"] = complex_json(*cfg.fock.beta_m);
    doc["fock"] = fock;
    doc["field"] = {{"theta", cfg.field.theta},
                    {"alpha0", cfg.field.alpha0},
                    {"k", cfg.field.k},
                    {"volume", cfg.field.volume}};
    const Grid& g = cfg.grid;
    doc["grid"] = {{"t_min", g.t_min}, {"t_max", g.t_max}, {"t_steps", g.t_steps},
                   {"x_min", g.x_min}, {"x_max", g.x_max}, {"x_steps", g.x_steps},
                   {"q_min", g.q_min}, {"q_max", g.q_max}, {"q_steps", g.q_steps}};
    doc["output"] = cfg.output;
    return doc.dump(2);
}

Manifest run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
    if (cfg.scenario == Scenario::Check)
        throw Error(ErrorCode::InvalidArgument, "the check scenario is run by run_checks");
    Context ctx{cfg,
                analysis::linspace(cfg.grid.t_min, cfg.grid.t_max, static_cast<std::size_t>(cfg.grid.t_steps)),
                analysis::linspace(cfg.grid.x_min, cfg.grid.x_max, static_cast<std::size_t>(cfg.grid.x_steps)),
                analysis::linspace(cfg.grid.q_min, cfg.grid.q_max, static_cast<std::size_t>(cfg.grid.q_steps)),
                std::max(1u, options.threads)};

    Manifest man;
    man.measure_DF = measure_DF(cfg.mode.c1, cfg.mode.c2);
    man.node_times = node_times(cfg.mode, cfg.grid.t_min, cfg.grid.t_max);

    const std::size_t nt = ctx.t.size();
    Table tab;
    switch (cfg.scenario) {
        case Scenario::PhaseEvolution:
        case Scenario::GeometricPhase:
            tab = make_table(cfg.scenario, nt, 1);
            phase_table(ctx, tab);
            phase_summary(ctx, man);
            if (cfg.scenario == Scenario::GeometricPhase) geometric_summary(ctx, man);
            break;
        case Scenario::DensityMap:
            tab = make_table(cfg.scenario, nt, ctx.q.size());
            density_table(ctx, tab);
            density_summary(ctx, man);
            break;
        case Scenario::FieldTrace:
            tab = make_table(cfg.scenario, nt, ctx.x.size());
            field_trace_table(ctx, tab);
            field_trace_summary(ctx, man);
            break;
        case Scenario::FieldMap:
            tab = make_table(cfg.scenario, nt, ctx.x.size());
            field_map_table(ctx, tab);
            field_map_summary(ctx, man);
            break;
        case Scenario::Superposition:
            tab = make_table(cfg.scenario, nt, ctx.q.size());
            superposition_table(ctx, tab);
            superposition_summary(ctx, man);
            break;
        case Scenario::Interference:
            tab = make_table(cfg.scenario, nt, ctx.x.size());
            interference_table(ctx, tab);
            interference_summary(ctx, man);
            break;
        case Scenario::Check: break;
    }

    man.datasets.push_back(write_table(cfg.output + ".csv", tab));
    man.path = cfg.output + ".manifest.json";
    man.text = manifest_json(cfg, man).dump(2) + "\n";
    auto out = open_output(man.path);
    out << man.text;
    out.flush();
    if (!out) throw Error(ErrorCode::OutputUnwritable, man.path);
    return man;
}

}  // namespace nonstatic
