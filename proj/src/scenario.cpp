#include "qbsim/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "qbsim/emit.hpp"

namespace qbsim {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kDefaultSteps = 2001;

/// Shortest decimal rendering, for series labels like "D=1.7".
std::string format_label_value(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void apply_sweep_value(ModelParams& params, SweepParameter parameter,
                       double value) {
    switch (parameter) {
        case SweepParameter::D: params.D = value; return;
        case SweepParameter::Delta: params.delta = value; return;
        case SweepParameter::Gamma: params.gamma = value; return;
    }
    throw std::invalid_argument("unknown sweep parameter value");
}

SeriesResult run_series(const ModelParams& params, ModelPreset preset,
                        const TimeGrid& grid, std::string label,
                        std::string sweep_param,
                        std::optional<double> sweep_value) {
    const HamiltonianSet set = build_all(params, preset);
    const Trajectory traj = evolve(set.h_total, initial_state(), grid);

    SeriesResult series;
    series.label = std::move(label);
    series.sweep_param = std::move(sweep_param);
    series.sweep_value = sweep_value;
    series.records = record_trajectory(traj, set.h_free);
    series.ergotropy_peak = find_peak(series.records, PeakKind::Ergotropy);
    series.power_peak = find_peak(series.records, PeakKind::Power);
    return series;
}

void check_keys(const ordered_json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument(context + ": unknown key '" +
                                        item.key() + "'");
        }
    }
}

double get_number(const ordered_json& value, const std::string& context) {
    if (!value.is_number()) {
        throw std::invalid_argument(context + ": expected a number");
    }
    return value.get<double>();
}

std::string get_string(const ordered_json& value, const std::string& context) {
    if (!value.is_string()) {
        throw std::invalid_argument(context + ": expected a string");
    }
    return value.get<std::string>();
}

}  // namespace

ObservableSet ObservableSet::all() {
    return ObservableSet{true, true, true, true, true};
}

bool ObservableSet::any() const {
    return ergotropy || power || coherence || steering || energy;
}

ObservableSet observables_from_string(std::string_view names) {
    ObservableSet set;
    std::string token;
    std::istringstream stream{std::string(names)};
    while (std::getline(stream, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        const std::string name = begin == std::string::npos
                                     ? std::string()
                                     : token.substr(begin, end - begin + 1);
        if (name == "ergotropy") {
            set.ergotropy = true;
        } else if (name == "power") {
            set.power = true;
        } else if (name == "coherence") {
            set.coherence = true;
        } else if (name == "steering") {
            set.steering = true;
        } else if (name == "energy") {
            set.energy = true;
        } else {
            throw std::invalid_argument(
                "unknown observable '" + name +
                "' (expected ergotropy, power, coherence, steering, energy)");
        }
    }
    if (!set.any()) {
        throw std::invalid_argument("observable selection must not be empty");
    }
    return set;
}

std::string observables_to_string(const ObservableSet& set) {
    std::string out;
    const auto append = [&out](bool enabled, const char* name) {
        if (!enabled) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    append(set.ergotropy, "ergotropy");
    append(set.power, "power");
    append(set.coherence, "coherence");
    append(set.steering, "steering");
    append(set.energy, "energy");
    return out;
}

SweepParameter sweep_parameter_from_name(std::string_view name) {
    if (name == "D") return SweepParameter::D;
    if (name == "delta") return SweepParameter::Delta;
    if (name == "gamma") return SweepParameter::Gamma;
    throw std::invalid_argument("unknown sweep parameter '" +
                                std::string(name) +
                                "' (expected D, delta, or gamma)");
}

std::string_view sweep_parameter_name(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::D: return "D";
        case SweepParameter::Delta: return "delta";
        case SweepParameter::Gamma: return "gamma";
    }
    throw std::invalid_argument("unknown sweep parameter value");
}

void ScenarioConfig::validate() const {
    validate_params(params, preset);
    grid.validate();
    if (!observables.any()) {
        throw std::invalid_argument("config: observables must not be empty");
    }
    if (sweep) {
        if (sweep->values.empty()) {
            throw std::invalid_argument(
                "config.sweep.values: must not be empty");
        }
        for (double v : sweep->values) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument(
                    "config.sweep.values: values must be finite");
            }
            // every swept point must itself be a valid model, so sweeping a
            // parameter the preset pins is rejected up front
            ModelParams swept = params;
            apply_sweep_value(swept, sweep->parameter, v);
            validate_params(swept, preset);
        }
    }
}

ScenarioConfig ScenarioBuilder::resolve(WindowRule rule) const {
    ScenarioConfig cfg;
    cfg.preset = preset;
    cfg.params = resolve_params(preset, params);

    const double base = t_min(cfg.params.omega);
    double window = base;
    if (rule == WindowRule::Scenario &&
        (preset == ModelPreset::XXZ || preset == ModelPreset::XYZ)) {
        window = 4.0 * base;  // peaks develop past t_min in these regimes
    }
    cfg.grid.t_start = t_start.value_or(0.0);
    cfg.grid.t_end = t_end.value_or(window);
    cfg.grid.steps = steps.value_or(kDefaultSteps);

    cfg.observables = observables.value_or(ObservableSet::all());
    cfg.sweep = sweep;
    cfg.label = label;
    cfg.validate();
    return cfg;
}

ScenarioBuilder scenario_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config: top level must be an object");
    }
    check_keys(doc, "config",
               {"label", "model", "params", "grid", "observables", "sweep"});

    ScenarioBuilder builder;
    if (doc.contains("label")) {
        builder.label = get_string(doc["label"], "config.label");
    }
    if (doc.contains("model")) {
        builder.preset =
            preset_from_name(get_string(doc["model"], "config.model"));
    }
    if (doc.contains("params")) {
        const ordered_json& params = doc["params"];
        if (!params.is_object()) {
            throw std::invalid_argument("config.params: expected an object");
        }
        check_keys(params, "config.params",
                   {"J", "gamma", "delta", "D", "omega", "omega0"});
        const auto read = [&params](const char* key,
                                    std::optional<double>& out) {
            if (params.contains(key)) {
                out = get_number(params[key],
                                 std::string("config.params.") + key);
            }
        };
        read("J", builder.params.J);
        read("gamma", builder.params.gamma);
        read("delta", builder.params.delta);
        read("D", builder.params.D);
        read("omega", builder.params.omega);
        read("omega0", builder.params.omega0);
    }
    if (doc.contains("grid")) {
        const ordered_json& grid = doc["grid"];
        if (!grid.is_object()) {
            throw std::invalid_argument("config.grid: expected an object");
        }
        check_keys(grid, "config.grid", {"t_start", "t_end", "steps"});
        if (grid.contains("t_start")) {
            builder.t_start = get_number(grid["t_start"], "config.grid.t_start");
        }
        if (grid.contains("t_end")) {
            builder.t_end = get_number(grid["t_end"], "config.grid.t_end");
        }
        if (grid.contains("steps")) {
            if (!grid["steps"].is_number_integer()) {
                throw std::invalid_argument(
                    "config.grid.steps: expected an integer");
            }
            builder.steps = grid["steps"].get<int>();
        }
    }
    if (doc.contains("observables")) {
        const ordered_json& names = doc["observables"];
        if (!names.is_array()) {
            throw std::invalid_argument(
                "config.observables: expected an array of names");
        }
        std::string joined;
        for (const ordered_json& name : names) {
            if (!joined.empty()) joined += ',';
            joined += get_string(name, "config.observables");
        }
        builder.observables = observables_from_string(joined);
    }
    if (doc.contains("sweep")) {
        const ordered_json& sweep = doc["sweep"];
        if (!sweep.is_object()) {
            throw std::invalid_argument("config.sweep: expected an object");
        }
        check_keys(sweep, "config.sweep", {"parameter", "values"});
        if (!sweep.contains("parameter") || !sweep.contains("values")) {
            throw std::invalid_argument(
                "config.sweep: requires 'parameter' and 'values'");
        }
        SweepSpec spec;
        spec.parameter = sweep_parameter_from_name(
            get_string(sweep["parameter"], "config.sweep.parameter"));
        if (!sweep["values"].is_array() || sweep["values"].empty()) {
            throw std::invalid_argument(
                "config.sweep.values: expected a nonempty array of numbers");
        }
        for (const ordered_json& value : sweep["values"]) {
            spec.values.push_back(get_number(value, "config.sweep.values"));
        }
        builder.sweep = std::move(spec);
    }
    return builder;
}

ScenarioBuilder scenario_load(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    if (file.bad()) {
        throw IoError("failed reading config file '" + path + "'");
    }
    return scenario_from_json(text.str());
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
    ordered_json doc;
    doc["label"] = cfg.label;
    doc["model"] = std::string(preset_name(cfg.preset));
    doc["params"] = {{"J", cfg.params.J},         {"gamma", cfg.params.gamma},
                     {"delta", cfg.params.delta}, {"D", cfg.params.D},
                     {"omega", cfg.params.omega}, {"omega0", cfg.params.omega0}};
    doc["grid"] = {{"t_start", cfg.grid.t_start},
                   {"t_end", cfg.grid.t_end},
                   {"steps", cfg.grid.steps}};
    ordered_json names = ordered_json::array();
    {
        std::istringstream stream(observables_to_string(cfg.observables));
        std::string token;
        while (std::getline(stream, token, ',')) {
            names.push_back(token);
        }
    }
    doc["observables"] = std::move(names);
    if (cfg.sweep) {
        doc["sweep"] = {
            {"parameter", std::string(sweep_parameter_name(cfg.sweep->parameter))},
            {"values", cfg.sweep->values}};
    }
    return doc.dump(2) + "\n";
}

SweepResult run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.label = cfg.label;
    result.observables = cfg.observables;
    if (!cfg.sweep) {
        result.series.push_back(run_series(
            cfg.params, cfg.preset, cfg.grid,
            cfg.label.empty() ? std::string(preset_name(cfg.preset))
                              : cfg.label,
            std::string(), std::nullopt));
        return result;
    }
    const std::string param_name(sweep_parameter_name(cfg.sweep->parameter));
    for (double value : cfg.sweep->values) {
        ModelParams params = cfg.params;
        apply_sweep_value(params, cfg.sweep->parameter, value);
        result.series.push_back(
            run_series(params, cfg.preset, cfg.grid,
                       param_name + "=" + format_label_value(value),
                       param_name, value));
    }
    return result;
}

SweepResult compare_charging(const ModelParams& params, const TimeGrid& grid) {
    validate_params(params, ModelPreset::Custom);
    grid.validate();

    SweepResult result;
    result.label = "compare";
    result.observables = ObservableSet::all();

    result.series.push_back(run_series(params, ModelPreset::Custom, grid,
                                       "collective", "mode", 0.0));

    ModelParams parallel = params;
    parallel.J = 0.0;
    parallel.D = 0.0;
    result.series.push_back(run_series(parallel, ModelPreset::Custom, grid,
                                       "parallel", "mode", 1.0));

    // Analytic reference: the non-interacting protocol stays in a pure
    // product state, so coherence and steering sit at 1 throughout and the
    // internal energy is the ergotropy shifted by the ground energy.
    SeriesResult analytic;
    analytic.label = "parallel-analytic";
    analytic.sweep_param = "mode";
    analytic.sweep_value = 2.0;
    for (double t : grid.times()) {
        ObservableRecord rec;
        rec.t = t;
        rec.ergotropy = parallel_ergotropy(t, params.omega, params.omega0);
        rec.power = power(rec.ergotropy, t);
        rec.coherence = 1.0;
        rec.steering = 1.0;
        rec.mean_energy = rec.ergotropy - 2.0 * params.omega0;
        analytic.records.push_back(rec);
    }
    analytic.ergotropy_peak = find_peak(analytic.records, PeakKind::Ergotropy);
    analytic.power_peak = find_peak(analytic.records, PeakKind::Power);
    result.series.push_back(std::move(analytic));
    return result;
}

const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = [] {
        std::vector<FigurePreset> out;

        // The XYZ studies need an explicit anisotropy; 0.32 is the documented
        // default (README): the value for which the DM enhancement of both
        // peak ergotropy and peak power holds across the whole window.
        constexpr double kXyzGamma = 0.32;

        {
            FigurePreset p;
            p.name = "fig2_compare";
            p.compare = true;
            p.builder.preset = ModelPreset::Ising;
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        {
            FigurePreset p;
            p.name = "fig3_ising_dm";
            p.builder.preset = ModelPreset::Ising;
            p.builder.sweep = SweepSpec{SweepParameter::D, {0.0, 3.0, 6.0, 9.0}};
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        {
            FigurePreset p;
            p.name = "fig4_xxz_dm";
            p.builder.preset = ModelPreset::XXZ;
            p.builder.params.delta = 2.0;
            p.builder.sweep = SweepSpec{SweepParameter::D, {0.0, 1.7}};
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        {
            FigurePreset p;
            p.name = "fig5_xxz_correlations";
            p.builder.preset = ModelPreset::XXZ;
            p.builder.params.delta = 2.0;
            p.builder.sweep =
                SweepSpec{SweepParameter::D, {0.0, 0.8, 1.2, 1.7}};
            p.builder.t_end = t_min(1.0);  // correlations live on [0, t_min]
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        {
            FigurePreset p;
            p.name = "fig6_xyz_delta";
            p.builder.preset = ModelPreset::XYZ;
            p.builder.params.gamma = kXyzGamma;
            p.builder.params.delta = 2.5;  // replaced by the sweep values
            p.builder.sweep = SweepSpec{SweepParameter::Delta, {2.5, 3.0}};
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        {
            FigurePreset p;
            p.name = "fig7_xyz_dm_delta2p5";
            p.builder.preset = ModelPreset::XYZ;
            p.builder.params.gamma = kXyzGamma;
            p.builder.params.delta = 2.5;
            p.builder.sweep = SweepSpec{SweepParameter::D, {0.0, 0.5, 1.0}};
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        {
            FigurePreset p;
            p.name = "fig7_xyz_dm_delta3";
            p.builder.preset = ModelPreset::XYZ;
            p.builder.params.gamma = kXyzGamma;
            p.builder.params.delta = 3.0;
            p.builder.sweep = SweepSpec{SweepParameter::D, {0.0, 0.5, 1.0}};
            p.builder.label = p.name;
            out.push_back(std::move(p));
        }
        return out;
    }();
    return presets;
}

SweepResult run_figure(std::size_t index) {
    const auto& presets = figure_presets();
    if (index >= presets.size()) {
        throw std::out_of_range("figure index out of range");
    }
    const FigurePreset& preset = presets[index];
    if (preset.compare) {
        const ScenarioConfig cfg =
            preset.builder.resolve(ScenarioBuilder::WindowRule::Compare);
        SweepResult result = compare_charging(cfg.params, cfg.grid);
        result.label = preset.name;
        return result;
    }
    return run_scenario(preset.builder.resolve());
}

}  // namespace qbsim
