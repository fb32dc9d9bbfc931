#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbsim/dynamics.hpp"
#include "qbsim/model.hpp"
#include "qbsim/observables.hpp"

namespace qbsim {

/// Which observable columns a run emits. Every run computes all of them;
/// the selection only controls output.
struct ObservableSet {
    bool ergotropy = false;
    bool power = false;
    bool coherence = false;
    bool steering = false;
    bool energy = false;

    static ObservableSet all();
    bool any() const;
    bool operator==(const ObservableSet&) const = default;
};

/// Parse a comma-separated subset of
/// "ergotropy,power,coherence,steering,energy"; throws
/// std::invalid_argument on unknown or empty names.
ObservableSet observables_from_string(std::string_view names);
std::string observables_to_string(const ObservableSet& set);

/// Model parameter a sweep varies.
enum class SweepParameter { D, Delta, Gamma };

SweepParameter sweep_parameter_from_name(std::string_view name);
std::string_view sweep_parameter_name(SweepParameter parameter);

/// A swept parameter with the values to run, in emission order.
struct SweepSpec {
    SweepParameter parameter = SweepParameter::D;
    std::vector<double> values;

    bool operator==(const SweepSpec&) const = default;
};

/// One fully resolved run: preset + complete parameters + grid + output
/// selection, with an optional sweep.
struct ScenarioConfig {
    ModelPreset preset = ModelPreset::Custom;
    ModelParams params;
    TimeGrid grid;
    ObservableSet observables = ObservableSet::all();
    std::optional<SweepSpec> sweep;
    std::string label;

    bool operator==(const ScenarioConfig&) const = default;

    /// Throws std::invalid_argument on invalid params/grid, an empty
    /// observable selection, or an empty/non-finite sweep value list.
    void validate() const;
};

/// Partially specified scenario collected from a config file, CLI flags, or
/// the C API; resolve() applies defaults and preset pins.
struct ScenarioBuilder {
    ModelPreset preset = ModelPreset::Custom;
    PartialParams params;
    std::optional<double> t_start;
    std::optional<double> t_end;
    std::optional<int> steps;
    std::optional<ObservableSet> observables;
    std::optional<SweepSpec> sweep;
    std::string label;

    /// Default time window when t_end is unset. Comparison runs and the
    /// Custom/Ising presets default to [0, t_min]; XXZ/XYZ runs default to
    /// [0, 4 t_min] (their peaks develop on longer timescales).
    enum class WindowRule { Scenario, Compare };

    ScenarioConfig resolve(WindowRule rule = WindowRule::Scenario) const;
};

/// Parse a JSON config (documented schema: keys label/model/params/grid/
/// observables/sweep). Unknown keys or malformed values throw
/// std::invalid_argument naming the offending field.
ScenarioBuilder scenario_from_json(const std::string& json_text);

/// Load scenario_from_json from a file; file-system failures throw IoError.
ScenarioBuilder scenario_load(const std::string& path);

/// Serialize a resolved scenario back to its JSON schema (fully explicit, so
/// parsing the output reproduces the same resolved config).
std::string scenario_to_json(const ScenarioConfig& cfg);

/// Records and peaks of one simulated series (one sweep value, or one
/// comparison mode).
struct SeriesResult {
    std::string label;                  ///< legend entry, e.g. "D=3"
    std::string sweep_param;            ///< column tag; empty for plain runs
    std::optional<double> sweep_value;  ///< empty for plain runs
    std::vector<ObservableRecord> records;
    PeakReport ergotropy_peak;
    PeakReport power_peak;
};

/// Ordered output of run_scenario / compare_charging.
struct SweepResult {
    std::string label;
    ObservableSet observables;
    std::vector<SeriesResult> series;
};

/// Build, evolve, and record the scenario; one series per sweep value (or a
/// single series without a sweep), in the order the values were given.
/// Deterministic for a fixed config.
SweepResult run_scenario(const ScenarioConfig& cfg);

/// Collective-vs-parallel comparison on one grid: the given parameters, the
/// J = D = 0 baseline, and the analytic 4 omega0 sin^2(omega t) reference.
/// The three series are tagged sweep_param = "mode" with sweep_value 0
/// (collective), 1 (parallel), 2 (parallel-analytic) so they fit the fixed
/// CSV schema.
SweepResult compare_charging(const ModelParams& params, const TimeGrid& grid);

/// One canned parameter study: a named scenario (or comparison run)
/// reproducing one figure's data.
struct FigurePreset {
    std::string name;
    bool compare = false;
    ScenarioBuilder builder;
};

/// All built-in parameter studies, in output order.
const std::vector<FigurePreset>& figure_presets();

/// Run one preset by index (throws std::out_of_range past the end).
SweepResult run_figure(std::size_t index);

}  // namespace qbsim
