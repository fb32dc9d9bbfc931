// Command-line front end: builds scenarios from flags/config files through
// the qbsim C API, runs them, and writes CSV/JSON tables.

#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbsim.h"

namespace {

struct ScenarioFlags {
    std::string config_path;
    std::string model;
    std::optional<double> J;
    std::optional<double> gamma;
    std::optional<double> delta;
    std::optional<double> D;
    std::optional<double> omega;
    std::optional<double> omega0;
    std::optional<double> t_end;
    std::optional<int> steps;
    std::string observables;
    std::string label;
};

struct OutputFlags {
    std::string format = "csv";
    std::string out;  // empty: stdout
};

struct SweepFlags {
    std::string parameter;
    std::vector<double> values;
};

using ScenarioPtr =
    std::unique_ptr<qbsim_scenario, decltype(&qbsim_scenario_free)>;
using ResultPtr = std::unique_ptr<qbsim_result, decltype(&qbsim_result_free)>;

/// 0 on success, 1 on invalid configuration, 2 on I/O or internal failure.
int exit_code_for(qbsim_status status) {
    switch (status) {
        case QBSIM_OK: return 0;
        case QBSIM_ERR_INVALID: return 1;
        default: return 2;
    }
}

int report(qbsim_status status) {
    if (status != QBSIM_OK) {
        std::fprintf(stderr, "error: %s\n", qbsim_last_error());
    }
    return exit_code_for(status);
}

void add_scenario_options(CLI::App* cmd, ScenarioFlags& flags) {
    cmd->add_option("--config", flags.config_path,
                    "JSON config file; explicit flags override its settings");
    cmd->add_option("--model", flags.model,
                    "model preset: custom, ising, xxz, or xyz");
    cmd->add_option("--J", flags.J, "exchange coupling (default 1)");
    cmd->add_option("--gamma", flags.gamma, "XY anisotropy");
    cmd->add_option("--delta", flags.delta, "z-axis anisotropy");
    cmd->add_option("--D", flags.D, "Dzyaloshinskii-Moriya strength");
    cmd->add_option("--omega", flags.omega, "charging-field strength (default 1)");
    cmd->add_option("--omega0", flags.omega0, "cell Larmor frequency (default 1)");
    cmd->add_option("--t-end", flags.t_end,
                    "end of the time window (default: t_min for custom/ising "
                    "and comparisons, 4*t_min for xxz/xyz)");
    cmd->add_option("--steps", flags.steps,
                    "grid points including both endpoints (default 2001)");
    cmd->add_option("--observables", flags.observables,
                    "comma-separated columns to emit "
                    "(ergotropy,power,coherence,steering,energy; default all)");
    cmd->add_option("--label", flags.label, "label stored in the output");
}

void add_output_options(CLI::App* cmd, OutputFlags& flags) {
    cmd->add_option("--format", flags.format, "output format: csv or json")
        ->default_str("csv");
    cmd->add_option("--out", flags.out,
                    "output file (default: standard output)");
}

qbsim_status apply_scenario_flags(qbsim_scenario* scenario,
                                  const ScenarioFlags& flags) {
    qbsim_status status = QBSIM_OK;
    const auto apply = [&status](qbsim_status step) {
        if (status == QBSIM_OK) status = step;
    };
    if (!flags.config_path.empty()) {
        apply(qbsim_scenario_load(scenario, flags.config_path.c_str()));
    }
    if (!flags.model.empty()) {
        apply(qbsim_scenario_set_model(scenario, flags.model.c_str()));
    }
    const auto set_param = [&](const char* name,
                               const std::optional<double>& value) {
        if (value) apply(qbsim_scenario_set_param(scenario, name, *value));
    };
    set_param("J", flags.J);
    set_param("gamma", flags.gamma);
    set_param("delta", flags.delta);
    set_param("D", flags.D);
    set_param("omega", flags.omega);
    set_param("omega0", flags.omega0);
    if (flags.t_end) {
        apply(qbsim_scenario_set_window(scenario, 0.0, *flags.t_end));
    }
    if (flags.steps) {
        apply(qbsim_scenario_set_steps(scenario, *flags.steps));
    }
    if (!flags.observables.empty()) {
        apply(qbsim_scenario_set_observables(scenario,
                                             flags.observables.c_str()));
    }
    if (!flags.label.empty()) {
        apply(qbsim_scenario_set_label(scenario, flags.label.c_str()));
    }
    return status;
}

qbsim_status emit_result(const qbsim_result* result, const OutputFlags& out) {
    if (!out.out.empty()) {
        return qbsim_result_emit_file(result, out.format.c_str(),
                                      out.out.c_str());
    }
    size_t needed = 0;
    if (qbsim_status status = qbsim_result_emit_string(
            result, out.format.c_str(), nullptr, 0, &needed);
        status != QBSIM_OK) {
        return status;
    }
    std::string text(needed, '\0');
    const qbsim_status status = qbsim_result_emit_string(
        result, out.format.c_str(), text.data(), text.size(), &needed);
    if (status != QBSIM_OK) {
        return status;
    }
    text.resize(needed - 1);  // drop the terminating NUL
    std::fwrite(text.data(), 1, text.size(), stdout);
    return QBSIM_OK;
}

int run_scenario_command(const ScenarioFlags& flags, const SweepFlags* sweep,
                         const OutputFlags& out, bool compare) {
    ScenarioPtr scenario(qbsim_scenario_new(), &qbsim_scenario_free);
    if (!scenario) {
        std::fprintf(stderr, "error: out of memory\n");
        return 2;
    }
    if (qbsim_status status = apply_scenario_flags(scenario.get(), flags);
        status != QBSIM_OK) {
        return report(status);
    }
    if (sweep != nullptr && !sweep->parameter.empty()) {
        if (qbsim_status status = qbsim_scenario_set_sweep(
                scenario.get(), sweep->parameter.c_str(),
                sweep->values.data(), sweep->values.size());
            status != QBSIM_OK) {
            return report(status);
        }
    }

    qbsim_result* raw = nullptr;
    const qbsim_status run_status = compare
                                        ? qbsim_run_compare(scenario.get(), &raw)
                                        : qbsim_run(scenario.get(), &raw);
    ResultPtr result(raw, &qbsim_result_free);
    if (run_status != QBSIM_OK) {
        return report(run_status);
    }
    return report(emit_result(result.get(), out));
}

int run_figures_command(const std::string& out_dir,
                        const std::string& format) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create directory '%s': %s\n",
                     out_dir.c_str(), ec.message().c_str());
        return 2;
    }
    const std::string extension = format == "json" ? ".json" : ".csv";
    for (size_t i = 0; i < qbsim_figure_count(); ++i) {
        qbsim_result* raw = nullptr;
        if (qbsim_status status = qbsim_run_figure(i, &raw);
            status != QBSIM_OK) {
            return report(status);
        }
        ResultPtr result(raw, &qbsim_result_free);
        const std::filesystem::path path =
            std::filesystem::path(out_dir) /
            (std::string(qbsim_figure_name(i)) + extension);
        if (qbsim_status status = qbsim_result_emit_file(
                result.get(), format.c_str(), path.string().c_str());
            status != QBSIM_OK) {
            return report(status);
        }
        std::printf("wrote %s\n", path.string().c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qbsim: two-cell quantum battery simulator (ergotropy, charging "
        "power, steering, and coherence on Heisenberg chains with DM "
        "interaction)"};
    app.set_version_flag("--version", std::string(qbsim_version()));
    app.require_subcommand(1);

    ScenarioFlags sim_flags;
    OutputFlags sim_out;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Run one scenario and emit its table");
    add_scenario_options(simulate, sim_flags);
    add_output_options(simulate, sim_out);

    ScenarioFlags sweep_scenario;
    SweepFlags sweep_flags;
    OutputFlags sweep_out;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run a scenario across a list of parameter values");
    add_scenario_options(sweep, sweep_scenario);
    add_output_options(sweep, sweep_out);
    sweep->add_option("--sweep-param", sweep_flags.parameter,
                      "parameter to sweep: D, delta, or gamma");
    sweep->add_option("--sweep-values", sweep_flags.values,
                      "comma-separated values to sweep over")
        ->delimiter(',');

    ScenarioFlags cmp_flags;
    OutputFlags cmp_out;
    CLI::App* compare = app.add_subcommand(
        "compare",
        "Collective vs parallel charging on one grid (series are tagged "
        "mode 0=collective, 1=parallel, 2=parallel-analytic)");
    add_scenario_options(compare, cmp_flags);
    add_output_options(compare, cmp_out);

    std::string fig_dir = "figures";
    std::string fig_format = "csv";
    CLI::App* figures = app.add_subcommand(
        "figures", "Write every built-in parameter study to a directory");
    figures->add_option("--out", fig_dir,
                        "output directory (default: figures)");
    figures->add_option("--format", fig_format, "output format: csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the error and the help hint
        return 1;
    }

    if (simulate->parsed()) {
        return run_scenario_command(sim_flags, nullptr, sim_out, false);
    }
    if (sweep->parsed()) {
        if (sweep_flags.parameter.empty() && sweep_scenario.config_path.empty()) {
            std::fprintf(stderr,
                         "error: sweep needs --sweep-param/--sweep-values or "
                         "a --config with a sweep block\n");
            return 1;
        }
        return run_scenario_command(sweep_scenario, &sweep_flags, sweep_out,
                                    false);
    }
    if (compare->parsed()) {
        return run_scenario_command(cmp_flags, nullptr, cmp_out, true);
    }
    return run_figures_command(fig_dir, fig_format);
}
