#include "qbsim.h"

#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "qbsim/dynamics.hpp"
#include "qbsim/emit.hpp"
#include "qbsim/scenario.hpp"

struct qbsim_scenario {
    qbsim::ScenarioBuilder builder;
};

struct qbsim_result {
    qbsim::SweepResult result;
};

namespace {

constexpr const char* kVersion = "1.0.0";

thread_local std::string g_last_error;

qbsim_status fail(qbsim_status code, std::string message) {
    g_last_error = std::move(message);
    return code;
}

/// Run a callable, translating exceptions into status codes + last_error.
template <typename F>
qbsim_status guarded(F&& body) {
    try {
        body();
        return QBSIM_OK;
    } catch (const qbsim::IoError& e) {
        return fail(QBSIM_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QBSIM_ERR_INVALID, e.what());
    } catch (const std::out_of_range& e) {
        return fail(QBSIM_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(QBSIM_ERR_INTERNAL, e.what());
    }
}

qbsim_status require(const void* handle, const char* what) {
    if (handle == nullptr) {
        return fail(QBSIM_ERR_INVALID, std::string(what) + " handle is NULL");
    }
    return QBSIM_OK;
}

qbsim_status copy_string(const std::string& text, char* buf, size_t buflen,
                         size_t* needed) {
    if (needed != nullptr) {
        *needed = text.size() + 1;
    }
    if (buf == nullptr) {
        // pure size query
        if (needed == nullptr) {
            return fail(QBSIM_ERR_INVALID,
                        "size query needs a non-NULL 'needed'");
        }
        return QBSIM_OK;
    }
    if (buflen < text.size() + 1) {
        return fail(QBSIM_ERR_INVALID,
                    "buffer too small (required size reported via 'needed')");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return QBSIM_OK;
}

const qbsim::SeriesResult* series_at(const qbsim_result* r, size_t series) {
    if (r == nullptr || series >= r->result.series.size()) {
        return nullptr;
    }
    return &r->result.series[series];
}

}  // namespace

extern "C" {

const char* qbsim_version(void) { return kVersion; }

const char* qbsim_last_error(void) { return g_last_error.c_str(); }

double qbsim_t_min(double omega) {
    if (!std::isfinite(omega) || omega <= 0.0) {
        return std::nan("");
    }
    return qbsim::t_min(omega);
}

qbsim_scenario* qbsim_scenario_new(void) {
    return new (std::nothrow) qbsim_scenario();
}

void qbsim_scenario_free(qbsim_scenario* s) { delete s; }

qbsim_status qbsim_scenario_set_model(qbsim_scenario* s, const char* name) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(name, "model name"); st != QBSIM_OK) return st;
    return guarded([&] { s->builder.preset = qbsim::preset_from_name(name); });
}

qbsim_status qbsim_scenario_set_param(qbsim_scenario* s, const char* name,
                                      double value) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(name, "parameter name"); st != QBSIM_OK) return st;
    return guarded([&] {
        const std::string_view key(name);
        if (!std::isfinite(value)) {
            throw std::invalid_argument("parameter '" + std::string(key) +
                                        "' must be finite");
        }
        qbsim::PartialParams& p = s->builder.params;
        if (key == "J") {
            p.J = value;
        } else if (key == "gamma") {
            p.gamma = value;
        } else if (key == "delta") {
            p.delta = value;
        } else if (key == "D") {
            p.D = value;
        } else if (key == "omega") {
            p.omega = value;
        } else if (key == "omega0") {
            p.omega0 = value;
        } else {
            throw std::invalid_argument(
                "unknown parameter '" + std::string(key) +
                "' (expected J, gamma, delta, D, omega, omega0)");
        }
    });
}

qbsim_status qbsim_scenario_set_window(qbsim_scenario* s, double t_start,
                                       double t_end) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    return guarded([&] {
        qbsim::TimeGrid{t_start, t_end, 2}.validate();  // bounds check only
        s->builder.t_start = t_start;
        s->builder.t_end = t_end;
    });
}

qbsim_status qbsim_scenario_set_steps(qbsim_scenario* s, int steps) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    return guarded([&] {
        qbsim::TimeGrid{0.0, 1.0, steps}.validate();  // step count check only
        s->builder.steps = steps;
    });
}

qbsim_status qbsim_scenario_set_observables(qbsim_scenario* s,
                                            const char* names) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(names, "observable list"); st != QBSIM_OK) return st;
    return guarded(
        [&] { s->builder.observables = qbsim::observables_from_string(names); });
}

qbsim_status qbsim_scenario_set_sweep(qbsim_scenario* s, const char* parameter,
                                      const double* values, size_t count) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(parameter, "sweep parameter"); st != QBSIM_OK)
        return st;
    if (count > 0) {
        if (auto st = require(values, "sweep values"); st != QBSIM_OK)
            return st;
    }
    return guarded([&] {
        qbsim::SweepSpec spec;
        spec.parameter = qbsim::sweep_parameter_from_name(parameter);
        spec.values.assign(values, values + count);
        if (spec.values.empty()) {
            throw std::invalid_argument("sweep needs at least one value");
        }
        s->builder.sweep = std::move(spec);
    });
}

qbsim_status qbsim_scenario_set_label(qbsim_scenario* s, const char* label) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(label, "label"); st != QBSIM_OK) return st;
    s->builder.label = label;
    return QBSIM_OK;
}

qbsim_status qbsim_scenario_from_json(qbsim_scenario* s,
                                      const char* json_text) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(json_text, "config text"); st != QBSIM_OK) return st;
    return guarded([&] { s->builder = qbsim::scenario_from_json(json_text); });
}

qbsim_status qbsim_scenario_load(qbsim_scenario* s, const char* path) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(path, "config path"); st != QBSIM_OK) return st;
    return guarded([&] { s->builder = qbsim::scenario_load(path); });
}

qbsim_status qbsim_scenario_to_json(const qbsim_scenario* s, char* buf,
                                    size_t buflen, size_t* needed) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    std::string text;
    if (auto st = guarded(
            [&] { text = qbsim::scenario_to_json(s->builder.resolve()); });
        st != QBSIM_OK) {
        return st;
    }
    return copy_string(text, buf, buflen, needed);
}

qbsim_status qbsim_run(const qbsim_scenario* s, qbsim_result** out) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(out, "result output"); st != QBSIM_OK) return st;
    *out = nullptr;
    return guarded([&] {
        auto result = qbsim::run_scenario(s->builder.resolve());
        *out = new qbsim_result{std::move(result)};
    });
}

qbsim_status qbsim_run_compare(const qbsim_scenario* s, qbsim_result** out) {
    if (auto st = require(s, "scenario"); st != QBSIM_OK) return st;
    if (auto st = require(out, "result output"); st != QBSIM_OK) return st;
    *out = nullptr;
    return guarded([&] {
        const qbsim::ScenarioConfig cfg = s->builder.resolve(
            qbsim::ScenarioBuilder::WindowRule::Compare);
        auto result = qbsim::compare_charging(cfg.params, cfg.grid);
        if (!cfg.label.empty()) {
            result.label = cfg.label;
        }
        *out = new qbsim_result{std::move(result)};
    });
}

size_t qbsim_figure_count(void) { return qbsim::figure_presets().size(); }

const char* qbsim_figure_name(size_t index) {
    const auto& presets = qbsim::figure_presets();
    if (index >= presets.size()) {
        return nullptr;
    }
    return presets[index].name.c_str();
}

qbsim_status qbsim_run_figure(size_t index, qbsim_result** out) {
    if (auto st = require(out, "result output"); st != QBSIM_OK) return st;
    *out = nullptr;
    return guarded(
        [&] { *out = new qbsim_result{qbsim::run_figure(index)}; });
}

void qbsim_result_free(qbsim_result* r) { delete r; }

size_t qbsim_result_series_count(const qbsim_result* r) {
    return r == nullptr ? 0 : r->result.series.size();
}

size_t qbsim_result_record_count(const qbsim_result* r, size_t series) {
    const auto* s = series_at(r, series);
    return s == nullptr ? 0 : s->records.size();
}

const char* qbsim_result_series_label(const qbsim_result* r, size_t series) {
    const auto* s = series_at(r, series);
    return s == nullptr ? nullptr : s->label.c_str();
}

qbsim_status qbsim_result_record(const qbsim_result* r, size_t series,
                                 size_t index, double out_values[6]) {
    if (auto st = require(r, "result"); st != QBSIM_OK) return st;
    if (auto st = require(out_values, "record output"); st != QBSIM_OK)
        return st;
    const auto* s = series_at(r, series);
    if (s == nullptr) {
        return fail(QBSIM_ERR_INVALID, "series index out of range");
    }
    if (index >= s->records.size()) {
        return fail(QBSIM_ERR_INVALID, "record index out of range");
    }
    const qbsim::ObservableRecord& rec = s->records[index];
    out_values[0] = rec.t;
    out_values[1] = rec.ergotropy;
    out_values[2] = rec.power;
    out_values[3] = rec.coherence;
    out_values[4] = rec.steering;
    out_values[5] = rec.mean_energy;
    return QBSIM_OK;
}

qbsim_status qbsim_result_peak(const qbsim_result* r, size_t series,
                               const char* kind, double* t_peak,
                               double* value_peak) {
    if (auto st = require(r, "result"); st != QBSIM_OK) return st;
    if (auto st = require(kind, "peak kind"); st != QBSIM_OK) return st;
    const auto* s = series_at(r, series);
    if (s == nullptr) {
        return fail(QBSIM_ERR_INVALID, "series index out of range");
    }
    const std::string_view name(kind);
    const qbsim::PeakReport* peak = nullptr;
    if (name == "ergotropy") {
        peak = &s->ergotropy_peak;
    } else if (name == "power") {
        peak = &s->power_peak;
    } else {
        return fail(QBSIM_ERR_INVALID,
                    "unknown peak kind '" + std::string(name) +
                        "' (expected ergotropy or power)");
    }
    if (t_peak != nullptr) *t_peak = peak->t_peak;
    if (value_peak != nullptr) *value_peak = peak->value_peak;
    return QBSIM_OK;
}

qbsim_status qbsim_result_emit_file(const qbsim_result* r, const char* format,
                                    const char* path) {
    if (auto st = require(r, "result"); st != QBSIM_OK) return st;
    if (auto st = require(format, "format"); st != QBSIM_OK) return st;
    if (auto st = require(path, "output path"); st != QBSIM_OK) return st;
    return guarded([&] {
        qbsim::emit_to_file(r->result, qbsim::emit_format_from_name(format),
                            path);
    });
}

qbsim_status qbsim_result_emit_string(const qbsim_result* r,
                                      const char* format, char* buf,
                                      size_t buflen, size_t* needed) {
    if (auto st = require(r, "result"); st != QBSIM_OK) return st;
    if (auto st = require(format, "format"); st != QBSIM_OK) return st;
    std::string text;
    if (auto st = guarded([&] {
            text = qbsim::emit_to_string(
                r->result, qbsim::emit_format_from_name(format));
        });
        st != QBSIM_OK) {
        return st;
    }
    return copy_string(text, buf, buflen, needed);
}

}  // extern "C"
