#include "qbsim/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qbsim {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSignificantDigits = 12;

const char* peak_kind_name(PeakKind kind) {
    return kind == PeakKind::Ergotropy ? "ergotropy" : "power";
}

/// Null when the column is deselected, otherwise the 12-digit-rounded value.
ordered_json json_value(bool selected, double value) {
    if (!selected) {
        return nullptr;
    }
    return round_to_emit_precision(value);
}

std::string emit_csv(const SweepResult& result) {
    std::string out =
        "sweep_param,sweep_value,t,ergotropy,power,coherence,steering,energy\n";
    const ObservableSet& obs = result.observables;
    for (const SeriesResult& series : result.series) {
        for (const ObservableRecord& rec : series.records) {
            out += series.sweep_param;
            out += ',';
            if (series.sweep_value) {
                out += format_double(*series.sweep_value);
            }
            out += ',';
            out += format_double(rec.t);
            out += ',';
            if (obs.ergotropy) out += format_double(rec.ergotropy);
            out += ',';
            if (obs.power) out += format_double(rec.power);
            out += ',';
            if (obs.coherence) out += format_double(rec.coherence);
            out += ',';
            if (obs.steering) out += format_double(rec.steering);
            out += ',';
            if (obs.energy) out += format_double(rec.mean_energy);
            out += '\n';
        }
    }
    return out;
}

std::string emit_json(const SweepResult& result) {
    const ObservableSet& obs = result.observables;
    ordered_json doc;
    doc["label"] = result.label;

    ordered_json names = ordered_json::array();
    if (obs.ergotropy) names.push_back("ergotropy");
    if (obs.power) names.push_back("power");
    if (obs.coherence) names.push_back("coherence");
    if (obs.steering) names.push_back("steering");
    if (obs.energy) names.push_back("energy");
    doc["observables"] = std::move(names);

    ordered_json legend = ordered_json::array();
    ordered_json records = ordered_json::array();
    ordered_json peaks = ordered_json::array();
    for (const SeriesResult& series : result.series) {
        const ordered_json sweep_param = series.sweep_param.empty()
                                             ? ordered_json(nullptr)
                                             : ordered_json(series.sweep_param);
        const ordered_json sweep_value =
            series.sweep_value
                ? ordered_json(round_to_emit_precision(*series.sweep_value))
                : ordered_json(nullptr);

        legend.push_back({{"label", series.label},
                          {"sweep_param", sweep_param},
                          {"sweep_value", sweep_value}});

        for (const ObservableRecord& rec : series.records) {
            records.push_back(
                {{"sweep_param", sweep_param},
                 {"sweep_value", sweep_value},
                 {"t", round_to_emit_precision(rec.t)},
                 {"ergotropy", json_value(obs.ergotropy, rec.ergotropy)},
                 {"power", json_value(obs.power, rec.power)},
                 {"coherence", json_value(obs.coherence, rec.coherence)},
                 {"steering", json_value(obs.steering, rec.steering)},
                 {"energy", json_value(obs.energy, rec.mean_energy)}});
        }
        for (const PeakReport* peak :
             {&series.ergotropy_peak, &series.power_peak}) {
            peaks.push_back(
                {{"sweep_param", sweep_param},
                 {"sweep_value", sweep_value},
                 {"kind", peak_kind_name(peak->kind)},
                 {"t_peak", round_to_emit_precision(peak->t_peak)},
                 {"value_peak", round_to_emit_precision(peak->value_peak)}});
        }
    }
    doc["series"] = std::move(legend);
    doc["records"] = std::move(records);
    doc["peaks"] = std::move(peaks);
    return doc.dump(2) + "\n";
}

}  // namespace

EmitFormat emit_format_from_name(std::string_view name) {
    if (name == "csv") return EmitFormat::Csv;
    if (name == "json") return EmitFormat::Json;
    throw std::invalid_argument("unknown output format '" + std::string(name) +
                                "' (expected csv or json)");
}

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot emit a non-finite number");
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general,
                                   kSignificantDigits);
    return std::string(buf, res.ptr);
}

double round_to_emit_precision(double value) {
    const std::string text = format_double(value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string emit_to_string(const SweepResult& result, EmitFormat format) {
    return format == EmitFormat::Csv ? emit_csv(result) : emit_json(result);
}

void emit_to_file(const SweepResult& result, EmitFormat format,
                  const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open output file '" + path + "'");
    }
    const std::string text = emit_to_string(result, format);
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.flush();
    if (!file) {
        throw IoError("failed writing output file '" + path + "'");
    }
}

}  // namespace qbsim
