#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qbsim/linalg.hpp"

namespace qbsim {

/// Physical couplings of the two-cell battery, hbar = 1. J and D share the
/// energy unit set by omega; gamma and delta are dimensionless anisotropies.
/// Negative J or D is accepted but outside the studied regime.
struct ModelParams {
    double J = 1.0;       ///< exchange coupling between the two cells
    double gamma = 0.0;   ///< XY anisotropy
    double delta = 0.0;   ///< z-axis anisotropy
    double D = 0.0;       ///< Dzyaloshinskii-Moriya strength (z component)
    double omega = 1.0;   ///< charging-field strength (sets the time unit)
    double omega0 = 1.0;  ///< cell Larmor frequency

    bool operator==(const ModelParams&) const = default;
};

/// Anisotropy regimes. Ising pins gamma = 1 and delta = 0; XXZ pins
/// gamma = 0 (D stays free so the DM sweeps remain expressible); XYZ requires
/// explicit nonzero gamma and delta; Custom leaves everything free.
enum class ModelPreset { Custom, Ising, XXZ, XYZ };

/// Parse "custom" | "ising" | "xxz" | "xyz" (case-sensitive); throws
/// std::invalid_argument on anything else.
ModelPreset preset_from_name(std::string_view name);
std::string_view preset_name(ModelPreset preset);

/// Per-field overrides for resolve_params; unset fields fall back to the
/// preset pin or the ModelParams default.
struct PartialParams {
    std::optional<double> J;
    std::optional<double> gamma;
    std::optional<double> delta;
    std::optional<double> D;
    std::optional<double> omega;
    std::optional<double> omega0;
};

/// Fill a full parameter set from overrides + preset pins. Explicit values
/// conflicting with a pin, or a missing required XYZ gamma/delta, throw
/// std::invalid_argument naming the parameter.
ModelParams resolve_params(ModelPreset preset, const PartialParams& overrides);

/// Throws std::invalid_argument when a field is non-finite, omega or omega0
/// is not positive, or the values violate the preset pins.
void validate_params(const ModelParams& params, ModelPreset preset);

/// The four Hamiltonians of one scenario; all Hermitian 4x4,
/// h_total = h_ch + h_int.
struct HamiltonianSet {
    ComplexMatrix h_ch;
    ComplexMatrix h_int;
    ComplexMatrix h_total;
    ComplexMatrix h_free;
};

/// Charging field omega (sx x I + I x sx).
ComplexMatrix build_charging(const ModelParams& params);

/// Chain interaction
///   J [(1+gamma) sx x sx + (1-gamma) sy x sy + delta sz x sz]
///   + D (sx x sy - sy x sx).
ComplexMatrix build_interaction(const ModelParams& params);

/// Internal (battery) Hamiltonian omega0 (sz x I + I x sz)
/// = diag(2 omega0, 0, 0, -2 omega0).
ComplexMatrix build_free(const ModelParams& params);

/// Validate params against the preset and assemble the full set.
HamiltonianSet build_all(const ModelParams& params, ModelPreset preset);

/// The empty-battery state |down down> = (0, 0, 0, 1).
StateVector initial_state();

}  // namespace qbsim
