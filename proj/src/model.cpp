#include "qbsim/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbsim {

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string("parameter '") + name +
                                    "' must be finite");
    }
}

void require_pin(double value, double pin, const char* name,
                 const char* preset) {
    if (value != pin) {
        throw std::invalid_argument(std::string("model '") + preset +
                                    "' pins " + name + " = " +
                                    std::to_string(pin) + "; got " +
                                    std::to_string(value));
    }
}

}  // namespace

ModelPreset preset_from_name(std::string_view name) {
    if (name == "custom") return ModelPreset::Custom;
    if (name == "ising") return ModelPreset::Ising;
    if (name == "xxz") return ModelPreset::XXZ;
    if (name == "xyz") return ModelPreset::XYZ;
    throw std::invalid_argument(
        "unknown model '" + std::string(name) +
        "' (expected custom, ising, xxz, or xyz)");
}

std::string_view preset_name(ModelPreset preset) {
    switch (preset) {
        case ModelPreset::Custom: return "custom";
        case ModelPreset::Ising: return "ising";
        case ModelPreset::XXZ: return "xxz";
        case ModelPreset::XYZ: return "xyz";
    }
    throw std::invalid_argument("unknown model preset value");
}

ModelParams resolve_params(ModelPreset preset, const PartialParams& o) {
    ModelParams p;
    if (o.J) p.J = *o.J;
    if (o.gamma) p.gamma = *o.gamma;
    if (o.delta) p.delta = *o.delta;
    if (o.D) p.D = *o.D;
    if (o.omega) p.omega = *o.omega;
    if (o.omega0) p.omega0 = *o.omega0;

    // Unset anisotropies follow the preset pin; explicit values must agree
    // (validate_params reports the conflict). XYZ has no pinned value, so it
    // refuses to guess.
    switch (preset) {
        case ModelPreset::Custom:
            break;
        case ModelPreset::Ising:
            if (!o.gamma) p.gamma = 1.0;
            if (!o.delta) p.delta = 0.0;
            break;
        case ModelPreset::XXZ:
            if (!o.gamma) p.gamma = 0.0;
            break;
        case ModelPreset::XYZ:
            if (!o.gamma) {
                throw std::invalid_argument(
                    "model 'xyz' requires an explicit nonzero gamma");
            }
            if (!o.delta) {
                throw std::invalid_argument(
                    "model 'xyz' requires an explicit nonzero delta");
            }
            break;
    }
    validate_params(p, preset);
    return p;
}

void validate_params(const ModelParams& p, ModelPreset preset) {
    require_finite(p.J, "J");
    require_finite(p.gamma, "gamma");
    require_finite(p.delta, "delta");
    require_finite(p.D, "D");
    require_finite(p.omega, "omega");
    require_finite(p.omega0, "omega0");
    if (p.omega <= 0.0) {
        throw std::invalid_argument("parameter 'omega' must be positive");
    }
    if (p.omega0 <= 0.0) {
        throw std::invalid_argument("parameter 'omega0' must be positive");
    }
    switch (preset) {
        case ModelPreset::Custom:
            break;
        case ModelPreset::Ising:
            require_pin(p.gamma, 1.0, "gamma", "ising");
            require_pin(p.delta, 0.0, "delta", "ising");
            break;
        case ModelPreset::XXZ:
            require_pin(p.gamma, 0.0, "gamma", "xxz");
            break;
        case ModelPreset::XYZ:
            if (p.gamma == 0.0) {
                throw std::invalid_argument(
                    "model 'xyz' requires nonzero gamma");
            }
            if (p.delta == 0.0) {
                throw std::invalid_argument(
                    "model 'xyz' requires nonzero delta");
            }
            break;
    }
}

ComplexMatrix build_charging(const ModelParams& p) {
    validate_params(p, ModelPreset::Custom);
    return p.omega *
           (kron(pauli_x(), identity2()) + kron(identity2(), pauli_x()));
}

ComplexMatrix build_interaction(const ModelParams& p) {
    validate_params(p, ModelPreset::Custom);
    return p.J * ((1.0 + p.gamma) * kron(pauli_x(), pauli_x()) +
                  (1.0 - p.gamma) * kron(pauli_y(), pauli_y()) +
                  p.delta * kron(pauli_z(), pauli_z())) +
           p.D * (kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x()));
}

ComplexMatrix build_free(const ModelParams& p) {
    validate_params(p, ModelPreset::Custom);
    return p.omega0 *
           (kron(pauli_z(), identity2()) + kron(identity2(), pauli_z()));
}

HamiltonianSet build_all(const ModelParams& p, ModelPreset preset) {
    validate_params(p, preset);
    HamiltonianSet set;
    set.h_ch = build_charging(p);
    set.h_int = build_interaction(p);
    set.h_total = set.h_ch + set.h_int;
    set.h_free = build_free(p);
    return set;
}

StateVector initial_state() {
    StateVector psi = StateVector::Zero(4);
    psi(3) = 1.0;  // |down down>, energy -2 omega0 under h_free
    return psi;
}

}  // namespace qbsim
