#pragma once

#include <vector>

#include "qbsim/linalg.hpp"

namespace qbsim {

/// Uniform inclusive time grid: steps samples from t_start to t_end.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    int steps = 0;

    bool operator==(const TimeGrid&) const = default;

    /// Throws std::invalid_argument unless t_start >= 0, t_end > t_start,
    /// steps >= 2, and all fields are finite.
    void validate() const;

    /// Grid spacing (t_end - t_start) / (steps - 1).
    double dt() const;

    /// All sample times; the final entry is exactly t_end.
    std::vector<double> times() const;
};

/// A state per grid point, evolved from one initial state.
struct Trajectory {
    TimeGrid grid;
    std::vector<StateVector> states;
};

/// Exact evolution states[k] = exp(-i h_total t_k) psi0, computed from a
/// single eigendecomposition of h_total (no step-size error). Throws
/// std::invalid_argument on non-Hermitian h_total, dimension mismatch, or an
/// invalid grid/state.
Trajectory evolve(const ComplexMatrix& h_total, const StateVector& psi0,
                  const TimeGrid& grid);

/// Minimal full-charge time pi / (2 omega) of the parallel protocol.
/// Throws std::invalid_argument unless omega > 0 and finite.
double t_min(double omega);

/// Closed-form ergotropy of the non-interacting (J = D = 0) protocol:
/// 4 omega0 sin^2(omega t). Throws std::invalid_argument on t < 0 or
/// non-positive omega / omega0.
double parallel_ergotropy(double t, double omega, double omega0);

}  // namespace qbsim
