#include "qbsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace qbsim {

void TimeGrid::validate() const {
    if (!std::isfinite(t_start) || !std::isfinite(t_end)) {
        throw std::invalid_argument("time grid bounds must be finite");
    }
    if (t_start < 0.0) {
        throw std::invalid_argument("time grid must start at t >= 0");
    }
    if (t_end <= t_start) {
        throw std::invalid_argument("time grid needs t_end > t_start");
    }
    if (steps < 2) {
        throw std::invalid_argument("time grid needs at least 2 steps");
    }
}

double TimeGrid::dt() const {
    validate();
    return (t_end - t_start) / static_cast<double>(steps - 1);
}

std::vector<double> TimeGrid::times() const {
    validate();
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double h = (t_end - t_start) / static_cast<double>(steps - 1);
    for (int k = 0; k < steps; ++k) {
        out[static_cast<std::size_t>(k)] = t_start + h * k;
    }
    out.back() = t_end;  // land on the endpoint exactly despite rounding
    return out;
}

Trajectory evolve(const ComplexMatrix& h_total, const StateVector& psi0,
                  const TimeGrid& grid) {
    grid.validate();
    validate_state(psi0, h_total.rows());
    const EigenDecomposition es = eigh(h_total);

    // psi(t) = V exp(-i L t) V^dagger psi0: decompose psi0 once, then each
    // grid point costs one phase rotation in the eigenbasis.
    const StateVector weights = es.eigenvectors.adjoint() * psi0;

    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(static_cast<std::size_t>(grid.steps));
    for (double t : grid.times()) {
        if (t == 0.0) {
            // U(0) is the identity exactly; skip the reconstruction so the
            // initial record carries no round-off.
            traj.states.push_back(psi0);
            continue;
        }
        const Eigen::VectorXcd phases =
            (Complex(0.0, -t) * es.eigenvalues.cast<Complex>()).array().exp();
        traj.states.push_back(es.eigenvectors *
                              phases.cwiseProduct(weights));
    }
    return traj;
}

double t_min(double omega) {
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("t_min: omega must be positive");
    }
    return M_PI / (2.0 * omega);
}

double parallel_ergotropy(double t, double omega, double omega0) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("parallel_ergotropy: t must be >= 0");
    }
    if (!std::isfinite(omega) || omega <= 0.0 || !std::isfinite(omega0) ||
        omega0 <= 0.0) {
        throw std::invalid_argument(
            "parallel_ergotropy: omega and omega0 must be positive");
    }
    const double s = std::sin(omega * t);
    return 4.0 * omega0 * s * s;
}

}  // namespace qbsim
