#pragma once

#include <vector>

#include "qbsim/dynamics.hpp"
#include "qbsim/linalg.hpp"

namespace qbsim {

/// All observables evaluated at one time point. Units with hbar = 1:
/// t in 1/omega, ergotropy and mean_energy in omega0, power in omega0*omega.
struct ObservableRecord {
    double t = 0.0;
    double ergotropy = 0.0;    ///< extractable work zeta, in [0, 4 omega0]
    double power = 0.0;        ///< zeta / t (0 at t = 0)
    double coherence = 0.0;    ///< aggregate first-order coherence, in [0, 1]
    double steering = 0.0;     ///< maximal CJWR violation, in [0, sqrt(3)]
    double mean_energy = 0.0;  ///< Tr(rho h_free), in [-2 omega0, 2 omega0]

    bool operator==(const ObservableRecord&) const = default;
};

/// Two-site Pauli correlations T(i, j) = Tr(rho sigma_i x sigma_j),
/// i, j in {x, y, z}; every entry lies in [-1, 1].
using CorrelationMatrix = Eigen::Matrix3d;

/// Which series find_peak searched.
enum class PeakKind { Ergotropy, Power };

/// Location and height of the maximum of one observable over a window.
struct PeakReport {
    double t_peak = 0.0;
    double value_peak = 0.0;
    PeakKind kind = PeakKind::Ergotropy;
};

/// Maximal unitarily extractable work: Tr(rho h_free) minus the passive-state
/// energy sum_k r_k eps_k (rho eigenvalues r descending, h_free eigenvalues
/// eps ascending). Rounding negatives above -1e-12 clamp to 0; anything lower
/// throws std::runtime_error. Throws std::invalid_argument on an invalid
/// density matrix or non-Hermitian h_free.
double ergotropy(const ComplexMatrix& rho, const ComplexMatrix& h_free);

/// Charging power zeta / t, defined as 0 at t = 0 (zeta vanishes
/// quadratically from the empty state). Throws std::invalid_argument on
/// negative t.
double power(double zeta, double t);

/// Single-qubit first-order coherence sqrt(max(0, 2 Tr(rho_k^2) - 1)),
/// clamped into [0, 1].
double first_order_coherence_single(const ComplexMatrix& rho_k);

/// Aggregate coherence sqrt((Q_A^2 + Q_B^2) / 2) over both reduced states.
double first_order_coherence(const ComplexMatrix& rho);

/// Correlation matrix of a validated 4x4 density matrix. Any |imaginary
/// part| above 1e-8 in a correlation signals an invalid input and throws
/// std::invalid_argument.
CorrelationMatrix correlation_matrix(const ComplexMatrix& rho);

/// Maximal violation of the three-setting CJWR steering inequality,
/// sqrt(Tr(T^T T)). With the measurement triads at their optimum the
/// inequality bound reduces to (1/sqrt(3)) max over orthonormal triads {a_i}
/// of sum_i ||T^T a_i||; the achievable ||T^T a_i||^2 vectors are majorized
/// by the eigenvalues of T T^T and sum_i sqrt(x_i) is Schur-concave, so the
/// balanced point is optimal and the maximum equals the Frobenius norm of T.
/// Values above 1 certify steerability.
double steering_max(const CorrelationMatrix& t_corr);

/// Independent check of steering_max: multi-start compass ascent of
/// (1/sqrt(3)) sum_i ||T^T R e_i|| over rotations R (axis-angle, 3
/// parameters), halving the step until it drops below tol. Deterministic
/// (fixed internal seed); returns the best value found, a lower bound on the
/// true maximum. Throws std::invalid_argument when restarts < 1 or tol <= 0.
double steering_bruteforce(const CorrelationMatrix& t_corr, int restarts,
                           double tol);

/// Evaluate every observable at every trajectory point
/// (rho(t) = |psi(t)><psi(t)| formed internally).
std::vector<ObservableRecord> record_trajectory(const Trajectory& traj,
                                                const ComplexMatrix& h_free);

/// Maximum of one observable across records: grid argmax (ties to the
/// earliest time) refined by parabolic interpolation through the three
/// surrounding points when the maximum is interior. Throws
/// std::invalid_argument on fewer than two records.
PeakReport find_peak(const std::vector<ObservableRecord>& records,
                     PeakKind kind);

}  // namespace qbsim
