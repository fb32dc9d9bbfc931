#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qbsim {

using Complex = std::complex<double>;

/// Dense complex matrix; this library only ever produces 2x2 and 4x4 instances.
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense complex column vector holding a pure state (unit norm).
using StateVector = Eigen::VectorXcd;

/// Hermitian eigendecomposition H = V diag(w) V^dagger with eigenvalues
/// ascending and orthonormal eigenvector columns.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Tolerance for treating a matrix as Hermitian (max entrywise deviation).
inline constexpr double kHermitianTol = 1e-12;
/// Tolerance on |trace - 1| when validating a density matrix.
inline constexpr double kTraceTol = 1e-10;
/// A density matrix is accepted as positive semidefinite while its smallest
/// eigenvalue stays above -kPsdTol.
inline constexpr double kPsdTol = 1e-10;
/// Tolerance on |norm - 1| when validating a state vector.
inline constexpr double kNormTol = 1e-10;

/// Which qubit a two-qubit partial trace keeps.
enum class Subsystem { A, B };

/// Pauli matrices and the 2x2 identity in the basis {|up>, |down>} with
/// sigma_z |up> = +|up>.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

/// Kronecker product of two 2x2 matrices in the fixed two-qubit basis
/// {|uu>, |ud>, |du>, |dd>}. Throws std::invalid_argument unless both inputs
/// are 2x2.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// True when max_ij |m(i,j) - conj(m(j,i))| <= tol. Non-square inputs are
/// never Hermitian.
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Eigendecomposition of a Hermitian matrix (ascending eigenvalues,
/// orthonormal columns). Throws std::invalid_argument on non-Hermitian input.
EigenDecomposition eigh(const ComplexMatrix& h);

/// exp(-i h t) computed spectrally from eigh(h); exact for time-independent
/// Hermitian generators. Throws like eigh.
ComplexMatrix expm_unitary(const ComplexMatrix& h, double t);

/// Same as above but reuses an existing decomposition (one eigh per
/// Hamiltonian, any number of time points).
ComplexMatrix expm_unitary(const EigenDecomposition& es, double t);

/// Outer product |psi><psi| of a validated pure state.
ComplexMatrix density_matrix(const StateVector& psi);

/// Reduced density matrix of one qubit of a validated 4x4 density matrix.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// Tr(rho^2) of a validated density matrix; in [1/2, 1] for a qubit.
double purity(const ComplexMatrix& rho);

/// Throws std::invalid_argument unless psi has the given dimension and unit
/// norm within kNormTol.
void validate_state(const StateVector& psi, Eigen::Index dim);

/// Throws std::invalid_argument unless rho is dim x dim, Hermitian within
/// kHermitianTol, unit trace within kTraceTol, and PSD within kPsdTol.
void validate_density_matrix(const ComplexMatrix& rho, Eigen::Index dim);

}  // namespace qbsim
