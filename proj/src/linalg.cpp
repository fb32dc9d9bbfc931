#include "qbsim/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbsim {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix make_pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix make_pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

ComplexMatrix make_pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = make_pauli_x();
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = make_pauli_y();
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = make_pauli_z();
    return m;
}

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw std::invalid_argument("kron: both factors must be 2x2");
    }
    ComplexMatrix out(4, 4);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

EigenDecomposition eigh(const ComplexMatrix& h) {
    if (!is_hermitian(h)) {
        throw std::invalid_argument("eigh: input is not Hermitian within 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigh: eigendecomposition failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_unitary(const ComplexMatrix& h, double t) {
    return expm_unitary(eigh(h), t);
}

ComplexMatrix expm_unitary(const EigenDecomposition& es, double t) {
    const Eigen::VectorXcd phases =
        (Complex(0.0, -t) * es.eigenvalues.cast<Complex>()).array().exp();
    return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

ComplexMatrix density_matrix(const StateVector& psi) {
    validate_state(psi, psi.size());
    return psi * psi.adjoint();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
    validate_density_matrix(rho, 4);
    // Composite index 2a + b: qubit A is the high bit, qubit B the low bit.
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            for (Eigen::Index k = 0; k < 2; ++k) {
                if (keep == Subsystem::A) {
                    out(i, j) += rho(2 * i + k, 2 * j + k);
                } else {
                    out(i, j) += rho(2 * k + i, 2 * k + j);
                }
            }
        }
    }
    return out;
}

double purity(const ComplexMatrix& rho) {
    validate_density_matrix(rho, rho.rows());
    return (rho * rho).trace().real();
}

void validate_state(const StateVector& psi, Eigen::Index dim) {
    if (psi.size() != dim) {
        throw std::invalid_argument("state vector has dimension " +
                                    std::to_string(psi.size()) + ", expected " +
                                    std::to_string(dim));
    }
    if (std::abs(psi.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

void validate_density_matrix(const ComplexMatrix& rho, Eigen::Index dim) {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("density matrix is not " +
                                    std::to_string(dim) + "x" +
                                    std::to_string(dim));
    }
    if (!is_hermitian(rho)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > kTraceTol ||
        std::abs(rho.trace().imag()) > kTraceTol) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error(
            "density matrix validation: eigendecomposition failed");
    }
    if (solver.eigenvalues().minCoeff() < -kPsdTol) {
        throw std::invalid_argument(
            "density matrix has a negative eigenvalue beyond tolerance");
    }
}

}  // namespace qbsim
