#pragma once

#include <random>

#include "qbsim/linalg.hpp"

namespace qbsim::test {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline StateVector random_state(std::mt19937& rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        psi(i) = Complex(gauss(rng), gauss(rng));
    }
    psi.normalize();
    return psi;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    return 0.5 * (m + m.adjoint().eval());
}

/// Haar-ish random unitary from the QR decomposition of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::mt19937& rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    const Eigen::HouseholderQR<ComplexMatrix> qr(m);
    return qr.householderQ();
}

/// Tensor product of two single-qubit pure states, qubit A first.
inline StateVector product_state(const StateVector& a, const StateVector& b) {
    StateVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            out(i * b.size() + j) = a(i) * b(j);
        }
    }
    return out;
}

inline ComplexMatrix bell_phi_plus_density() {
    StateVector bell = StateVector::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);
    return bell * bell.adjoint();
}

}  // namespace qbsim::test
