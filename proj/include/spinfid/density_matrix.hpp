#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinfid {

using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;

/// Thrown when a matrix fails to be a valid three-spin density matrix.
class InvalidStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 8x8 Hermitian, unit-trace, positive-semidefinite matrix over the
/// three-spin basis |s1 s2 s3> with up = 0, down = 1 and row index
/// 4*b1 + 2*b2 + b3, so |uuu> is index 0 and |ddd> index 7. Validated on
/// construction.
class DensityMatrix8 {
public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kEigenvalueFloor = -1e-10;

    explicit DensityMatrix8(const Matrix8cd& m) : m_(m) { validate(); }

    const Matrix8cd& matrix() const noexcept { return m_; }
    std::complex<double> operator()(int row, int col) const { return m_(row, col); }

    double purity() const { return (m_ * m_).trace().real(); }

private:
    void validate() const {
        const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
        if (!(herm <= kHermitianTol)) {
            throw InvalidStateError("DensityMatrix8: not Hermitian, max |A - A^dag| = " +
                                    std::to_string(herm));
        }
        const double tr = m_.trace().real();
        if (!(std::abs(tr - 1.0) <= kTraceTol)) {
            throw InvalidStateError("DensityMatrix8: trace is " + std::to_string(tr) +
                                    ", expected 1");
        }
        Eigen::SelfAdjointEigenSolver<Matrix8cd> solver(m_, Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (!(min_eig >= kEigenvalueFloor)) {
            throw InvalidStateError("DensityMatrix8: not positive semidefinite, min eigenvalue = " +
                                    std::to_string(min_eig));
        }
    }

    Matrix8cd m_;
};

namespace detail {

/// PSD square root via Hermitian eigendecomposition. Eigenvalues in
/// [floor, 0) are clamped to zero and anything below the floor is an error.
/// Eigenvalues within 1e-14 of zero relative to the largest are snapped to
/// exact zero: the square root would otherwise amplify rounding noise of
/// rank-deficient states from O(eps) to O(sqrt(eps)).
inline Matrix8cd psd_sqrt(const Matrix8cd& m) {
    Eigen::SelfAdjointEigenSolver<Matrix8cd> solver(m);
    Eigen::Matrix<double, 8, 1> eigs = solver.eigenvalues();
    const double zero_tol = 1e-14 * std::fmax(eigs.maxCoeff(), 0.0);
    for (int i = 0; i < 8; ++i) {
        if (eigs(i) < DensityMatrix8::kEigenvalueFloor) {
            throw InvalidStateError("psd_sqrt: eigenvalue " + std::to_string(eigs(i)) +
                                    " below the PSD floor");
        }
        eigs(i) = eigs(i) <= zero_tol ? 0.0 : std::sqrt(eigs(i));
    }
    return solver.eigenvectors() * eigs.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace detail

/// Uhlmann fidelity F(rho, sigma) = [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2.
/// Symmetric in its arguments; equals Tr(rho sigma) when rho is pure.
///
/// Evaluated as the squared trace norm of sqrt(sigma) sqrt(rho): the
/// singular values of that product are the eigenvalues of the matrix square
/// root above, and rounding enters them linearly instead of under a square
/// root, which keeps rank-deficient states accurate.
inline double uhlmann_fidelity(const DensityMatrix8& rho, const DensityMatrix8& sigma) {
    const Matrix8cd a = detail::psd_sqrt(sigma.matrix()) * detail::psd_sqrt(rho.matrix());
    Eigen::JacobiSVD<Matrix8cd> svd(a);
    const double trace_norm = svd.singularValues().sum();
    return trace_norm * trace_norm;
}

/// Fast path for a pure rho: F = Tr(rho sigma). The rank-1 precondition is
/// checked through the largest eigenvalue (trace-1 PSD with max eigenvalue 1
/// has rank 1).
inline double pure_fidelity_against(const DensityMatrix8& rho_pure, const DensityMatrix8& sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix8cd> solver(rho_pure.matrix(), Eigen::EigenvaluesOnly);
    const double max_eig = solver.eigenvalues().maxCoeff();
    if (!(std::abs(max_eig - 1.0) <= 1e-10)) {
        throw std::invalid_argument("pure_fidelity_against: rho is not pure, largest eigenvalue = " +
                                    std::to_string(max_eig));
    }
    return (rho_pure.matrix() * sigma.matrix()).trace().real();
}

}  // namespace spinfid
