#pragma once

#include <vector>

#include "symcap/layout.hpp"

namespace symcap {

// Default residual tolerance for equality checks on unit-scaled matrices.
inline constexpr double kDefaultTol = 1e-9;

struct ComplexStructure {
    Eigen::MatrixXd entries;

    int modes() const { return static_cast<int>(entries.rows()) / 2; }
};

struct StructureCheck {
    bool valid = false;
    double square_residual = 0.0;      // ||J^2 + I||
    double skew_residual = 0.0;        // ||Delta J + J^t Delta||
    double min_eigenvalue = 0.0;       // of sym(Delta J)
};

struct WilliamsonResult {
    Eigen::MatrixXd S;                 // symplectic, alpha = S alpha_tilde S^t
    std::vector<double> nu;            // symplectic eigenvalues, descending
    Eigen::MatrixXd diagonal() const;  // alpha_tilde = diag(nu_1, nu_1, ..., nu_s, nu_s)
};

// Symmetric positive (semi)definite square root.
Eigen::MatrixXd symmetric_sqrt(const Eigen::MatrixXd& m);

// U diag(|m_j|) U^{-1} from the complex eigendecomposition. Rejects inputs
// whose eigenvector matrix condition number exceeds 1e8 (near-defective).
Eigen::MatrixXd matrix_abs(const Eigen::MatrixXd& m);

// The nu_j > 0 with spectrum(Delta^{-1} alpha) = {+-i nu_j}, sorted descending.
// Requires alpha symmetric positive definite; interleaved layout.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& alpha);

// alpha = S diag(nu_j, nu_j) S^t with S^t Delta S = Delta (interleaved).
WilliamsonResult williamson(const Eigen::MatrixXd& alpha);

// Orthogonal factor of the polar decomposition of Delta^{-1} mu in the
// Euclidean space (Z, mu). Commutes with Delta^{-1} mu.
ComplexStructure complex_structure_from_form(const Eigen::MatrixXd& mu);

// Orthogonal factor of the polar decomposition of the skew-adjoint operator
// `op` in the Euclidean space with inner-product matrix `metric` (pos. def.).
Eigen::MatrixXd skew_polar_orthogonal(const Eigen::MatrixXd& op, const Eigen::MatrixXd& metric);

StructureCheck is_complex_structure(const Eigen::MatrixXd& j, double tol = kDefaultTol);

// exp(phi J) = cos(phi) I + sin(phi) J; symplectic, commutes with J.
Eigen::MatrixXd gauge_rotation(const ComplexStructure& j, double phi);

}  // namespace symcap
