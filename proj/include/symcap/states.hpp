#pragma once

#include <optional>

#include "symcap/symplectic.hpp"

namespace symcap {

struct CovarianceMatrix {
    ModeLayout layout;
    Eigen::MatrixXd entries;
    Eigen::VectorXd mean;  // zero when defaulted

    static CovarianceMatrix centered(const Eigen::MatrixXd& alpha,
                                     Ordering ordering = Ordering::Interleaved);
};

// Quadratic energy operator H = sum epsilon_jk R_j R_k with budget Sp(alpha eps) <= E.
struct EnergyForm {
    Eigen::MatrixXd epsilon;
    double budget = 0.0;
};

struct StateCheck {
    bool valid = false;
    double min_symplectic_eigenvalue = 0.0;
};

// State validity: all symplectic eigenvalues >= 1/2.
StateCheck validate_state(const CovarianceMatrix& alpha, double tol = kDefaultTol);

// g(x) = (x+1) ln(x+1) - x ln x, g(0) = 0. Thermal-mode entropy in nats.
double g_function(double x);

// Von Neumann entropy, nats: sum_j g(nu_j - 1/2) over symplectic eigenvalues.
double entropy(const CovarianceMatrix& alpha);

// Matrix-function route 1/2 Sp g(abs(Delta^{-1} alpha) - I/2); cross-check only.
double entropy_matrix_form(const CovarianceMatrix& alpha);

// Vacuum of the complex structure J: covariance (1/2) Delta J, pure.
CovarianceMatrix vacuum_covariance(const ComplexStructure& j);

// Sp(alpha epsilon).
double energy(const CovarianceMatrix& alpha, const EnergyForm& form);

// Minimal energy of a valid state under epsilon: sum of symplectic
// eigenvalues of epsilon (attained by the J_H vacuum).
double minimal_energy(const Eigen::MatrixXd& epsilon);

// J_H from the polar decomposition of -epsilon Delta in the Euclidean space
// (Z, epsilon) with inner product -Delta epsilon Delta; [epsilon Delta, J_H] = 0.
ComplexStructure energy_complex_structure(const Eigen::MatrixXd& epsilon);

// Entropy of the truncated geometric photon-number distribution with mean
// nu - 1/2, renormalized over {0..truncation}. Independent entropy cross-check.
double thermal_entropy_oracle(double nu, int truncation);

}  // namespace symcap
