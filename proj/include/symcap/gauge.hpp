#pragma once

#include <optional>

#include "symcap/channels.hpp"

namespace symcap {

enum class GaugeStatus {
    CovariantSameJ,
    CovariantPair,
    Contravariant,
    NotForCanonicalJB,  // neither variant holds for the canonical J_B from mu
    Undetermined,
};

struct GaugeVerdict {
    GaugeStatus status = GaugeStatus::Undetermined;
    std::optional<ComplexStructure> J_A;
    std::optional<ComplexStructure> J_B;
    double commutation_residual = 0.0;   // ||K J_B - J_A K|| (or anticommuting variant)
    double mu_residual = 0.0;            // ||[Delta^{-1} mu, J_B]||
    double symmetry_residual = 0.0;      // criterion witness symmetry defect
    double min_witness_eigenvalue = 0.0; // criterion witness PSD margin
};

struct PairCheck {
    bool valid = false;
    double k_residual = 0.0;
    double mu_residual = 0.0;
};

// Same-J gauge covariance: [K, J] = 0 and [Delta^{-1} mu, J] = 0.
PairCheck check_gauge_covariant_same_J(const GaussianChannel& ch, const ComplexStructure& j,
                                       double tol = 1e-8);

// Input/output pair form: K J_B - J_A K = 0 and [Delta^{-1} mu, J_B] = 0.
// With contravariant = true the first condition becomes K J_B + J_A K = 0.
PairCheck check_gauge_covariant_pair(const GaussianChannel& ch, const ComplexStructure& j_a,
                                     const ComplexStructure& j_b, bool contravariant = false,
                                     double tol = 1e-8);

// K^t Delta K Delta^{-1} in Blocked coordinates, via the block formula
// [[A^t D - C^t B, C^t A - A^t C], [B^t D - D^t B, D^t A - B^t C]].
Eigen::MatrixXd block_operator(const GaussianChannel& ch);

struct CriterionResult {
    bool holds = false;
    double symmetry_residual = 0.0;
    double min_eigenvalue = 0.0;
    std::optional<ComplexStructure> J_A;  // K J_B K^{-1}, present when the criterion holds
};

// Existence test for J_A = K J_B K^{-1}: (K^t Delta K Delta^{-1}) Delta J_B
// symmetric and positive semidefinite. Requires nondegenerate K.
// With contravariant = true the witness is negated and J_A = -K J_B K^{-1}.
CriterionResult covariance_criterion(const GaussianChannel& ch, const ComplexStructure& j_b,
                                     bool contravariant = false);

// Canonical classification against J_B = complex_structure_from_form(mu).
// Single mode: det K > 0 is covariant, det K < 0 contravariant, always.
GaugeVerdict classify(const GaussianChannel& ch);

}  // namespace symcap
