#pragma once

#include <optional>
#include <vector>

#include "symcap/gauge.hpp"

namespace symcap {

// Truth of the four assumptions behind the capacity identity
// C = S_max - S_min. Additivity is never computed; it is implied by theory
// exactly when the gauge-covariance hypothesis holds.
struct ConditionReport {
    bool maximizer_found = false;
    bool minimizer_is_vacuum = false;   // gauge-covariance verdict for the used J
    bool threshold_ok = false;
    enum class Additivity { ByTheory, Unknown } additivity = Additivity::Unknown;
};

struct OptimizerDiagnostics {
    int evaluations = 0;
    bool converged = false;
    double constraint_residual = 0.0;  // |Sp(alpha_opt eps) - E|
};

struct CapacityReport {
    std::optional<double> capacity;  // nats; withheld when the threshold fails
    double S_max = 0.0;
    double S_min = 0.0;
    double upper_bound = 0.0;        // S_max - S_min, always reported
    CovarianceMatrix alpha_opt;
    bool threshold_ok = false;
    double threshold_margin = 0.0;   // min eigenvalue of alpha_opt - (1/2) Delta J
    std::optional<Eigen::MatrixXd> ensemble_covariance;
    ComplexStructure J_used;
    ConditionReport conditions;
    OptimizerDiagnostics diagnostics;
    double E = 0.0;
};

struct SqueezedNoiseSolution {
    std::optional<double> capacity;  // nats, present when E >= E_threshold
    double E_threshold = 0.0;
    double S_max = 0.0;
    double S_min = 0.0;
    double alpha1_opt = 0.0;
    double alpha2_opt = 0.0;
    double eta = 0.0;  // sqrt(mu2/mu1)
};

struct MaxEntropyResult {
    double S_max = 0.0;
    CovarianceMatrix alpha_opt;
    OptimizerDiagnostics diagnostics;
};

// Maximize the output entropy over valid covariances with Sp(alpha eps) <= E.
// Multi-start simplex search over a Williamson-style parameterization; the
// energy constraint is active at the optimum and enforced exactly.
MaxEntropyResult max_output_entropy(const GaussianChannel& ch, const EnergyForm& form,
                                    unsigned seed = 0);

// Output entropy of the J-vacuum.
double min_output_entropy_gaussian(const GaussianChannel& ch, const ComplexStructure& j);

struct ThresholdCheck {
    bool ok = false;
    double min_eigenvalue = 0.0;  // of alpha_opt - (1/2) Delta J
};

// alpha_opt >= (1/2) Delta J.
ThresholdCheck threshold_check(const CovarianceMatrix& alpha_opt, const ComplexStructure& j,
                               double tol = 1e-7);

// alpha_opt - (1/2) Delta J, the covariance of the optimal displacement
// ensemble. Requires the threshold to hold.
Eigen::MatrixXd ensemble_covariance(const CovarianceMatrix& alpha_opt, const ComplexStructure& j);

CapacityReport capacity(const GaussianChannel& ch, const EnergyForm& form,
                        const ComplexStructure& j, unsigned seed = 0);

// Default J: the canonical complex structure of mu.
CapacityReport capacity(const GaussianChannel& ch, const EnergyForm& form, unsigned seed = 0);

// Closed-form single-mode squeezed-noise solution, used as an oracle.
SqueezedNoiseSolution squeezed_closed_form(const SqueezedNoiseParams& p, double E);

std::vector<CapacityReport> capacity_sweep(const GaussianChannel& ch,
                                           const Eigen::MatrixXd& epsilon,
                                           const std::vector<double>& energies,
                                           unsigned seed = 0);

}  // namespace symcap
