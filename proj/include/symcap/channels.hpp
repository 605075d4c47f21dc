#pragma once

#include <vector>

#include "symcap/states.hpp"

namespace symcap {

// Gaussian channel (K, mu) acting on covariance matrices as alpha -> K^t alpha K + mu.
// Input and output mode counts are equal; interleaved coordinates internally.
struct GaussianChannel {
    ModeLayout layout;
    Eigen::MatrixXd K;
    Eigen::MatrixXd mu;
};

// Squeezed-noise family: K = k I, mu = diag(mu1, mu2), single mode.
// Attenuation (0<k<1), amplification (k>1), additive noise (k=1).
struct SqueezedNoiseParams {
    double k = 1.0;
    double mu1 = 0.5;
    double mu2 = 0.5;
};

struct ChannelCheck {
    bool valid = false;
    double min_cp_eigenvalue = 0.0;  // of mu + (i/2)(Delta - K^t Delta K)
    bool degenerate_K = false;
};

// Complete positivity: mu + (i/2)(Delta - K^t Delta K) >= 0 as a Hermitian
// matrix (the conjugate counterpart has the identical spectrum).
ChannelCheck validate_channel(const GaussianChannel& ch, double tol = kDefaultTol);

CovarianceMatrix apply(const GaussianChannel& ch, const CovarianceMatrix& alpha);

// Displacement covariance: z -> K^s z with K^s = Delta^{-1} K^t Delta.
Eigen::VectorXd displacement_action(const GaussianChannel& ch, const Eigen::VectorXd& z);

// Block direct sum realizing the n-fold product channel at phase-space level.
GaussianChannel tensor(const std::vector<GaussianChannel>& channels);

GaussianChannel squeezed_noise_channel(const SqueezedNoiseParams& p);

// Helper: block direct sum of interleaved covariances.
CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b);

}  // namespace symcap
