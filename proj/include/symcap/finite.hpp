#pragma once

#include <vector>

#include <Eigen/Dense>

namespace symcap {

// Finite-dimensional channel in Kraus form: rho -> sum_i A_i rho A_i^*.
struct FiniteChannel {
    int dim = 2;
    std::vector<Eigen::MatrixXcd> kraus;
};

struct Ensemble {
    std::vector<double> probabilities;
    std::vector<Eigen::MatrixXcd> states;
};

// rho -> (1-p) rho + p I/d.
FiniteChannel depolarizing_channel(int dim, double p);

FiniteChannel identity_channel(int dim);

bool is_trace_preserving(const FiniteChannel& ch, double tol = 1e-10);

Eigen::MatrixXcd apply(const FiniteChannel& ch, const Eigen::MatrixXcd& rho);

// -sum lambda ln lambda, nats, with 0 ln 0 = 0.
double vn_entropy(const Eigen::MatrixXcd& rho);

struct MinEntropyResult {
    double entropy = 0.0;
    Eigen::VectorXcd minimizer;
    bool converged = false;
};

// Minimum of S(Phi[|psi><psi|]) over unit vectors; multi-start sphere search.
MinEntropyResult min_output_entropy(const FiniteChannel& ch, int starts = 16, unsigned seed = 0);

struct ChiResult {
    double chi = 0.0;
    Ensemble ensemble;
    bool converged = false;
};

// Maximize S(Phi[rho_bar]) - sum pi_x S(Phi[rho_x]) over ensembles of at most
// max_states pure states, alternating probability and state moves.
ChiResult chi_capacity_bruteforce(const FiniteChannel& ch, int max_states, int starts = 16,
                                  unsigned seed = 0);

struct EqualityReport {
    double chi = 0.0;
    double max_minus_min = 0.0;  // S(Phi[I/d]) - min output entropy
    double gap = 0.0;
    bool verified = false;       // |gap| within the optimizer-limited tolerance
};

// Checks chi-capacity against S(Phi[I/d]) - S_min for channels the caller
// asserts to be irreducibly covariant.
EqualityReport verify_covariant_equality(const FiniteChannel& ch, double tol = 1e-3,
                                         unsigned seed = 0);

struct AdditivityReport {
    double single_min_entropy = 0.0;
    double pair_min_entropy = 0.0;
    double gap = 0.0;            // pair - 2 * single
    bool no_violation = false;   // gap >= -1e-6
};

// Searches for entangled inputs of Phi x Phi beating twice the single-copy
// minimal output entropy. A sampling check, not a proof.
AdditivityReport additivity_spotcheck(const FiniteChannel& ch, int samples, unsigned seed = 0);

}  // namespace symcap
