#include "symcap/states.hpp"

#include <cmath>

namespace symcap {

CovarianceMatrix CovarianceMatrix::centered(const Eigen::MatrixXd& alpha, Ordering ordering) {
    CovarianceMatrix c;
    c.layout = ModeLayout{static_cast<int>(alpha.rows()) / 2, ordering};
    c.entries = alpha;
    c.mean = Eigen::VectorXd::Zero(alpha.rows());
    return c;
}

namespace {

// All entropy internals assume interleaved coordinates.
Eigen::MatrixXd to_interleaved(const CovarianceMatrix& alpha) {
    return reorder(alpha.entries, alpha.layout.ordering, Ordering::Interleaved);
}

}  // namespace

StateCheck validate_state(const CovarianceMatrix& alpha, double tol) {
    auto nu = symplectic_eigenvalues(to_interleaved(alpha));
    StateCheck c;
    c.min_symplectic_eigenvalue = nu.back();
    c.valid = c.min_symplectic_eigenvalue >= 0.5 - tol;
    return c;
}

double g_function(double x) {
    if (x < -1e-12) throw std::invalid_argument("g_function: negative argument");
    if (x <= 0.0) return 0.0;
    return (x + 1.0) * std::log1p(x) - x * std::log(x);
}

double entropy(const CovarianceMatrix& alpha) {
    auto check = validate_state(alpha);
    if (!check.valid) throw std::invalid_argument("entropy: covariance is not a valid state");
    double s = 0.0;
    for (double nu : symplectic_eigenvalues(to_interleaved(alpha)))
        s += g_function(std::max(nu, 0.5) - 0.5);
    return s;
}

double entropy_matrix_form(const CovarianceMatrix& alpha) {
    Eigen::MatrixXd a = to_interleaved(alpha);
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXd delta = symplectic_form(ModeLayout{n / 2, Ordering::Interleaved});
    Eigen::MatrixXd m = matrix_abs(delta.inverse() * a) - 0.5 * Eigen::MatrixXd::Identity(n, n);
    // g applied as a matrix function through the eigendecomposition of abs().
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    std::complex<double> tr = 0.0;
    Eigen::VectorXcd d = es.eigenvalues();
    for (int i = 0; i < n; ++i) tr += g_function(std::max(d(i).real(), 0.0));
    return 0.5 * tr.real();
}

CovarianceMatrix vacuum_covariance(const ComplexStructure& j) {
    auto check = is_complex_structure(j.entries);
    if (!check.valid) throw std::invalid_argument("vacuum_covariance: invalid complex structure");
    const int n = static_cast<int>(j.entries.rows());
    Eigen::MatrixXd delta = symplectic_form(ModeLayout{n / 2, Ordering::Interleaved});
    Eigen::MatrixXd alpha = 0.5 * delta * j.entries;
    return CovarianceMatrix::centered(0.5 * (alpha + alpha.transpose().eval()));
}

double energy(const CovarianceMatrix& alpha, const EnergyForm& form) {
    Eigen::MatrixXd a = to_interleaved(alpha);
    if (a.rows() != form.epsilon.rows())
        throw std::invalid_argument("energy: dimension mismatch");
    return (a * form.epsilon).trace();
}

double minimal_energy(const Eigen::MatrixXd& epsilon) {
    double e = 0.0;
    for (double w : symplectic_eigenvalues(epsilon)) e += w;
    return e;
}

ComplexStructure energy_complex_structure(const Eigen::MatrixXd& epsilon) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> chk(epsilon);
    if (chk.info() != Eigen::Success || chk.eigenvalues()(0) <= 1e-12 * (1.0 + epsilon.norm()))
        throw std::invalid_argument("energy_complex_structure: epsilon not positive definite");
    const int n = static_cast<int>(epsilon.rows());
    Eigen::MatrixXd delta = symplectic_form(ModeLayout{n / 2, Ordering::Interleaved});
    Eigen::MatrixXd metric = -delta * epsilon * delta;
    return ComplexStructure{skew_polar_orthogonal(-epsilon * delta, metric)};
}

double thermal_entropy_oracle(double nu, int truncation) {
    if (nu < 0.5) throw std::invalid_argument("thermal_entropy_oracle: nu below 1/2");
    if (truncation < 1) throw std::invalid_argument("thermal_entropy_oracle: truncation < 1");
    double mean = nu - 0.5;
    if (mean <= 0.0) return 0.0;
    // p_n = mean^n / (mean+1)^{n+1}, summed in log space and renormalized.
    double log_ratio = std::log(mean) - std::log1p(mean);
    double z = 0.0, h = 0.0;
    for (int n = 0; n <= truncation; ++n) {
        double logp = n * log_ratio - std::log1p(mean);
        double p = std::exp(logp);
        z += p;
        h -= p * logp;
    }
    // Renormalized entropy: -sum (p/z) ln(p/z) = h/z + ln z.
    return h / z + std::log(z);
}

}  // namespace symcap
