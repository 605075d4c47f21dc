#include "symcap/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace symcap {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": not square");
    double scale = std::max(1.0, m.norm());
    if ((m - m.transpose()).norm() > 1e-9 * scale)
        throw std::invalid_argument(std::string(what) + ": not symmetric");
}

Eigen::MatrixXd interleaved_delta(int dim) {
    return symplectic_form(ModeLayout{dim / 2, Ordering::Interleaved});
}

}  // namespace

Eigen::MatrixXd WilliamsonResult::diagonal() const {
    const int s = static_cast<int>(nu.size());
    Eigen::VectorXd d(2 * s);
    for (int j = 0; j < s; ++j) d(2 * j) = d(2 * j + 1) = nu[j];
    return d.asDiagonal();
}

Eigen::MatrixXd symmetric_sqrt(const Eigen::MatrixXd& m) {
    require_symmetric(m, "symmetric_sqrt");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd d = es.eigenvalues();
    for (int i = 0; i < d.size(); ++i) {
        if (d(i) < -1e-12 * (1.0 + m.norm()))
            throw std::invalid_argument("symmetric_sqrt: matrix not positive semidefinite");
        d(i) = std::sqrt(std::max(d(i), 0.0));
    }
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd matrix_abs(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_abs: not square");
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("matrix_abs: eigensolver failed");
    Eigen::MatrixXcd u = es.eigenvectors();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u);
    double cond = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    if (!std::isfinite(cond) || cond > 1e8)
        throw std::invalid_argument("matrix_abs: input is defective or near-defective");
    Eigen::VectorXcd d = es.eigenvalues();
    for (int i = 0; i < d.size(); ++i) d(i) = std::abs(d(i));
    Eigen::MatrixXcd out = u * d.asDiagonal() * u.inverse();
    return out.real();
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& alpha) {
    require_symmetric(alpha, "symplectic_eigenvalues");
    const int n = static_cast<int>(alpha.rows());
    Eigen::MatrixXd l = symmetric_sqrt(alpha);
    if ((alpha - l * l).norm() > 1e-8 * (1.0 + alpha.norm()) ||
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(alpha).eigenvalues()(0) <= 0.0)
        throw std::invalid_argument("symplectic_eigenvalues: alpha not positive definite");
    // i L Delta^{-1} L is Hermitian with eigenvalues {+-nu_j}.
    Eigen::MatrixXd a = l * interleaved_delta(n).inverse() * l;
    Eigen::MatrixXcd h = std::complex<double>(0, 1) * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    std::vector<double> nu;
    for (int i = n / 2; i < n; ++i) nu.push_back(es.eigenvalues()(i));
    std::sort(nu.begin(), nu.end(), std::greater<double>());
    return nu;
}

WilliamsonResult williamson(const Eigen::MatrixXd& alpha) {
    require_symmetric(alpha, "williamson");
    const int n = static_cast<int>(alpha.rows());
    const int s = n / 2;
    Eigen::MatrixXd delta = interleaved_delta(n);
    Eigen::MatrixXd l = symmetric_sqrt(alpha);
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> chk(alpha);
        if (chk.eigenvalues()(0) <= 0.0)
            throw std::invalid_argument("williamson: alpha not positive definite");
    }
    // Antisymmetric A = L Delta L; its normal form carries the symplectic spectrum.
    Eigen::MatrixXd a = l * delta * l;
    Eigen::MatrixXcd h = std::complex<double>(0, 1) * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);

    // Positive-eigenvalue eigenvectors u_j = (x_j + i y_j)/sqrt(2); the pairs
    // (y_j, x_j) assemble an orthogonal O with O^t A O in interleaved normal form.
    // Hermitian orthogonality between the +nu and -nu eigenspaces makes the
    // collected real columns orthonormal, including inside degenerate nu groups.
    struct Mode { double nu; Eigen::VectorXd y, x; };
    std::vector<Mode> ms;
    for (int i = 0; i < n; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev <= 0) continue;
        Eigen::VectorXcd u = es.eigenvectors().col(i);
        ms.push_back({ev, std::sqrt(2.0) * u.imag(), std::sqrt(2.0) * u.real()});
    }
    if (static_cast<int>(ms.size()) != s)
        throw std::runtime_error("williamson: symplectic spectrum pairing failed");
    std::sort(ms.begin(), ms.end(), [](const Mode& a, const Mode& b) { return a.nu > b.nu; });

    Eigen::MatrixXd o(n, n);
    Eigen::VectorXd dinv(n);
    WilliamsonResult res;
    for (int j = 0; j < s; ++j) {
        o.col(2 * j) = ms[j].y;
        o.col(2 * j + 1) = ms[j].x;
        dinv(2 * j) = dinv(2 * j + 1) = 1.0 / std::sqrt(ms[j].nu);
        res.nu.push_back(ms[j].nu);
    }
    res.S = l * o * dinv.asDiagonal();
    return res;
}

Eigen::MatrixXd skew_polar_orthogonal(const Eigen::MatrixXd& op, const Eigen::MatrixXd& metric) {
    require_symmetric(metric, "skew_polar_orthogonal metric");
    Eigen::MatrixXd l = symmetric_sqrt(metric);
    Eigen::PartialPivLU<Eigen::MatrixXd> linv(l);
    // Conjugate into the standard Euclidean space, where the operator is antisymmetric.
    Eigen::MatrixXd at = l * op * linv.inverse();
    double skew = (at + at.transpose()).norm();
    if (skew > 1e-7 * (1.0 + at.norm()))
        throw std::invalid_argument("skew_polar_orthogonal: operator not skew-adjoint in the given metric");
    at = 0.5 * (at - at.transpose().eval());
    Eigen::MatrixXd abs_at = symmetric_sqrt((at.transpose() * at).eval());
    Eigen::MatrixXd jt = at * abs_at.inverse();
    return linv.inverse() * jt * l;
}

ComplexStructure complex_structure_from_form(const Eigen::MatrixXd& mu) {
    require_symmetric(mu, "complex_structure_from_form");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> chk(mu);
    if (chk.eigenvalues()(0) <= 1e-12 * (1.0 + mu.norm()))
        throw std::invalid_argument("complex_structure_from_form: mu not positive definite");
    const int n = static_cast<int>(mu.rows());
    Eigen::MatrixXd a = interleaved_delta(n).inverse() * mu;
    return ComplexStructure{skew_polar_orthogonal(a, mu)};
}

StructureCheck is_complex_structure(const Eigen::MatrixXd& j, double tol) {
    if (j.rows() != j.cols() || j.rows() % 2 != 0)
        throw std::invalid_argument("is_complex_structure: expects a square 2s x 2s matrix");
    const int n = static_cast<int>(j.rows());
    Eigen::MatrixXd delta = interleaved_delta(n);
    StructureCheck c;
    c.square_residual = (j * j + Eigen::MatrixXd::Identity(n, n)).norm();
    c.skew_residual = (delta * j + j.transpose() * delta).norm();
    Eigen::MatrixXd dj = delta * j;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (dj + dj.transpose()));
    c.min_eigenvalue = es.eigenvalues()(0);
    double scale = 1.0 + j.norm();
    c.valid = c.square_residual <= tol * scale && c.skew_residual <= tol * scale &&
              c.min_eigenvalue >= -tol * scale;
    return c;
}

Eigen::MatrixXd gauge_rotation(const ComplexStructure& j, double phi) {
    auto check = is_complex_structure(j.entries);
    if (!check.valid) throw std::invalid_argument("gauge_rotation: invalid complex structure");
    const int n = static_cast<int>(j.entries.rows());
    return std::cos(phi) * Eigen::MatrixXd::Identity(n, n) + std::sin(phi) * j.entries;
}

}  // namespace symcap
