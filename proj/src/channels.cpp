#include "symcap/channels.hpp"

#include <cmath>
#include <complex>

namespace symcap {

ChannelCheck validate_channel(const GaussianChannel& ch, double tol) {
    const int n = ch.layout.dim();
    if (ch.K.rows() != n || ch.K.cols() != n || ch.mu.rows() != n || ch.mu.cols() != n)
        throw std::invalid_argument("validate_channel: dimension mismatch");
    if ((ch.mu - ch.mu.transpose()).norm() > 1e-9 * (1.0 + ch.mu.norm()))
        throw std::invalid_argument("validate_channel: mu not symmetric");
    Eigen::MatrixXd delta = symplectic_form(ModeLayout{ch.layout.modes, Ordering::Interleaved});
    Eigen::MatrixXd gap = delta - ch.K.transpose() * delta * ch.K;
    Eigen::MatrixXcd herm = ch.mu.cast<std::complex<double>>() +
                            std::complex<double>(0, 0.5) * gap.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    ChannelCheck c;
    c.min_cp_eigenvalue = es.eigenvalues()(0);
    double scale = 1.0 + ch.mu.norm() + gap.norm();
    c.valid = c.min_cp_eigenvalue >= -tol * scale;
    c.degenerate_K = std::abs(ch.K.determinant()) <= 1e-10 * std::pow(ch.K.norm() + 1e-300, n);
    return c;
}

CovarianceMatrix apply(const GaussianChannel& ch, const CovarianceMatrix& alpha) {
    Eigen::MatrixXd a = reorder(alpha.entries, alpha.layout.ordering, Ordering::Interleaved);
    if (a.rows() != ch.layout.dim()) throw std::invalid_argument("apply: dimension mismatch");
    CovarianceMatrix out = CovarianceMatrix::centered(ch.K.transpose() * a * ch.K + ch.mu);
    Eigen::VectorXd mean = alpha.mean.size() == 0 ? Eigen::VectorXd::Zero(a.rows())
                                                  : reorder_vector(alpha.mean, alpha.layout.ordering,
                                                                   Ordering::Interleaved);
    out.mean = ch.K.transpose() * mean;
    return out;
}

Eigen::VectorXd displacement_action(const GaussianChannel& ch, const Eigen::VectorXd& z) {
    Eigen::MatrixXd delta = symplectic_form(ModeLayout{ch.layout.modes, Ordering::Interleaved});
    return delta.inverse() * ch.K.transpose() * delta * z;
}

GaussianChannel tensor(const std::vector<GaussianChannel>& channels) {
    if (channels.empty()) throw std::invalid_argument("tensor: empty channel list");
    int modes = 0;
    for (const auto& ch : channels) modes += ch.layout.modes;
    GaussianChannel out;
    out.layout = ModeLayout{modes, Ordering::Interleaved};
    out.K = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    out.mu = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    int at = 0;
    for (const auto& ch : channels) {
        int d = ch.layout.dim();
        out.K.block(at, at, d, d) = ch.K;
        out.mu.block(at, at, d, d) = ch.mu;
        at += d;
    }
    return out;
}

GaussianChannel squeezed_noise_channel(const SqueezedNoiseParams& p) {
    if (p.k <= 0.0 || p.mu1 <= 0.0 || p.mu2 <= 0.0)
        throw std::invalid_argument("squeezed_noise_channel: parameters must be positive");
    double gap = p.k * p.k - 1.0;
    if (p.mu1 * p.mu2 < 0.25 * gap * gap - 1e-12)
        throw std::invalid_argument("squeezed_noise_channel: mu1*mu2 < |k^2-1|^2/4");
    GaussianChannel ch;
    ch.layout = ModeLayout{1, Ordering::Interleaved};
    ch.K = p.k * Eigen::MatrixXd::Identity(2, 2);
    ch.mu = Eigen::Vector2d(p.mu1, p.mu2).asDiagonal();
    return ch;
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
    Eigen::MatrixXd ma = reorder(a.entries, a.layout.ordering, Ordering::Interleaved);
    Eigen::MatrixXd mb = reorder(b.entries, b.layout.ordering, Ordering::Interleaved);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ma.rows() + mb.rows(), ma.rows() + mb.rows());
    m.topLeftCorner(ma.rows(), ma.rows()) = ma;
    m.bottomRightCorner(mb.rows(), mb.rows()) = mb;
    return CovarianceMatrix::centered(m);
}

}  // namespace symcap
