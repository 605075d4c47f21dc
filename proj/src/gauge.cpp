#include "symcap/gauge.hpp"

#include <cmath>

namespace symcap {

namespace {

Eigen::MatrixXd interleaved_delta(int modes) {
    return symplectic_form(ModeLayout{modes, Ordering::Interleaved});
}

void require_nondegenerate_K(const GaussianChannel& ch) {
    const int n = ch.layout.dim();
    if (std::abs(ch.K.determinant()) <= 1e-10 * std::pow(ch.K.norm() + 1e-300, n))
        throw std::invalid_argument("gauge analysis requires nondegenerate K");
}

}  // namespace

PairCheck check_gauge_covariant_same_J(const GaussianChannel& ch, const ComplexStructure& j,
                                       double tol) {
    return check_gauge_covariant_pair(ch, j, j, false, tol);
}

PairCheck check_gauge_covariant_pair(const GaussianChannel& ch, const ComplexStructure& j_a,
                                     const ComplexStructure& j_b, bool contravariant, double tol) {
    Eigen::MatrixXd delta = interleaved_delta(ch.layout.modes);
    Eigen::MatrixXd dmu = delta.inverse() * ch.mu;
    PairCheck c;
    if (contravariant)
        c.k_residual = (ch.K * j_b.entries + j_a.entries * ch.K).norm();
    else
        c.k_residual = (ch.K * j_b.entries - j_a.entries * ch.K).norm();
    c.mu_residual = (dmu * j_b.entries - j_b.entries * dmu).norm();
    double scale = 1.0 + ch.K.norm() + ch.mu.norm();
    c.valid = c.k_residual <= tol * scale && c.mu_residual <= tol * scale;
    return c;
}

Eigen::MatrixXd block_operator(const GaussianChannel& ch) {
    require_nondegenerate_K(ch);
    const int s = ch.layout.modes;
    Eigen::MatrixXd kb = reorder(ch.K, Ordering::Interleaved, Ordering::Blocked);
    Eigen::MatrixXd a = kb.topLeftCorner(s, s), b = kb.topRightCorner(s, s);
    Eigen::MatrixXd c = kb.bottomLeftCorner(s, s), d = kb.bottomRightCorner(s, s);
    Eigen::MatrixXd m(2 * s, 2 * s);
    m.topLeftCorner(s, s) = a.transpose() * d - c.transpose() * b;
    m.topRightCorner(s, s) = c.transpose() * a - a.transpose() * c;
    m.bottomLeftCorner(s, s) = b.transpose() * d - d.transpose() * b;
    m.bottomRightCorner(s, s) = d.transpose() * a - b.transpose() * c;
    return m;
}

CriterionResult covariance_criterion(const GaussianChannel& ch, const ComplexStructure& j_b,
                                     bool contravariant) {
    require_nondegenerate_K(ch);
    Eigen::MatrixXd delta = interleaved_delta(ch.layout.modes);
    Eigen::MatrixXd m = ch.K.transpose() * delta * ch.K * delta.inverse();
    Eigen::MatrixXd witness = m * delta * j_b.entries;
    if (contravariant) witness = -witness;

    CriterionResult r;
    double scale = witness.norm() + 1e-300;
    r.symmetry_residual = (witness - witness.transpose()).norm();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (witness + witness.transpose()));
    r.min_eigenvalue = es.eigenvalues()(0);
    // The criterion sits on a closed cone; symplectic K lands on the boundary.
    r.holds = r.symmetry_residual <= 1e-8 * scale && r.min_eigenvalue >= -1e-8 * scale;
    if (r.holds) {
        Eigen::MatrixXd j_a = ch.K * j_b.entries * ch.K.inverse();
        if (contravariant) j_a = -j_a;
        r.J_A = ComplexStructure{j_a};
    }
    return r;
}

GaugeVerdict classify(const GaussianChannel& ch) {
    require_nondegenerate_K(ch);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> mu_chk(ch.mu);
    if (mu_chk.eigenvalues()(0) <= 1e-12 * (1.0 + ch.mu.norm()))
        throw std::invalid_argument("classify: degenerate mu");

    ComplexStructure j_b = complex_structure_from_form(ch.mu);
    GaugeVerdict v;
    v.J_B = j_b;

    auto record = [&](const CriterionResult& r, bool contravariant) {
        v.symmetry_residual = r.symmetry_residual;
        v.min_witness_eigenvalue = r.min_eigenvalue;
        v.J_A = r.J_A;
        auto pair = check_gauge_covariant_pair(ch, *r.J_A, j_b, contravariant);
        v.commutation_residual = pair.k_residual;
        v.mu_residual = pair.mu_residual;
    };

    CriterionResult cov = covariance_criterion(ch, j_b, false);
    if (cov.holds) {
        record(cov, false);
        bool same = (cov.J_A->entries - j_b.entries).norm() <= 1e-8 * (1.0 + j_b.entries.norm());
        v.status = same ? GaugeStatus::CovariantSameJ : GaugeStatus::CovariantPair;
        return v;
    }
    CriterionResult contra = covariance_criterion(ch, j_b, true);
    if (contra.holds) {
        record(contra, true);
        v.status = GaugeStatus::Contravariant;
        return v;
    }
    v.status = GaugeStatus::NotForCanonicalJB;
    v.symmetry_residual = cov.symmetry_residual;
    v.min_witness_eigenvalue = cov.min_eigenvalue;
    return v;
}

}  // namespace symcap
