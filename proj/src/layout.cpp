#include "symcap/layout.hpp"

namespace symcap {

Eigen::MatrixXd symplectic_form(const ModeLayout& layout) {
    if (layout.modes < 1) throw std::invalid_argument("mode count must be positive");
    const int s = layout.modes;
    Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(2 * s, 2 * s);
    if (layout.ordering == Ordering::Interleaved) {
        for (int j = 0; j < s; ++j) {
            delta(2 * j, 2 * j + 1) = 1.0;
            delta(2 * j + 1, 2 * j) = -1.0;
        }
    } else {
        for (int j = 0; j < s; ++j) {
            delta(j, s + j) = 1.0;
            delta(s + j, j) = -1.0;
        }
    }
    return delta;
}

Eigen::PermutationMatrix<Eigen::Dynamic> ordering_permutation(int modes) {
    // Maps interleaved index (q_j at 2j, p_j at 2j+1) to blocked index (q_j at j, p_j at s+j).
    Eigen::VectorXi idx(2 * modes);
    for (int j = 0; j < modes; ++j) {
        idx(2 * j) = j;
        idx(2 * j + 1) = modes + j;
    }
    return Eigen::PermutationMatrix<Eigen::Dynamic>(idx);
}

Eigen::MatrixXd reorder(const Eigen::MatrixXd& m, Ordering from, Ordering to) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("reorder expects a square 2s x 2s matrix");
    if (from == to) return m;
    const int s = static_cast<int>(m.rows()) / 2;
    auto p = ordering_permutation(s);
    if (from == Ordering::Interleaved) return p * m * p.transpose();
    return p.transpose() * m * p;
}

Eigen::VectorXd reorder_vector(const Eigen::VectorXd& v, Ordering from, Ordering to) {
    if (v.size() % 2 != 0) throw std::invalid_argument("reorder expects a 2s vector");
    if (from == to) return v;
    const int s = static_cast<int>(v.size()) / 2;
    auto p = ordering_permutation(s);
    if (from == Ordering::Interleaved) return p * v;
    return p.transpose() * v;
}

}  // namespace symcap
