#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace symcap {

// Coordinate ordering of the 2s canonical variables.
//   Interleaved: q1, p1, q2, p2, ..., q_s, p_s
//   Blocked:     q1, ..., q_s, p1, ..., p_s
enum class Ordering { Interleaved, Blocked };

struct ModeLayout {
    int modes = 1;
    Ordering ordering = Ordering::Interleaved;

    int dim() const { return 2 * modes; }
};

// Symplectic form for the requested ordering.
// Interleaved: block-diagonal [[0,1],[-1,0]] repeated s times.
// Blocked:     [[0,I],[-I,0]].
Eigen::MatrixXd symplectic_form(const ModeLayout& layout);

// Permutation taking Interleaved coordinates to Blocked coordinates.
Eigen::PermutationMatrix<Eigen::Dynamic> ordering_permutation(int modes);

// Permutation similarity P M P^t between the two coordinate conventions.
// Round trip is the identity exactly.
Eigen::MatrixXd reorder(const Eigen::MatrixXd& m, Ordering from, Ordering to);

Eigen::VectorXd reorder_vector(const Eigen::VectorXd& v, Ordering from, Ordering to);

}  // namespace symcap
