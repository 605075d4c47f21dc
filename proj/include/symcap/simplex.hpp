#pragma once

#include <functional>

#include <Eigen/Dense>

namespace symcap {

struct SimplexOptions {
    int max_evaluations = 20000;
    double initial_step = 0.5;
    // Stop when the best value improves by less than this over `patience` iterations.
    double improvement_tol = 1e-12;
    int patience = 50;
    int restarts = 3;  // re-seed a fresh simplex at the incumbent before giving up
};

struct SimplexResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Nelder-Mead downhill simplex minimization with periodic restarts.
SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, const SimplexOptions& opts = {});

}  // namespace symcap
